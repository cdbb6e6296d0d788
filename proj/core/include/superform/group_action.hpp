#pragma once

// O(k) x Sp(2l) acting on coupling blocks by B -> X^T B Y, its elementary
// generators, and exact random group elements.

#include <cstdint>
#include <random>
#include <variant>

#include "superform/matrix.hpp"
#include "superform/superspace.hpp"

namespace superform {

template <class S>
struct TransformPair {
  Matrix<S> x;  // orthogonal, k x k
  Matrix<S> y;  // symplectic, 2l x 2l

  static TransformPair identity(const SuperDims& d) {
    return {Matrix<S>::identity(d.k), Matrix<S>::identity(d.two_ell)};
  }
  /// act(act(B, *this), next) == act(B, compose(next))
  TransformPair then(const TransformPair& next) const { return {x * next.x, y * next.y}; }
};

using AnyTransform = std::variant<TransformPair<Exact>, TransformPair<Approx>>;

template <class S>
bool is_orthogonal(const Matrix<S>& x) {
  return is_square_matrix(x) && x.transpose() * x == Matrix<S>::identity(x.rows());
}

template <class S>
bool is_symplectic(const Matrix<S>& y) {
  if (!is_square_matrix(y) || y.rows() % 2 != 0) return false;
  const Matrix<S> j = symplectic_unit<S>(y.rows() / 2);
  return y.transpose() * j * y == j;
}

template <class S>
Matrix<S> act(const Matrix<S>& b, const TransformPair<S>& t) {
  if (t.x.rows() != b.rows() || t.y.rows() != b.cols()) {
    throw InputError("transform of shape (" + Matrix<S>::shape_text(t.x) + ", " +
                     Matrix<S>::shape_text(t.y) + ") cannot act on " +
                     Matrix<S>::shape_text(b));
  }
  return t.x.transpose() * b * t.y;
}

/// Largest deviation of X^T X - I, Y^T J Y - J and X^T B Y - target.
double witness_residual(const Matrix<Exact>& b, const TransformPair<Exact>& t,
                        const Matrix<Exact>& target);
double witness_residual(const Matrix<Exact>& b, const TransformPair<Approx>& t,
                        const Matrix<Approx>& target);

// Elementary symplectic generators.  Pairs are 0-based: pair p owns the
// columns 2p and 2p+1 of B.  Each returns Y with B*Y the stated column move.

/// (C_2p, C_2p+1) -> (lambda C_2p, C_2p+1 / lambda)
Matrix<Exact> elem_pair_rescale(std::size_t ell, std::size_t p, const Exact& lambda);
/// C_2p+1 += lambda C_2p
Matrix<Exact> elem_pair_shear(std::size_t ell, std::size_t p, const Exact& lambda);
/// (C_2p, C_2p+1) -> (C_2p+1, -C_2p)
Matrix<Exact> elem_pair_swap(std::size_t ell, std::size_t p);
/// C_2p -= lambda C_2q and C_2q+1 += lambda C_2p+1
Matrix<Exact> elem_cross_shear(std::size_t ell, std::size_t p, std::size_t q, const Exact& lambda);
/// exchanges the column pairs p and q
Matrix<Exact> elem_pair_block_swap(std::size_t ell, std::size_t p, std::size_t q);

/// Rotation in the (i, j) plane, (1/sqrt(q)) [[b1, b2], [-b2, b1]], mapping
/// b1 e_i + b2 e_j to sqrt(q) e_i.  Exact when sqrt(q) is Gaussian-rational,
/// else IrrationalRootError.  Isotropic (b1, b2) -> InputError.
template <class S>
Matrix<S> ortho_rotation(std::size_t k, std::size_t i, std::size_t j, const S& b1, const S& b2);

/// (1/2b1) [[b1^2+1, i(b1^2-1)], [-i(b1^2-1), b1^2+1]] at (i, j), which maps
/// (b1, i b1) to (1, i).  Always rational.
Matrix<Exact> ortho_isotropic_rescale(std::size_t k, std::size_t i, std::size_t j, const Exact& b1);

/// Reflection fixing everything but e_i, i.e. diag(..., -1, ...).
Matrix<Exact> ortho_sign_flip(std::size_t k, std::size_t i);
/// Permutation exchanging e_i and e_j (an orthogonal reflection).
Matrix<Exact> ortho_swap(std::size_t k, std::size_t i, std::size_t j);

using Rng = std::mt19937_64;

/// Small random Gaussian rational: components p/q with |p| <= 3, 1 <= q <= 3.
Exact random_gaussian_rational(Rng& rng);
Matrix<Exact> random_matrix(std::size_t rows, std::size_t cols, Rng& rng);

/// Cayley transforms (I - A)(I + A)^-1 of random antisymmetric A, times a
/// reflection half of the time.
Matrix<Exact> random_orthogonal(std::size_t k, Rng& rng);
Matrix<Exact> random_orthogonal(std::size_t k, std::uint64_t seed);
/// Cayley transform of S = -J H with H random symmetric.
Matrix<Exact> random_symplectic(std::size_t ell, Rng& rng);
Matrix<Exact> random_symplectic(std::size_t ell, std::uint64_t seed);
TransformPair<Exact> random_transform(const SuperDims& d, Rng& rng);

/// The Cayley transform itself; nullopt if I + A is singular.
std::optional<Matrix<Exact>> cayley(const Matrix<Exact>& a);

}  // namespace superform
