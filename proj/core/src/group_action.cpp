#include "superform/group_action.hpp"

#include <algorithm>

namespace superform {

namespace {

template <class S>
double group_residual(const Matrix<S>& b, const TransformPair<S>& t, const Matrix<S>& target) {
  const Matrix<S> j = symplectic_unit<S>(t.y.rows() / 2);
  double r = max_abs_difference(t.x.transpose() * t.x, Matrix<S>::identity(t.x.rows()));
  r = std::max(r, max_abs_difference(t.y.transpose() * j * t.y, j));
  r = std::max(r, max_abs_difference(act(b, t), target));
  return r;
}

void check_pair(std::size_t ell, std::size_t p) {
  if (p >= ell) throw InputError("pair index out of range");
}

}  // namespace

double witness_residual(const Matrix<Exact>& b, const TransformPair<Exact>& t,
                        const Matrix<Exact>& target) {
  return group_residual(b, t, target);
}

double witness_residual(const Matrix<Exact>& b, const TransformPair<Approx>& t,
                        const Matrix<Approx>& target) {
  return group_residual(to_approx(b), t, target);
}

Matrix<Exact> elem_pair_rescale(std::size_t ell, std::size_t p, const Exact& lambda) {
  check_pair(ell, p);
  if (lambda.is_zero()) throw InputError("rescaling by zero");
  Matrix<Exact> y = Matrix<Exact>::identity(2 * ell);
  y(2 * p, 2 * p) = lambda;
  y(2 * p + 1, 2 * p + 1) = Exact(1) / lambda;
  return y;
}

Matrix<Exact> elem_pair_shear(std::size_t ell, std::size_t p, const Exact& lambda) {
  check_pair(ell, p);
  Matrix<Exact> y = Matrix<Exact>::identity(2 * ell);
  y(2 * p, 2 * p + 1) = lambda;
  return y;
}

Matrix<Exact> elem_pair_swap(std::size_t ell, std::size_t p) {
  check_pair(ell, p);
  Matrix<Exact> y = Matrix<Exact>::identity(2 * ell);
  y(2 * p, 2 * p) = 0;
  y(2 * p + 1, 2 * p + 1) = 0;
  y(2 * p + 1, 2 * p) = 1;
  y(2 * p, 2 * p + 1) = -1;
  return y;
}

Matrix<Exact> elem_cross_shear(std::size_t ell, std::size_t p, std::size_t q, const Exact& lambda) {
  check_pair(ell, p);
  check_pair(ell, q);
  if (p == q) throw InputError("cross shear needs two distinct pairs");
  Matrix<Exact> y = Matrix<Exact>::identity(2 * ell);
  y(2 * q, 2 * p) = -lambda;
  y(2 * p + 1, 2 * q + 1) = lambda;
  return y;
}

Matrix<Exact> elem_pair_block_swap(std::size_t ell, std::size_t p, std::size_t q) {
  check_pair(ell, p);
  check_pair(ell, q);
  Matrix<Exact> y = Matrix<Exact>::identity(2 * ell);
  if (p == q) return y;
  for (std::size_t s = 0; s < 2; ++s) {
    y(2 * p + s, 2 * p + s) = 0;
    y(2 * q + s, 2 * q + s) = 0;
    y(2 * p + s, 2 * q + s) = 1;
    y(2 * q + s, 2 * p + s) = 1;
  }
  return y;
}

template <class S>
Matrix<S> ortho_rotation(std::size_t k, std::size_t i, std::size_t j, const S& b1, const S& b2) {
  if (i >= k || j >= k || i == j) throw InputError("rotation plane out of range");
  const S q = b1 * b1 + b2 * b2;
  if (is_zero(q)) throw InputError("rotation undefined on isotropic vector");
  const S inv = S(1) / sqrt_cplus(q);
  Matrix<S> x = Matrix<S>::identity(k);
  x(i, i) = b1 * inv;
  x(i, j) = b2 * inv;
  x(j, i) = -b2 * inv;
  x(j, j) = b1 * inv;
  return x;
}

template Matrix<Exact> ortho_rotation(std::size_t, std::size_t, std::size_t, const Exact&,
                                      const Exact&);
template Matrix<Approx> ortho_rotation(std::size_t, std::size_t, std::size_t, const Approx&,
                                       const Approx&);

Matrix<Exact> ortho_isotropic_rescale(std::size_t k, std::size_t i, std::size_t j, const Exact& b1) {
  if (i >= k || j >= k || i == j) throw InputError("rescale plane out of range");
  if (b1.is_zero()) throw InputError("isotropic rescale needs b1 != 0");
  const Exact sq = b1 * b1;
  const Exact f = Exact(1) / (Exact(2) * b1);
  const Exact diag = (sq + Exact(1)) * f;
  const Exact off = Exact::i() * (sq - Exact(1)) * f;
  Matrix<Exact> x = Matrix<Exact>::identity(k);
  x(i, i) = diag;
  x(i, j) = off;
  x(j, i) = -off;
  x(j, j) = diag;
  return x;
}

Matrix<Exact> ortho_sign_flip(std::size_t k, std::size_t i) {
  Matrix<Exact> x = Matrix<Exact>::identity(k);
  x(i, i) = -1;
  return x;
}

Matrix<Exact> ortho_swap(std::size_t k, std::size_t i, std::size_t j) {
  Matrix<Exact> x = Matrix<Exact>::identity(k);
  if (i == j) return x;
  x(i, i) = 0;
  x(j, j) = 0;
  x(i, j) = 1;
  x(j, i) = 1;
  return x;
}

Exact random_gaussian_rational(Rng& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  const int a = num(rng), b = den(rng), c = num(rng), d = den(rng);
  return Exact(Rational(a, b), Rational(c, d));
}

Matrix<Exact> random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix<Exact> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_gaussian_rational(rng);
  return m;
}

std::optional<Matrix<Exact>> cayley(const Matrix<Exact>& a) {
  const Matrix<Exact> id = Matrix<Exact>::identity(a.rows());
  auto inv = inverse(id + a);
  if (!inv) return std::nullopt;
  return (id - a) * *inv;
}

namespace {

constexpr int kMaxDraws = 1000;

}  // namespace

Matrix<Exact> random_orthogonal(std::size_t k, Rng& rng) {
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    Matrix<Exact> a(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        a(i, j) = random_gaussian_rational(rng);
        a(j, i) = -a(i, j);
      }
    }
    auto x = cayley(a);
    if (!x) continue;
    if (k > 0 && std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
      *x = ortho_sign_flip(k, 0) * *x;
    }
    return *x;
  }
  throw Error("random_orthogonal: no invertible draw");
}

Matrix<Exact> random_orthogonal(std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  return random_orthogonal(k, rng);
}

Matrix<Exact> random_symplectic(std::size_t ell, Rng& rng) {
  const Matrix<Exact> j = symplectic_unit<Exact>(ell);
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    Matrix<Exact> h(2 * ell, 2 * ell);
    for (std::size_t r = 0; r < 2 * ell; ++r) {
      for (std::size_t c = r; c < 2 * ell; ++c) {
        h(r, c) = random_gaussian_rational(rng);
        h(c, r) = h(r, c);
      }
    }
    auto y = cayley(-(j * h));
    if (y) return *y;
  }
  throw Error("random_symplectic: no invertible draw");
}

Matrix<Exact> random_symplectic(std::size_t ell, std::uint64_t seed) {
  Rng rng(seed);
  return random_symplectic(ell, rng);
}

TransformPair<Exact> random_transform(const SuperDims& d, Rng& rng) {
  TransformPair<Exact> t;
  t.x = random_orthogonal(d.k, rng);
  t.y = random_symplectic(d.ell(), rng);
  return t;
}

}  // namespace superform
