#pragma once

// Adapted bases for symmetric and alternating forms restricted to a
// subspace.  Exact variants avoid square roots whenever the form allows it.

#include <optional>
#include <type_traits>
#include <vector>

#include "superform/error.hpp"
#include "superform/matrix.hpp"
#include "superform/scalar.hpp"

namespace superform {

/// Coefficient vector c with c^T G c != 0: a coordinate vector if some
/// diagonal entry is nonzero, else e_i + e_j.  nullopt iff G = 0.
std::optional<Matrix<Exact>> anisotropic_vector(const Matrix<Exact>& gram);

/// Coefficient vector c with c^T G c = target for a symmetric G, found
/// without leaving Q(i).  Tries coordinate vectors, then an orthogonal
/// diagonalisation d_1..d_r, then the hyperbolic-pair construction on any
/// pair with -d_i d_j a square, then d_i x^2 + d_j y^2 = target with x on a
/// small grid of Gaussian rationals.  nullopt if none of these succeed.
std::optional<Matrix<Exact>> represent_value(const Matrix<Exact>& gram,
                                             const Exact& target);

/// Orthogonal (not normalised) basis of the span w.r.t. a symmetric form;
/// vectors in the radical are dropped.
std::vector<Matrix<Exact>> diagonalizing_basis(const Matrix<Exact>& gram,
                                               std::vector<Matrix<Exact>> span);

namespace detail {

inline Matrix<Approx> best_anisotropic(const Matrix<Approx>& g) {
  const std::size_t m = g.rows();
  Matrix<Approx> best;
  Real best_mag = -1;
  auto consider = [&](Matrix<Approx> c) {
    Real mag = pairing(c, g, c).abs();
    if (mag > best_mag) {
      best_mag = mag;
      best = std::move(c);
    }
  };
  for (std::size_t i = 0; i < m; ++i) {
    Matrix<Approx> c(m, 1);
    c(i, 0) = Approx(1);
    consider(c);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      Matrix<Approx> c(m, 1);
      c(i, 0) = Approx(1);
      c(j, 0) = Approx(1);
      consider(c);
    }
  }
  if (m == 0 || is_zero(pairing(best, g, best))) {
    throw InputError("symmetric form is degenerate on the requested subspace");
  }
  return best;
}

}  // namespace detail

/// Columns P spanning `span` with P^T G P = I.  In exact arithmetic throws
/// IrrationalRootError if a needed normalisation leaves Q(i).
template <class S>
Matrix<S> orthonormal_basis(const Matrix<S>& g, std::vector<Matrix<S>> span) {
  const std::size_t n = g.rows();
  std::vector<Matrix<S>> out;
  while (!span.empty()) {
    Matrix<S> w = hstack(span, n);
    Matrix<S> gw = w.transpose() * g * w;
    Matrix<S> u;
    if constexpr (std::is_same_v<S, Exact>) {
      if (auto c = represent_value(gw, Exact(1))) {
        u = w * *c;
      } else {
        auto a = anisotropic_vector(gw);
        if (!a) throw InputError("symmetric form is degenerate on the requested subspace");
        u = w * *a;
        u *= Exact(1) / sqrt_cplus(pairing(u, g, u));
      }
    } else {
      u = w * detail::best_anisotropic(gw);
      u *= S(1) / sqrt_cplus(pairing(u, g, u));
    }
    std::vector<Matrix<S>> rest;
    for (const auto& x : span) rest.push_back(x - pairing(u, g, x) * u);
    out.push_back(u);
    span = independent_subset(rest, n);
    if (span.size() + out.size() > n) throw InputError("orthonormalisation failed");
  }
  return hstack(out, n);
}

/// Columns P spanning `span` with P^T Omega P = J (standard symplectic
/// unit).  Rational, so exact whenever the input is.
template <class S>
Matrix<S> symplectic_basis(const Matrix<S>& omega, std::vector<Matrix<S>> span) {
  const std::size_t n = omega.rows();
  std::vector<Matrix<S>> out;
  while (!span.empty()) {
    const Matrix<S> u = span.front();
    std::size_t partner = span.size();
    double best = 0.0;
    for (std::size_t j = 1; j < span.size(); ++j) {
      double mag = pivot_magnitude(pairing(u, omega, span[j]));
      if (mag > best) {
        best = mag;
        partner = j;
        if constexpr (std::is_same_v<S, Exact>) break;
      }
    }
    if (partner == span.size()) {
      throw InputError("alternating form is degenerate on the requested subspace");
    }
    Matrix<S> v = span[partner] * (S(1) / pairing(u, omega, span[partner]));
    std::vector<Matrix<S>> rest;
    for (std::size_t j = 1; j < span.size(); ++j) {
      if (j == partner) continue;
      const Matrix<S>& x = span[j];
      rest.push_back(x + pairing(v, omega, x) * u - pairing(u, omega, x) * v);
    }
    out.push_back(u);
    out.push_back(v);
    span = independent_subset(rest, n);
  }
  return hstack(out, n);
}

template <class S>
std::vector<Matrix<S>> unit_vectors(std::size_t n, std::size_t first, std::size_t count) {
  std::vector<Matrix<S>> out;
  for (std::size_t i = first; i < first + count; ++i) {
    Matrix<S> e(n, 1);
    e(i, 0) = S(1);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace superform
