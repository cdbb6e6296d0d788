#include "superform/bases.hpp"

namespace superform {

std::optional<Matrix<Exact>> anisotropic_vector(const Matrix<Exact>& gram) {
  const std::size_t m = gram.rows();
  for (std::size_t i = 0; i < m; ++i) {
    if (!gram(i, i).is_zero()) return unit_vectors<Exact>(m, i, 1).front();
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!(gram(i, j) + gram(j, i)).is_zero()) {
        Matrix<Exact> c(m, 1);
        c(i, 0) = 1;
        c(j, 0) = 1;
        return c;
      }
    }
  }
  return std::nullopt;
}

std::vector<Matrix<Exact>> diagonalizing_basis(const Matrix<Exact>& gram,
                                               std::vector<Matrix<Exact>> span) {
  const std::size_t n = gram.rows();
  std::vector<Matrix<Exact>> out;
  while (!span.empty()) {
    Matrix<Exact> w = hstack(span, n);
    auto c = anisotropic_vector(w.transpose() * gram * w);
    if (!c) break;
    Matrix<Exact> u = w * *c;
    Exact q = pairing(u, gram, u);
    std::vector<Matrix<Exact>> rest;
    for (const auto& x : span) rest.push_back(x - (pairing(u, gram, x) / q) * u);
    out.push_back(u);
    span = independent_subset(rest, n);
  }
  return out;
}

std::optional<Matrix<Exact>> represent_value(const Matrix<Exact>& gram,
                                             const Exact& target) {
  const std::size_t m = gram.rows();
  if (target.is_zero()) throw std::domain_error("represent_value needs a nonzero target");
  for (std::size_t i = 0; i < m; ++i) {
    if (gram(i, i).is_zero()) continue;
    if (auto s = try_sqrt_cplus(target / gram(i, i))) {
      Matrix<Exact> c(m, 1);
      c(i, 0) = *s;
      return c;
    }
  }
  auto diag = diagonalizing_basis(gram, unit_vectors<Exact>(m, 0, m));
  std::vector<Exact> d;
  for (const auto& u : diag) d.push_back(pairing(u, gram, u));
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (auto s = try_sqrt_cplus(target / d[i])) return diag[i] * *s;
  }
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = 0; j < diag.size(); ++j) {
      if (i == j) continue;
      auto r = try_sqrt_cplus(-d[i] * d[j]);
      if (!r) continue;
      // z = r u_i + d_i u_j is isotropic and pairs with u_j to d_i d_j.
      Matrix<Exact> z = diag[i] * *r + diag[j] * d[i];
      Exact t = (target - d[j]) / (Exact(2) * d[i] * d[j]);
      return diag[j] + z * t;
    }
  }
  // d_i x^2 + d_j y^2 = target with x from a small grid, e.g. 2x^2 + 3y^2 = 1
  // at (i, 1).
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = 0; j < diag.size(); ++j) {
      if (i == j) continue;
      for (long den = 1; den <= 3; ++den) {
        for (long re = -3; re <= 3; ++re) {
          for (long im = -3; im <= 3; ++im) {
            Exact x(Rational(re, den), Rational(im, den));
            Exact rest = (target - d[i] * x * x) / d[j];
            if (rest.is_zero()) continue;
            if (auto y = try_sqrt_cplus(rest)) return diag[i] * x + diag[j] * *y;
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace superform
