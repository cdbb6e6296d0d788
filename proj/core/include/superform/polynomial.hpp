#pragma once

#include <string>
#include <vector>

#include "superform/scalar.hpp"

namespace superform {

/// Univariate polynomial with Gaussian-rational coefficients.  Stored
/// lowest degree first and always trimmed; the public view is
/// degree-descending.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c) : Polynomial(Exact(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(int c) : Polynomial(Exact(c)) {}   // NOLINT(google-explicit-constructor)
  Polynomial(const Exact& c);                   // NOLINT(google-explicit-constructor)

  /// c * lambda^degree
  static Polynomial monomial(const Exact& c, unsigned degree);
  static Polynomial lambda() { return monomial(Exact(1), 1); }
  static Polynomial from_descending(const std::vector<Exact>& coeffs);

  /// Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of lambda^d (zero beyond the degree).
  Exact coefficient(unsigned d) const;
  std::vector<Exact> descending() const;
  /// Pads with leading zeros up to the requested length.
  std::vector<Exact> descending(std::size_t length) const;

  Exact evaluate(const Exact& x) const;
  /// p(-lambda)
  Polynomial reflect() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  /// Exact division; throws std::domain_error when the remainder is nonzero.
  Polynomial& operator/=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator/(Polynomial a, const Polynomial& b) { return a /= b; }
  friend Polynomial operator-(Polynomial a);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

 private:
  void trim();
  std::vector<Exact> coeffs_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

/// e.g. "lambda^2 - 2*lambda + 1/2*i"; "0" for the zero polynomial.
std::string to_string(const Polynomial& p, const std::string& var = "lambda");

}  // namespace superform
