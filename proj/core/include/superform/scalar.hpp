#pragma once

// Complex scalars used throughout the library.
//
// `Exact` is an element of the Gaussian rationals Q(i) with arbitrary
// precision components.  `Approx` is a multiprecision complex float carrying
// a comparison tolerance; it only appears where a square root leaves Q(i).
// Nothing in here ever conjugates: every form in the library is bilinear.

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>
#include <optional>
#include <string>
#include <string_view>

#include "superform/error.hpp"

namespace superform {

using Rational = mpq_class;

class Exact {
 public:
  Exact() = default;
  Exact(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Exact(int value) : re_(value) {}   // NOLINT(google-explicit-constructor)
  Exact(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Exact(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Exact i() { return Exact(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  /// |z|^2 = re^2 + im^2 (no conjugation is exposed as an operation).
  Rational norm() const { return re_ * re_ + im_ * im_; }

  Exact& operator+=(const Exact& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Exact& operator-=(const Exact& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Exact& operator*=(const Exact& o);
  Exact& operator/=(const Exact& o);

  friend Exact operator+(Exact a, const Exact& b) { return a += b; }
  friend Exact operator-(Exact a, const Exact& b) { return a -= b; }
  friend Exact operator*(Exact a, const Exact& b) { return a *= b; }
  friend Exact operator/(Exact a, const Exact& b) { return a /= b; }
  friend Exact operator-(const Exact& a) { return Exact(-a.re_, -a.im_); }

  friend bool operator==(const Exact& a, const Exact& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Exact& a, const Exact& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Total order by (Re, Im); used only to normalise multisets.
bool lex_less(const Exact& a, const Exact& b);

/// Canonical text form "a/b+c/d*i" with zero terms omitted ("1", "i",
/// "-1/2*i", "1+i", "0").
std::string to_string(const Exact& z);

/// Parses the canonical grammar.  Also tolerates surrounding whitespace, a
/// leading '+', "c*i" / "c/d*i" / "i" imaginary terms in either order.
/// Throws InputError whose message carries the 1-based column of the fault.
Exact parse_exact(std::string_view text);

bool in_c_plus(const Exact& z);

/// Square root in C+ if it lies in Q(i), std::nullopt otherwise.
/// Throws std::domain_error for zero.
std::optional<Exact> try_sqrt_cplus(const Exact& z);

/// Like try_sqrt_cplus but throws IrrationalRootError when the root is
/// not Gaussian-rational.
Exact sqrt_cplus(const Exact& z);

bool is_square(const Exact& z);

// ---------------------------------------------------------------------------
// Approximate scalars.

using Real = boost::multiprecision::mpfr_float;

/// Ambient settings for approximate arithmetic.  Defaults: 128-bit mantissa,
/// eps = 1e-30.
class ApproxContext {
 public:
  static unsigned precision_bits();
  static double eps();
  static void configure(unsigned precision_bits, double eps);
};

class Approx {
 public:
  Approx() : re_(0), im_(0), eps_(ApproxContext::eps()) {}
  Approx(long value)  // NOLINT(google-explicit-constructor)
      : re_(value), im_(0), eps_(ApproxContext::eps()) {}
  Approx(int value)  // NOLINT(google-explicit-constructor)
      : re_(value), im_(0), eps_(ApproxContext::eps()) {}
  Approx(Real re, Real im, double eps = ApproxContext::eps())
      : re_(std::move(re)), im_(std::move(im)), eps_(eps) {}

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  double eps() const { return eps_; }

  Real abs() const;
  bool is_negligible() const;

  Approx& operator+=(const Approx& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Approx& operator-=(const Approx& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Approx& operator*=(const Approx& o);
  Approx& operator/=(const Approx& o);

  friend Approx operator+(Approx a, const Approx& b) { return a += b; }
  friend Approx operator-(Approx a, const Approx& b) { return a -= b; }
  friend Approx operator*(Approx a, const Approx& b) { return a *= b; }
  friend Approx operator/(Approx a, const Approx& b) { return a /= b; }
  friend Approx operator-(const Approx& a) {
    return Approx(-a.re_, -a.im_, a.eps_);
  }

  /// Tolerance equality, see approx_eq.
  friend bool operator==(const Approx& a, const Approx& b);
  friend bool operator!=(const Approx& a, const Approx& b) { return !(a == b); }

 private:
  Real re_;
  Real im_;
  double eps_;
};

/// |a - b| <= eps * max(1, |a|, |b|), eps taken from the left operand.
bool approx_eq(const Approx& a, const Approx& b);

bool in_c_plus(const Approx& z);
Approx sqrt_cplus(const Approx& z);

Approx exact_to_approx(const Exact& z, double eps = ApproxContext::eps());
std::string to_string(const Approx& z, int digits = 40);

// Uniform hooks for code templated over the scalar type.
inline bool is_zero(const Exact& z) { return z.is_zero(); }
inline bool is_zero(const Approx& z) { return z.is_negligible(); }

/// Magnitude used to rank pivots; exactness only needs nonzero-ness.
double pivot_magnitude(const Exact& z);
double pivot_magnitude(const Approx& z);

inline Approx to_approx(const Exact& z) { return exact_to_approx(z); }
inline const Approx& to_approx(const Approx& z) { return z; }

}  // namespace superform
