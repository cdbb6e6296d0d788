#include "superform/scalar.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace superform {

Exact& Exact::operator*=(const Exact& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Exact& Exact::operator/=(const Exact& o) {
  Rational n = o.norm();
  if (sgn(n) == 0) throw std::domain_error("division by zero scalar");
  Rational re = (re_ * o.re_ + im_ * o.im_) / n;
  Rational im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

bool lex_less(const Exact& a, const Exact& b) {
  if (a.re() != b.re()) return a.re() < b.re();
  return a.im() < b.im();
}

namespace {

std::string rational_text(const Rational& q) { return q.get_str(); }

}  // namespace

std::string to_string(const Exact& z) {
  const int sr = sgn(z.re());
  const int si = sgn(z.im());
  if (sr == 0 && si == 0) return "0";
  std::string out;
  if (sr != 0) out = rational_text(z.re());
  if (si != 0) {
    std::string im;
    if (z.im() == 1) {
      im = "i";
    } else if (z.im() == -1) {
      im = "-i";
    } else {
      im = rational_text(z.im()) + "*i";
    }
    if (sr != 0 && si > 0) out += "+";
    out += im;
  }
  return out;
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Exact parse() {
    skip_ws();
    if (at_end()) fail("empty scalar");
    Rational re(0), im(0);
    bool first = true;
    bool seen_re = false, seen_im = false;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [value, imaginary] = parse_term();
      if (sign < 0) value = -value;
      if (imaginary) {
        if (seen_im) fail("duplicate imaginary term");
        seen_im = true;
        im = value;
      } else {
        if (seen_re) fail("duplicate real term");
        seen_re = true;
        re = value;
      }
      first = false;
    }
    return Exact(re, im);
  }

 private:
  std::pair<Rational, bool> parse_term() {
    if (!at_end() && peek() == 'i') {
      ++pos_;
      return {Rational(1), true};
    }
    Rational value = parse_rational();
    skip_ws();
    if (!at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      if (at_end() || peek() != 'i') fail("expected 'i' after '*'");
      ++pos_;
      return {value, true};
    }
    if (!at_end() && peek() == 'i') {
      ++pos_;
      return {value, true};
    }
    return {value, false};
  }

  Rational parse_rational() {
    std::string num = parse_digits();
    mpz_class n(num);
    mpz_class d(1);
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      d = mpz_class(parse_digits());
      if (d == 0) fail("zero denominator");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
  }

  std::string parse_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "malformed scalar '" << text_ << "' at column " << (pos_ + 1) << ": "
       << what;
    throw ScalarSyntaxError(os.str(), pos_ + 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

}  // namespace

Exact parse_exact(std::string_view text) { return ScalarParser(text).parse(); }

bool in_c_plus(const Exact& z) {
  const int sr = sgn(z.re());
  return sr > 0 || (sr == 0 && sgn(z.im()) > 0);
}

std::optional<Exact> try_sqrt_cplus(const Exact& z) {
  if (z.is_zero()) {
    throw std::domain_error("sqrt of zero has no C+ representative");
  }
  // sqrt(a+bi) = x+yi with x^2-y^2 = a, 2xy = b, x^2+y^2 = |z|.
  auto modulus = rational_sqrt(z.norm());
  if (!modulus) return std::nullopt;
  const Rational& a = z.re();
  if (sgn(z.im()) == 0) {
    if (sgn(a) > 0) {
      auto x = rational_sqrt(a);
      if (!x) return std::nullopt;
      return Exact(*x, Rational(0));
    }
    auto y = rational_sqrt(-a);
    if (!y) return std::nullopt;
    return Exact(Rational(0), *y);
  }
  Rational x2 = (*modulus + a) / 2;
  auto x = rational_sqrt(x2);
  if (!x) return std::nullopt;
  // x > 0 because |z| > |a| whenever b != 0.
  Rational y = z.im() / (2 * *x);
  return Exact(*x, y);
}

Exact sqrt_cplus(const Exact& z) {
  auto root = try_sqrt_cplus(z);
  if (!root) {
    throw IrrationalRootError("irrational root: sqrt(" + to_string(z) +
                              ") is not Gaussian-rational");
  }
  return *root;
}

bool is_square(const Exact& z) {
  if (z.is_zero()) return true;
  return try_sqrt_cplus(z).has_value();
}

// ---------------------------------------------------------------------------

namespace {

struct ApproxSettings {
  unsigned bits = 128;
  double eps = 1e-30;
};

ApproxSettings& settings() {
  static ApproxSettings s;
  return s;
}

unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

struct PrecisionInit {
  PrecisionInit() { Real::default_precision(digits10_for_bits(settings().bits)); }
};
const PrecisionInit kPrecisionInit;

}  // namespace

unsigned ApproxContext::precision_bits() { return settings().bits; }
double ApproxContext::eps() { return settings().eps; }

void ApproxContext::configure(unsigned precision_bits, double eps) {
  if (precision_bits < 53) throw InputError("precision below 53 bits");
  if (!(eps > 0)) throw InputError("eps must be positive");
  settings().bits = precision_bits;
  settings().eps = eps;
  Real::default_precision(digits10_for_bits(precision_bits));
}

Real Approx::abs() const { return boost::multiprecision::sqrt(re_ * re_ + im_ * im_); }

bool Approx::is_negligible() const { return abs() <= Real(eps_); }

Approx& Approx::operator*=(const Approx& o) {
  Real re = re_ * o.re_ - im_ * o.im_;
  Real im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Approx& Approx::operator/=(const Approx& o) {
  Real n = o.re_ * o.re_ + o.im_ * o.im_;
  if (n == 0) throw std::domain_error("division by zero scalar");
  Real re = (re_ * o.re_ + im_ * o.im_) / n;
  Real im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

bool approx_eq(const Approx& a, const Approx& b) {
  Real scale = 1;
  Real ma = a.abs(), mb = b.abs();
  if (ma > scale) scale = ma;
  if (mb > scale) scale = mb;
  return (a - b).abs() <= Real(a.eps()) * scale;
}

bool operator==(const Approx& a, const Approx& b) { return approx_eq(a, b); }

bool in_c_plus(const Approx& z) {
  return z.re() > 0 || (z.re() == 0 && z.im() > 0);
}

Approx sqrt_cplus(const Approx& z) {
  if (z.re() == 0 && z.im() == 0) {
    throw std::domain_error("sqrt of zero has no C+ representative");
  }
  using boost::multiprecision::sqrt;
  Real modulus = z.abs();
  Real x = sqrt((modulus + z.re()) / 2);
  if (x > 0) {
    Real y = z.im() / (2 * x);
    return Approx(x, y, z.eps());
  }
  // Negative real axis: the root is purely imaginary with positive part.
  return Approx(Real(0), sqrt(-z.re()), z.eps());
}

Approx exact_to_approx(const Exact& z, double eps) {
  Real re(z.re().get_num().get_str());
  re /= Real(z.re().get_den().get_str());
  Real im(z.im().get_num().get_str());
  im /= Real(z.im().get_den().get_str());
  return Approx(re, im, eps);
}

std::string to_string(const Approx& z, int digits) {
  std::ostringstream re, im;
  re.precision(digits);
  im.precision(digits);
  re << z.re();
  if (z.im() == 0) return re.str();
  im << z.im();
  std::string is = im.str();
  if (z.re() == 0) return is + "*i";
  if (is.front() != '-') is = "+" + is;
  return re.str() + is + "*i";
}

double pivot_magnitude(const Exact& z) {
  if (z.is_zero()) return 0.0;
  return std::sqrt(z.norm().get_d()) + 1e-300;
}

double pivot_magnitude(const Approx& z) {
  if (z.is_negligible()) return 0.0;
  return static_cast<double>(z.abs());
}

}  // namespace superform
