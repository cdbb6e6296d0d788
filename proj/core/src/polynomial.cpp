#include "superform/polynomial.hpp"

#include <stdexcept>

namespace superform {

Polynomial::Polynomial(const Exact& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

Polynomial Polynomial::monomial(const Exact& c, unsigned degree) {
  Polynomial p;
  if (c.is_zero()) return p;
  p.coeffs_.assign(degree + 1, Exact(0));
  p.coeffs_[degree] = c;
  return p;
}

Polynomial Polynomial::from_descending(const std::vector<Exact>& coeffs) {
  Polynomial p;
  p.coeffs_.assign(coeffs.rbegin(), coeffs.rend());
  p.trim();
  return p;
}

Exact Polynomial::coefficient(unsigned d) const {
  return d < coeffs_.size() ? coeffs_[d] : Exact(0);
}

std::vector<Exact> Polynomial::descending() const {
  return std::vector<Exact>(coeffs_.rbegin(), coeffs_.rend());
}

std::vector<Exact> Polynomial::descending(std::size_t length) const {
  if (length < coeffs_.size()) throw std::length_error("polynomial too long");
  std::vector<Exact> out(length - coeffs_.size(), Exact(0));
  out.insert(out.end(), coeffs_.rbegin(), coeffs_.rend());
  return out;
}

Exact Polynomial::evaluate(const Exact& x) const {
  Exact acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::reflect() const {
  Polynomial p = *this;
  for (std::size_t d = 1; d < p.coeffs_.size(); d += 2) p.coeffs_[d] = -p.coeffs_[d];
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Exact(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Exact(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Exact> out(coeffs_.size() + o.coeffs_.size() - 1, Exact(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator/=(const Polynomial& o) {
  if (o.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) return *this;
  if (degree() < o.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<Exact> rem = coeffs_;
  std::vector<Exact> quot(coeffs_.size() - o.coeffs_.size() + 1, Exact(0));
  const Exact& lead = o.coeffs_.back();
  for (std::size_t q = quot.size(); q-- > 0;) {
    Exact c = rem[q + o.coeffs_.size() - 1] / lead;
    quot[q] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) rem[q + j] -= c * o.coeffs_[j];
  }
  for (const auto& r : rem)
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  coeffs_ = std::move(quot);
  trim();
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::string to_string(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = p.degree(); d >= 0; --d) {
    Exact c = p.coefficient(static_cast<unsigned>(d));
    if (c.is_zero()) continue;
    std::string body;
    bool negative = false;
    if (c.is_real() && sgn(c.re()) < 0) {
      negative = true;
      c = -c;
    }
    std::string cs = to_string(c);
    bool compound = !c.is_real() && sgn(c.re()) != 0;
    if (compound) cs = "(" + cs + ")";
    std::string mono = d == 0 ? "" : (d == 1 ? var : var + "^" + std::to_string(d));
    if (d == 0) {
      body = cs;
    } else if (c == Exact(1)) {
      body = mono;
    } else {
      body = cs + "*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace superform
