#include "superform/uea.hpp"

#include <algorithm>
#include <sstream>

#include "superform/matrix.hpp"

namespace superform {

unsigned NormalMonomial::degree() const {
  unsigned d = 0;
  for (unsigned e : exponents) d += e;
  return d;
}

std::strong_ordering operator<=>(const NormalMonomial& a, const NormalMonomial& b) {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return db <=> da;
  // Larger exponent vector first.
  return b.exponents <=> a.exponents;
}

namespace {

using Word = std::vector<std::size_t>;

NormalMonomial monomial_of(const Word& w, std::size_t dim) {
  NormalMonomial m;
  m.exponents.assign(dim, 0);
  for (std::size_t x : w) ++m.exponents[x];
  return m;
}

Word word_of(const NormalMonomial& m) {
  Word w;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    w.insert(w.end(), m.exponents[i], i);
  }
  return w;
}

int word_parity(const SuperAlgebra& alg, const NormalMonomial& m) {
  int p = 0;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    p += alg.parity[i] * static_cast<int>(m.exponents[i]);
  }
  return p % 2;
}

void require_same(const UEAElement& u, const UEAElement& v) {
  if (!u.algebra() || u.algebra() != v.algebra()) {
    throw InputError("UEA elements over different algebras");
  }
}

}  // namespace

UEAElement UEAElement::scalar(AlgebraPtr alg, const Exact& c) {
  UEAElement u(alg);
  NormalMonomial one;
  one.exponents.assign(alg->dim(), 0);
  u.add_term(one, c);
  return u;
}

UEAElement UEAElement::generator(AlgebraPtr alg, std::size_t i) {
  if (i >= alg->dim()) throw InputError("generator index out of range");
  UEAElement u(alg);
  u.add_term(monomial_of({i}, alg->dim()), Exact(1));
  return u;
}

UEAElement UEAElement::generator(AlgebraPtr alg, const std::string& name) {
  std::size_t i = alg->index(name);
  return generator(std::move(alg), i);
}

void UEAElement::add_term(const NormalMonomial& m, const Exact& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<int> UEAElement::parity() const {
  std::optional<int> p;
  for (const auto& [m, c] : terms_) {
    int q = word_parity(*alg_, m);
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p.value_or(0);
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
  if (!alg_) alg_ = o.alg_;
  if (o.alg_ && o.alg_ != alg_) throw InputError("UEA elements over different algebras");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
  if (!alg_) alg_ = o.alg_;
  if (o.alg_ && o.alg_ != alg_) throw InputError("UEA elements over different algebras");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

UEAElement& UEAElement::operator*=(const Exact& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

UEAElement normal_order(const AlgebraPtr& alg,
                        const std::vector<std::pair<Word, Exact>>& words,
                        RewriteStrategy strategy) {
  const SuperAlgebra& a = *alg;
  const Exact half = Exact(Rational(1, 2));
  UEAElement out(alg);
  std::vector<std::pair<Word, Exact>> work(words.rbegin(), words.rend());

  auto disordered = [&](const Word& w, std::size_t i) {
    return w[i] > w[i + 1] || (w[i] == w[i + 1] && a.parity[w[i]] == 1);
  };

  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    if (c.is_zero()) continue;

    std::size_t pos = w.size();
    if (w.size() >= 2) {
      if (strategy == RewriteStrategy::Leftmost) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
          if (disordered(w, i)) {
            pos = i;
            break;
          }
        }
      } else {
        for (std::size_t i = w.size() - 1; i-- > 0;) {
          if (disordered(w, i)) {
            pos = i;
            break;
          }
        }
      }
    }
    if (pos == w.size()) {
      out.add_term(monomial_of(w, a.dim()), c);
      continue;
    }

    const std::size_t x = w[pos], y = w[pos + 1];
    auto splice = [&](std::size_t k) {
      Word r(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      r.push_back(k);
      r.insert(r.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 2), w.end());
      return r;
    };
    const Coords& br = a.bracket(x, y);
    if (x == y) {
      for (std::size_t k = 0; k < a.dim(); ++k) {
        if (!br[k].is_zero()) work.emplace_back(splice(k), c * br[k] * half);
      }
      continue;
    }
    Word swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    work.emplace_back(std::move(swapped), (a.parity[x] && a.parity[y]) ? -c : c);
    for (std::size_t k = 0; k < a.dim(); ++k) {
      if (!br[k].is_zero()) work.emplace_back(splice(k), c * br[k]);
    }
  }
  return out;
}

UEAElement normal_product(const UEAElement& u, const UEAElement& v, RewriteStrategy strategy) {
  require_same(u, v);
  std::vector<std::pair<Word, Exact>> words;
  for (const auto& [mu, cu] : u.terms()) {
    Word wu = word_of(mu);
    for (const auto& [mv, cv] : v.terms()) {
      Word w = wu;
      Word wv = word_of(mv);
      w.insert(w.end(), wv.begin(), wv.end());
      words.emplace_back(std::move(w), cu * cv);
    }
  }
  return normal_order(u.algebra(), words, strategy);
}

UEAElement operator*(const UEAElement& a, const UEAElement& b) { return normal_product(a, b); }

UEAElement super_bracket(const UEAElement& u, const UEAElement& v) {
  require_same(u, v);
  auto pu = u.parity(), pv = v.parity();
  if (!pu || !pv) throw InputError("super bracket of a non-homogeneous element");
  UEAElement r = u * v;
  UEAElement s = v * u;
  if (*pu && *pv) {
    r += s;
  } else {
    r -= s;
  }
  return r;
}

UEAElement specialize(const UEAElement& u, std::size_t index, const Exact& value) {
  UEAElement out(u.algebra());
  for (const auto& [m, c] : u.terms()) {
    NormalMonomial r = m;
    Exact w = c;
    for (unsigned e = 0; e < m.exponents.at(index); ++e) w *= value;
    r.exponents[index] = 0;
    out.add_term(r, w);
  }
  return out;
}

namespace {

std::string monomial_text(const NormalMonomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!out.empty()) out += " ";
    out += names[i];
    if (m.exponents[i] > 1) out += "^" + std::to_string(m.exponents[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const UEAElement& u) {
  std::string out;
  for (const auto& [m, c] : u.terms()) {
    std::string mono = monomial_text(m, u.algebra()->names);
    std::string coeff = to_string(c);
    bool negative = c.is_real() && sgn(c.re()) < 0;
    if (negative) coeff = coeff.substr(1);
    if (!c.is_real()) coeff = "(" + coeff + ")";
    if (!out.empty()) {
      out += negative ? " - " : " + ";
    } else if (negative) {
      out += "-";
    }
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + " * " + mono;
    }
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

const std::array<std::string, kOspDim>& osp_names() {
  static const std::array<std::string, kOspDim> names = {"H", "E+", "E-", "F+", "F-"};
  return names;
}

const std::array<int, kOspDim>& osp_parities() {
  static const std::array<int, kOspDim> p = {0, 0, 0, 1, 1};
  return p;
}

OspGenerators osp_generators(AlgebraPtr alg) {
  if (!alg || alg->dim() != 5 || alg->parity != std::vector<int>{0, 0, 1, 0, 1}) {
    throw InputError("osp generators need a (b1, b2, a, K, kappa) oscillator algebra");
  }
  for (std::size_t c : {std::size_t{3}, std::size_t{4}}) {
    for (std::size_t j = 0; j < 5; ++j) {
      for (const auto& x : alg->bracket(c, j)) {
        if (!x.is_zero()) throw InputError("K and kappa must be central");
      }
    }
  }
  const Exact q = Exact(Rational(1, 4));
  const Exact h = Exact(Rational(1, 2));
  auto words = [&](std::vector<std::pair<Word, Exact>> ws) { return normal_order(alg, ws); };
  OspGenerators g;
  g.algebra = alg;
  g.g[0] = words({{{1, 0}, q}, {{0, 1}, q}});
  g.g[1] = words({{{1, 1}, h}});
  g.g[2] = words({{{0, 0}, -h}});
  g.g[3] = words({{{2, 1}, q}, {{1, 2}, q}});
  g.g[4] = words({{{2, 0}, q}, {{0, 2}, q}});
  return g;
}

std::size_t BracketTable::index(const std::string& name) const {
  for (std::size_t i = 0; i < kSpan; ++i) {
    if (names[i] == name) return i;
  }
  throw InputError("unknown span element '" + name + "'");
}

namespace {

// Coordinates of `target` in the span of `basis`; nullopt when outside.
std::optional<Coords> solve_in_span(const std::vector<UEAElement>& basis,
                                    const UEAElement& target) {
  std::vector<NormalMonomial> monos;
  for (const auto& b : basis) {
    for (const auto& [m, c] : b.terms()) monos.push_back(m);
  }
  for (const auto& [m, c] : target.terms()) monos.push_back(m);
  std::sort(monos.begin(), monos.end());
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());

  const std::size_t n = basis.size();
  Matrix<Exact> aug(monos.size(), n + 1);
  auto row_of = [&](const NormalMonomial& m) {
    return static_cast<std::size_t>(std::lower_bound(monos.begin(), monos.end(), m) - monos.begin());
  };
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [m, c] : basis[j].terms()) aug(row_of(m), j) = c;
  }
  for (const auto& [m, c] : target.terms()) aug(row_of(m), n) = c;

  auto ech = row_reduce(aug);
  const auto& piv = ech.pivot_columns;
  if (std::find(piv.begin(), piv.end(), n) != piv.end()) return std::nullopt;
  if (piv.size() < n) throw VerificationError("span elements are linearly dependent");
  Coords x(n);
  for (std::size_t r = 0; r < n; ++r) x[ech.pivot_columns[r]] = ech.reduced(r, n);
  return x;
}

}  // namespace

BracketTable bracket_table(const OspGenerators& gens, const Exact& central_value) {
  const AlgebraPtr& alg = gens.algebra;
  const std::size_t k_idx = 3;
  const UEAElement kappa = UEAElement::generator(alg, 4);

  BracketTable t;
  t.central_value = central_value;
  std::vector<UEAElement> span;
  for (std::size_t i = 0; i < kOspDim; ++i) {
    t.names[i] = osp_names()[i];
    t.names[i + kOspDim] = "kappa " + osp_names()[i];
    t.parity[i] = osp_parities()[i];
    t.parity[i + kOspDim] = 1 - osp_parities()[i];
    span.push_back(gens[i]);
  }
  for (std::size_t i = 0; i < kOspDim; ++i) span.push_back(kappa * gens[i]);
  std::vector<UEAElement> reduced;
  for (const auto& s : span) reduced.push_back(specialize(s, k_idx, central_value));

  for (std::size_t i = 0; i < BracketTable::kSpan; ++i) {
    for (std::size_t j = 0; j < BracketTable::kSpan; ++j) {
      UEAElement b = specialize(super_bracket(span[i], span[j]), k_idx, central_value);
      auto coords = solve_in_span(reduced, b);
      if (!coords) {
        throw VerificationError("bracket [" + t.names[i] + ", " + t.names[j] +
                                "] = " + to_string(b) + " leaves the span");
      }
      t.entries[i][j] = std::move(*coords);
    }
  }
  return t;
}

std::vector<std::string> format_table(const BracketTable& t, bool full_span) {
  const std::size_t n = full_span ? BracketTable::kSpan : kOspDim;
  std::vector<std::string> names(t.names.begin(), t.names.end());
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      lines.push_back("[" + t.names[i] + ", " + t.names[j] + "] = " + format_coords(t.at(i, j), names));
    }
  }
  return lines;
}

CocycleTable cocycle_from_table(const BracketTable& t) {
  CocycleTable c;
  for (std::size_t i = 0; i < kOspDim; ++i) {
    for (std::size_t j = 0; j < kOspDim; ++j) {
      const Coords& e = t.at(i, j);
      c.base[i][j] = Coords(e.begin(), e.begin() + kOspDim);
      c.gamma[i][j] = Coords(e.begin() + kOspDim, e.end());
    }
  }
  return c;
}

namespace {

Coords osp_bracket(const OspBracket& base, const Coords& x, const Coords& y) {
  Coords out(kOspDim);
  for (std::size_t i = 0; i < kOspDim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < kOspDim; ++j) {
      if (y[j].is_zero()) continue;
      Exact w = x[i] * y[j];
      for (std::size_t k = 0; k < kOspDim; ++k) out[k] += w * base[i][j][k];
    }
  }
  return out;
}

Coords apply_map(const OspMap& f, const Coords& x) {
  Coords out(kOspDim);
  for (std::size_t i = 0; i < kOspDim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t k = 0; k < kOspDim; ++k) out[k] += x[i] * f[i][k];
  }
  return out;
}

Coords osp_unit(std::size_t i) {
  Coords c(kOspDim);
  c[i] = Exact(1);
  return c;
}

}  // namespace

OspMap trivializing_map() {
  OspMap f;
  for (auto& v : f) v = Coords(kOspDim);
  f[3] = osp_unit(1);  // F+ -> E+
  f[4] = osp_unit(0);  // F- -> H
  return f;
}

TrivialityReport triviality_check(const CocycleTable& cocycle, const OspMap& f) {
  TrivialityReport report;
  const auto& p = osp_parities();
  for (std::size_t a = 0; a < kOspDim; ++a) {
    for (std::size_t b = 0; b < kOspDim; ++b) {
      ++report.pairs_checked;
      Coords first = osp_bracket(cocycle.base, osp_unit(a), f[b]);
      Coords second = osp_bracket(cocycle.base, osp_unit(b), f[a]);
      Coords third = apply_map(f, cocycle.base[a][b]);
      const int s1 = p[a] ? -1 : 1;
      const int s2 = ((p[a] + 1) * p[b]) % 2 ? -1 : 1;
      Coords rhs(kOspDim);
      for (std::size_t k = 0; k < kOspDim; ++k) {
        rhs[k] = Exact(s1) * first[k] - Exact(s2) * second[k] - third[k];
      }
      if (rhs != cocycle.gamma[a][b]) {
        report.defects.push_back({a, b, cocycle.gamma[a][b], rhs});
      }
    }
  }
  return report;
}

bool adjoint_ideal_check(const BracketTable& t) {
  constexpr std::size_t n = kOspDim;
  for (std::size_t i = n; i < 2 * n; ++i) {
    for (std::size_t j = n; j < 2 * n; ++j) {
      for (const auto& x : t.at(i, j)) {
        if (!x.is_zero()) return false;
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    const int sign = t.parity[x] ? -1 : 1;
    for (std::size_t y = 0; y < n; ++y) {
      Coords expected(2 * n);
      for (std::size_t k = 0; k < n; ++k) expected[n + k] = Exact(sign) * t.at(x, y)[k];
      if (t.at(x, n + y) != expected) return false;
    }
  }
  return true;
}

}  // namespace superform
