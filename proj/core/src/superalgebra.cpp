#include "superform/superalgebra.hpp"

#include <sstream>

namespace superform {

std::size_t SuperAlgebra::index(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  throw InputError("unknown basis element '" + name + "'");
}

Coords SuperAlgebra::unit(std::size_t i) const {
  Coords c(dim());
  c.at(i) = Exact(1);
  return c;
}

Coords SuperAlgebra::bracket(const Coords& x, const Coords& y) const {
  Coords out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j].is_zero()) continue;
      Exact w = x[i] * y[j];
      const Coords& c = bracket_table[i][j];
      for (std::size_t k = 0; k < dim(); ++k) {
        if (!c[k].is_zero()) out[k] += w * c[k];
      }
    }
  }
  return out;
}

std::vector<std::string> default_oscillator_names(std::size_t even_dim,
                                                  std::size_t odd_dim) {
  std::vector<std::string> names;
  if (even_dim == 2 && odd_dim == 1) {
    names = {"b1", "b2", "a"};
  } else {
    for (std::size_t i = 0; i < even_dim; ++i) names.push_back("e" + std::to_string(i + 1));
    for (std::size_t i = 0; i < odd_dim; ++i) names.push_back("o" + std::to_string(i + 1));
  }
  names.emplace_back("K");
  names.emplace_back("kappa");
  return names;
}

SuperAlgebra oscillator_algebra(const GramForm& g, std::vector<std::string> names) {
  if (g.flavor != Flavor::SkewSupersymmetric) {
    throw InputError("oscillator algebra needs a skew-supersymmetric form");
  }
  if (!satisfies_flavor_identities(g)) {
    throw InputError("form violates skew-supersymmetry");
  }
  const std::size_t e = g.even_dim(), o = g.odd_dim();
  const std::size_t n = e + o + 2;
  if (names.empty()) names = default_oscillator_names(e, o);
  if (names.size() != n) throw InputError("wrong number of basis names");

  SuperAlgebra alg;
  alg.names = std::move(names);
  alg.parity.assign(n, 0);
  for (std::size_t i = e; i < e + o; ++i) alg.parity[i] = 1;
  alg.parity[n - 1] = 1;
  const std::size_t k_idx = n - 2, kappa_idx = n - 1;

  alg.bracket_table.assign(n, std::vector<Coords>(n, Coords(n)));
  Matrix<Exact> full = g.full();
  for (std::size_t i = 0; i < e + o; ++i) {
    for (std::size_t j = 0; j < e + o; ++j) {
      if (full(i, j).is_zero()) continue;
      const std::size_t target = alg.parity[i] == alg.parity[j] ? k_idx : kappa_idx;
      alg.bracket_table[i][j][target] = full(i, j);
    }
  }
  return alg;
}

namespace {

GramForm example_form(bool inhomogeneous) {
  Matrix<Exact> coupling(2, 1);
  if (inhomogeneous) coupling(0, 0) = Exact(1);
  return make_gram(Flavor::SkewSupersymmetric, symplectic_unit<Exact>(1),
                   Matrix<Exact>{{Exact(1)}}, coupling);
}

bool all_zero(const Coords& c) {
  for (const auto& x : c) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Coords scaled(Coords c, int sign) {
  if (sign < 0) {
    for (auto& x : c) x = -x;
  }
  return c;
}

void accumulate(Coords& into, const Coords& add) {
  for (std::size_t k = 0; k < into.size(); ++k) into[k] += add[k];
}

}  // namespace

GramForm homogeneous_example_form() { return example_form(false); }
GramForm inhomogeneous_example_form() { return example_form(true); }

const char* axiom_kind_name(AxiomViolation::Kind k) {
  switch (k) {
    case AxiomViolation::Kind::Parity:
      return "parity";
    case AxiomViolation::Kind::SkewSymmetry:
      return "super skew-symmetry";
    case AxiomViolation::Kind::Jacobi:
      return "super Jacobi";
  }
  return "?";
}

AxiomReport check_super_axioms(const SuperAlgebra& alg) {
  AxiomReport report;
  const std::size_t n = alg.dim();
  const auto& p = alg.parity;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Coords& c = alg.bracket(i, j);
      ++report.checked;
      bool bad = false;
      Coords defect(n);
      for (std::size_t k = 0; k < n; ++k) {
        if (!c[k].is_zero() && p[k] != (p[i] + p[j]) % 2) {
          bad = true;
          defect[k] = c[k];
        }
      }
      if (bad) report.violations.push_back({AxiomViolation::Kind::Parity, i, j, 0, defect});

      ++report.checked;
      Coords skew = alg.bracket(j, i);
      // [x_i, x_j] + (-1)^{p_i p_j} [x_j, x_i] must vanish.
      Coords sum = c;
      accumulate(sum, scaled(skew, (p[i] && p[j]) ? -1 : 1));
      if (!all_zero(sum)) {
        report.violations.push_back({AxiomViolation::Kind::SkewSymmetry, i, j, 0, sum});
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        ++report.checked;
        Coords total(n);
        accumulate(total, scaled(alg.bracket(alg.unit(i), alg.bracket(j, k)), (p[i] && p[k]) ? -1 : 1));
        accumulate(total, scaled(alg.bracket(alg.unit(j), alg.bracket(k, i)), (p[j] && p[i]) ? -1 : 1));
        accumulate(total, scaled(alg.bracket(alg.unit(k), alg.bracket(i, j)), (p[k] && p[j]) ? -1 : 1));
        if (!all_zero(total)) {
          report.violations.push_back({AxiomViolation::Kind::Jacobi, i, j, k, total});
        }
      }
    }
  }
  return report;
}

std::string format_coords(const Coords& c, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    std::string coeff = to_string(c[k]);
    bool negative = c[k].is_real() && sgn(c[k].re()) < 0;
    if (negative) coeff = coeff.substr(1);
    if (!out.empty()) {
      out += negative ? " - " : " + ";
    } else if (negative) {
      out += "-";
    }
    if (coeff != "1") {
      out += (c[k].is_real() ? coeff : "(" + coeff + ")") + " * ";
    }
    out += names[k];
  }
  return out.empty() ? "0" : out;
}

std::vector<std::string> format_brackets(const SuperAlgebra& alg) {
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::size_t j = i; j < alg.dim(); ++j) {
      const Coords& c = alg.bracket(i, j);
      for (std::size_t k = 0; k < alg.dim(); ++k) {
        if (c[k].is_zero()) continue;
        std::ostringstream os;
        os << "[" << alg.names[i] << ", " << alg.names[j] << "] = " << to_string(c[k])
           << " * " << alg.names[k];
        lines.push_back(os.str());
      }
    }
  }
  return lines;
}

}  // namespace superform
