#include "superform/fock.hpp"

#include <sstream>

namespace superform {

const char* variant_name(FockVariant v) {
  return v == FockVariant::Homogeneous ? "homogeneous" : "inhomogeneous";
}

std::string FockSpace::basis_name(std::size_t idx) const {
  std::string out;
  const std::size_t n = degree_of(idx);
  if (n == 1) out = "x";
  if (n > 1) out = "x^" + std::to_string(n);
  auto append = [&](const char* s) {
    if (!out.empty()) out += " ";
    out += s;
  };
  if (xi_of(idx)) append("xi");
  if (kappa_of(idx)) append("kappa");
  return out.empty() ? "1" : out;
}

namespace {

Matrix<Exact> zero(const FockSpace& s) { return Matrix<Exact>(s.dim(), s.dim()); }

Matrix<Exact> d_x(const FockSpace& s) {
  Matrix<Exact> m = zero(s);
  for (std::size_t j = 0; j < s.dim(); ++j) {
    const std::size_t n = s.degree_of(j);
    if (n == 0) continue;
    m(s.index(n - 1, s.xi_of(j), s.kappa_of(j)), j) = Exact(static_cast<long>(n));
  }
  return m;
}

Matrix<Exact> mul_x(const FockSpace& s) {
  Matrix<Exact> m = zero(s);
  for (std::size_t j = 0; j < s.dim(); ++j) {
    const std::size_t n = s.degree_of(j);
    if (n == s.max_degree) continue;
    m(s.index(n + 1, s.xi_of(j), s.kappa_of(j)), j) = Exact(1);
  }
  return m;
}

Matrix<Exact> mul_xi(const FockSpace& s) {
  Matrix<Exact> m = zero(s);
  for (std::size_t j = 0; j < s.dim(); ++j) {
    const std::size_t n = s.degree_of(j);
    if (s.xi_of(j)) {
      m(s.index(n, 0, s.kappa_of(j)), j) = Exact(Rational(1, 2));
    } else {
      m(s.index(n, 1, s.kappa_of(j)), j) = Exact(1);
    }
  }
  return m;
}

Matrix<Exact> d_xi(const FockSpace& s) {
  Matrix<Exact> m = zero(s);
  for (std::size_t j = 0; j < s.dim(); ++j) {
    if (s.xi_of(j)) m(s.index(s.degree_of(j), 0, s.kappa_of(j)), j) = Exact(1);
  }
  return m;
}

Matrix<Exact> mul_kappa(const FockSpace& s) {
  Matrix<Exact> m = zero(s);
  if (s.variant == FockVariant::Homogeneous) return m;
  for (std::size_t j = 0; j < s.dim(); ++j) {
    if (s.kappa_of(j)) continue;
    m(s.index(s.degree_of(j), s.xi_of(j), 1), j) = Exact(s.xi_of(j) ? -1 : 1);
  }
  return m;
}

const char* const kGeneratorNames[] = {"b1", "b2", "a", "K", "kappa"};

// Columns of `m` for basis vectors of degree <= limit.
bool agree_up_to(const Matrix<Exact>& a, const Matrix<Exact>& b, const FockSpace& s,
                 std::size_t limit, std::size_t& bad_column) {
  for (std::size_t j = 0; j < s.dim(); ++j) {
    if (s.degree_of(j) > limit) continue;
    for (std::size_t i = 0; i < s.dim(); ++i) {
      if (a(i, j) != b(i, j)) {
        bad_column = j;
        return false;
      }
    }
  }
  return true;
}

Matrix<Exact> supercommutator(const Matrix<Exact>& a, int pa, const Matrix<Exact>& b, int pb) {
  return (pa && pb) ? a * b + b * a : a * b - b * a;
}

void require_space(std::size_t N, std::size_t min) {
  if (N < min) throw InputError("Fock degree must be at least " + std::to_string(min));
}

}  // namespace

FockOperator rho(std::size_t generator, const FockSpace& space) {
  require_space(space.max_degree, 1);
  switch (generator) {
    case 0: {
      Matrix<Exact> m = d_x(space);
      if (space.variant == FockVariant::Inhomogeneous) m = m + mul_kappa(space) * d_xi(space);
      return {m, 0};
    }
    case 1:
      return {mul_x(space), 0};
    case 2:
      return {mul_xi(space), 1};
    case 3:
      return {Matrix<Exact>::identity(space.dim()), 0};
    case 4:
      return {mul_kappa(space), 1};
    default:
      throw InputError("unknown generator index " + std::to_string(generator));
  }
}

FockOperator rho(const std::string& generator, const FockSpace& space) {
  for (std::size_t i = 0; i < 5; ++i) {
    if (generator == kGeneratorNames[i]) return rho(i, space);
  }
  throw InputError("unknown generator '" + generator + "'");
}

Matrix<Exact> rho(const UEAElement& u, const FockSpace& space) {
  std::vector<Matrix<Exact>> gens;
  for (std::size_t i = 0; i < 5; ++i) gens.push_back(rho(i, space).matrix);
  Matrix<Exact> out = zero(space);
  for (const auto& [m, c] : u.terms()) {
    if (m.exponents.size() != 5) throw InputError("Fock module needs a five-element basis");
    Matrix<Exact> term = Matrix<Exact>::identity(space.dim());
    for (std::size_t i = 0; i < 5; ++i) {
      for (unsigned e = 0; e < m.exponents[i]; ++e) term = term * gens[i];
    }
    out = out + term * c;
  }
  return out;
}

bool respects_parity(const FockOperator& op, const FockSpace& space) {
  for (std::size_t i = 0; i < space.dim(); ++i) {
    for (std::size_t j = 0; j < space.dim(); ++j) {
      if (op.matrix(i, j).is_zero()) continue;
      if ((space.parity_of(i) + space.parity_of(j)) % 2 != op.parity) return false;
    }
  }
  return true;
}

FockReport representation_check(const SuperAlgebra& alg, FockVariant variant, std::size_t N) {
  require_space(N, 2);
  if (alg.dim() != 5 || alg.parity != std::vector<int>{0, 0, 1, 0, 1}) {
    throw InputError("Fock module needs a (b1, b2, a, K, kappa) algebra");
  }
  FockSpace space{variant, N};
  std::vector<FockOperator> ops;
  for (std::size_t i = 0; i < 5; ++i) ops.push_back(rho(i, space));

  FockReport report;
  for (std::size_t u = 0; u < 5; ++u) {
    for (std::size_t v = 0; v < 5; ++v) {
      ++report.identities_checked;
      Matrix<Exact> lhs = supercommutator(ops[u].matrix, ops[u].parity, ops[v].matrix, ops[v].parity);
      Matrix<Exact> rhs = zero(space);
      const Coords& c = alg.bracket(u, v);
      for (std::size_t k = 0; k < 5; ++k) {
        if (!c[k].is_zero()) rhs = rhs + ops[k].matrix * c[k];
      }
      std::size_t col = 0;
      if (!agree_up_to(lhs, rhs, space, N - 2, col)) {
        report.defects.push_back("[" + alg.names[u] + ", " + alg.names[v] + "] fails on " +
                                 space.basis_name(col));
      }
    }
  }
  ++report.identities_checked;
  for (std::size_t i = 0; i < space.dim(); ++i) {
    if (!ops[0].matrix(i, space.index(0, 0, 0)).is_zero()) {
      report.defects.push_back("b1 does not annihilate 1");
      break;
    }
  }
  return report;
}

FockReport osp_action_check(const OspGenerators& gens, FockVariant variant, std::size_t N) {
  require_space(N, 4);
  FockSpace space{variant, N};
  BracketTable table = bracket_table(gens);
  const Matrix<Exact> kappa = rho(std::size_t{4}, space).matrix;

  std::vector<Matrix<Exact>> span;
  for (std::size_t i = 0; i < kOspDim; ++i) span.push_back(rho(gens[i], space));
  for (std::size_t i = 0; i < kOspDim; ++i) span.push_back(kappa * span[i]);

  FockReport report;
  for (std::size_t i = 0; i < BracketTable::kSpan; ++i) {
    for (std::size_t j = 0; j < BracketTable::kSpan; ++j) {
      ++report.identities_checked;
      Matrix<Exact> lhs = supercommutator(span[i], table.parity[i], span[j], table.parity[j]);
      Matrix<Exact> rhs = zero(space);
      for (std::size_t k = 0; k < BracketTable::kSpan; ++k) {
        const Exact& c = table.at(i, j)[k];
        if (!c.is_zero()) rhs = rhs + span[k] * c;
      }
      std::size_t col = 0;
      if (!agree_up_to(lhs, rhs, space, N - 4, col)) {
        report.defects.push_back("[" + table.names[i] + ", " + table.names[j] + "] fails on " +
                                 space.basis_name(col));
      }
    }
  }
  for (std::size_t n = 0; n + 2 <= N; ++n) {
    ++report.identities_checked;
    const std::size_t col = space.index(n, 0, 0);
    const Exact expected = Exact(Rational(static_cast<long>(2 * n + 1), 4));
    for (std::size_t i = 0; i < space.dim(); ++i) {
      const Exact want = i == col ? expected : Exact(0);
      if (span[0](i, col) != want) {
        report.defects.push_back("H is not " + to_string(expected) + " on " + space.basis_name(col));
        break;
      }
    }
  }
  return report;
}

}  // namespace superform
