#include "superform/superspace.hpp"

#include "superform/bases.hpp"

namespace superform {

const char* flavor_name(Flavor f) {
  return f == Flavor::Supersymmetric ? "supersymmetric" : "skew";
}

SuperDims dims_of(const CouplingMatrix& b) { return SuperDims{b.rows(), b.cols()}; }

namespace {

bool diagonal_blocks_ok(const GramForm& g) {
  if (!is_square_matrix(g.even_block) || !is_square_matrix(g.odd_block)) return false;
  if (g.coupling.rows() != g.even_dim() || g.coupling.cols() != g.odd_dim()) return false;
  if (g.flavor == Flavor::Supersymmetric) {
    return is_symmetric(g.even_block) && is_antisymmetric(g.odd_block);
  }
  return is_antisymmetric(g.even_block) && is_symmetric(g.odd_block);
}

}  // namespace

bool satisfies_flavor_identities(const GramForm& g) {
  if (!diagonal_blocks_ok(g)) return false;
  // The full matrix must obey G^T = sigma G with the parity sign pattern.
  const Matrix<Exact> full = g.full();
  const std::size_t e = g.even_dim();
  const int base = g.flavor == Flavor::Supersymmetric ? 1 : -1;
  for (std::size_t r = 0; r < full.rows(); ++r) {
    for (std::size_t c = 0; c < full.cols(); ++c) {
      const bool both_odd = r >= e && c >= e;
      const int sign = both_odd ? -base : base;
      if (full(r, c) != Exact(sign) * full(c, r)) return false;
    }
  }
  return true;
}

bool is_standard(const GramForm& g) {
  if (!diagonal_blocks_ok(g)) return false;
  if (g.flavor == Flavor::Supersymmetric) {
    return g.odd_dim() % 2 == 0 && g.even_block == Matrix<Exact>::identity(g.even_dim()) &&
           g.odd_block == symplectic_unit<Exact>(g.odd_dim() / 2);
  }
  return g.even_dim() % 2 == 0 && g.even_block == symplectic_unit<Exact>(g.even_dim() / 2) &&
         g.odd_block == Matrix<Exact>::identity(g.odd_dim());
}

GramForm make_standard_gram(const CouplingMatrix& b, Flavor flavor) {
  GramForm g;
  g.flavor = flavor;
  if (flavor == Flavor::Supersymmetric) {
    if (b.cols() % 2 != 0) throw InputError("symplectic dimension must be even");
    g.even_block = Matrix<Exact>::identity(b.rows());
    g.odd_block = symplectic_unit<Exact>(b.cols() / 2);
  } else {
    if (b.rows() % 2 != 0) throw InputError("symplectic dimension must be even");
    g.even_block = symplectic_unit<Exact>(b.rows() / 2);
    g.odd_block = Matrix<Exact>::identity(b.cols());
  }
  g.coupling = b;
  return g;
}

GramForm make_gram(Flavor flavor, Matrix<Exact> even_block, Matrix<Exact> odd_block,
                   Matrix<Exact> coupling) {
  GramForm g{flavor, std::move(even_block), std::move(odd_block), std::move(coupling)};
  if (!is_square_matrix(g.even_block)) throw InputError("even_block must be square");
  if (!is_square_matrix(g.odd_block)) throw InputError("odd_block must be square");
  if (g.coupling.rows() != g.even_dim() || g.coupling.cols() != g.odd_dim()) {
    throw InputError("coupling shape " + Matrix<Exact>::shape_text(g.coupling) +
                     " does not match block sizes");
  }
  if (!satisfies_flavor_identities(g)) {
    throw InputError(std::string("diagonal blocks violate the ") + flavor_name(flavor) +
                     " symmetry");
  }
  return g;
}

bool is_pre_oscillator(const GramForm& g) {
  if (!diagonal_blocks_ok(g)) return false;
  if (g.even_dim() == 0 || g.odd_dim() == 0) return false;
  if (determinant(g.even_block).is_zero() || determinant(g.odd_block).is_zero()) {
    return false;
  }
  if (g.coupling.is_zero()) return false;
  return !g.even_block.is_zero() || !g.odd_block.is_zero();
}

namespace {

template <class S>
NormalizedGram<S> normalize_in(const GramForm& g) {
  const Matrix<S> even = convert_matrix<S>(g.even_block);
  const Matrix<S> odd = convert_matrix<S>(g.odd_block);
  const std::size_t e = g.even_dim(), o = g.odd_dim();
  NormalizedGram<S> out;
  if (g.flavor == Flavor::Supersymmetric) {
    out.m_even = orthonormal_basis(even, unit_vectors<S>(e, 0, e));
    out.m_odd = symplectic_basis(odd, unit_vectors<S>(o, 0, o));
  } else {
    out.m_even = symplectic_basis(even, unit_vectors<S>(e, 0, e));
    out.m_odd = orthonormal_basis(odd, unit_vectors<S>(o, 0, o));
  }
  out.standard.flavor = g.flavor;
  out.standard.even_block = out.m_even.transpose() * even * out.m_even;
  out.standard.odd_block = out.m_odd.transpose() * odd * out.m_odd;
  out.standard.coupling =
      out.m_even.transpose() * convert_matrix<S>(g.coupling) * out.m_odd;

  // Verify against the exact standard blocks.
  Matrix<S> target_even, target_odd;
  if (g.flavor == Flavor::Supersymmetric) {
    target_even = Matrix<S>::identity(e);
    target_odd = symplectic_unit<S>(o / 2);
  } else {
    target_even = symplectic_unit<S>(e / 2);
    target_odd = Matrix<S>::identity(o);
  }
  out.residual = std::max(max_abs_difference(out.standard.even_block, target_even),
                          max_abs_difference(out.standard.odd_block, target_odd));
  const double tol = std::is_same_v<S, Exact> ? 0.0 : ApproxContext::eps();
  if (out.residual > tol) {
    throw VerificationError("normalisation witness residual " +
                            std::to_string(out.residual) + " exceeds tolerance");
  }
  out.standard.even_block = target_even;
  out.standard.odd_block = target_odd;
  return out;
}

}  // namespace

NormalizeResult normalize_gram(const GramForm& g, bool force_approx) {
  if (!diagonal_blocks_ok(g)) {
    throw InputError(std::string("blocks violate the ") + flavor_name(g.flavor) +
                     " symmetry");
  }
  if (determinant(g.even_block).is_zero()) throw InputError("even_block is degenerate");
  if (determinant(g.odd_block).is_zero()) throw InputError("odd_block is degenerate");
  const std::size_t sympl = g.flavor == Flavor::Supersymmetric ? g.odd_dim() : g.even_dim();
  if (sympl % 2 != 0) throw InputError("alternating block has odd size");
  if (!force_approx) {
    try {
      return normalize_in<Exact>(g);
    } catch (const IrrationalRootError&) {
    }
  }
  return normalize_in<Approx>(g);
}

GramForm swap_parity(const GramForm& g) {
  GramForm out;
  out.flavor = g.flavor == Flavor::Supersymmetric ? Flavor::SkewSupersymmetric
                                                  : Flavor::Supersymmetric;
  out.even_block = g.odd_block;
  out.odd_block = g.even_block;
  out.coupling = g.coupling.transpose();
  return out;
}

GramForm parity_reverse(const GramForm& g) {
  if (!is_standard(g)) throw InputError("parity_reverse requires a standard form");
  return swap_parity(g);
}

GramForm degenerate_example_form() {
  return make_gram(Flavor::Supersymmetric, Matrix<Exact>{{1}}, Matrix<Exact>{{0}},
                   Matrix<Exact>{{1}});
}

}  // namespace superform
