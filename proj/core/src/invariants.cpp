#include "superform/invariants.hpp"

namespace superform {

namespace {

Matrix<Polynomial> lift(const Matrix<Exact>& m) {
  Matrix<Polynomial> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Polynomial(m(r, c));
  return out;
}

// det(A - lambda * M) for square A, M.
Polynomial pencil_determinant(const Matrix<Exact>& a, const Matrix<Exact>& m) {
  Matrix<Polynomial> p = lift(a);
  const Polynomial lambda = Polynomial::lambda();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) p(r, c) -= Polynomial(m(r, c)) * lambda;
  return determinant(std::move(p));
}

Matrix<Exact> j_of(const CouplingMatrix& b) {
  if (b.cols() % 2 != 0) throw InputError("coupling block needs an even number of columns");
  return symplectic_unit<Exact>(b.cols() / 2);
}

}  // namespace

Polynomial p_poly(const CouplingMatrix& b) {
  const Matrix<Exact> j = j_of(b);
  return pencil_determinant(b * j * b.transpose(), Matrix<Exact>::identity(b.rows()));
}

Polynomial q_poly(const CouplingMatrix& b) {
  const Matrix<Exact> j = j_of(b);
  return pencil_determinant(b.transpose() * b, j);
}

RelationReport relation_check(const CouplingMatrix& b) {
  const std::size_t k = b.rows();
  const std::size_t two_ell = b.cols();
  const Polynomial lhs = Polynomial::monomial(Exact(1), static_cast<unsigned>(k)) * q_poly(b);
  const Polynomial rhs =
      Polynomial::monomial(Exact(1), static_cast<unsigned>(two_ell)) * p_poly(b).reflect();
  RelationReport rep;
  rep.alternative_sign = k % 2 == 0 ? 1 : -1;
  if (lhs == rhs) {
    rep.holds = true;
    rep.sign = 1;
  } else if (lhs == -rhs) {
    rep.holds = true;
    rep.sign = -1;
  } else {
    throw VerificationError("Q_B and P_B(-lambda) are not related by a sign");
  }
  // Both signs pass only when both sides vanish.
  rep.alternative_holds = lhs == Polynomial(Exact(rep.alternative_sign)) * rhs;
  return rep;
}

CoefficientFormula p_coeff_formula(const CouplingMatrix& b) {
  const std::size_t k = b.rows();
  if (k < 2) throw InputError("coefficient formula needs k >= 2");
  const Matrix<Exact> j = j_of(b);
  const std::size_t ell = b.cols() / 2;
  CoefficientFormula out;
  for (std::size_t s1 = 0; s1 < k; ++s1) {
    for (std::size_t s2 = s1 + 1; s2 < k; ++s2) {
      const Exact t = (b.row(s1) * j * b.row(s2).transpose())(0, 0);
      out.value += t * t;
      // The same pairing as a sum of 2x2 minors on paired columns.
      Exact m(0);
      for (std::size_t p = 0; p < ell; ++p) {
        m += b(s1, 2 * p) * b(s2, 2 * p + 1) - b(s1, 2 * p + 1) * b(s2, 2 * p);
      }
      out.minor_value += m * m;
    }
  }
  if (out.value != out.minor_value) {
    throw VerificationError("row-product and minor evaluations disagree");
  }
  out.coefficient = p_poly(b).coefficient(static_cast<unsigned>(k - 2));
  if (out.value == out.coefficient) {
    out.sign = 1;
  } else if (out.value == -out.coefficient) {
    out.sign = -1;
  }
  return out;
}

bool isotropy_check(const CouplingMatrix& b) { return (b.transpose() * b).is_zero(); }

InvariantSignature signature(const CouplingMatrix& b) {
  InvariantSignature sig;
  const Polynomial p = p_poly(b);
  sig.p_coeffs = p.descending(b.rows() + 1);
  sig.rank_b = rank(b);
  sig.isotropic_columns = isotropy_check(b);
  sig.p0 = p.coefficient(0);
  sig.q0 = determinant(b.transpose() * b);
  return sig;
}

}  // namespace superform
