#pragma once

// Orbit invariants of a coupling block B under (X, Y) -> X^T B Y.

#include <vector>

#include "superform/polynomial.hpp"
#include "superform/superspace.hpp"

namespace superform {

/// P_B(lambda) = det(B J B^T - lambda I_k).
Polynomial p_poly(const CouplingMatrix& b);

/// Q_B(lambda) = det(B^T B - lambda J_2l).
Polynomial q_poly(const CouplingMatrix& b);

struct RelationReport {
  bool holds = false;
  int sign = 0;             // the s in Q_B = s * lambda^(2l-k) * P_B(-lambda)
  int alternative_sign = 0;     // (-1)^k, the variant with the extra factor
  bool alternative_holds = false;
};

/// Compares lambda^k Q_B(lambda) with s lambda^(2l) P_B(-lambda) for s = +1
/// and s = -1, which is the same identity without negative powers.
/// Throws VerificationError if neither sign works.
RelationReport relation_check(const CouplingMatrix& b);

/// Sum over row pairs s1 < s2 of (R_s1 J R_s2^T)^2, evaluated two ways.
struct CoefficientFormula {
  Exact value;          // from row products
  Exact minor_value;    // from paired 2x2 minors
  Exact coefficient;    // lambda^(k-2) coefficient of P_B
  int sign = 0;         // value == sign * coefficient (0 if both differ)
};

/// Requires k >= 2 (InputError otherwise).  Throws VerificationError if the
/// two evaluations disagree.
CoefficientFormula p_coeff_formula(const CouplingMatrix& b);

/// B^T B = 0, i.e. every combination of columns is isotropic.
bool isotropy_check(const CouplingMatrix& b);

struct InvariantSignature {
  std::vector<Exact> p_coeffs;  // degree-descending, k+1 entries
  std::size_t rank_b = 0;
  bool isotropic_columns = false;
  Exact p0;
  Exact q0;

  friend bool operator==(const InvariantSignature&, const InvariantSignature&) = default;
};

InvariantSignature signature(const CouplingMatrix& b);

}  // namespace superform
