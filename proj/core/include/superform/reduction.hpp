#pragma once

// Canonical forms of coupling blocks under O(k) x Sp(2l), for total
// dimension k + 2l <= 7.
//
// classify() works on the superspace V = C^k + C^2l carrying the standard
// form Phi = diag(I, J) together with the odd operator
//
//     N = [[0, B], [J B^T, 0]],
//
// which satisfies Phi(Nx, y) = (-1)^p(x) Phi(x, Ny) and is conjugated, not
// merely congruenced, by the group.  The invertible part of N carries the
// B2 summand; the nilpotent part splits into Phi-orthogonal Jordan strings
// whose length, parity and pairing type identify B1, B3, B4, B5 and B6; the
// kernel left over gives the trivial summands.  All of this is decided in
// exact arithmetic.  Only the final normalisations may need square roots,
// and the witness drops to approximate arithmetic when they leave Q(i).

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "superform/group_action.hpp"
#include "superform/matrix.hpp"
#include "superform/superspace.hpp"

namespace superform {

enum class Tag { B1, B2, B3, B4, B5, B6, TrivEven, TrivOdd };

const char* tag_name(Tag t);

struct CanonicalLabel {
  Tag tag = Tag::B1;
  Exact alpha_sq;  // B2 only; alpha is its square root in C+

  static CanonicalLabel of(Tag t) { return {t, Exact()}; }
  static CanonicalLabel b2(const Exact& alpha) { return {Tag::B2, alpha * alpha}; }

  bool trivial() const { return tag == Tag::TrivEven || tag == Tag::TrivOdd; }
  SuperDims dims() const;
  /// alpha when it is Gaussian-rational.
  std::optional<Exact> alpha_exact() const;
  Approx alpha_approx() const;
  /// "B4", "B2(alpha=1+i)", "B2(alpha^2=2)" when alpha is irrational.
  std::string name() const;

  friend bool operator==(const CanonicalLabel& a, const CanonicalLabel& b) {
    return a.tag == b.tag && (a.tag != Tag::B2 || a.alpha_sq == b.alpha_sq);
  }
};

/// Canonical order: nontrivial tags first (B1 < ... < B6, B2 by alpha's
/// (Re, Im)), then TrivEven, then TrivOdd.
bool canonical_less(const CanonicalLabel& a, const CanonicalLabel& b);

template <class S>
Matrix<S> canonical_matrix_in(const CanonicalLabel& label);

/// The displayed representative; for B2 requires alpha in Q(i)
/// (IrrationalRootError otherwise).
CouplingMatrix canonical_matrix(const CanonicalLabel& label);
/// Same, checking that `dims` matches (InputError otherwise).
CouplingMatrix canonical_matrix(const CanonicalLabel& label, const SuperDims& dims);

/// Block-diagonal juxtaposition; TrivEven is a 1 x 0 block and TrivOdd a
/// 0 x 2 block.
template <class S>
Matrix<S> juxtapose(const std::vector<CanonicalLabel>& parts);

struct CanonicalDecomposition {
  SuperDims dims;
  std::vector<CanonicalLabel> parts;  // canonical order
  AnyTransform witness;
  std::variant<Matrix<Exact>, Matrix<Approx>> canonical;
  double residual = 0.0;

  bool exact() const { return witness.index() == 0; }
  std::size_t nontrivial_count() const;
  /// A single part: the form admits no orthogonal splitting.
  bool irreducible() const { return parts.size() == 1; }
  std::string summary() const;  // e.g. "B1 + TrivEven"
};

struct ClassifyOptions {
  bool force_approx = false;  // build the witness in approximate arithmetic
};

/// Throws OutOfRangeError when k + 2l > 7, InputError for an odd column
/// count, VerificationError if the witness fails to replay.
CanonicalDecomposition classify(const CouplingMatrix& b, const ClassifyOptions& opts = {});

/// Same dims required (InputError otherwise).
bool equivalent(const CouplingMatrix& a, const CouplingMatrix& b);

/// l <= k <= 4l, the necessary condition for an irreducible form.
bool dimension_bound_check(const SuperDims& d);

template <class S>
struct VectorReductionT {
  Matrix<S> canonical;  // X b
  Matrix<S> x;
};
using VectorReduction = std::variant<VectorReductionT<Exact>, VectorReductionT<Approx>>;

/// Orthogonal X with X b = (sqrt q(b), 0, ...) if q(b) != 0 and
/// X b = (1, i, 0, ...) if b is isotropic and nonzero.
VectorReduction reduce_vector(const Matrix<Exact>& b);

/// Coefficients c with q(B c) != 0, or nullopt exactly when B^T B = 0.
/// Searches single columns, then C_i + t C_j for t in {1, 2, 3}.
std::optional<std::vector<Exact>> find_anisotropic_combination(const CouplingMatrix& b);

/// The irreducible labels of the classification table, one per row, with
/// the given alpha values for B2.
std::vector<CanonicalLabel> table_labels(const std::vector<Exact>& alphas);

}  // namespace superform
