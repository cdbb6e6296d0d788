#pragma once

// Finite-dimensional Lie superalgebras given by structure constants, and the
// oscillator superalgebra A = V + CK + C kappa built from a skew form.

#include <cstddef>
#include <string>
#include <vector>

#include "superform/scalar.hpp"
#include "superform/superspace.hpp"

namespace superform {

/// Coordinates of an element over the basis of a SuperAlgebra.
using Coords = std::vector<Exact>;

struct SuperAlgebra {
  std::vector<std::string> names;
  std::vector<int> parity;  // 0 even, 1 odd
  /// bracket_table[i][j] = coordinates of [x_i, x_j].
  std::vector<std::vector<Coords>> bracket_table;

  std::size_t dim() const { return names.size(); }
  /// Index of a basis element by name (InputError if unknown).
  std::size_t index(const std::string& name) const;
  const Coords& bracket(std::size_t i, std::size_t j) const { return bracket_table[i][j]; }
  Coords bracket(const Coords& x, const Coords& y) const;
  Coords unit(std::size_t i) const;
};

/// Basis names used for an oscillator algebra with the given dims: b1, b2 and
/// a for the three-dimensional (2|1) case, otherwise e1.., o1.., followed by
/// K and kappa.
std::vector<std::string> default_oscillator_names(std::size_t even_dim, std::size_t odd_dim);

/// [u, v] = (u|v) K for equal parity and (u|v) kappa otherwise, K even and
/// kappa odd central.  Requires a skew-supersymmetric form (InputError).
SuperAlgebra oscillator_algebra(const GramForm& g,
                                std::vector<std::string> names = {});

/// The (2|1) forms with Gram matrices
///   [[0,1,0],[-1,0,0],[0,0,1]]   (homogeneous)
///   [[0,1,1],[-1,0,0],[-1,0,1]]  (inhomogeneous)
/// on the basis b1, b2 (even), a (odd).
GramForm homogeneous_example_form();
GramForm inhomogeneous_example_form();

struct AxiomViolation {
  enum class Kind { Parity, SkewSymmetry, Jacobi } kind;
  std::size_t i = 0, j = 0, k = 0;  // k unused except for Jacobi
  Coords defect;
};

const char* axiom_kind_name(AxiomViolation::Kind k);

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  std::size_t checked = 0;
  bool ok() const { return violations.empty(); }
};

/// Checks, on basis elements:
///   [x_i, x_j] has parity p_i + p_j,
///   [x_i, x_j] = -(-1)^{p_i p_j} [x_j, x_i],
///   (-1)^{p_i p_k}[x_i,[x_j,x_k]] + (-1)^{p_j p_i}[x_j,[x_k,x_i]]
///       + (-1)^{p_k p_j}[x_k,[x_i,x_j]] = 0.
AxiomReport check_super_axioms(const SuperAlgebra& alg);

/// "[b1, b2] = K" style lines for the nonzero brackets with i <= j.
std::vector<std::string> format_brackets(const SuperAlgebra& alg);

/// Linear combination "c1 * x1 + c2 * x2" ("0" when empty); unit
/// coefficients are dropped.
std::string format_coords(const Coords& c, const std::vector<std::string>& names);

}  // namespace superform
