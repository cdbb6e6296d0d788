#pragma once

// Truncated Fock modules for the (2|1) oscillator algebras.
//
// The space is spanned by x^n xi^e kappa^f with n <= N, e, f in {0, 1},
// xi^2 = 1/2 and kappa^2 = 0; the homogeneous variant drops kappa.  The
// generators act by
//
//     b1 -> d/dx (+ kappa d/dxi),  b2 -> x,  a -> xi,  K -> Id,  kappa -> kappa
//
// where x is truncated (x^N -> 0) and odd operators pick up a sign for
// every odd factor they pass in the order x, xi, kappa.

#include <cstddef>
#include <string>
#include <vector>

#include "superform/matrix.hpp"
#include "superform/superalgebra.hpp"
#include "superform/uea.hpp"

namespace superform {

enum class FockVariant { Homogeneous, Inhomogeneous };

const char* variant_name(FockVariant v);

struct FockSpace {
  FockVariant variant = FockVariant::Homogeneous;
  std::size_t max_degree = 0;  // N

  std::size_t kappa_count() const { return variant == FockVariant::Inhomogeneous ? 2 : 1; }
  std::size_t dim() const { return (max_degree + 1) * 2 * kappa_count(); }
  std::size_t index(std::size_t n, unsigned e, unsigned f) const {
    return (n * 2 + e) * kappa_count() + f;
  }
  std::size_t degree_of(std::size_t idx) const { return idx / (2 * kappa_count()); }
  unsigned xi_of(std::size_t idx) const { return (idx / kappa_count()) % 2; }
  unsigned kappa_of(std::size_t idx) const { return idx % kappa_count(); }
  /// Parity e + f of a basis vector.
  int parity_of(std::size_t idx) const { return (xi_of(idx) + kappa_of(idx)) % 2; }
  /// "x^3 xi kappa", "1".
  std::string basis_name(std::size_t idx) const;
};

struct FockOperator {
  Matrix<Exact> matrix;  // column j is the image of basis vector j
  int parity = 0;
};

/// Generator by name (b1, b2, a, K, kappa); InputError otherwise or for
/// N < 1.
FockOperator rho(const std::string& generator, const FockSpace& space);
/// Generator by index in the basis order b1, b2, a, K, kappa.
FockOperator rho(std::size_t generator, const FockSpace& space);

/// Image of a UEA element: each normal monomial becomes the product of its
/// generators' operators.
Matrix<Exact> rho(const UEAElement& u, const FockSpace& space);

/// Nonzero entries only between basis vectors whose parities differ by
/// the operator's parity.
bool respects_parity(const FockOperator& op, const FockSpace& space);

struct FockReport {
  std::vector<std::string> defects;
  std::size_t identities_checked = 0;
  bool ok() const { return defects.empty(); }
};

/// rho(u)rho(v) - (-1)^{p(u)p(v)} rho(v)rho(u) = rho([u, v]) for all
/// generator pairs, on input degrees <= N - 2, plus rho(b1)(1) = 0.  The
/// algebra must have the (b1, b2, a, K, kappa) shape; N >= 2.
FockReport representation_check(const SuperAlgebra& alg, FockVariant variant, std::size_t N);

/// Every entry of the bracket table of `gens` as an operator identity on
/// input degrees <= N - 4, plus rho(H) x^n = (n/2 + 1/4) x^n.  N >= 4.
FockReport osp_action_check(const OspGenerators& gens, FockVariant variant, std::size_t N);

}  // namespace superform
