#pragma once

// Superspaces V = V0 + V1 and bilinear forms on them, described by their
// Gram matrix in a homogeneous basis (even vectors first).
//
// Dimensions follow the classification convention throughout: `k` is the
// dimension of the orthogonal part and `two_ell` that of the symplectic
// part.  For a supersymmetric form these are the even and odd dimensions;
// for a skew-supersymmetric form the roles swap.

#include <cstddef>
#include <variant>

#include "superform/matrix.hpp"
#include "superform/scalar.hpp"

namespace superform {

struct SuperDims {
  std::size_t k = 0;
  std::size_t two_ell = 0;

  std::size_t ell() const { return two_ell / 2; }
  std::size_t total() const { return k + two_ell; }
  /// two_ell even and total dimension positive.
  bool valid() const { return two_ell % 2 == 0 && total() > 0; }
  friend bool operator==(const SuperDims&, const SuperDims&) = default;
};

enum class Flavor { Supersymmetric, SkewSupersymmetric };

const char* flavor_name(Flavor f);

/// The coupling block B of a standard supersymmetric Gram matrix, k x 2l.
using CouplingMatrix = Matrix<Exact>;

SuperDims dims_of(const CouplingMatrix& b);

template <class S>
struct GramFormT {
  Flavor flavor = Flavor::Supersymmetric;
  Matrix<S> even_block;  // (V0 | V0)
  Matrix<S> odd_block;   // (V1 | V1)
  Matrix<S> coupling;    // (V0 | V1), even_dim x odd_dim

  std::size_t even_dim() const { return even_block.rows(); }
  std::size_t odd_dim() const { return odd_block.rows(); }

  /// The lower-left block (V1 | V0) implied by the flavor.
  Matrix<S> lower_coupling() const {
    return flavor == Flavor::Supersymmetric ? coupling.transpose()
                                            : -coupling.transpose();
  }

  Matrix<S> full() const {
    const std::size_t e = even_dim(), o = odd_dim();
    Matrix<S> g(e + o, e + o);
    g.set_block(0, 0, even_block);
    g.set_block(0, e, coupling);
    g.set_block(e, 0, lower_coupling());
    g.set_block(e, e, odd_block);
    return g;
  }

  /// Classification dimensions (orthogonal, symplectic).
  SuperDims dims() const {
    return flavor == Flavor::Supersymmetric ? SuperDims{even_dim(), odd_dim()}
                                            : SuperDims{odd_dim(), even_dim()};
  }
};

using GramForm = GramFormT<Exact>;

/// Block shapes agree and the diagonal blocks have the flavor's symmetry.
bool satisfies_flavor_identities(const GramForm& g);

/// Diagonal blocks equal (I, J) for supersymmetric, (J, I) for skew.
bool is_standard(const GramForm& g);

GramForm make_standard_gram(const CouplingMatrix& b,
                            Flavor flavor = Flavor::Supersymmetric);

/// Builds a form from explicit blocks, validating shapes and symmetry.
GramForm make_gram(Flavor flavor, Matrix<Exact> even_block,
                   Matrix<Exact> odd_block, Matrix<Exact> coupling);

bool is_pre_oscillator(const GramForm& g);

template <class S>
struct NormalizedGram {
  GramFormT<S> standard;
  Matrix<S> m_even;  // M0
  Matrix<S> m_odd;   // M1
  double residual = 0.0;
};

using NormalizeResult = std::variant<NormalizedGram<Exact>, NormalizedGram<Approx>>;

/// Even change of basis M = diag(M0, M1) with M^T G M standard.  Exact when
/// every required square root is Gaussian-rational, otherwise approximate;
/// `force_approx` skips the exact attempt.  The witness is verified before
/// returning (VerificationError on failure).
NormalizeResult normalize_gram(const GramForm& g, bool force_approx = false);

/// Reinterprets a form on V as one on the parity-reversed space: the flavor
/// flips, the diagonal blocks trade places and the coupling is transposed.
/// No standardness requirement.
GramForm swap_parity(const GramForm& g);

/// swap_parity restricted to standard inputs (InputError otherwise).
GramForm parity_reverse(const GramForm& g);

/// The degenerate two-dimensional form with (v1|v1) = (v1|v2) = (v2|v1) = 1,
/// (v2|v2) = 0, v1 even and v2 odd.
GramForm degenerate_example_form();

}  // namespace superform
