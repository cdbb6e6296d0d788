#pragma once

// The universal enveloping algebra U(A) of a SuperAlgebra, in the super-PBW
// basis of normal-ordered monomials x_1^{n_1} ... x_d^{n_d} (basis order,
// odd exponents at most 1).  Products are normal-ordered by rewriting
//
//     x_j x_i -> (-1)^{p_i p_j} x_i x_j + [x_j, x_i]   (j > i)
//     x x     -> 1/2 [x, x]                            (x odd)
//
// and the osp(1|2) machinery of the three-dimensional oscillator algebras
// sits on top of that.

#include <array>
#include <compare>
#include <memory>
#include <optional>
#include <map>
#include <string>
#include <vector>

#include "superform/superalgebra.hpp"

namespace superform {

using AlgebraPtr = std::shared_ptr<const SuperAlgebra>;

struct NormalMonomial {
  std::vector<unsigned> exponents;

  unsigned degree() const;
  /// Degree-lexicographic, highest first: b1^2 < b1 b2 < b2^2 < ... < K < 1,
  /// which is the order terms are listed in.
  friend std::strong_ordering operator<=>(const NormalMonomial& a, const NormalMonomial& b);
  friend bool operator==(const NormalMonomial&, const NormalMonomial&) = default;
};

class UEAElement {
 public:
  using Terms = std::map<NormalMonomial, Exact>;

  UEAElement() = default;
  explicit UEAElement(AlgebraPtr alg) : alg_(std::move(alg)) {}

  static UEAElement scalar(AlgebraPtr alg, const Exact& c);
  static UEAElement generator(AlgebraPtr alg, std::size_t i);
  static UEAElement generator(AlgebraPtr alg, const std::string& name);

  const AlgebraPtr& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * m; m must already be normal.
  void add_term(const NormalMonomial& m, const Exact& c);

  /// Parity of every term, 0 for the zero element, nullopt if mixed.
  std::optional<int> parity() const;

  UEAElement& operator+=(const UEAElement& o);
  UEAElement& operator-=(const UEAElement& o);
  UEAElement& operator*=(const Exact& c);
  friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
  friend UEAElement operator*(const Exact& c, UEAElement a) { return a *= c; }
  friend UEAElement operator-(UEAElement a) { return a *= Exact(-1); }
  /// Normal-ordered product.
  friend UEAElement operator*(const UEAElement& a, const UEAElement& b);
  friend bool operator==(const UEAElement& a, const UEAElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  AlgebraPtr alg_;
  Terms terms_;
};

/// Which disorder to rewrite first.  Both give the same normal form; the
/// second one exists as an independent check of the first.
enum class RewriteStrategy { Leftmost, Rightmost };

/// The product of the words, each a list of basis indices with a weight,
/// brought to normal form.
UEAElement normal_order(const AlgebraPtr& alg,
                        const std::vector<std::pair<std::vector<std::size_t>, Exact>>& words,
                        RewriteStrategy strategy = RewriteStrategy::Leftmost);

/// InputError when the elements live over different algebras.
UEAElement normal_product(const UEAElement& u, const UEAElement& v,
                          RewriteStrategy strategy = RewriteStrategy::Leftmost);

/// uv - (-1)^{p(u)p(v)} vu; InputError for non-homogeneous arguments.
UEAElement super_bracket(const UEAElement& u, const UEAElement& v);

/// Substitutes a scalar for a central basis element.
UEAElement specialize(const UEAElement& u, std::size_t index, const Exact& value);

/// "1/2 * b1 b2 - 1/4 * K" style text; "0" for zero.
std::string to_string(const UEAElement& u);

// ---------------------------------------------------------------------------
// osp(1|2) inside U(A) for the (2|1) oscillator algebras.

inline constexpr std::size_t kOspDim = 5;
/// H, E+, E-, F+, F-.
const std::array<std::string, kOspDim>& osp_names();
/// Parities 0, 0, 0, 1, 1.
const std::array<int, kOspDim>& osp_parities();

struct OspGenerators {
  AlgebraPtr algebra;
  std::array<UEAElement, kOspDim> g;  // H, E+, E-, F+, F-

  const UEAElement& operator[](std::size_t i) const { return g[i]; }
};

/// H = (b2 b1 + b1 b2)/4, E+ = b2^2/2, E- = -b1^2/2, F+ = (a b2 + b2 a)/4,
/// F- = (a b1 + b1 a)/4, normal-ordered.  The algebra must have basis
/// (b1, b2, a, K, kappa) with parities (0, 0, 1, 0, 1) and central K, kappa.
OspGenerators osp_generators(AlgebraPtr alg);

/// Brackets over the span {H, E+-, F+-} + {kappa H, kappa E+-, kappa F+-},
/// computed in U(A) with K set to `central_value` (the span is closed only
/// after that specialisation).
struct BracketTable {
  static constexpr std::size_t kSpan = 2 * kOspDim;

  std::array<std::string, kSpan> names;  // "H", ..., "kappa H", ...
  std::array<int, kSpan> parity{};
  Exact central_value;
  /// entries[i][j] = coordinates of [s_i, s_j] in the span.
  std::array<std::array<Coords, kSpan>, kSpan> entries;

  const Coords& at(std::size_t i, std::size_t j) const { return entries[i][j]; }
  /// Index of a span name (InputError if unknown).
  std::size_t index(const std::string& name) const;
};

/// Throws VerificationError, naming the residue, if a bracket leaves the
/// span.
BracketTable bracket_table(const OspGenerators& gens, const Exact& central_value = Exact(1));

/// "[H, F+] = 1/2 * F+ + 1/2 * kappa E+" lines, i <= j over the osp basis
/// (or the full span when `full_span`).
std::vector<std::string> format_table(const BracketTable& t, bool full_span = false);

/// The osp(1|2) structure constants: [e_i, e_j] over the first five span
/// elements.  Only meaningful for a table without kappa components.
using OspBracket = std::array<std::array<Coords, kOspDim>, kOspDim>;

struct CocycleTable {
  OspBracket base;   // undeformed brackets, from the table's osp part
  OspBracket gamma;  // kappa-components
};

/// [a, b]_L = [a, b] + kappa gamma(a, b) for a, b in the osp basis.
CocycleTable cocycle_from_table(const BracketTable& t);

struct TrivialityDefect {
  std::size_t a = 0, b = 0;
  Coords expected;  // gamma(a, b)
  Coords actual;    // right-hand side built from f
};

struct TrivialityReport {
  std::vector<TrivialityDefect> defects;
  std::size_t pairs_checked = 0;
  bool ok() const { return defects.empty(); }
};

/// Images of H, E+, E-, F+, F- in osp coordinates.
using OspMap = std::array<Coords, kOspDim>;

/// The map f(F+) = E+, f(F-) = H, zero elsewhere.
OspMap trivializing_map();

/// Checks gamma(a,b) = (-1)^{p(a)}[a,f(b)] - (-1)^{(p(a)+1)p(b)}[b,f(a)] - f([a,b])
/// on all 25 ordered basis pairs, with the undeformed brackets.
TrivialityReport triviality_check(const CocycleTable& cocycle, const OspMap& f);

/// (a) brackets among kappa-span elements vanish and (b) [x, kappa y] =
/// (-1)^{p(x)} kappa [x, y] with the osp structure constants of the table.
bool adjoint_ideal_check(const BracketTable& t);

}  // namespace superform
