#include "superform/reduction.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "superform/bases.hpp"

namespace superform {

const char* tag_name(Tag t) {
  switch (t) {
    case Tag::B1: return "B1";
    case Tag::B2: return "B2";
    case Tag::B3: return "B3";
    case Tag::B4: return "B4";
    case Tag::B5: return "B5";
    case Tag::B6: return "B6";
    case Tag::TrivEven: return "TrivEven";
    case Tag::TrivOdd: return "TrivOdd";
  }
  return "?";
}

SuperDims CanonicalLabel::dims() const {
  switch (tag) {
    case Tag::B1: return {1, 2};
    case Tag::B2: return {2, 2};
    case Tag::B3: return {2, 2};
    case Tag::B4: return {3, 2};
    case Tag::B5: return {3, 4};
    case Tag::B6: return {4, 2};
    case Tag::TrivEven: return {1, 0};
    case Tag::TrivOdd: return {0, 2};
  }
  return {};
}

std::optional<Exact> CanonicalLabel::alpha_exact() const {
  if (tag != Tag::B2) return std::nullopt;
  return try_sqrt_cplus(alpha_sq);
}

Approx CanonicalLabel::alpha_approx() const {
  if (tag != Tag::B2) return Approx(0);
  return sqrt_cplus(exact_to_approx(alpha_sq));
}

std::string CanonicalLabel::name() const {
  if (tag != Tag::B2) return tag_name(tag);
  if (auto a = alpha_exact()) return "B2(alpha=" + to_string(*a) + ")";
  return "B2(alpha^2=" + to_string(alpha_sq) + ")";
}

bool canonical_less(const CanonicalLabel& a, const CanonicalLabel& b) {
  if (a.tag != b.tag) return static_cast<int>(a.tag) < static_cast<int>(b.tag);
  if (a.tag != Tag::B2 || a.alpha_sq == b.alpha_sq) return false;
  if (auto ea = a.alpha_exact(), eb = b.alpha_exact(); ea && eb) return lex_less(*ea, *eb);
  const Approx x = a.alpha_approx(), y = b.alpha_approx();
  if (x.re() != y.re()) return x.re() < y.re();
  return x.im() < y.im();
}

template <class S>
Matrix<S> canonical_matrix_in(const CanonicalLabel& label) {
  const S i = convert_scalar<S>(Exact::i());
  const S one(1);
  switch (label.tag) {
    case Tag::B1: return Matrix<S>{{one, S(0)}};
    case Tag::B2: {
      S alpha;
      if constexpr (std::is_same_v<S, Exact>) {
        alpha = sqrt_cplus(label.alpha_sq);
      } else {
        alpha = label.alpha_approx();
      }
      return Matrix<S>{{one, S(0)}, {S(0), alpha}};
    }
    case Tag::B3: return Matrix<S>{{one, S(0)}, {i, S(0)}};
    case Tag::B4: return Matrix<S>{{one, S(0)}, {S(0), one}, {S(0), i}};
    case Tag::B5:
      return Matrix<S>{{one, S(0), S(0), S(0)}, {S(0), one, one, S(0)}, {S(0), S(0), S(0), i}};
    case Tag::B6: return Matrix<S>{{one, S(0)}, {i, S(0)}, {S(0), one}, {S(0), i}};
    case Tag::TrivEven: return Matrix<S>(1, 0);
    case Tag::TrivOdd: return Matrix<S>(0, 2);
  }
  throw InputError("unknown label");
}

template Matrix<Exact> canonical_matrix_in(const CanonicalLabel&);
template Matrix<Approx> canonical_matrix_in(const CanonicalLabel&);

CouplingMatrix canonical_matrix(const CanonicalLabel& label) {
  return canonical_matrix_in<Exact>(label);
}

CouplingMatrix canonical_matrix(const CanonicalLabel& label, const SuperDims& dims) {
  if (!(label.dims() == dims)) {
    throw InputError(label.name() + " lives in dimensions (" + std::to_string(label.dims().k) +
                     ", " + std::to_string(label.dims().two_ell) + ")");
  }
  return canonical_matrix(label);
}

template <class S>
Matrix<S> juxtapose(const std::vector<CanonicalLabel>& parts) {
  std::size_t k = 0, two_ell = 0;
  for (const auto& p : parts) {
    k += p.dims().k;
    two_ell += p.dims().two_ell;
  }
  Matrix<S> out(k, two_ell);
  std::size_t r = 0, c = 0;
  for (const auto& p : parts) {
    out.set_block(r, c, canonical_matrix_in<S>(p));
    r += p.dims().k;
    c += p.dims().two_ell;
  }
  return out;
}

template Matrix<Exact> juxtapose(const std::vector<CanonicalLabel>&);
template Matrix<Approx> juxtapose(const std::vector<CanonicalLabel>&);

std::size_t CanonicalDecomposition::nontrivial_count() const {
  return static_cast<std::size_t>(
      std::count_if(parts.begin(), parts.end(), [](const auto& p) { return !p.trivial(); }));
}

std::string CanonicalDecomposition::summary() const {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += " + ";
    out += p.name();
  }
  return out.empty() ? "0" : out;
}

bool dimension_bound_check(const SuperDims& d) {
  return d.ell() <= d.k && d.k <= 4 * d.ell();
}

std::vector<CanonicalLabel> table_labels(const std::vector<Exact>& alphas) {
  std::vector<CanonicalLabel> out{{Tag::B1, Exact(0)}};
  for (const auto& a : alphas) out.push_back(CanonicalLabel::b2(a));
  for (Tag t : {Tag::B3, Tag::B4, Tag::B5, Tag::B6}) out.push_back({t, Exact(0)});
  return out;
}

// ---------------------------------------------------------------------------
// Single vectors and anisotropic combinations.

namespace {

template <class S>
Matrix<S> householder(const Matrix<S>& v) {
  const std::size_t k = v.rows();
  const S qv = dot(v, v);
  return Matrix<S>::identity(k) - (v * v.transpose()) * (S(2) / qv);
}

template <class S>
VectorReductionT<S> reduce_vector_in(const Matrix<Exact>& be) {
  const std::size_t k = be.rows();
  const Matrix<S> b = convert_matrix<S>(be);
  if (be.is_zero()) return {b, Matrix<S>::identity(k)};
  const Exact q = dot(be, be);
  if (!q.is_zero()) {
    const S root = sqrt_cplus(convert_scalar<S>(q));
    Matrix<S> x;
    if (k == 1) {
      x = Matrix<S>{{root / b(0, 0)}};
    } else if (k == 2) {
      x = ortho_rotation<S>(2, 0, 1, b(0, 0), b(1, 0));
    } else {
      Matrix<S> t(k, 1);
      t(0, 0) = root;
      const Matrix<S> minus = b - t, plus = b + t;
      const double m1 = pivot_magnitude(dot(minus, minus));
      const double m2 = pivot_magnitude(dot(plus, plus));
      if (m1 >= m2 && m1 > 0) {
        x = householder(minus);
      } else {
        Matrix<S> flip = Matrix<S>::identity(k);
        flip(0, 0) = S(-1);
        x = flip * householder(plus);
      }
    }
    return {x * b, x};
  }
  // Isotropic and nonzero: target (1, i, 0, ...), reached exactly.
  Matrix<Exact> t(k, 1);
  t(0, 0) = 1;
  t(1, 0) = Exact::i();
  Matrix<Exact> x;
  bool rescale_pattern = !be(0, 0).is_zero() && be(1, 0) == Exact::i() * be(0, 0);
  for (std::size_t r = 2; r < k && rescale_pattern; ++r) rescale_pattern = be(r, 0).is_zero();
  if (rescale_pattern) {
    x = ortho_isotropic_rescale(k, 0, 1, be(0, 0));
  } else {
    for (std::size_t j = 0; j < k && x.empty(); ++j) {
      for (int flip = 0; flip < 2 && x.empty(); ++flip) {
        Matrix<Exact> pre = ortho_swap(k, 0, j);
        if (flip) pre = ortho_sign_flip(k, 1) * pre;
        const Matrix<Exact> moved = pre * be;
        const Matrix<Exact> v = moved - t;
        if (dot(v, v).is_zero()) continue;
        x = householder(v) * pre;
      }
    }
    if (x.empty()) throw VerificationError("isotropic vector reduction failed");
  }
  const Matrix<S> xs = convert_matrix<S>(x);
  return {xs * b, xs};
}

}  // namespace

VectorReduction reduce_vector(const Matrix<Exact>& b) {
  if (b.cols() != 1) throw InputError("reduce_vector expects a column");
  try {
    return reduce_vector_in<Exact>(b);
  } catch (const IrrationalRootError&) {
    return reduce_vector_in<Approx>(b);
  }
}

std::optional<std::vector<Exact>> find_anisotropic_combination(const CouplingMatrix& b) {
  const std::size_t m = b.cols();
  for (std::size_t i = 0; i < m; ++i) {
    const Matrix<Exact> c = b.col(i);
    if (!dot(c, c).is_zero()) {
      std::vector<Exact> coeffs(m, Exact(0));
      coeffs[i] = 1;
      return coeffs;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (int t = 1; t <= 3; ++t) {
        const Matrix<Exact> c = b.col(i) + b.col(j) * Exact(t);
        if (!dot(c, c).is_zero()) {
          std::vector<Exact> coeffs(m, Exact(0));
          coeffs[i] = 1;
          coeffs[j] = t;
          return coeffs;
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Structure of the operator N.

namespace {

constexpr std::size_t kMaxTotal = 7;

struct Space {
  std::size_t k = 0, two_ell = 0, n = 0;
  Matrix<Exact> phi;
  std::vector<Matrix<Exact>> pw;  // powers of N, pw[m] = N^m

  Exact form(const Matrix<Exact>& u, const Matrix<Exact>& v) const { return pairing(u, phi, v); }
  Matrix<Exact> apply(std::size_t m, const Matrix<Exact>& v) const {
    if (m >= pw.size()) return Matrix<Exact>(n, 1);
    return pw[m] * v;
  }
};

Space make_space(const CouplingMatrix& b) {
  Space s;
  s.k = b.rows();
  s.two_ell = b.cols();
  s.n = s.k + s.two_ell;
  const Matrix<Exact> j = symplectic_unit<Exact>(s.two_ell / 2);
  s.phi = block_diagonal(Matrix<Exact>::identity(s.k), j);
  Matrix<Exact> op(s.n, s.n);
  op.set_block(0, s.k, b);
  op.set_block(s.k, 0, j * b.transpose());
  s.pw.push_back(Matrix<Exact>::identity(s.n));
  for (std::size_t m = 1; m <= 2 * s.n + 2; ++m) s.pw.push_back(s.pw.back() * op);
  return s;
}

struct Piece {
  Tag tag;
  std::vector<Matrix<Exact>> chain;
  Exact top;  // Phi(v, N^(L-1) v) for self-dual strings, 1 for pairs
};

struct SemisimplePart {
  Matrix<Exact> y1, y2;  // odd vectors in V coordinates
  Exact d1;              // q(B y1)
  Exact alpha_sq;
};

struct Analysis {
  std::vector<Piece> pieces;
  std::optional<SemisimplePart> ss;
  std::vector<Matrix<Exact>> triv_even;
  std::vector<Matrix<Exact>> triv_odd;
};

Tag string_tag(bool self_dual, std::size_t length, int parity) {
  if (self_dual) {
    if (length == 3 && parity == 1) return Tag::B1;
    if (length == 5 && parity == 0) return Tag::B4;
    if (length == 7 && parity == 1) return Tag::B5;
  } else {
    if (length == 2 && parity == 0) return Tag::B3;
    if (length == 3 && parity == 0) return Tag::B6;
  }
  std::ostringstream os;
  os << "unexpected Jordan string (" << (self_dual ? "self-dual" : "paired")
     << ", length " << length << ", top parity " << parity << ")";
  throw VerificationError(os.str());
}

std::vector<Matrix<Exact>> embed(const std::vector<Matrix<Exact>>& vs, std::size_t n,
                                 std::size_t offset) {
  std::vector<Matrix<Exact>> out;
  for (const auto& v : vs) {
    Matrix<Exact> e(n, 1);
    e.set_block(offset, 0, v);
    out.push_back(std::move(e));
  }
  return out;
}

Matrix<Exact> combine(const std::vector<Matrix<Exact>>& basis, const Matrix<Exact>& coeffs,
                      std::size_t n) {
  Matrix<Exact> v(n, 1);
  for (std::size_t i = 0; i < basis.size(); ++i) v += basis[i] * coeffs(i, 0);
  return v;
}

// Vectors of `span` that are Phi-orthogonal to every vector of `taken`.
std::vector<Matrix<Exact>> complement(const Space& s, const std::vector<Matrix<Exact>>& span,
                                      const std::vector<Matrix<Exact>>& taken) {
  if (span.empty()) return {};
  Matrix<Exact> a(taken.size(), span.size());
  for (std::size_t r = 0; r < taken.size(); ++r)
    for (std::size_t c = 0; c < span.size(); ++c) a(r, c) = s.form(taken[r], span[c]);
  std::vector<Matrix<Exact>> out;
  for (const auto& coeffs : kernel_basis(a)) out.push_back(combine(span, coeffs, s.n));
  return out;
}

SemisimplePart semisimple_part(const Space& s, const std::vector<Matrix<Exact>>& w1) {
  // Gram of y -> q(B y) on the odd semisimple part.
  Matrix<Exact> g(w1.size(), w1.size());
  for (std::size_t i = 0; i < w1.size(); ++i)
    for (std::size_t j = 0; j < w1.size(); ++j)
      g(i, j) = s.form(s.apply(1, w1[i]), s.apply(1, w1[j]));
  SemisimplePart part;
  auto c = represent_value(g, Exact(1));
  if (!c) c = anisotropic_vector(g);
  if (!c) throw VerificationError("semisimple part carries no anisotropic vector");
  part.y1 = combine(w1, *c, s.n);
  const Matrix<Exact> by1 = s.apply(1, part.y1);
  part.d1 = s.form(by1, by1);
  // y2: omega(y1, y2) = 1 and (B y1)^T (B y2) = 0.
  Matrix<Exact> a(2, w1.size());
  for (std::size_t j = 0; j < w1.size(); ++j) {
    a(0, j) = s.form(part.y1, w1[j]);
    a(1, j) = s.form(by1, s.apply(1, w1[j]));
  }
  auto inv = inverse(a);
  if (!inv) throw VerificationError("semisimple part is not a symplectic plane");
  const Matrix<Exact> coeffs = *inv * Matrix<Exact>{{Exact(1)}, {Exact(0)}};
  part.y2 = combine(w1, coeffs, s.n);
  const Matrix<Exact> by2 = s.apply(1, part.y2);
  part.alpha_sq = part.d1 * s.form(by2, by2);
  if (part.alpha_sq.is_zero()) throw VerificationError("semisimple part has alpha = 0");
  return part;
}

struct Top {
  bool self_dual = true;
  int parity = 0;
  Matrix<Exact> v, w;
};

Top choose_top(const Space& s, const std::vector<Matrix<Exact>>& even,
               const std::vector<Matrix<Exact>>& odd, std::size_t length) {
  const Matrix<Exact>& nl = s.pw[length - 1];
  if (length % 2 == 0) {
    for (const auto& e : even) {
      for (const auto& o : odd) {
        const Exact m = s.form(e, nl * o);
        if (!m.is_zero()) return Top{false, 0, e, o * (Exact(1) / m)};
      }
    }
    throw VerificationError("no pairing for an even-length string");
  }
  for (int p = 0; p < 2; ++p) {
    const auto& basis = p == 0 ? even : odd;
    const std::size_t m = basis.size();
    Matrix<Exact> g(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) g(i, j) = s.form(basis[i], nl * basis[j]);
    if (g.is_zero()) continue;
    if (is_symmetric(g)) {
      auto c = represent_value(g, Exact(1));
      if (!c) c = anisotropic_vector(g);
      return Top{true, p, combine(basis, *c, s.n), {}};
    }
    if (!is_antisymmetric(g)) throw VerificationError("string pairing has no symmetry");
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (!g(i, j).is_zero()) return Top{false, p, basis[i], basis[j] * (Exact(1) / g(i, j))};
  }
  throw VerificationError("no pairing for an odd-length string");
}

Piece normalize_string(const Space& s, Top top, std::size_t length) {
  const int L = static_cast<int>(length);
  auto c = [&](const Matrix<Exact>& x, int m, const Matrix<Exact>& y) {
    return s.form(x, s.apply(static_cast<std::size_t>(m), y));
  };
  auto shift = [&](int j, const Matrix<Exact>& x) { return s.apply(static_cast<std::size_t>(j), x); };
  Matrix<Exact>& v = top.v;
  Matrix<Exact>& w = top.w;
  Piece piece;
  piece.tag = string_tag(top.self_dual, length, top.parity);
  if (top.self_dual) {
    for (int m = L - 3; m >= 0; m -= 2) {
      const int j = L - 1 - m;
      const Exact cm = c(v, m, v);
      if (cm.is_zero()) continue;
      const Exact a = s.form(shift(j, v), shift(m, v)) + c(v, m + j, v);
      if (a.is_zero()) throw VerificationError("string normalisation stalled");
      v += shift(j, v) * (-cm / a);
    }
    for (int a = 0; a < L; ++a) piece.chain.push_back(shift(a, v));
    piece.top = c(v, L - 1, v);
    return piece;
  }
  for (int m = L - 2; m >= 0; --m) {
    const int j = L - 1 - m;
    const Exact cm = c(w, m, w);
    if (cm.is_zero()) continue;
    const Exact a = c(w, m + j, v) + s.form(shift(j, v), shift(m, w));
    if (a.is_zero()) throw VerificationError("string normalisation stalled");
    w += shift(j, v) * (-cm / a);
  }
  for (int m = L - 2; m >= 0; --m) {
    const int j = L - 1 - m;
    const Exact cm = c(v, m, v);
    if (cm.is_zero()) continue;
    const Exact a = c(v, m + j, w) + s.form(shift(j, w), shift(m, v));
    if (a.is_zero()) throw VerificationError("string normalisation stalled");
    v += shift(j, w) * (-cm / a);
  }
  for (int m = L - 2; m >= 0; --m) {
    const int j = L - 1 - m;
    const Exact dm = c(v, m, w);
    if (dm.is_zero()) continue;
    w -= shift(j, w) * dm;
  }
  for (int a = 0; a < L; ++a) piece.chain.push_back(shift(a, v));
  for (int a = 0; a < L; ++a) piece.chain.push_back(shift(a, w));
  piece.top = Exact(1);
  return piece;
}

Analysis analyze(const CouplingMatrix& b) {
  const Space s = make_space(b);
  Analysis an;
  const std::size_t n = s.n, k = s.k, tl = s.two_ell;
  const Matrix<Exact>& fit = s.pw[n + (n % 2)];
  const Matrix<Exact> fit_even = fit.block(0, 0, n, k);
  const Matrix<Exact> fit_odd = fit.block(0, k, n, tl);

  std::vector<Matrix<Exact>> even = embed(kernel_basis(fit_even), n, 0);
  std::vector<Matrix<Exact>> odd = embed(kernel_basis(fit_odd), n, k);
  const auto w0 = column_basis(fit_even);
  const auto w1 = column_basis(fit_odd);
  if (w0.size() != w1.size() || (w0.size() != 0 && w0.size() != 2)) {
    throw VerificationError("invertible part of dimension (" + std::to_string(w0.size()) + ", " +
                            std::to_string(w1.size()) + ") is outside the classified list");
  }
  if (!w1.empty()) an.ss = semisimple_part(s, w1);

  while (!even.empty() || !odd.empty()) {
    std::size_t length = 1;
    auto alive = [&](std::size_t m) {
      for (const auto* set : {&even, &odd})
        for (const auto& v : *set)
          if (!(s.pw[m] * v).is_zero()) return true;
      return false;
    };
    while (length <= n && alive(length)) ++length;
    if (length == 1) break;
    Piece piece = normalize_string(s, choose_top(s, even, odd, length), length);
    even = complement(s, even, piece.chain);
    odd = complement(s, odd, piece.chain);
    an.pieces.push_back(std::move(piece));
  }
  an.triv_even = even;
  an.triv_odd = odd;
  if (an.triv_odd.size() % 2 != 0) throw VerificationError("odd leftover has odd dimension");
  return an;
}

struct Reference {
  Matrix<Exact> chain_inverse;  // S_C^-1
  Exact top;
  SuperDims dims;
};

const Reference& reference(Tag tag) {
  static const std::map<Tag, Reference> cache = [] {
    std::map<Tag, Reference> out;
    for (Tag t : {Tag::B1, Tag::B3, Tag::B4, Tag::B5, Tag::B6}) {
      const CanonicalLabel label{t, Exact(0)};
      const CouplingMatrix c = canonical_matrix(label);
      const Analysis an = analyze(c);
      if (an.pieces.size() != 1 || an.pieces[0].tag != t) {
        throw VerificationError(std::string("reference string for ") + tag_name(t) + " is malformed");
      }
      const std::size_t n = c.rows() + c.cols();
      auto inv = inverse(hstack(an.pieces[0].chain, n));
      if (!inv) throw VerificationError("reference chain is not a basis");
      out[t] = Reference{*inv, an.pieces[0].top, label.dims()};
    }
    return out;
  }();
  return cache.at(tag);
}

struct Entry {
  CanonicalLabel label;
  int kind;  // 0 string piece, 1 semisimple, 2 trivial
  std::size_t index;
};

template <class S>
CanonicalDecomposition assemble(const CouplingMatrix& b, const Analysis& an,
                                const std::vector<Entry>& entries) {
  const std::size_t k = b.rows(), tl = b.cols(), n = k + tl;
  Matrix<S> x(k, k), y(tl, tl);
  std::size_t r = 0, c = 0;
  std::vector<CanonicalLabel> parts;
  for (const auto& e : entries) {
    parts.push_back(e.label);
    if (e.kind == 0) {
      const Piece& piece = an.pieces[e.index];
      const Reference& ref = reference(piece.tag);
      const S f = sqrt_cplus(convert_scalar<S>(ref.top / piece.top));
      const Matrix<S> m = convert_matrix<S>(hstack(piece.chain, n) * ref.chain_inverse) * f;
      const std::size_t kc = ref.dims.k, tc = ref.dims.two_ell;
      if (!m.block(k, 0, tl, kc).is_zero() || !m.block(0, kc, k, tc).is_zero()) {
        throw VerificationError("string change of basis mixes parities");
      }
      x.set_block(0, r, m.block(0, 0, k, kc));
      y.set_block(0, c, m.block(k, kc, tl, tc));
      r += kc;
      c += tc;
    } else if (e.kind == 1) {
      const SemisimplePart& ss = *an.ss;
      const S root = sqrt_cplus(convert_scalar<S>(ss.d1));
      S alpha;
      if constexpr (std::is_same_v<S, Exact>) {
        alpha = sqrt_cplus(ss.alpha_sq);
      } else {
        alpha = e.label.alpha_approx();
      }
      const Matrix<S> by1 = convert_matrix<S>(b * ss.y1.block(k, 0, tl, 1));
      const Matrix<S> by2 = convert_matrix<S>(b * ss.y2.block(k, 0, tl, 1));
      x.set_block(0, r, by1 * (S(1) / root));
      x.set_block(0, r + 1, by2 * (root / alpha));
      y.set_block(0, c, convert_matrix<S>(ss.y1.block(k, 0, tl, 1)) * (S(1) / root));
      y.set_block(0, c + 1, convert_matrix<S>(ss.y2.block(k, 0, tl, 1)) * root);
      r += 2;
      c += 2;
    }
  }
  if (!an.triv_even.empty()) {
    std::vector<Matrix<S>> span;
    for (const auto& v : an.triv_even) span.push_back(convert_matrix<S>(v.block(0, 0, k, 1)));
    const Matrix<S> p = orthonormal_basis(Matrix<S>::identity(k), span);
    x.set_block(0, r, p);
    r += p.cols();
  }
  if (!an.triv_odd.empty()) {
    std::vector<Matrix<S>> span;
    for (const auto& v : an.triv_odd) span.push_back(convert_matrix<S>(v.block(k, 0, tl, 1)));
    const Matrix<S> p = symplectic_basis(symplectic_unit<S>(tl / 2), span);
    y.set_block(0, c, p);
    c += p.cols();
  }
  if (r != k || c != tl) throw VerificationError("decomposition does not fill the superspace");

  CanonicalDecomposition out;
  out.dims = dims_of(b);
  out.parts = parts;
  TransformPair<S> t{x, y};
  const Matrix<S> target = juxtapose<S>(parts);
  out.residual = witness_residual(b, t, target);
  const double tol = std::is_same_v<S, Exact> ? 0.0 : ApproxContext::eps();
  if (out.residual > tol) {
    throw VerificationError("classification witness residual " + std::to_string(out.residual) +
                            " exceeds tolerance");
  }
  out.witness = t;
  out.canonical = target;
  return out;
}

std::vector<Entry> ordered_entries(const Analysis& an) {
  std::vector<Entry> nontrivial;
  for (std::size_t i = 0; i < an.pieces.size(); ++i) {
    nontrivial.push_back({CanonicalLabel{an.pieces[i].tag, Exact(0)}, 0, i});
  }
  if (an.ss) nontrivial.push_back({CanonicalLabel{Tag::B2, an.ss->alpha_sq}, 1, 0});
  std::stable_sort(nontrivial.begin(), nontrivial.end(),
                   [](const Entry& a, const Entry& b) { return canonical_less(a.label, b.label); });
  for (std::size_t i = 0; i < an.triv_even.size(); ++i) {
    nontrivial.push_back({CanonicalLabel{Tag::TrivEven, Exact(0)}, 2, i});
  }
  for (std::size_t i = 0; i < an.triv_odd.size() / 2; ++i) {
    nontrivial.push_back({CanonicalLabel{Tag::TrivOdd, Exact(0)}, 2, i});
  }
  return nontrivial;
}

}  // namespace

CanonicalDecomposition classify(const CouplingMatrix& b, const ClassifyOptions& opts) {
  const SuperDims d = dims_of(b);
  if (d.two_ell % 2 != 0) throw InputError("coupling block needs an even number of columns");
  if (d.total() == 0) throw InputError("empty superspace");
  if (d.total() > kMaxTotal) {
    throw OutOfRangeError("out of classified range: dimension " + std::to_string(d.total()) + " > 7");
  }
  const Analysis an = analyze(b);
  const std::vector<Entry> entries = ordered_entries(an);
  if (!opts.force_approx) {
    try {
      return assemble<Exact>(b, an, entries);
    } catch (const IrrationalRootError&) {
    }
  }
  return assemble<Approx>(b, an, entries);
}

bool equivalent(const CouplingMatrix& a, const CouplingMatrix& b) {
  if (!(dims_of(a) == dims_of(b))) throw InputError("forms live on different superspaces");
  return classify(a).parts == classify(b).parts;
}

}  // namespace superform
