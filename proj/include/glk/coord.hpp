#pragma once

// The coordinate Hopf superalgebra K[G_r] of the r-th Frobenius kernel of
// GL(m|n): monomial basis, supercommutative product with the truncation
// relations, coproduct, counit, antipode, the GL(1|1) x-basis and the odd
// right superderivations D_ij.
//
// Monomials are normal-form products of the generators c_ij taken in
// row-major coordinate order. Diagonal exponents live in [0,q) with
// c_ii^q = 1, even off-diagonal exponents in [0,q) with c_ij^q = 0, odd
// exponents in {0,1} with c_ij^2 = 0. The Koszul sign of a product is the
// parity of the number of transpositions needed to merge the odd factors
// back into row-major order.

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "glk/arith.hpp"
#include "glk/linalg.hpp"

namespace glk {

using MonoIdx = std::uint32_t;

struct GlShape {
  Int m = 1, n = 1;
  Int p = 2, r = 1;

  Int q() const { return prime_power(p, r); }
  Int rank() const { return m + n; }

  // dim K[G_r] = q^(m^2+n^2) * 2^(2mn), checked against the guard
  Int dim(Int guard = 5000) const {
    if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("GlShape: need m,n >= 0 and m+n >= 1");
    Int qq = q();
    Int d = 1;
    for (Int i = 0; i < m * m + n * n; ++i) {
      d *= qq;
      if (d > guard) throw GuardError("GlShape: dimension exceeds guard " + std::to_string(guard));
    }
    for (Int i = 0; i < 2 * m * n; ++i) {
      d *= 2;
      if (d > guard) throw GuardError("GlShape: dimension exceeds guard " + std::to_string(guard));
    }
    return d;
  }

  bool operator==(const GlShape& o) const { return m == o.m && n == o.n && p == o.p && r == o.r; }
};

struct Monomial {
  std::vector<std::uint8_t> exps;  // row-major coordinate exponents
  int parity = 0;                  // sum of odd exponents mod 2
};

class AlgebraContext;

class CoordElem {
 public:
  CoordElem() : ctx_(nullptr) {}
  explicit CoordElem(const AlgebraContext& ctx) : ctx_(&ctx) {}

  const AlgebraContext* context() const { return ctx_; }
  const std::map<MonoIdx, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void set(MonoIdx k, Scalar c) {
    if (c) terms_[k] = c; else terms_.erase(k);
  }
  Scalar coeff(MonoIdx k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? 0 : it->second;
  }

  CoordElem& add_term(MonoIdx k, Scalar c, const PrimeField& F) {
    auto it = terms_.find(k);
    Scalar v = F.add(it == terms_.end() ? 0 : it->second, c);
    if (v) terms_[k] = v; else if (it != terms_.end()) terms_.erase(it);
    return *this;
  }

  bool operator==(const CoordElem& o) const { return terms_ == o.terms_; }
  bool operator!=(const CoordElem& o) const { return !(*this == o); }

 private:
  const AlgebraContext* ctx_;
  std::map<MonoIdx, Scalar> terms_;
};

class TensorElem {
 public:
  TensorElem() : ctx_(nullptr) {}
  explicit TensorElem(const AlgebraContext& ctx) : ctx_(&ctx) {}

  const AlgebraContext* context() const { return ctx_; }
  const std::map<std::uint64_t, Scalar>& terms() const { return terms_; }

  static std::uint64_t key(MonoIdx a, MonoIdx b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }
  static std::pair<MonoIdx, MonoIdx> split(std::uint64_t k) {
    return {static_cast<MonoIdx>(k >> 32), static_cast<MonoIdx>(k & 0xffffffffu)};
  }

  TensorElem& add_term(MonoIdx a, MonoIdx b, Scalar c, const PrimeField& F) {
    auto k = key(a, b);
    auto it = terms_.find(k);
    Scalar v = F.add(it == terms_.end() ? 0 : it->second, c);
    if (v) terms_[k] = v; else if (it != terms_.end()) terms_.erase(it);
    return *this;
  }

  bool operator==(const TensorElem& o) const { return terms_ == o.terms_; }
  bool operator!=(const TensorElem& o) const { return !(*this == o); }

 private:
  const AlgebraContext* ctx_;
  std::map<std::uint64_t, Scalar> terms_;
};

// One term of a cached coproduct: coeff * (m_a (x) m_b).
struct CoTerm {
  MonoIdx a, b;
  Scalar c;
};

class AlgebraContext {
 public:
  explicit AlgebraContext(const GlShape& shape, Int dim_guard = 5000)
      : shape_(shape), F_(shape.p), q_(shape.q()), N_(shape.rank()) {
    dim_ = static_cast<MonoIdx>(shape.dim(dim_guard));
    ncoords_ = static_cast<std::size_t>(N_) * N_;
    par_.resize(ncoords_);
    radix_.resize(ncoords_);
    for (std::size_t c = 0; c < ncoords_; ++c) {
      Int i = static_cast<Int>(c) / N_, j = static_cast<Int>(c) % N_;
      par_[c] = ((i >= shape_.m) != (j >= shape_.m)) ? 1 : 0;
      radix_[c] = par_[c] ? 2 : static_cast<Int>(q_);
    }
    stride_.resize(ncoords_);
    std::uint64_t s = 1;
    for (std::size_t c = ncoords_; c-- > 0;) {
      stride_[c] = s;
      s *= static_cast<std::uint64_t>(radix_[c]);
    }
    // exponent table and parities, in the canonical lexicographic order
    exps_.assign(static_cast<std::size_t>(dim_) * ncoords_, 0);
    mono_par_.assign(dim_, 0);
    for (MonoIdx k = 0; k < dim_; ++k) {
      std::uint8_t* e = exps_.data() + static_cast<std::size_t>(k) * ncoords_;
      int par = 0;
      for (std::size_t c = 0; c < ncoords_; ++c) {
        e[c] = static_cast<std::uint8_t>((k / stride_[c]) % static_cast<std::uint64_t>(radix_[c]));
        if (par_[c]) par ^= (e[c] & 1);
      }
      mono_par_[k] = static_cast<std::uint8_t>(par);
    }
  }

  const GlShape& shape() const { return shape_; }
  const PrimeField& field() const { return F_; }
  Int q() const { return q_; }
  Int rank() const { return N_; }
  MonoIdx dim() const { return dim_; }
  std::size_t ncoords() const { return ncoords_; }

  std::size_t coord(Int i, Int j) const { return static_cast<std::size_t>(i) * N_ + j; }
  std::pair<Int, Int> coord_ij(std::size_t c) const { return {static_cast<Int>(c) / N_, static_cast<Int>(c) % N_}; }
  int coord_parity(std::size_t c) const { return par_[c]; }
  Int coord_radix(std::size_t c) const { return radix_[c]; }

  const std::uint8_t* exps(MonoIdx k) const { return exps_.data() + static_cast<std::size_t>(k) * ncoords_; }
  int parity(MonoIdx k) const { return mono_par_[k]; }

  Monomial monomial(MonoIdx k) const {
    Monomial m;
    m.exps.assign(exps(k), exps(k) + ncoords_);
    m.parity = parity(k);
    return m;
  }

  MonoIdx index_of(const std::vector<std::uint8_t>& e) const {
    std::uint64_t k = 0;
    for (std::size_t c = 0; c < ncoords_; ++c) {
      if (e[c] >= radix_[c]) throw std::invalid_argument("index_of: exponent out of range");
      k += e[c] * stride_[c];
    }
    return static_cast<MonoIdx>(k);
  }

  // ---- monomial product -------------------------------------------------

  // (sign, index) of m_a * m_b, or nullopt if the product vanishes
  std::optional<std::pair<int, MonoIdx>> mul_mono(MonoIdx a, MonoIdx b) const {
    const std::uint8_t* ea = exps(a);
    const std::uint8_t* eb = exps(b);
    int sign = 0;
    // merge the odd factor sequences; every pair (ca in a, cb in b) with
    // ca > cb is one transposition of odd symbols
    int seen_b_odd = 0;
    for (std::size_t c = 0; c < ncoords_; ++c) {
      if (!par_[c]) continue;
      if (ea[c] && eb[c]) return std::nullopt;
      if (ea[c]) sign ^= (seen_b_odd & 1);
      if (eb[c]) ++seen_b_odd;
    }
    std::uint64_t k = 0;
    for (std::size_t c = 0; c < ncoords_; ++c) {
      Int e = static_cast<Int>(ea[c]) + eb[c];
      Int i = static_cast<Int>(c) / N_, j = static_cast<Int>(c) % N_;
      if (!par_[c]) {
        if (i == j) {
          if (e >= q_) e -= q_;  // c_ii^q = 1
        } else if (e >= q_) {
          return std::nullopt;  // c_ij^q = 0
        }
      }
      k += static_cast<std::uint64_t>(e) * stride_[c];
    }
    return std::make_pair(sign ? -1 : 1, static_cast<MonoIdx>(k));
  }

  // ---- element operations -------------------------------------------------

  CoordElem one() const {
    CoordElem e(*this);
    e.set(0, 1 % F_.p());
    return e;
  }

  CoordElem generator(Int i, Int j, Int e = 1) const {
    std::vector<std::uint8_t> ex(ncoords_, 0);
    if (e < 0 || e >= radix_[coord(i, j)]) throw std::invalid_argument("generator: exponent out of range");
    ex[coord(i, j)] = static_cast<std::uint8_t>(e);
    CoordElem el(*this);
    el.set(index_of(ex), 1 % F_.p());
    return el;
  }

  CoordElem scale(const CoordElem& a, Scalar c) const {
    CoordElem out(*this);
    for (auto& [k, v] : a.terms()) out.add_term(k, F_.mul(v, c), F_);
    return out;
  }

  CoordElem add(const CoordElem& a, const CoordElem& b, Scalar bcoef = 1) const {
    CoordElem out = a;
    for (auto& [k, v] : b.terms()) out.add_term(k, F_.mul(v, bcoef), F_);
    return out;
  }

  CoordElem mul(const CoordElem& a, const CoordElem& b) const {
    check_context(a); check_context(b);
    CoordElem out(*this);
    for (auto& [ka, ca] : a.terms())
      for (auto& [kb, cb] : b.terms()) {
        auto r = mul_mono(ka, kb);
        if (!r) continue;
        Scalar c = F_.mul(ca, cb);
        if (r->first < 0) c = F_.neg(c);
        out.add_term(r->second, c, F_);
      }
    return out;
  }

  // parity if homogeneous
  std::optional<int> elem_parity(const CoordElem& a) const {
    std::optional<int> par;
    for (auto& [k, v] : a.terms()) {
      int pk = parity(k);
      if (!par) par = pk;
      else if (*par != pk) return std::nullopt;
    }
    return a.is_zero() ? std::optional<int>(0) : par;
  }

  Scalar counit_mono(MonoIdx k) const {
    const std::uint8_t* e = exps(k);
    for (std::size_t c = 0; c < ncoords_; ++c)
      if (e[c] && (static_cast<Int>(c) / N_) != (static_cast<Int>(c) % N_)) return 0;
    return 1 % F_.p();
  }

  Scalar counit(const CoordElem& a) const {
    Scalar s = 0;
    for (auto& [k, v] : a.terms())
      if (counit_mono(k)) s = F_.add(s, v);
    return s;
  }

  // ---- coproduct ----------------------------------------------------------

  const std::vector<CoTerm>& comul_mono(MonoIdx k) const {
    build_comul();
    return comul_[k];
  }

  TensorElem comul(const CoordElem& a) const {
    check_context(a);
    TensorElem out(*this);
    for (auto& [k, v] : a.terms())
      for (const CoTerm& t : comul_mono(k)) out.add_term(t.a, t.b, F_.mul(v, t.c), F_);
    return out;
  }

  // product in the super tensor square: (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd
  TensorElem tensor_mul(const TensorElem& x, const TensorElem& y) const {
    TensorElem out(*this);
    for (auto& [kx, cx] : x.terms()) {
      auto [a1, a2] = TensorElem::split(kx);
      int pa2 = parity(a2);
      for (auto& [ky, cy] : y.terms()) {
        auto [b1, b2] = TensorElem::split(ky);
        auto r1 = mul_mono(a1, b1);
        if (!r1) continue;
        auto r2 = mul_mono(a2, b2);
        if (!r2) continue;
        int sgn = r1->first * r2->first;
        if (pa2 && parity(b1)) sgn = -sgn;
        Scalar c = F_.mul(cx, cy);
        if (sgn < 0) c = F_.neg(c);
        out.add_term(r1->second, r2->second, c, F_);
      }
    }
    return out;
  }

  TensorElem tensor_one() const {
    TensorElem t(*this);
    t.add_term(0, 0, 1 % F_.p(), F_);
    return t;
  }

  // ---- antipode ----------------------------------------------------------

  // expansion of s(m_k) in the monomial basis
  const std::vector<std::pair<MonoIdx, Scalar>>& antipode_mono(MonoIdx k) const {
    build_antipode();
    return antipode_[k];
  }

  CoordElem antipode(const CoordElem& a) const {
    check_context(a);
    CoordElem out(*this);
    for (auto& [k, v] : a.terms())
      for (auto& [kk, c] : antipode_mono(k)) out.add_term(kk, F_.mul(v, c), F_);
    return out;
  }

  // s on the generators, via the terminating Neumann series (E+T)^{-1};
  // the augmentation ideal of K[G_r] is nilpotent, so the series is finite
  std::vector<std::vector<CoordElem>> antipode_generators() const {
    std::vector<std::vector<CoordElem>> T(N_, std::vector<CoordElem>(N_, CoordElem(*this)));
    for (Int i = 0; i < N_; ++i)
      for (Int j = 0; j < N_; ++j) {
        T[i][j] = generator(i, j);
        if (i == j) T[i][j] = add(T[i][j], one(), F_.neg(1 % F_.p()));
      }
    std::vector<std::vector<CoordElem>> S(N_, std::vector<CoordElem>(N_, CoordElem(*this)));
    for (Int i = 0; i < N_; ++i) S[i][i] = one();
    auto P = T;
    Scalar sgn = F_.neg(1 % F_.p());
    auto nonzero = [&] {
      for (auto& row : P)
        for (auto& e : row)
          if (!e.is_zero()) return true;
      return false;
    };
    while (nonzero()) {
      for (Int i = 0; i < N_; ++i)
        for (Int j = 0; j < N_; ++j) S[i][j] = add(S[i][j], P[i][j], sgn);
      std::vector<std::vector<CoordElem>> Q(N_, std::vector<CoordElem>(N_, CoordElem(*this)));
      for (Int i = 0; i < N_; ++i)
        for (Int j = 0; j < N_; ++j) {
          CoordElem acc(*this);
          for (Int l = 0; l < N_; ++l) acc = add(acc, mul(P[i][l], T[l][j]));
          Q[i][j] = acc;
        }
      P = std::move(Q);
      sgn = F_.neg(sgn);
    }
    return S;
  }

  // ---- hot-path views of the comultiplication -----------------------------

  struct CsrTerm {
    MonoIdx k, other;
    Scalar c;
  };

  // terms of all coproducts grouped by the second tensor leg
  const std::vector<std::vector<CsrTerm>>& comul_by_right() const {
    build_groupings();
    return by_right_;
  }
  // grouped by the first tensor leg
  const std::vector<std::vector<CsrTerm>>& comul_by_left() const {
    build_groupings();
    return by_left_;
  }

 private:
  void check_context(const CoordElem& a) const {
    if (a.context() != this) throw std::invalid_argument("CoordElem belongs to a different context");
  }

  void build_comul() const {
    std::call_once(comul_once_, [this] {
      // per-generator coproduct powers
      std::vector<std::vector<TensorElem>> gp(ncoords_);
      for (std::size_t c = 0; c < ncoords_; ++c) {
        auto [i, j] = coord_ij(c);
        TensorElem d(*this);
        for (Int k = 0; k < N_; ++k) {
          std::vector<std::uint8_t> e1(ncoords_, 0), e2(ncoords_, 0);
          e1[coord(i, k)] = 1;
          e2[coord(k, j)] = 1;
          d.add_term(index_of(e1), index_of(e2), 1 % F_.p(), F_);
        }
        gp[c].push_back(tensor_one());
        for (Int e = 1; e < radix_[c]; ++e) gp[c].push_back(tensor_mul(gp[c].back(), d));
      }
      comul_.resize(dim_);
      comul_[0] = {CoTerm{0, 0, static_cast<Scalar>(1 % F_.p())}};
      for (MonoIdx k = 1; k < dim_; ++k) {
        const std::uint8_t* e = exps(k);
        std::size_t last = ncoords_;
        for (std::size_t c = ncoords_; c-- > 0;)
          if (e[c]) { last = c; break; }
        MonoIdx prefix = static_cast<MonoIdx>(k - static_cast<std::uint64_t>(e[last]) * stride_[last]);
        TensorElem acc(*this);
        for (const CoTerm& t : comul_[prefix]) acc.add_term(t.a, t.b, t.c, F_);
        acc = tensor_mul(acc, gp[last][e[last]]);
        auto& out = comul_[k];
        out.reserve(acc.terms().size());
        for (auto& [kk, v] : acc.terms()) {
          auto [a, b] = TensorElem::split(kk);
          out.push_back(CoTerm{a, b, v});
        }
      }
    });
  }

  void build_antipode() const {
    std::call_once(antipode_once_, [this] {
      auto S = antipode_generators();
      // powers per coordinate
      std::vector<std::vector<CoordElem>> sp(ncoords_);
      for (std::size_t c = 0; c < ncoords_; ++c) {
        auto [i, j] = coord_ij(c);
        sp[c].push_back(one());
        for (Int e = 1; e < radix_[c]; ++e) sp[c].push_back(mul(sp[c].back(), S[i][j]));
      }
      antipode_.resize(dim_);
      antipode_[0] = {{0, static_cast<Scalar>(1 % F_.p())}};
      std::vector<CoordElem> cache(dim_, CoordElem(*this));
      cache[0] = one();
      for (MonoIdx k = 1; k < dim_; ++k) {
        const std::uint8_t* e = exps(k);
        std::size_t last = ncoords_;
        for (std::size_t c = ncoords_; c-- > 0;)
          if (e[c]) { last = c; break; }
        MonoIdx prefix = static_cast<MonoIdx>(k - static_cast<std::uint64_t>(e[last]) * stride_[last]);
        cache[k] = mul(cache[prefix], sp[last][e[last]]);
        auto& col = antipode_[k];
        col.reserve(cache[k].terms().size());
        for (auto& [kk, v] : cache[k].terms()) col.emplace_back(kk, v);
      }
    });
  }

  void build_groupings() const {
    build_comul();
    std::call_once(group_once_, [this] {
      by_right_.resize(dim_);
      by_left_.resize(dim_);
      for (MonoIdx k = 0; k < dim_; ++k)
        for (const CoTerm& t : comul_[k]) {
          by_right_[t.b].push_back(CsrTerm{k, t.a, t.c});
          by_left_[t.a].push_back(CsrTerm{k, t.b, t.c});
        }
    });
  }

  GlShape shape_;
  PrimeField F_;
  Int q_;
  Int N_;
  MonoIdx dim_ = 0;
  std::size_t ncoords_ = 0;
  std::vector<std::uint8_t> par_;
  std::vector<Int> radix_;
  std::vector<std::uint64_t> stride_;
  std::vector<std::uint8_t> exps_;
  std::vector<std::uint8_t> mono_par_;

  mutable std::once_flag comul_once_, antipode_once_, group_once_;
  mutable std::vector<std::vector<CoTerm>> comul_;
  mutable std::vector<std::vector<std::pair<MonoIdx, Scalar>>> antipode_;
  mutable std::vector<std::vector<CsrTerm>> by_right_, by_left_;
};

// c^lam = prod c_ii^{lam_i}, exponents reduced mod q
inline CoordElem c_weight(const AlgebraContext& ctx, const Weight& lam) {
  std::vector<std::uint8_t> e(ctx.ncoords(), 0);
  for (Int i = 0; i < ctx.rank(); ++i)
    e[ctx.coord(i, i)] = static_cast<std::uint8_t>(bar(lam[i], ctx.q()));
  CoordElem el(ctx);
  el.set(ctx.index_of(e), 1 % ctx.field().p());
  return el;
}

// ---- GL(1|1) x-basis ------------------------------------------------------

// c^lam c_21^a c_12^b, factors multiplied in exactly that order
inline CoordElem c_basis11(const AlgebraContext& ctx, const Weight& lam, int a, int b) {
  CoordElem el = c_weight(ctx, lam);
  if (a) el = ctx.mul(el, ctx.generator(1, 0));
  if (b) el = ctx.mul(el, ctx.generator(0, 1));
  return el;
}

// x^lam x_21^a x_12^b expanded in the monomial basis
inline CoordElem x_basis11(const AlgebraContext& ctx, const Weight& lam_in, int a, int b) {
  if (ctx.shape().m != 1 || ctx.shape().n != 1)
    throw std::invalid_argument("x_basis11: shape must be (1|1)");
  const Int q = ctx.q();
  Weight lam = bar(lam_in, q);
  const PrimeField& F = ctx.field();
  if (a == 0 && b == 0) {
    CoordElem corr = c_basis11(ctx, bar(lam - Weight{1, 1}, q), 1, 1);
    return ctx.add(c_basis11(ctx, lam, 0, 0), corr, F.neg(F.from_int(lam[1])));
  }
  if (a == 1 && b == 0) return c_basis11(ctx, bar(lam - Weight{1, 0}, q), 1, 0);
  if (a == 0 && b == 1) return c_basis11(ctx, bar(lam - Weight{1, 0}, q), 0, 1);
  return c_basis11(ctx, bar(lam - Weight{2, 0}, q), 1, 1);
}

// Invertible change of basis between the c-monomials and the x-monomials of
// K[GL(1|1)_r]. Coefficient vectors in the x-basis are carried by CoordElem
// with the same index scheme: index k stands for x^lam x_21^a x_12^b where
// (lam, b, a) are the exponents encoded by k.
class XBasis {
 public:
  explicit XBasis(const AlgebraContext& ctx)
      : ctx_(&ctx),
        from_x_(ctx.dim(), ctx.dim(), ctx.field()),
        to_x_(ctx.dim(), ctx.dim(), ctx.field()) {
    if (ctx.shape().m != 1 || ctx.shape().n != 1) throw std::invalid_argument("XBasis: shape must be (1|1)");
    const Int q = ctx.q();
    for (Int l1 = 0; l1 < q; ++l1)
      for (Int l2 = 0; l2 < q; ++l2)
        for (int a = 0; a <= 1; ++a)
          for (int b = 0; b <= 1; ++b) {
            MonoIdx col = x_index(Weight{l1, l2}, a, b);
            CoordElem e = x_basis11(ctx, Weight{l1, l2}, a, b);
            for (auto& [k, v] : e.terms()) from_x_(k, col) = v;
          }
    to_x_ = from_x_.inverse();
  }

  MonoIdx x_index(const Weight& lam, int a, int b) const {
    std::vector<std::uint8_t> e(ctx_->ncoords(), 0);
    e[ctx_->coord(0, 0)] = static_cast<std::uint8_t>(bar(lam[0], ctx_->q()));
    e[ctx_->coord(1, 1)] = static_cast<std::uint8_t>(bar(lam[1], ctx_->q()));
    e[ctx_->coord(0, 1)] = static_cast<std::uint8_t>(b);
    e[ctx_->coord(1, 0)] = static_cast<std::uint8_t>(a);
    return ctx_->index_of(e);
  }

  CoordElem to_x(const CoordElem& c) const { return apply(to_x_, c); }
  CoordElem from_x(const CoordElem& x) const { return apply(from_x_, x); }

 private:
  CoordElem apply(const FpMatrix& M, const CoordElem& v) const {
    const PrimeField& F = ctx_->field();
    CoordElem out(*ctx_);
    for (auto& [k, c] : v.terms())
      for (MonoIdx i = 0; i < ctx_->dim(); ++i)
        if (M(i, k)) out.add_term(i, F.mul(M(i, k), c), F);
    return out;
  }

  const AlgebraContext* ctx_;
  FpMatrix from_x_;
  FpMatrix to_x_;
};

// ---- odd superderivations D_ij ---------------------------------------------

// Action on a single generator c_kl per the four-case table.
inline CoordElem superderive_generator(const AlgebraContext& ctx, std::size_t cidx, Int i, Int j) {
  auto [k, l] = ctx.coord_ij(cidx);
  const PrimeField& F = ctx.field();
  if (k != i && l != j) return CoordElem(ctx);
  if (k == i && l != j) {
    std::size_t jl = ctx.coord(j, l);
    CoordElem e = ctx.generator(j, l);
    return ctx.coord_parity(jl) ? e : ctx.scale(e, F.neg(1 % F.p()));  // (-1)^{1+|c_jl|} c_jl
  }
  if (k != i && l == j) return ctx.generator(k, i);
  return ctx.add(ctx.generator(i, i), ctx.generator(j, j), F.neg(1 % F.p()));  // t_ii - t_jj
}

// Right superderivation on a basis monomial, extended by the right Leibniz
// rule (uv)D = u(vD) + (-1)^{|v|} (uD)v. The sign convention is pinned by
// the GL(1|1) identities it must reproduce; flip_sign exists so the test
// suite can show the opposite convention fails.
inline CoordElem superderive_mono(const AlgebraContext& ctx, MonoIdx mk, Int i, Int j,
                                  bool flip_sign = false) {
  const PrimeField& F = ctx.field();
  std::vector<std::size_t> factors;
  const std::uint8_t* e = ctx.exps(mk);
  for (std::size_t c = 0; c < ctx.ncoords(); ++c)
    for (int t = 0; t < e[c]; ++t) factors.push_back(c);
  if (factors.empty()) return CoordElem(ctx);

  // D on the running prefix, left to right
  CoordElem prefix = ctx.one();
  CoordElem prefixD(ctx);
  for (std::size_t t = 0; t < factors.size(); ++t) {
    std::size_t c = factors[t];
    CoordElem v = ctx.generator(ctx.coord_ij(c).first, ctx.coord_ij(c).second);
    CoordElem vD = superderive_generator(ctx, c, i, j);
    int pv = ctx.coord_parity(c);
    Scalar sgn = ((pv + (flip_sign ? 1 : 0)) % 2) ? F.neg(1 % F.p()) : 1 % F.p();
    CoordElem next = ctx.add(ctx.mul(prefix, vD), ctx.mul(prefixD, v), sgn);
    prefixD = next;
    prefix = ctx.mul(prefix, v);
  }
  return prefixD;
}

inline CoordElem superderive(const AlgebraContext& ctx, const CoordElem& a, Int i, Int j,
                             bool flip_sign = false) {
  if (!ctx.coord_parity(ctx.coord(i, j)))
    throw std::invalid_argument("superderive: (i,j) must be an odd coordinate");
  CoordElem out(ctx);
  for (auto& [k, v] : a.terms()) out = ctx.add(out, superderive_mono(ctx, k, i, j, flip_sign), v);
  return out;
}

// monomial rendered as sorted row-major factors; "1" for the empty monomial
inline std::string monomial_string(const AlgebraContext& ctx, MonoIdx k) {
  const std::uint8_t* e = ctx.exps(k);
  std::ostringstream os;
  bool first = true;
  for (std::size_t c = 0; c < ctx.ncoords(); ++c) {
    if (!e[c]) continue;
    auto [i, j] = ctx.coord_ij(c);
    if (!first) os << "*";
    os << "c" << (i + 1) << (j + 1);
    if (e[c] > 1) os << "^" << static_cast<int>(e[c]);
    first = false;
  }
  if (first) return "1";
  return os.str();
}

}  // namespace glk
