#pragma once

// The dual Hopf superalgebra Dist(G_r) = K[G_r]^*, derived mechanically from
// the coordinate side: elements are dense vectors of values on the monomial
// basis, the product is the convolution dual to the coproduct, the coproduct
// is the transpose of the product, the antipode is precomposition with the
// coordinate antipode. All the distinguished elements (divided powers,
// diagonal binomials, Delta_T, the u products, nu_r, g_pi, h_pi) are
// materialized through these operations.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "glk/arith.hpp"
#include "glk/coord.hpp"
#include "glk/linalg.hpp"

namespace glk {

enum class Parity { Even, Odd, Mixed, Zero };

class DistElem {
 public:
  DistElem() : ctx_(nullptr) {}
  explicit DistElem(const AlgebraContext& ctx) : ctx_(&ctx), v_(ctx.dim(), 0) {}

  const AlgebraContext* context() const { return ctx_; }
  const std::vector<Scalar>& values() const { return v_; }
  std::vector<Scalar>& values() { return v_; }
  Scalar operator[](MonoIdx k) const { return v_[k]; }
  Scalar& operator[](MonoIdx k) { return v_[k]; }

  bool is_zero() const {
    for (Scalar x : v_)
      if (x) return false;
    return true;
  }

  Parity parity() const {
    bool even = false, odd = false;
    for (MonoIdx k = 0; k < v_.size(); ++k)
      if (v_[k]) (ctx_->parity(k) ? odd : even) = true;
    if (!even && !odd) return Parity::Zero;
    if (even && odd) return Parity::Mixed;
    return odd ? Parity::Odd : Parity::Even;
  }

  bool operator==(const DistElem& o) const { return v_ == o.v_; }
  bool operator!=(const DistElem& o) const { return v_ != o.v_; }

 private:
  const AlgebraContext* ctx_;
  std::vector<Scalar> v_;
};

inline void check_same_context(const AlgebraContext& ctx, const DistElem& x) {
  if (x.context() != &ctx) throw std::invalid_argument("DistElem belongs to a different context");
}

inline void check_same_context(const AlgebraContext& ctx, const CoordElem& f) {
  if (f.context() != &ctx) throw std::invalid_argument("CoordElem belongs to a different context");
}

// pairing <phi, f>
inline Scalar eval(const AlgebraContext& ctx, const DistElem& phi, const CoordElem& f) {
  check_same_context(ctx, phi);
  check_same_context(ctx, f);
  const PrimeField& F = ctx.field();
  Scalar s = 0;
  for (auto& [k, c] : f.terms()) s = F.add(s, F.mul(phi[k], c));
  return s;
}

// counit of the dual: phi -> phi(1)
inline Scalar dist_counit(const DistElem& phi) { return phi[0]; }

// unit of the dual: the counit of K[G_r] viewed as a functional
inline DistElem dist_one(const AlgebraContext& ctx) {
  DistElem e(ctx);
  for (MonoIdx k = 0; k < ctx.dim(); ++k) e[k] = ctx.counit_mono(k);
  return e;
}

inline DistElem dist_add(const AlgebraContext& ctx, const DistElem& a, const DistElem& b, Scalar bc = 1) {
  const PrimeField& F = ctx.field();
  DistElem out = a;
  for (MonoIdx k = 0; k < ctx.dim(); ++k) out[k] = F.add(out[k], F.mul(b[k], bc));
  return out;
}

inline DistElem dist_scale(const AlgebraContext& ctx, const DistElem& a, Scalar c) {
  const PrimeField& F = ctx.field();
  DistElem out = a;
  for (auto& x : out.values()) x = F.mul(x, c);
  return out;
}

// (phi psi)(m) = sum over Delta(m) of (-1)^{|m_a||m_b|} phi(m_a) psi(m_b);
// the sign is the homogeneous-psi rule applied legwise, so mixed parities
// are handled by linearity automatically.
inline DistElem dist_mul(const AlgebraContext& ctx, const DistElem& phi, const DistElem& psi) {
  check_same_context(ctx, phi);
  check_same_context(ctx, psi);
  const PrimeField& F = ctx.field();
  const Scalar p = F.p();
  DistElem out(ctx);
  for (MonoIdx k = 0; k < ctx.dim(); ++k) {
    std::uint64_t acc = 0;
    for (const CoTerm& t : ctx.comul_mono(k)) {
      Scalar a = phi[t.a], b = psi[t.b];
      if (!a || !b) continue;
      Scalar v = F.mul(F.mul(a, b), t.c);
      acc += (ctx.parity(t.a) && ctx.parity(t.b)) ? p - v : v;
    }
    out[k] = static_cast<Scalar>(acc % p);
  }
  return out;
}

inline DistElem dist_product(const AlgebraContext& ctx, const std::vector<DistElem>& factors) {
  DistElem acc = dist_one(ctx);
  for (auto& f : factors) acc = dist_mul(ctx, acc, f);
  return acc;
}

// Delta(phi) as the matrix M with Delta(phi) = sum M[a][b] d_a (x) d_b over
// the dual basis; M[a][b] = (-1)^{|m_a||m_b|} phi(m_a m_b).
inline FpMatrix dist_comul(const AlgebraContext& ctx, const DistElem& phi) {
  check_same_context(ctx, phi);
  const PrimeField& F = ctx.field();
  FpMatrix M(ctx.dim(), ctx.dim(), F);
  for (MonoIdx a = 0; a < ctx.dim(); ++a)
    for (MonoIdx b = 0; b < ctx.dim(); ++b) {
      auto r = ctx.mul_mono(a, b);
      if (!r) continue;
      Scalar v = phi[r->second];
      if (!v) continue;
      if (r->first < 0) v = F.neg(v);
      if (ctx.parity(a) && ctx.parity(b)) v = F.neg(v);
      M(a, b) = v;
    }
  return M;
}

// s(phi) = phi o s_{K[G_r]}
inline DistElem dist_antipode(const AlgebraContext& ctx, const DistElem& phi) {
  check_same_context(ctx, phi);
  const PrimeField& F = ctx.field();
  DistElem out(ctx);
  for (MonoIdx j = 0; j < ctx.dim(); ++j) {
    Scalar acc = 0;
    for (auto& [i, c] : ctx.antipode_mono(j))
      if (phi[i]) acc = F.add(acc, F.mul(phi[i], c));
    out[j] = acc;
  }
  return out;
}

// right action of K[G_r] on its dual: (phi f)(f') = phi(f f')
inline DistElem dist_right_action(const AlgebraContext& ctx, const DistElem& phi, const CoordElem& f) {
  check_same_context(ctx, phi);
  check_same_context(ctx, f);
  const PrimeField& F = ctx.field();
  DistElem out(ctx);
  for (MonoIdx k = 0; k < ctx.dim(); ++k) {
    Scalar acc = 0;
    for (auto& [a, ca] : f.terms()) {
      auto r = ctx.mul_mono(a, k);
      if (!r) continue;
      Scalar v = F.mul(ca, phi[r->second]);
      acc = F.add(acc, r->first < 0 ? F.neg(v) : v);
    }
    out[k] = acc;
  }
  return out;
}

// ---- distinguished generators ----------------------------------------------

// e_ij^{(t)}: restriction to the root subgroup U_ij, dual to t_ij^t there.
// As a functional: nonzero exactly on monomials whose off-diagonal support
// is contained in {(i,j)} with exponent t (diagonal exponents free).
inline DistElem divided_power(const AlgebraContext& ctx, Int i, Int j, Int t) {
  if (i == j) throw std::invalid_argument("divided_power: use binom_diag for diagonal coordinates");
  std::size_t cij = ctx.coord(i, j);
  if (t < 0 || t >= ctx.coord_radix(cij)) throw std::invalid_argument("divided_power: exponent out of range");
  DistElem out(ctx);
  Int N = ctx.rank();
  for (MonoIdx k = 0; k < ctx.dim(); ++k) {
    const std::uint8_t* e = ctx.exps(k);
    bool ok = (e[cij] == t);
    for (std::size_t c = 0; ok && c < ctx.ncoords(); ++c)
      if (c != cij && e[c] && (static_cast<Int>(c) / N != static_cast<Int>(c) % N)) ok = false;
    if (ok) out[k] = 1 % ctx.field().p();
  }
  return out;
}

inline DistElem generator_e(const AlgebraContext& ctx, Int i, Int j) { return divided_power(ctx, i, j, 1); }

// binom(e_ii - a, s): pairs a diagonal monomial with exponent lam_i at (i,i)
// to binom(lam_i - a, s) and kills everything with off-diagonal factors
inline DistElem binom_diag(const AlgebraContext& ctx, Int i, Int s, Int shift = 0) {
  if (s < 0 || s >= ctx.q()) throw std::invalid_argument("binom_diag: index out of range");
  const PrimeField& F = ctx.field();
  DistElem out(ctx);
  std::size_t cii = ctx.coord(i, i);
  Int N = ctx.rank();
  for (MonoIdx k = 0; k < ctx.dim(); ++k) {
    const std::uint8_t* e = ctx.exps(k);
    bool diag = true;
    for (std::size_t c = 0; diag && c < ctx.ncoords(); ++c)
      if (e[c] && (static_cast<Int>(c) / N != static_cast<Int>(c) % N)) diag = false;
    if (diag) out[k] = binom_mod(static_cast<Int>(e[cii]) - shift, s, F);
  }
  return out;
}

// prod_i binom(e_ii - a_i, pi_i)
inline DistElem binom_torus(const AlgebraContext& ctx, const Weight& pi, const Weight& shift) {
  DistElem acc = dist_one(ctx);
  for (Int i = 0; i < ctx.rank(); ++i) acc = dist_mul(ctx, acc, binom_diag(ctx, i, pi[i], shift[i]));
  return acc;
}

inline DistElem binom_torus(const AlgebraContext& ctx, const Weight& pi) {
  return binom_torus(ctx, pi, Weight(std::vector<Int>(ctx.rank(), 0)));
}

// Delta_{T,a}^{(r)} = sum over s in [0,q)^{m+n} of (-1)^{|s|} binom(e-a, s),
// assembled as the product over i of the single-coordinate alternating sums
inline DistElem delta_T(const AlgebraContext& ctx, const Weight& a) {
  const PrimeField& F = ctx.field();
  DistElem acc = dist_one(ctx);
  for (Int i = 0; i < ctx.rank(); ++i) {
    DistElem di(ctx);
    for (Int s = 0; s < ctx.q(); ++s)
      di = dist_add(ctx, di, binom_diag(ctx, i, s, a[i]), F.sign(s));
    acc = dist_mul(ctx, acc, di);
  }
  return acc;
}

inline DistElem delta_T(const AlgebraContext& ctx) {
  return delta_T(ctx, Weight(std::vector<Int>(ctx.rank(), 0)));
}

// products of odd e_ij / even e_ij^{(q-1)} over a triangle, row-major order
inline DistElem u_product(const AlgebraContext& ctx, bool upper, bool odd_part) {
  DistElem acc = dist_one(ctx);
  for (std::size_t c = 0; c < ctx.ncoords(); ++c) {
    auto [i, j] = ctx.coord_ij(c);
    if (i == j) continue;
    if (upper ? (j < i) : (j > i)) continue;
    if ((ctx.coord_parity(c) == 1) != odd_part) continue;
    acc = dist_mul(ctx, acc, divided_power(ctx, i, j, ctx.coord_parity(c) ? 1 : ctx.q() - 1));
  }
  return acc;
}

struct NamedElements {
  DistElem delta_T;   // Delta_T^{(r)}
  DistElem u_plus_1, u_plus_0, u_minus_1, u_minus_0;
  DistElem nu_r;      // Delta_T^{(r)} u+1 u+0 u-1 u-0
};

inline NamedElements named_elements(const AlgebraContext& ctx) {
  NamedElements out;
  out.delta_T = delta_T(ctx);
  out.u_plus_1 = u_product(ctx, true, true);
  out.u_plus_0 = u_product(ctx, true, false);
  out.u_minus_1 = u_product(ctx, false, true);
  out.u_minus_0 = u_product(ctx, false, false);
  out.nu_r = dist_product(ctx, {out.delta_T, out.u_plus_1, out.u_plus_0, out.u_minus_1, out.u_minus_0});
  return out;
}

// ---- GL(1|1) distinguished elements ----------------------------------------

// g_pi = sum_{pi <= beta <= (q-1,q-1)} (-1)^{|beta|} binom(beta,pi) binom(e',beta) e_21 e_12
// with e' = e + eps_1 - eps_2; h_pi is the same sum without the e_21 e_12 tail.
inline DistElem g_element(const AlgebraContext& ctx, const Weight& pi) {
  if (ctx.shape().m != 1 || ctx.shape().n != 1) throw std::invalid_argument("g_element: shape must be (1|1)");
  const PrimeField& F = ctx.field();
  const Int q = ctx.q();
  DistElem e21e12 = dist_mul(ctx, generator_e(ctx, 1, 0), generator_e(ctx, 0, 1));
  DistElem acc(ctx);
  for (Int b1 = pi[0]; b1 < q; ++b1)
    for (Int b2 = pi[1]; b2 < q; ++b2) {
      Scalar co = F.mul(F.sign(b1 + b2), F.mul(binom_mod(b1, pi[0], F), binom_mod(b2, pi[1], F)));
      if (!co) continue;
      DistElem term = dist_mul(ctx, binom_torus(ctx, Weight{b1, b2}, Weight{-1, 1}), e21e12);
      acc = dist_add(ctx, acc, term, co);
    }
  return acc;
}

inline DistElem h_element(const AlgebraContext& ctx, const Weight& pi) {
  if (ctx.shape().m != 1 || ctx.shape().n != 1) throw std::invalid_argument("h_element: shape must be (1|1)");
  const PrimeField& F = ctx.field();
  const Int q = ctx.q();
  DistElem acc(ctx);
  for (Int b1 = pi[0]; b1 < q; ++b1)
    for (Int b2 = pi[1]; b2 < q; ++b2) {
      Scalar co = F.mul(F.sign(b1 + b2), F.mul(binom_mod(b1, pi[0], F), binom_mod(b2, pi[1], F)));
      if (!co) continue;
      acc = dist_add(ctx, acc, binom_torus(ctx, Weight{b1, b2}), co);
    }
  return acc;
}

// string-keyed access: "nu_r", "delta_T", "u+0", "u-1", "g[1,1]", "h[0,2]"
inline DistElem named_element(const AlgebraContext& ctx, const std::string& key) {
  if (key == "nu_r") return named_elements(ctx).nu_r;
  if (key == "delta_T") return delta_T(ctx);
  if (key == "u+0") return u_product(ctx, true, false);
  if (key == "u+1") return u_product(ctx, true, true);
  if (key == "u-0") return u_product(ctx, false, false);
  if (key == "u-1") return u_product(ctx, false, true);
  if ((key.rfind("g[", 0) == 0 || key.rfind("h[", 0) == 0) && key.back() == ']') {
    auto comma = key.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("named_element: bad key " + key);
    Int a = std::stoll(key.substr(2, comma - 2));
    Int b = std::stoll(key.substr(comma + 1, key.size() - comma - 2));
    return key[0] == 'g' ? g_element(ctx, Weight{a, b}) : h_element(ctx, Weight{a, b});
  }
  throw std::invalid_argument("named_element: unknown key " + key);
}

// ---- distribution algebras of subsupergroups ---------------------------------

struct SubgroupSpec {
  enum Kind { Full, T, Gev, UPlus, UMinus, VPlus, VMinus, PPlus, PMinus, Uij } kind = Full;
  Int d = 1;        // level for U+-(d)
  Int i = 0, j = 0; // coordinate for Uij

  static SubgroupSpec full() { return {}; }
  static SubgroupSpec torus() { return {T}; }
  static SubgroupSpec gev() { return {Gev}; }
  static SubgroupSpec u_plus(Int d) { return {UPlus, d}; }
  static SubgroupSpec u_minus(Int d) { return {UMinus, d}; }
  static SubgroupSpec v_plus() { return {VPlus}; }
  static SubgroupSpec v_minus() { return {VMinus}; }
  static SubgroupSpec p_plus() { return {PPlus}; }
  static SubgroupSpec p_minus() { return {PMinus}; }
  static SubgroupSpec u_ij(Int i, Int j) { return {Uij, 1, i, j}; }

  std::string name() const {
    switch (kind) {
      case Full: return "full";
      case T: return "T";
      case Gev: return "Gev";
      case UPlus: return "U+(" + std::to_string(d) + ")";
      case UMinus: return "U-(" + std::to_string(d) + ")";
      case VPlus: return "V+";
      case VMinus: return "V-";
      case PPlus: return "P+";
      case PMinus: return "P-";
      case Uij: return "U_{" + std::to_string(i + 1) + std::to_string(j + 1) + "}";
    }
    return "?";
  }
};

// generators of the defining ideal I_H inside K[G_r]
inline std::vector<CoordElem> subgroup_ideal_generators(const AlgebraContext& ctx, const SubgroupSpec& spec) {
  const PrimeField& F = ctx.field();
  const Int m = ctx.shape().m;
  const Int N = ctx.rank();
  std::vector<CoordElem> gens;
  auto t_diag = [&](Int i) { return ctx.add(ctx.generator(i, i), ctx.one(), F.neg(1 % F.p())); };
  auto push_offdiag = [&](auto&& pred) {
    for (Int i = 0; i < N; ++i)
      for (Int j = 0; j < N; ++j)
        if (i != j && pred(i, j)) gens.push_back(ctx.generator(i, j));
  };
  switch (spec.kind) {
    case SubgroupSpec::Full:
      break;
    case SubgroupSpec::T:
      push_offdiag([](Int, Int) { return true; });
      break;
    case SubgroupSpec::Gev:
      push_offdiag([&](Int i, Int j) { return ctx.coord_parity(ctx.coord(i, j)) == 1; });
      break;
    case SubgroupSpec::UPlus:
      if (spec.d < 1 || spec.d > N - 1) throw std::invalid_argument("U+(d): d out of range");
      for (Int i = 0; i < N; ++i) gens.push_back(t_diag(i));
      push_offdiag([&](Int i, Int j) { return i > j || (j - i >= 1 && j - i < spec.d); });
      break;
    case SubgroupSpec::UMinus:
      if (spec.d < 1 || spec.d > N - 1) throw std::invalid_argument("U-(d): d out of range");
      for (Int i = 0; i < N; ++i) gens.push_back(t_diag(i));
      push_offdiag([&](Int i, Int j) { return i < j || (i - j >= 1 && i - j < spec.d); });
      break;
    case SubgroupSpec::VPlus:
      for (Int i = 0; i < N; ++i) gens.push_back(t_diag(i));
      push_offdiag([&](Int i, Int j) { return i > j || ctx.coord_parity(ctx.coord(i, j)) == 0; });
      break;
    case SubgroupSpec::VMinus:
      for (Int i = 0; i < N; ++i) gens.push_back(t_diag(i));
      push_offdiag([&](Int i, Int j) { return i < j || ctx.coord_parity(ctx.coord(i, j)) == 0; });
      break;
    case SubgroupSpec::PPlus:
      push_offdiag([&](Int i, Int j) { return i >= m && j < m; });
      break;
    case SubgroupSpec::PMinus:
      push_offdiag([&](Int i, Int j) { return i < m && j >= m; });
      break;
    case SubgroupSpec::Uij: {
      if (ctx.coord_parity(ctx.coord(spec.i, spec.j)) != 1)
        throw std::invalid_argument("U_{ij}: coordinate must be odd");
      for (Int i = 0; i < N; ++i) gens.push_back(t_diag(i));
      push_offdiag([&](Int i, Int j) { return !(i == spec.i && j == spec.j); });
      break;
    }
  }
  return gens;
}

// Basis of Dist(H_r) = annihilator of I_H inside K[G_r]^*, computed as a
// nullspace per parity block (the ideal is a graded subspace).
inline std::vector<DistElem> subalgebra_basis(const AlgebraContext& ctx, const SubgroupSpec& spec) {
  const PrimeField& F = ctx.field();
  auto gens = subgroup_ideal_generators(ctx, spec);
  if (gens.empty()) {
    std::vector<DistElem> out;
    for (MonoIdx k = 0; k < ctx.dim(); ++k) {
      DistElem d(ctx);
      d[k] = 1 % F.p();
      out.push_back(std::move(d));
    }
    return out;
  }
  std::vector<MonoIdx> even_idx, odd_idx;
  for (MonoIdx k = 0; k < ctx.dim(); ++k) (ctx.parity(k) ? odd_idx : even_idx).push_back(k);
  std::vector<DistElem> out;
  for (const auto& idx : {even_idx, odd_idx}) {
    std::map<MonoIdx, std::size_t> pos;
    for (std::size_t t = 0; t < idx.size(); ++t) pos[idx[t]] = t;
    std::vector<std::vector<Scalar>> rows;
    for (const CoordElem& g : gens)
      for (MonoIdx k = 0; k < ctx.dim(); ++k) {
        CoordElem prod(ctx);  // g * m_k
        for (auto& [a, ca] : g.terms()) {
          auto r = ctx.mul_mono(a, k);
          if (!r) continue;
          prod.add_term(r->second, r->first < 0 ? F.neg(ca) : ca, F);
        }
        if (prod.is_zero()) continue;
        std::vector<Scalar> row(idx.size(), 0);
        bool in_block = false;
        for (auto& [a, c] : prod.terms()) {
          auto it = pos.find(a);
          if (it != pos.end()) { row[it->second] = c; in_block = true; }
        }
        if (in_block) rows.push_back(std::move(row));
      }
    auto basis = echelon_basis(rows, idx.size(), F);
    FpMatrix M = FpMatrix::from_rows(basis, idx.size(), F);
    for (auto& x : M.nullspace()) {
      DistElem d(ctx);
      for (std::size_t t = 0; t < idx.size(); ++t) d[idx[t]] = x[t];
      out.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace glk
