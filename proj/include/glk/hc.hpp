#pragma once

// PBW machinery for Dist(G_r): ordered products of divided powers and
// diagonal binomials, the change of basis from dual-vector coordinates, the
// Harish-Chandra projection onto the torus component, and central-character
// eigenvalues.
//
// Factor ordering: lower triangle (odd then even), diagonal, upper triangle
// (even then odd); with this ordering the torus component of an element is a
// coordinate projection of its PBW expansion.

#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "glk/arith.hpp"
#include "glk/coord.hpp"
#include "glk/dist.hpp"
#include "glk/linalg.hpp"

namespace glk {

struct PBWIndex {
  std::vector<std::uint8_t> exps;  // aligned with PBWBasis::slots()
};

class PBWBasis {
 public:
  struct Slot {
    std::size_t coord;
    enum Zone { LowerOdd, LowerEven, Diag, UpperEven, UpperOdd } zone;
  };

  explicit PBWBasis(const AlgebraContext& ctx)
      : ctx_(&ctx), P_(ctx.dim(), ctx.dim(), ctx.field()), Pinv_(0, 0, ctx.field()) {
    const Int N = ctx.rank();
    auto add_zone = [&](Slot::Zone z, auto&& pred) {
      for (std::size_t c = 0; c < ctx.ncoords(); ++c) {
        auto [i, j] = ctx.coord_ij(c);
        if (i != j && pred(i, j, ctx.coord_parity(c))) slots_.push_back({c, z});
      }
    };
    add_zone(Slot::LowerOdd, [](Int i, Int j, int par) { return i > j && par; });
    add_zone(Slot::LowerEven, [](Int i, Int j, int par) { return i > j && !par; });
    for (Int i = 0; i < N; ++i) slots_.push_back({ctx.coord(i, i), Slot::Diag});
    add_zone(Slot::UpperEven, [](Int i, Int j, int par) { return i < j && !par; });
    add_zone(Slot::UpperOdd, [](Int i, Int j, int par) { return i < j && par; });

    stride_.resize(slots_.size());
    std::uint64_t s = 1;
    for (std::size_t t = slots_.size(); t-- > 0;) {
      stride_[t] = s;
      s *= static_cast<std::uint64_t>(ctx.coord_radix(slots_[t].coord));
    }
    if (s != ctx.dim()) throw std::logic_error("PBWBasis: slot radices do not fill the dimension");

    // products via prefix caching: index t = prefix * last-slot factor
    std::vector<DistElem> cache(ctx.dim());
    cache[0] = dist_one(ctx);
    for (MonoIdx k = 0; k < ctx.dim(); ++k) P_(k, 0) = cache[0][k];
    for (MonoIdx t = 1; t < ctx.dim(); ++t) {
      std::size_t last = slots_.size();
      Int e = 0;
      for (std::size_t sl = slots_.size(); sl-- > 0;) {
        e = static_cast<Int>((t / stride_[sl]) % static_cast<std::uint64_t>(ctx.coord_radix(slots_[sl].coord)));
        if (e) { last = sl; break; }
      }
      MonoIdx prefix = static_cast<MonoIdx>(t - static_cast<std::uint64_t>(e) * stride_[last]);
      cache[t] = dist_mul(ctx, cache[prefix], slot_factor(last, e));
      for (MonoIdx k = 0; k < ctx.dim(); ++k) P_(k, t) = cache[t][k];
    }
    try {
      Pinv_ = P_.inverse();
    } catch (const std::runtime_error&) {
      throw std::runtime_error("PBWBasis: ordered products are linearly dependent");
    }
  }

  const AlgebraContext& context() const { return *ctx_; }
  const std::vector<Slot>& slots() const { return slots_; }

  PBWIndex index(MonoIdx t) const {
    PBWIndex ix;
    ix.exps.resize(slots_.size());
    for (std::size_t s = 0; s < slots_.size(); ++s)
      ix.exps[s] = static_cast<std::uint8_t>((t / stride_[s]) %
                                             static_cast<std::uint64_t>(ctx_->coord_radix(slots_[s].coord)));
    return ix;
  }

  bool is_torus_index(MonoIdx t) const {
    for (std::size_t s = 0; s < slots_.size(); ++s) {
      if (slots_[s].zone == Slot::Diag) continue;
      if ((t / stride_[s]) % static_cast<std::uint64_t>(ctx_->coord_radix(slots_[s].coord))) return false;
    }
    return true;
  }

  // the factor of one slot at exponent e
  DistElem slot_factor(std::size_t s, Int e) const {
    auto [i, j] = ctx_->coord_ij(slots_[s].coord);
    if (slots_[s].zone == Slot::Diag) return binom_diag(*ctx_, i, e);
    return divided_power(*ctx_, i, j, e);
  }

  // the ordered product for a PBW index, as a dual vector
  DistElem product(MonoIdx t) const {
    DistElem out(*ctx_);
    for (MonoIdx k = 0; k < ctx_->dim(); ++k) out[k] = P_(k, t);
    return out;
  }

  // product with an arbitrary factor order, for the order-independence checks
  DistElem product_in_order(MonoIdx t, const std::vector<std::size_t>& slot_order) const {
    DistElem acc = dist_one(*ctx_);
    for (std::size_t s : slot_order) {
      Int e = static_cast<Int>((t / stride_[s]) % static_cast<std::uint64_t>(ctx_->coord_radix(slots_[s].coord)));
      if (e) acc = dist_mul(*ctx_, acc, slot_factor(s, e));
    }
    return acc;
  }

  // exact coordinates of z in the PBW product basis
  std::vector<Scalar> decompose(const DistElem& z) const {
    check_same_context(*ctx_, z);
    return Pinv_.apply(z.values());
  }

  DistElem recompose(const std::vector<Scalar>& coeffs) const {
    const PrimeField& F = ctx_->field();
    DistElem out(*ctx_);
    for (MonoIdx t = 0; t < ctx_->dim(); ++t) {
      if (!coeffs[t]) continue;
      for (MonoIdx k = 0; k < ctx_->dim(); ++k)
        if (P_(k, t)) out[k] = F.add(out[k], F.mul(coeffs[t], P_(k, t)));
    }
    return out;
  }

  // Harish-Chandra projection: drop every PBW term with a nonzero lower or
  // upper part; odd input projects to zero automatically
  DistElem hc_project(const DistElem& z) const {
    auto co = decompose(z);
    for (MonoIdx t = 0; t < ctx_->dim(); ++t)
      if (co[t] && !is_torus_index(t)) co[t] = 0;
    return recompose(co);
  }

 private:
  const AlgebraContext* ctx_;
  std::vector<Slot> slots_;
  std::vector<std::uint64_t> stride_;
  FpMatrix P_;
  FpMatrix Pinv_;
};

// whether a dual vector lies in Dist(T_r): it must kill every monomial with
// an off-diagonal factor
inline bool is_torus_supported(const AlgebraContext& ctx, const DistElem& z) {
  for (MonoIdx k = 0; k < ctx.dim(); ++k) {
    if (!z[k]) continue;
    const std::uint8_t* e = ctx.exps(k);
    for (std::size_t c = 0; c < ctx.ncoords(); ++c) {
      auto [i, j] = ctx.coord_ij(c);
      if (i != j && e[c]) return false;
    }
  }
  return true;
}

// z_lambda for torus-supported z: the value on c^{bar(lambda)}, which matches
// substituting binom(lambda_i, s_i) for each diagonal binomial factor
inline Scalar eigenvalue(const AlgebraContext& ctx, const DistElem& z, const Weight& lam) {
  if (!is_torus_supported(ctx, z))
    throw std::invalid_argument("eigenvalue: element not supported on Dist(T_r); apply hc_project first");
  return eval(ctx, z, c_weight(ctx, bar(lam, ctx.q())));
}

}  // namespace glk
