#pragma once

// Adjoint action, integral-space and center solvers, the GL(1|1) coordinate
// invariants, and the multiplication-by-nu map between them.
//
// Every solver is plain F_p elimination. Subspaces carry canonical
// echelonized bases so results diff reproducibly.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "glk/arith.hpp"
#include "glk/coord.hpp"
#include "glk/dist.hpp"
#include "glk/linalg.hpp"

namespace glk {

struct Subspace {
  std::vector<std::vector<Scalar>> basis;  // echelonized rows
  std::size_t ambient = 0;

  std::size_t dim() const { return basis.size(); }

  bool contains(const std::vector<Scalar>& v, const PrimeField& F) const {
    FpMatrix M = FpMatrix::from_rows(basis, ambient, F);
    std::size_t r0 = M.rank();
    M.append_row(v);
    return M.rank() == r0;
  }

  bool same_span(const Subspace& o, const PrimeField& F) const {
    if (ambient != o.ambient) return false;
    return same_row_span(FpMatrix::from_rows(basis, ambient, F),
                         FpMatrix::from_rows(o.basis, ambient, F));
  }
};

inline Subspace make_subspace(const std::vector<std::vector<Scalar>>& vecs, std::size_t ambient,
                              const PrimeField& F) {
  Subspace s;
  s.ambient = ambient;
  s.basis = echelon_basis(vecs, ambient, F);
  return s;
}

// ---- adjoint action ---------------------------------------------------------

// ad(x)y = sum (-1)^{|x_2||y|} x_1 y s(x_2), through the dual coproduct of x.
// y must be parity homogeneous; extend by linearity for mixed y.
inline DistElem ad(const AlgebraContext& ctx, const DistElem& x, const DistElem& y) {
  const PrimeField& F = ctx.field();
  Parity py = y.parity();
  if (py == Parity::Mixed) {
    DistElem y0(ctx), y1(ctx);
    for (MonoIdx k = 0; k < ctx.dim(); ++k) (ctx.parity(k) ? y1[k] : y0[k]) = y[k];
    return dist_add(ctx, ad(ctx, x, y0), ad(ctx, x, y1));
  }
  int ypar = (py == Parity::Odd) ? 1 : 0;
  FpMatrix M = dist_comul(ctx, x);
  DistElem out(ctx);
  for (MonoIdx a = 0; a < ctx.dim(); ++a)
    for (MonoIdx b = 0; b < ctx.dim(); ++b) {
      Scalar c = M(a, b);
      if (!c) continue;
      DistElem da(ctx), db(ctx);
      da[a] = 1 % F.p();
      db[b] = 1 % F.p();
      DistElem term = dist_mul(ctx, dist_mul(ctx, da, y), dist_antipode(ctx, db));
      Scalar co = (ctx.parity(b) && ypar) ? F.neg(c) : c;
      out = dist_add(ctx, out, term, co);
    }
  return out;
}

// ---- incremental nullspace solver --------------------------------------------

// Maintains a shrinking subspace V of F_p^dim; each constraint is a linear
// map given row-wise, and V is replaced by its intersection with the kernel.
class NullspaceSolver {
 public:
  NullspaceSolver(std::size_t dim, const PrimeField& F) : F_(&F), dim_(dim) {
    basis_.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      std::vector<Scalar> e(dim, 0);
      e[i] = 1 % F.p();
      basis_.push_back(std::move(e));
    }
  }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::vector<Scalar>>& basis() const { return basis_; }

  // constraint_on(v) must return the constraint image of an ambient vector
  template <class Fn>
  void add_constraint(Fn&& constraint_on) {
    if (basis_.empty()) return;
    std::vector<std::vector<Scalar>> images;
    images.reserve(basis_.size());
    std::size_t out_dim = 0;
    for (auto& v : basis_) {
      images.push_back(constraint_on(v));
      out_dim = images.back().size();
    }
    // kernel of the map restricted to V: columns = current basis vectors
    FpMatrix M(out_dim, basis_.size(), *F_);
    for (std::size_t c = 0; c < basis_.size(); ++c)
      for (std::size_t r = 0; r < out_dim; ++r) M(r, c) = images[c][r];
    auto ker = M.nullspace();
    std::vector<std::vector<Scalar>> next;
    next.reserve(ker.size());
    for (auto& co : ker) {
      std::vector<Scalar> v(dim_, 0);
      for (std::size_t c = 0; c < basis_.size(); ++c) {
        if (!co[c]) continue;
        for (std::size_t k = 0; k < dim_; ++k)
          v[k] = F_->add(v[k], F_->mul(co[c], basis_[c][k]));
      }
      next.push_back(std::move(v));
    }
    basis_ = std::move(next);
  }

  Subspace result() const { return make_subspace(basis_, dim_, *F_); }

 private:
  const PrimeField* F_;
  std::size_t dim_;
  std::vector<std::vector<Scalar>> basis_;
};

// (nu x)(m_k) for unknown nu: rows over k of sum_a coeff * nu_a
inline std::vector<Scalar> right_mul_image(const AlgebraContext& ctx, const std::vector<Scalar>& nu,
                                           const DistElem& x) {
  const PrimeField& F = ctx.field();
  std::vector<Scalar> out(ctx.dim(), 0);
  for (MonoIdx k = 0; k < ctx.dim(); ++k) {
    Scalar acc = 0;
    for (const CoTerm& t : ctx.comul_mono(k)) {
      Scalar xv = x[t.b];
      if (!xv || !nu[t.a]) continue;
      Scalar v = F.mul(F.mul(nu[t.a], xv), t.c);
      acc = F.add(acc, (ctx.parity(t.a) && ctx.parity(t.b)) ? F.neg(v) : v);
    }
    out[k] = acc;
  }
  return out;
}

inline std::vector<Scalar> left_mul_image(const AlgebraContext& ctx, const std::vector<Scalar>& nu,
                                          const DistElem& x) {
  const PrimeField& F = ctx.field();
  std::vector<Scalar> out(ctx.dim(), 0);
  for (MonoIdx k = 0; k < ctx.dim(); ++k) {
    Scalar acc = 0;
    for (const CoTerm& t : ctx.comul_mono(k)) {
      Scalar xv = x[t.a];
      if (!xv || !nu[t.b]) continue;
      Scalar v = F.mul(F.mul(xv, nu[t.b]), t.c);
      acc = F.add(acc, (ctx.parity(t.a) && ctx.parity(t.b)) ? F.neg(v) : v);
    }
    out[k] = acc;
  }
  return out;
}

enum class IntegralSide { Right, Left };

// Integrals of the distribution algebra of a subsupergroup: the nullspace of
// { nu x - x(1) nu : x in a basis of Dist(H_r) }, solved inside the span of
// that same basis.
inline Subspace integral_space(const AlgebraContext& ctx, const SubgroupSpec& spec,
                               IntegralSide side = IntegralSide::Right) {
  const PrimeField& F = ctx.field();
  auto sub = subalgebra_basis(ctx, spec);
  NullspaceSolver solver(ctx.dim(), F);
  // confine to the subalgebra if proper
  if (sub.size() < ctx.dim()) {
    std::vector<std::vector<Scalar>> rows;
    for (auto& b : sub) rows.push_back(b.values());
    auto span = echelon_basis(rows, ctx.dim(), F);
    FpMatrix M = FpMatrix::from_rows(span, ctx.dim(), F);
    // ann(ann(span)) == span: constraints forcing membership
    auto ann = M.nullspace();
    solver.add_constraint([&](const std::vector<Scalar>& v) {
      std::vector<Scalar> img(ann.size(), 0);
      for (std::size_t r = 0; r < ann.size(); ++r) {
        Scalar acc = 0;
        for (std::size_t k = 0; k < v.size(); ++k)
          if (ann[r][k] && v[k]) acc = F.add(acc, F.mul(ann[r][k], v[k]));
        img[r] = acc;
      }
      return img;
    });
  }
  for (auto& x : sub) {
    Scalar x1 = dist_counit(x);
    solver.add_constraint([&](const std::vector<Scalar>& v) {
      auto img = (side == IntegralSide::Right) ? right_mul_image(ctx, v, x) : left_mul_image(ctx, v, x);
      if (x1)
        for (std::size_t k = 0; k < img.size(); ++k) img[k] = F.sub(img[k], F.mul(x1, v[k]));
      return img;
    });
    if (solver.dim() == 0) break;
  }
  return solver.result();
}

// z x = (-1)^{|z||x|} x z for every dual basis vector x; as a linear system
// the parity signs cancel, so one system covers both parities and its
// solution space is automatically graded.
inline Subspace center_basis(const AlgebraContext& ctx) {
  const PrimeField& F = ctx.field();
  NullspaceSolver solver(ctx.dim(), F);
  for (MonoIdx j = 0; j < ctx.dim(); ++j) {
    DistElem dj(ctx);
    dj[j] = 1 % F.p();
    solver.add_constraint([&](const std::vector<Scalar>& v) {
      auto r = right_mul_image(ctx, v, dj);
      auto l = left_mul_image(ctx, v, dj);
      for (std::size_t k = 0; k < r.size(); ++k) r[k] = F.sub(r[k], l[k]);
      return r;
    });
    if (solver.dim() == 0) break;
  }
  return solver.result();
}

// membership test for the same condition, one element at a time
inline bool is_central(const AlgebraContext& ctx, const DistElem& z) {
  const PrimeField& F = ctx.field();
  for (MonoIdx j = 0; j < ctx.dim(); ++j) {
    DistElem dj(ctx);
    dj[j] = 1 % F.p();
    auto r = right_mul_image(ctx, z.values(), dj);
    auto l = left_mul_image(ctx, z.values(), dj);
    if (r != l) return false;
  }
  return true;
}

// supercommutes with every element of the given basis (signs per parity)
inline bool supercommutes_with(const AlgebraContext& ctx, const DistElem& z,
                               const std::vector<DistElem>& basis) {
  const PrimeField& F = ctx.field();
  Parity pz = z.parity();
  if (pz == Parity::Mixed) throw std::invalid_argument("supercommutes_with: z must be homogeneous");
  int zp = pz == Parity::Odd ? 1 : 0;
  for (auto& b : basis) {
    Parity pb = b.parity();
    if (pb == Parity::Mixed) {
      DistElem b0(ctx), b1(ctx);
      for (MonoIdx k = 0; k < ctx.dim(); ++k) (ctx.parity(k) ? b1[k] : b0[k]) = b[k];
      if (!supercommutes_with(ctx, z, {b0, b1})) return false;
      continue;
    }
    int bp = pb == Parity::Odd ? 1 : 0;
    DistElem lhs = dist_mul(ctx, z, b);
    DistElem rhs = dist_mul(ctx, b, z);
    if ((zp & bp) != 0) rhs = dist_scale(ctx, rhs, F.neg(1 % F.p()));
    if (lhs != rhs) return false;
  }
  return true;
}

// ---- ad-invariants (used for the center comparison) --------------------------

// { y homogeneous of parity zeta : ad(d_j) y = d_j(1) y for all j }
inline Subspace ad_invariants(const AlgebraContext& ctx) {
  const PrimeField& F = ctx.field();
  const MonoIdx dim = ctx.dim();
  std::vector<std::vector<Scalar>> solutions;
  for (int zeta = 0; zeta <= 1; ++zeta) {
    std::vector<MonoIdx> idx;
    for (MonoIdx k = 0; k < dim; ++k)
      if (ctx.parity(k) == zeta) idx.push_back(k);
    NullspaceSolver solver(idx.size(), F);
    for (MonoIdx j = 0; j < dim; ++j) {
      DistElem dj(ctx);
      dj[j] = 1 % F.p();
      Scalar dj1 = dist_counit(dj);
      solver.add_constraint([&](const std::vector<Scalar>& co) {
        DistElem y(ctx);
        for (std::size_t t = 0; t < idx.size(); ++t) y[idx[t]] = co[t];
        DistElem img = ad(ctx, dj, y);
        if (dj1) img = dist_add(ctx, img, y, F.neg(dj1));
        return img.values();
      });
      if (solver.dim() == 0) break;
    }
    for (auto& co : solver.basis()) {
      std::vector<Scalar> v(dim, 0);
      for (std::size_t t = 0; t < idx.size(); ++t) v[idx[t]] = co[t];
      solutions.push_back(std::move(v));
    }
  }
  return make_subspace(solutions, dim, F);
}

// ---- GL(1|1): theorem generators for the center -------------------------------

// For p | t: all g_lam (lam in O_t) plus sum_{lam in O_t} (-1)^{|lam|} h_lam.
// For p ∤ t: (-1)^{|lam|+|bar(lam+alpha)|} g_{bar(lam+alpha)} - g_lam + |lam| h_lam.
inline std::vector<DistElem> center_theorem_generators(const AlgebraContext& ctx) {
  if (ctx.shape().m != 1 || ctx.shape().n != 1)
    throw std::invalid_argument("center_theorem_generators: shape must be (1|1)");
  const PrimeField& F = ctx.field();
  const Int q = ctx.q();
  const Int p = ctx.shape().p;
  std::vector<DistElem> gens;
  for (Int t = 0; t < q; ++t) {
    auto orb = orbit(t, q);
    if (t % p == 0) {
      for (auto& lam : orb) gens.push_back(g_element(ctx, lam));
      DistElem s(ctx);
      for (auto& lam : orb) s = dist_add(ctx, s, h_element(ctx, lam), F.sign(lam.sum()));
      gens.push_back(std::move(s));
    } else {
      for (auto& lam : orb) {
        Weight lb = bar(lam + Weight{1, -1}, q);
        DistElem v = dist_scale(ctx, g_element(ctx, lb), F.sign(lam.sum() + lb.sum()));
        v = dist_add(ctx, v, g_element(ctx, lam), F.neg(1 % F.p()));
        v = dist_add(ctx, v, h_element(ctx, lam), F.from_int(lam.sum()));
        gens.push_back(std::move(v));
      }
    }
  }
  return gens;
}

struct CenterReport {
  Subspace brute_force;
  std::vector<DistElem> theorem_generators;
  bool spans_match = false;
};

inline CenterReport center_report(const AlgebraContext& ctx) {
  CenterReport rep;
  rep.brute_force = center_basis(ctx);
  rep.theorem_generators = center_theorem_generators(ctx);
  std::vector<std::vector<Scalar>> rows;
  for (auto& g : rep.theorem_generators) rows.push_back(g.values());
  Subspace span = make_subspace(rows, ctx.dim(), ctx.field());
  rep.spans_match = span.same_span(rep.brute_force, ctx.field());
  return rep;
}

// ---- GL(1|1) coordinate invariants --------------------------------------------

struct CoordInvariants {
  Subspace solution;                  // ker D_12 on the weight-zero subspace
  std::vector<CoordElem> generators;  // sigma_t, x^lam, gamma_lam per orbit
  bool spans_match = false;
  bool d21_matches = false;
};

inline CoordElem sigma_element(const AlgebraContext& ctx, Int t) {
  CoordElem s(ctx);
  for (auto& lam : orbit(t, ctx.q())) s = ctx.add(s, x_basis11(ctx, lam, 1, 1));
  return s;
}

inline CoordElem gamma_element(const AlgebraContext& ctx, const Weight& lam) {
  const PrimeField& F = ctx.field();
  Weight lb = bar(lam + Weight{1, -1}, ctx.q());
  CoordElem g = x_basis11(ctx, lam, 0, 0);
  g = ctx.add(g, x_basis11(ctx, lb, 0, 0), F.neg(1 % F.p()));
  g = ctx.add(g, x_basis11(ctx, lb, 1, 1), F.from_int(lam.sum()));
  return g;
}

inline CoordInvariants coord_invariants_gl11(const AlgebraContext& ctx) {
  if (ctx.shape().m != 1 || ctx.shape().n != 1)
    throw std::invalid_argument("coord_invariants_gl11: shape must be (1|1)");
  const PrimeField& F = ctx.field();
  const Int q = ctx.q();
  const Int p = ctx.shape().p;
  // weight-zero basis under conjugation: x^lam and x^lam x21 x12
  std::vector<CoordElem> wz;
  for (auto& lam : weight_box(q, 2)) wz.push_back(x_basis11(ctx, lam, 0, 0));
  for (auto& lam : weight_box(q, 2)) wz.push_back(x_basis11(ctx, lam, 1, 1));

  auto solve_with = [&](Int i, Int j) {
    FpMatrix M(ctx.dim(), wz.size(), F);
    for (std::size_t c = 0; c < wz.size(); ++c) {
      CoordElem d = superderive(ctx, wz[c], i, j);
      for (auto& [k, v] : d.terms()) M(k, c) = v;
    }
    return M.nullspace();
  };
  auto sol12 = solve_with(0, 1);
  auto sol21 = solve_with(1, 0);

  CoordInvariants out;
  // ambient coordinates: expand in the monomial basis
  auto to_ambient = [&](const std::vector<Scalar>& co) {
    std::vector<Scalar> v(ctx.dim(), 0);
    for (std::size_t c = 0; c < wz.size(); ++c) {
      if (!co[c]) continue;
      for (auto& [k, cv] : wz[c].terms()) v[k] = F.add(v[k], F.mul(co[c], cv));
    }
    return v;
  };
  std::vector<std::vector<Scalar>> amb12, amb21;
  for (auto& s : sol12) amb12.push_back(to_ambient(s));
  for (auto& s : sol21) amb21.push_back(to_ambient(s));
  out.solution = make_subspace(amb12, ctx.dim(), F);
  out.d21_matches = out.solution.same_span(make_subspace(amb21, ctx.dim(), F), F);

  for (Int t = 0; t < q; ++t) {
    auto orb = orbit(t, q);
    if (t % p == 0) {
      out.generators.push_back(sigma_element(ctx, t));
      for (auto& lam : orb) out.generators.push_back(x_basis11(ctx, lam, 0, 0));
    } else {
      for (auto& lam : orb) out.generators.push_back(gamma_element(ctx, lam));
    }
  }
  std::vector<std::vector<Scalar>> grows;
  for (auto& g : out.generators) {
    std::vector<Scalar> v(ctx.dim(), 0);
    for (auto& [k, c] : g.terms()) v[k] = c;
    grows.push_back(std::move(v));
  }
  out.spans_match = make_subspace(grows, ctx.dim(), F).same_span(out.solution, F);
  return out;
}

// f -> nu f under the right action
inline DistElem nu_multiplication(const AlgebraContext& ctx, const DistElem& nu, const CoordElem& f) {
  return dist_right_action(ctx, nu, f);
}

}  // namespace glk
