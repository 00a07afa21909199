#pragma once

// JSON views of the public value types. Serialization only; all consumers
// re-run the computations rather than parsing elements back in.

#include <string>

#include <json.hpp>

#include "glk/arith.hpp"
#include "glk/blocks.hpp"
#include "glk/coord.hpp"
#include "glk/dist.hpp"
#include "glk/invariants.hpp"

namespace glk {

using json = nlohmann::json;

inline json to_json(const Weight& w) {
  json a = json::array();
  for (Int x : w.v) a.push_back(x);
  return a;
}

inline json to_json(const GlShape& s) {
  return json{{"m", s.m}, {"n", s.n}, {"p", s.p}, {"r", s.r}};
}

inline json to_json(const AlgebraContext& ctx, const CoordElem& e) {
  json terms = json::array();
  for (auto& [k, c] : e.terms())
    terms.push_back(json{{"mono", monomial_string(ctx, k)}, {"coef", c}});
  return json{{"shape", to_json(ctx.shape())}, {"terms", terms}};
}

inline std::string parity_string(Parity p) {
  switch (p) {
    case Parity::Odd: return "odd";
    case Parity::Mixed: return "mixed";
    default: return "even";
  }
}

inline json to_json(const AlgebraContext& ctx, const DistElem& d) {
  json vals = json::array();
  for (MonoIdx k = 0; k < ctx.dim(); ++k) vals.push_back(d[k]);
  return json{{"values", vals}, {"basis_order", "row-major-lex"}, {"parity", parity_string(d.parity())}};
}

inline json dist_subspace_json(const AlgebraContext& ctx, const Subspace& s) {
  json basis = json::array();
  for (auto& row : s.basis) {
    DistElem d(ctx);
    for (MonoIdx k = 0; k < ctx.dim(); ++k) d[k] = row[k];
    basis.push_back(to_json(ctx, d));
  }
  return json{{"dim", s.dim()}, {"basis", basis}};
}

inline json coord_subspace_json(const AlgebraContext& ctx, const Subspace& s) {
  json basis = json::array();
  for (auto& row : s.basis) {
    CoordElem e(ctx);
    for (MonoIdx k = 0; k < ctx.dim(); ++k) e.set(k, row[k]);
    basis.push_back(to_json(ctx, e));
  }
  return json{{"dim", s.dim()}, {"basis", basis}};
}

inline json to_json(const BlockReport& rep) {
  auto classes = [](const std::vector<std::vector<Weight>>& cs) {
    json out = json::array();
    for (auto& cls : cs) {
      json c = json::array();
      for (auto& w : cls) c.push_back(to_json(w));
      out.push_back(c);
    }
    return out;
  };
  json flags{{"HC_eq_B", rep.hc_eq_b},
             {"B_subset_K", rep.b_subset_k},
             {"strict_iff_p_ndiv", rep.strict_iff_p_ndiv}};
  json j{{"p", rep.p},
         {"window", rep.window},
         {"classes", json{{"B", classes(rep.classes_B)}, {"HC", classes(rep.classes_HC)}, {"K", classes(rep.classes_K)}}},
         {"flags", flags}};
  if (rep.counterexample) j["counterexample"] = to_json(*rep.counterexample);
  return j;
}

}  // namespace glk
