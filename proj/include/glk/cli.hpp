#pragma once

// Command-line front end: reproducible computations and machine-readable
// reports. Output is byte-deterministic for a fixed (config, seed).

#include <ostream>
#include <string>

#include "glk/checks.hpp"
#include "glk/io.hpp"

namespace glk {

struct RunConfig {
  Int m = 1, n = 1, p = 2, r = 1;
  std::string command;  // dims|verify|center|integral|coordinv|hc|blocks
  Int window = 0;       // 0: use the default 2p^2
  std::string output = "json";
  Int dim_guard = 5000;
  std::uint64_t seed = 12345;
};

namespace cli_detail {

inline int cmd_dims(const RunConfig& cfg, std::ostream& os) {
  GlShape shape{cfg.m, cfg.n, cfg.p, cfg.r};
  AlgebraContext ctx(shape, cfg.dim_guard);
  json j;
  j["K[G_r]"] = ctx.dim();
  json subs;
  std::vector<SubgroupSpec> specs = {SubgroupSpec::torus(), SubgroupSpec::gev(), SubgroupSpec::v_plus(),
                                     SubgroupSpec::v_minus(), SubgroupSpec::p_plus(), SubgroupSpec::p_minus()};
  for (Int d = 1; d <= ctx.rank() - 1; ++d) {
    specs.push_back(SubgroupSpec::u_plus(d));
    specs.push_back(SubgroupSpec::u_minus(d));
  }
  for (auto& s : specs) subs[s.name()] = subalgebra_basis(ctx, s).size();
  j["Dist"] = subs;
  if (cfg.output == "text") {
    os << "dim K[G_r] = " << ctx.dim() << "\n";
    for (auto& [k, v] : subs.items()) os << "dim Dist(" << k << "_r) = " << v << "\n";
  } else {
    os << j.dump(2) << "\n";
  }
  return 0;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& os) {
  GlShape shape{cfg.m, cfg.n, cfg.p, cfg.r};
  CheckOptions opt;
  opt.seed = cfg.seed;
  opt.dim_guard = cfg.dim_guard;
  auto results = run_checks(shape, opt);
  int failures = 0;
  json jr = json::array();
  for (auto& res : results) {
    std::string status = res.status == CheckResult::Status::Pass   ? "pass"
                         : res.status == CheckResult::Status::Fail ? "fail"
                                                                   : "skipped";
    if (res.status == CheckResult::Status::Fail) ++failures;
    if (cfg.output == "text") {
      os << res.id << " -> " << status;
      if (!res.detail.empty()) os << " (" << res.detail << ")";
      os << "\n";
    } else {
      json one{{"check", res.id}, {"status", status}};
      if (!res.detail.empty()) one["detail"] = res.detail;
      jr.push_back(one);
    }
  }
  if (cfg.output != "text")
    os << json{{"shape", to_json(shape)}, {"results", jr}, {"failures", failures}}.dump(2) << "\n";
  else
    os << (failures ? "FAILED" : "OK") << " (" << failures << " failures)\n";
  return failures ? 1 : 0;
}

inline int cmd_center(const RunConfig& cfg, std::ostream& os) {
  GlShape shape{cfg.m, cfg.n, cfg.p, cfg.r};
  AlgebraContext ctx(shape, cfg.dim_guard);
  Subspace z = center_basis(ctx);
  json j = dist_subspace_json(ctx, z);
  if (shape.m == 1 && shape.n == 1) {
    CenterReport rep;
    rep.brute_force = z;
    rep.theorem_generators = center_theorem_generators(ctx);
    std::vector<std::vector<Scalar>> rows;
    for (auto& g : rep.theorem_generators) rows.push_back(g.values());
    j["theorem_generators_span"] = make_subspace(rows, ctx.dim(), ctx.field()).same_span(z, ctx.field());
  }
  if (cfg.output == "text")
    os << "dim Z_r = " << z.dim() << "\n";
  else
    os << j.dump(2) << "\n";
  return 0;
}

inline int cmd_integral(const RunConfig& cfg, std::ostream& os) {
  GlShape shape{cfg.m, cfg.n, cfg.p, cfg.r};
  AlgebraContext ctx(shape, cfg.dim_guard);
  Subspace right = integral_space(ctx, SubgroupSpec::full(), IntegralSide::Right);
  json j = dist_subspace_json(ctx, right);
  NamedElements ne = named_elements(ctx);
  j["contains_nu_r"] = right.contains(ne.nu_r.values(), ctx.field());
  j["nu_r"] = to_json(ctx, ne.nu_r);
  if (cfg.output == "text")
    os << "dim integral space = " << right.dim() << ", contains nu_r = "
       << (right.contains(ne.nu_r.values(), ctx.field()) ? "yes" : "no") << "\n";
  else
    os << j.dump(2) << "\n";
  return 0;
}

inline int cmd_coordinv(const RunConfig& cfg, std::ostream& os) {
  GlShape shape{cfg.m, cfg.n, cfg.p, cfg.r};
  if (shape.m != 1 || shape.n != 1) {
    os << "coordinv requires shape (1|1)\n";
    return 2;
  }
  AlgebraContext ctx(shape, cfg.dim_guard);
  CoordInvariants ci = coord_invariants_gl11(ctx);
  json j = coord_subspace_json(ctx, ci.solution);
  j["generators_span_matches"] = ci.spans_match;
  j["d21_matches"] = ci.d21_matches;
  if (cfg.output == "text")
    os << "dim K[G_r]^G = " << ci.solution.dim() << "\n";
  else
    os << j.dump(2) << "\n";
  return 0;
}

inline int cmd_hc(const RunConfig& cfg, std::ostream& os) {
  GlShape shape{cfg.m, cfg.n, cfg.p, cfg.r};
  if (shape.m != 1 || shape.n != 1) {
    os << "hc requires shape (1|1)\n";
    return 2;
  }
  AlgebraContext ctx(shape, cfg.dim_guard);
  PBWBasis pbw(ctx);
  auto gens = center_theorem_generators(ctx);
  std::vector<std::vector<Scalar>> himg;
  for (auto& z : gens) himg.push_back(pbw.hc_project(z).values());
  Subspace Ir = make_subspace(himg, ctx.dim(), ctx.field());
  json j = dist_subspace_json(ctx, Ir);
  bool mult = true;
  for (auto& a : gens)
    for (auto& b : gens)
      if (pbw.hc_project(dist_mul(ctx, a, b)) != dist_mul(ctx, pbw.hc_project(a), pbw.hc_project(b))) mult = false;
  j["multiplicative_on_center"] = mult;
  if (cfg.output == "text")
    os << "dim I_r = " << Ir.dim() << ", multiplicative = " << (mult ? "yes" : "no") << "\n";
  else
    os << j.dump(2) << "\n";
  return 0;
}

inline int cmd_blocks(const RunConfig& cfg, std::ostream& os) {
  if (cfg.m != 1 || cfg.n != 1) {
    os << "blocks requires shape (1|1)\n";
    return 2;
  }
  Int window = cfg.window > 0 ? cfg.window : 2 * cfg.p * cfg.p;
  BlockReport rep = compare_blocks(cfg.p, window);
  if (cfg.output == "text") {
    os << "p=" << rep.p << " window=" << rep.window << "\n";
    os << "HC classes: " << rep.classes_HC.size() << ", B classes: " << rep.classes_B.size()
       << ", K classes: " << rep.classes_K.size() << "\n";
    os << "HC=B: " << (rep.hc_eq_b ? "yes" : "no") << ", B<=K: " << (rep.b_subset_k ? "yes" : "no")
       << ", strict iff p∤|lambda|: " << (rep.strict_iff_p_ndiv ? "yes" : "no") << "\n";
    // a small lattice diagram labelled by HC class id
    Int w = std::min<Int>(window, 9);
    std::map<std::vector<Int>, int> label;
    int next = 0;
    for (auto& cls : rep.classes_HC) {
      for (auto& wt_ : cls) label[wt_.v] = next;
      ++next;
    }
    for (Int b = w; b >= -w; --b) {
      for (Int a = -w; a <= w; ++a) {
        auto it = label.find(std::vector<Int>{a, b});
        if (it == label.end())
          os << "   .";
        else {
          char buf[8];
          std::snprintf(buf, sizeof buf, "%4d", it->second % 1000);
          os << buf;
        }
      }
      os << "\n";
    }
  } else {
    os << to_json(rep).dump(2) << "\n";
  }
  bool ok = rep.hc_eq_b && rep.b_subset_k && rep.strict_iff_p_ndiv;
  return ok ? 0 : 1;
}

}  // namespace cli_detail

// returns the process exit code: 0 ok, 1 verification failure, 2 usage error
inline int run_command(const RunConfig& cfg, std::ostream& os) {
  if (!is_prime(cfg.p)) {
    os << "error: p = " << cfg.p << " is not prime\n";
    return 2;
  }
  if (cfg.r < 1 || cfg.m < 0 || cfg.n < 0 || cfg.m + cfg.n < 1) {
    os << "error: invalid shape\n";
    return 2;
  }
  try {
    prime_power(cfg.p, cfg.r);
  } catch (const std::exception& e) {
    os << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    if (cfg.command == "dims") return cli_detail::cmd_dims(cfg, os);
    if (cfg.command == "verify") return cli_detail::cmd_verify(cfg, os);
    if (cfg.command == "center") return cli_detail::cmd_center(cfg, os);
    if (cfg.command == "integral") return cli_detail::cmd_integral(cfg, os);
    if (cfg.command == "coordinv") return cli_detail::cmd_coordinv(cfg, os);
    if (cfg.command == "hc") return cli_detail::cmd_hc(cfg, os);
    if (cfg.command == "blocks") return cli_detail::cmd_blocks(cfg, os);
  } catch (const GuardError& e) {
    os << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    os << "error: " << e.what() << "\n";
    return 1;
  }
  os << "error: unknown command '" << cfg.command << "'\n";
  return 2;
}

}  // namespace glk
