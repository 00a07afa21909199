// Acceptance suite: one line per criterion, exact arithmetic throughout.
// Exit code is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "glk/checks.hpp"

using namespace glk;

namespace {

struct ShapeChecks {
  GlShape shape;
  std::vector<std::string> ids;
  double budget_seconds = 0;  // 0: no budget for this shape
};

struct Criterion {
  int number;
  std::string title;
  std::vector<ShapeChecks> parts;
};

std::string shape_str(const GlShape& s) {
  return "(" + std::to_string(s.m) + "|" + std::to_string(s.n) + ",p=" + std::to_string(s.p) +
         ",r=" + std::to_string(s.r) + ")";
}

bool run_criterion(const Criterion& c, std::string& detail, double& elapsed) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (const auto& part : c.parts) {
    auto p0 = std::chrono::steady_clock::now();
    auto results = run_checks(part.shape, {}, part.ids);
    double part_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - p0).count();
    for (auto& r : results) {
      if (r.status == CheckResult::Status::Fail) {
        ok = false;
        detail += " [" + shape_str(part.shape) + " " + r.id + ": " + r.detail + "]";
      }
      if (r.status == CheckResult::Status::Skip) {
        ok = false;
        detail += " [" + shape_str(part.shape) + " " + r.id + " unexpectedly skipped: " + r.detail + "]";
      }
    }
    if (part.budget_seconds > 0 && part_s > part.budget_seconds) {
      ok = false;
      detail += " [" + shape_str(part.shape) + " exceeded budget: " + std::to_string(part_s) + "s > " +
                std::to_string(part.budget_seconds) + "s]";
    }
  }
  elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return ok;
}

}  // namespace

int main() {
  const GlShape s211{1, 1, 2, 1}, s311{1, 1, 3, 1}, s511{1, 1, 5, 1}, s212{1, 1, 2, 2};
  const GlShape s2121{2, 1, 2, 1}, s321{1, 1, 3, 2};
  const std::vector<GlShape> all5 = {s211, s311, s511, s212, s2121};

  std::vector<Criterion> criteria;

  {
    Criterion c{1, "dimension counts dim K[G_r] = q^(m^2+n^2) * 2^(2mn)", {}};
    for (auto& s : all5) c.parts.push_back({s, {"lemma:basis:dim"}, 1.0});
    criteria.push_back(c);
  }
  {
    Criterion c{2, "Hopf axiom suite exhaustive on basis elements", {}};
    std::vector<std::string> ids = {"hopf:coassoc", "hopf:counit",          "hopf:antipode",
                                    "hopf:antipode-inverse", "hopf:comul-morphism", "alg:supercommutative"};
    for (auto& s : all5) c.parts.push_back({s, ids, s.m + s.n > 2 ? 60.0 : 0.0});
    criteria.push_back(c);
  }
  {
    Criterion c{3, "integral: dim 1, spanned by nu_r, even, two-sided, central", {}};
    for (auto& s : all5) {
      std::vector<std::string> ids = {"tr:whatintegralis", "integral:dim1-two-sided-even", "cor:corko:central"};
      if (s.m == 1 && s.n == 1) ids.push_back("lemma:newformofintegral");
      c.parts.push_back({s, ids, s.m + s.n > 2 ? 300.0 : 0.0});
    }
    criteria.push_back(c);
  }
  {
    Criterion c{4, "center: dim q^2 + p^(r-1), spanned by the orbit generators", {}};
    for (auto& s : {s211, s212, s311, s511, s321})
      c.parts.push_back({s, {"tr:center"}, s.q() == 9 ? 120.0 : 0.0});
    criteria.push_back(c);
  }
  {
    Criterion c{5, "coordinate invariants solve the invariance equation; nu_r-multiplication bijects onto the center", {}};
    for (auto& s : {s211, s311, s511, s212})
      c.parts.push_back({s, {"tr:generatorsinthesimplestcase", "cor:corko"}, 0.0});
    criteria.push_back(c);
  }
  {
    Criterion c{6, "GL(1|1) pairing and dual-basis identities, exhaustive over X^(r)(T)", {}};
    std::vector<std::string> ids = {"lemma:actionofsuperder", "lemma:pairingwithc-s", "lemma:rightpairing",
                                    "lemma:asimplification",  "lemma:abinomialsum",  "prop:dualbases",
                                    "lemma:condemnedlemma"};
    for (auto& s : {s211, s311, s511}) c.parts.push_back({s, ids, 0.0});
    criteria.push_back(c);
  }
  {
    Criterion c{7, "unipotent and torus relation suite at (2|1,p=2,r=1)", {}};
    c.parts.push_back({s2121,
                       {"lemma:overeven", "lemma:oddovertorus", "prop:someintegralforunip",
                        "prop:symmversion", "prop:forP", "eq:deltaT-commutes"},
                       600.0});
    criteria.push_back(c);
  }
  {
    Criterion c{8, "Harish-Chandra: h multiplicative, I_r generators, dual-basis eigenvalues", {}};
    for (auto& s : {s211, s311})
      c.parts.push_back({s, {"prop:harish-chandra", "tr:harish-chandrapolynomials", "rem:actionofHC"}, 0.0});
    criteria.push_back(c);
  }
  {
    Criterion c{9, "blocks over |lambda_i| <= 2p^2: HC = closed form = B, K closed form, strictness", {}};
    for (auto& s : {s211, s311, s511})
      c.parts.push_back({s, {"lemma:justblocks+hcblocks+pdivides", "wt:crystal"}, 120.0});
    criteria.push_back(c);
  }

  int failures = 0;
  std::vector<bool> passed(criteria.size() + 1, false);
  for (auto& c : criteria) {
    std::string detail;
    double elapsed = 0;
    bool ok = run_criterion(c, detail, elapsed);
    passed[c.number] = ok;
    if (!ok) ++failures;
    std::printf("%s criterion %d: %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str(), elapsed,
                detail.c_str());
    std::fflush(stdout);
  }

  // Criterion 10: morphism-level character statements are exercised through
  // their consequences (two-sidedness and centrality of nu_r in criterion 3)
  // and blocks through the closed forms (criterion 9).
  bool c10 = passed[3] && passed[9];
  std::printf("%s criterion 10: substituted statements covered by consequences (criteria 3 and 9)\n",
              c10 ? "PASS" : "FAIL");
  if (!c10) ++failures;

  return failures;
}
