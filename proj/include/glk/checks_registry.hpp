#pragma once

// The check registry and runner. Included via checks.hpp.

namespace glk {

namespace detail {

inline const std::vector<Check>& registry() {
  static const std::vector<Check> checks = {
      // arithmetic layer (shape independent)
      {"lemma:abinomialsum", always, chk_abinomialsum},
      {"arith:field-axioms", always, chk_field_axioms},
      {"arith:lucas", always, chk_lucas},
      {"arith:bar-orbits", always, chk_bar_orbits},
      // coordinate Hopf superalgebra
      {"lemma:basis:dim", always, chk_dim},
      {"rem:otherbasis", always, chk_otherbasis},
      {"hopf:coassoc", always, chk_coassoc},
      {"hopf:counit", always, chk_counit},
      {"hopf:antipode", always, chk_antipode_axiom},
      {"hopf:antipode-inverse", always, chk_antipode_inverse},
      {"hopf:comul-morphism", always, chk_comul_morphism},
      {"alg:supercommutative", always, chk_supercommutative},
      // superderivations
      {"lemma:actionofsuperder", need11, chk_actionofsuperder},
      {"superder:leibniz", always, chk_superder_leibniz},
      {"superder:sign-unique",
       [](const GlShape& s) {
         if (s.m != 1 || s.n != 1) return std::string("GL(1|1) statement");
         if (s.p == 2) return std::string("signs invisible at p=2");
         return std::string();
       },
       chk_superder_sign_unique},
      {"eq:conjugation-table", always, chk_conjugation_table},
      {"superder:cweight", always, chk_superder_cweight},
      // x-basis and coproduct displays
      {"x:change-of-basis", need11, chk_xbasis},
      {"formulas:comul-display", need11, chk_comul_display},
      // dual algebra
      {"dual:pairing", always, chk_dual_pairing},
      {"dual:mul", always, chk_dual_mul},
      {"dual:comul-algebra-map", always, chk_dual_comul_algebra_map},
      {"dual:antipode", always, chk_dual_antipode},
      {"dual:divided-power-law", always, chk_divided_power_law},
      {"dual:subalgebra-dims", always, chk_subalgebra_dims},
      {"lemma:overeven", always, chk_overeven},
      {"lemma:oddovertorus", always, chk_oddovertorus},
      {"lemma:basis:pbw", always, chk_pbw},
      // integrals
      {"tr:whatintegralis", always, chk_whatintegralis},
      {"integral:dim1-two-sided-even", always, chk_integral_dim1},
      {"integral:subalgebras", always, chk_integral_subalgebras},
      {"prop:someintegralforunip", always, [](Workspace& w) { return chk_someintegralforunip(w, true); }},
      {"prop:symmversion", always, [](Workspace& w) { return chk_someintegralforunip(w, false); }},
      {"prop:forP", always, chk_forP},
      {"eq:deltaT-commutes", always, chk_deltaT_commutes},
      // GL(1|1) pairing and dual-basis identities
      {"lemma:rightpairing", need11, chk_rightpairing},
      {"lemma:pairingwithc-s", need11, chk_pairingwithcs},
      {"lemma:asimplification", need11, chk_asimplification},
      {"prop:dualbases", need11, chk_dualbases},
      {"lemma:newformofintegral", need11, chk_newformofintegral},
      {"lemma:condemnedlemma", need11, chk_condemnedlemma},
      // adjoint action and center
      {"rem:asLieadj", always, chk_ad_basics},
      {"lemma:integralsareinvariant", need11, chk_integralsareinvariant},
      {"tr:center", need11, chk_center},
      {"lemma:centerviaadjact", need11, chk_center_is_ad_invariants},
      {"cor:corko:central", always, chk_nu_central},
      {"cor:corko", need11, chk_corko},
      {"tr:generatorsinthesimplestcase", need11, chk_coordinv},
      // Harish-Chandra
      {"lemma:adecomposition", always, chk_adecomposition},
      {"prop:harish-chandra", need11, chk_hc_project},
      {"tr:harish-chandrapolynomials", need11, chk_hc_polynomials},
      {"rem:actionofHC", need11, chk_eigenvalues},
      {"hc:closedform-vs-matrix", need11, chk_hc_closedform_vs_matrix},
      // blocks
      {"lemma:justblocks+hcblocks+pdivides", need11, chk_blocks},
      {"wt:crystal", need11, chk_wt},
  };
  return checks;
}

}  // namespace detail

inline std::vector<std::string> check_ids() {
  std::vector<std::string> out;
  for (auto& c : detail::registry()) out.push_back(c.id);
  return out;
}

// Run the named checks (all, when `only` is empty) at one shape.
inline std::vector<CheckResult> run_checks(const GlShape& shape, const CheckOptions& opt = {},
                                           const std::vector<std::string>& only = {}) {
  std::vector<CheckResult> results;
  detail::Workspace ws(shape, opt);
  for (const auto& check : detail::registry()) {
    if (!only.empty() && std::find(only.begin(), only.end(), check.id) == only.end()) continue;
    CheckResult res;
    res.id = check.id;
    std::string skip = check.skip(shape);
    if (!skip.empty()) {
      res.status = CheckResult::Status::Skip;
      res.detail = skip;
      results.push_back(std::move(res));
      continue;
    }
    auto t0 = std::chrono::steady_clock::now();
    try {
      auto failure = check.run(ws);
      if (failure) {
        res.status = CheckResult::Status::Fail;
        res.detail = *failure;
      }
    } catch (const std::exception& e) {
      res.status = CheckResult::Status::Fail;
      res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace glk
