#include <catch_amalgamated.hpp>

#include "glk/checks.hpp"
#include "glk/invariants.hpp"

using namespace glk;

namespace {
void expect_checks(const GlShape& shape, const std::vector<std::string>& ids) {
  auto results = run_checks(shape, {}, ids);
  REQUIRE(results.size() == ids.size());
  for (auto& r : results) {
    INFO(r.id << ": " << r.detail);
    CHECK(r.status == CheckResult::Status::Pass);
  }
}
}  // namespace

TEST_CASE("adjoint action") {
  AlgebraContext ctx({1, 1, 2, 1});
  DistElem eps = dist_one(ctx);
  for (MonoIdx k = 0; k < ctx.dim(); ++k) {
    DistElem y(ctx);
    y[k] = 1;
    CHECK(ad(ctx, eps, y) == y);
  }
  expect_checks({1, 1, 2, 1}, {"rem:asLieadj", "lemma:integralsareinvariant"});
  expect_checks({1, 1, 3, 1}, {"rem:asLieadj", "lemma:integralsareinvariant"});
}

TEST_CASE("integral spaces") {
  for (GlShape s : {GlShape{1, 1, 2, 1}, GlShape{1, 1, 3, 1}, GlShape{1, 1, 2, 2}}) {
    AlgebraContext ctx(s);
    Subspace right = integral_space(ctx, SubgroupSpec::full(), IntegralSide::Right);
    REQUIRE(right.dim() == 1);
    NamedElements ne = named_elements(ctx);
    CHECK(right.contains(ne.nu_r.values(), ctx.field()));
    CHECK(ne.nu_r.parity() == Parity::Even);
    // two-sided
    Subspace left = integral_space(ctx, SubgroupSpec::full(), IntegralSide::Left);
    REQUIRE(left.dim() == 1);
    CHECK(left.contains(ne.nu_r.values(), ctx.field()));
  }
  // integral generator at (1|1, p=3): proportional to -g_{(1,2)}
  AlgebraContext ctx({1, 1, 3, 1});
  Subspace right = integral_space(ctx, SubgroupSpec::full(), IntegralSide::Right);
  DistElem mg = dist_scale(ctx, g_element(ctx, Weight{1, 2}), ctx.field().neg(1));
  CHECK(right.contains(mg.values(), ctx.field()));
  expect_checks({1, 1, 2, 1}, {"integral:subalgebras"});
  expect_checks({1, 1, 3, 1}, {"integral:subalgebras"});
}

TEST_CASE("unipotent and parabolic integrals") {
  expect_checks({2, 1, 2, 1},
                {"prop:someintegralforunip", "prop:symmversion", "prop:forP", "eq:deltaT-commutes",
                 "tr:whatintegralis", "integral:dim1-two-sided-even"});
  expect_checks({1, 1, 3, 1}, {"prop:someintegralforunip", "prop:symmversion", "prop:forP"});
}

TEST_CASE("center") {
  AlgebraContext ctx2({1, 1, 2, 1});
  CHECK(center_basis(ctx2).dim() == 5);
  AlgebraContext ctx3({1, 1, 3, 1});
  CHECK(center_basis(ctx3).dim() == 10);
  // theorem generators at p=2, t=0: {g_{(0,0)}, g_{(1,1)}, h_{(0,0)} + h_{(1,1)}}
  auto gens = center_theorem_generators(ctx2);
  REQUIRE(gens.size() == 5);
  CHECK(gens[0] == g_element(ctx2, Weight{0, 0}));
  CHECK(gens[1] == g_element(ctx2, Weight{1, 1}));
  CHECK(gens[2] == dist_add(ctx2, h_element(ctx2, Weight{0, 0}), h_element(ctx2, Weight{1, 1})));
  expect_checks({1, 1, 2, 1}, {"tr:center", "lemma:centerviaadjact"});
  expect_checks({1, 1, 3, 1}, {"tr:center", "lemma:centerviaadjact"});
}

TEST_CASE("nu_r is central at (2|1)") {
  expect_checks({2, 1, 2, 1}, {"cor:corko:central"});
}

TEST_CASE("coordinate invariants at GL(1|1)") {
  AlgebraContext ctx({1, 1, 2, 1});
  CoordInvariants ci = coord_invariants_gl11(ctx);
  CHECK(ci.solution.dim() == 5);
  CHECK(ci.spans_match);
  CHECK(ci.d21_matches);
  // the five generators at p=2: 1, x^{(1,1)}, sigma_0, gamma_{(0,1)}, gamma_{(1,0)}
  const PrimeField& F = ctx.field();
  std::vector<CoordElem> named = {x_basis11(ctx, Weight{0, 0}, 0, 0), x_basis11(ctx, Weight{1, 1}, 0, 0),
                                  sigma_element(ctx, 0), gamma_element(ctx, Weight{0, 1}),
                                  gamma_element(ctx, Weight{1, 0})};
  std::vector<std::vector<Scalar>> rows;
  for (auto& g : named) {
    std::vector<Scalar> v(ctx.dim(), 0);
    for (auto& [k, c] : g.terms()) v[k] = c;
    rows.push_back(v);
  }
  CHECK(make_subspace(rows, ctx.dim(), F).same_span(ci.solution, F));
  CHECK(superderive(ctx, sigma_element(ctx, 0), 0, 1).is_zero());
  CHECK_THROWS_AS(coord_invariants_gl11(AlgebraContext({2, 1, 2, 1})), std::invalid_argument);
  expect_checks({1, 1, 3, 1}, {"tr:generatorsinthesimplestcase"});
}

TEST_CASE("nu multiplication") {
  AlgebraContext ctx({1, 1, 3, 1});
  const PrimeField& F = ctx.field();
  NamedElements ne = named_elements(ctx);
  CHECK(nu_multiplication(ctx, ne.nu_r, ctx.one()) == ne.nu_r);
  // nu_r x^pi lands on +-g_{bar(alpha-pi)}
  for (auto& piw : weight_box(3, 2)) {
    Weight tb = bar(Weight{1 - piw[0], -1 - piw[1]}, 3);
    DistElem img = nu_multiplication(ctx, ne.nu_r, x_basis11(ctx, piw, 0, 0));
    DistElem g = g_element(ctx, tb);
    bool plus = img == dist_scale(ctx, g, F.sign(tb.sum()));
    bool minus = img == dist_scale(ctx, g, F.sign(tb.sum() + 1));
    CHECK((plus || minus));
  }
  expect_checks({1, 1, 2, 1}, {"cor:corko"});
  expect_checks({1, 1, 3, 1}, {"cor:corko"});
}

TEST_CASE("subspace utilities") {
  PrimeField F(3);
  Subspace s = make_subspace({{1, 2, 0}, {2, 1, 0}, {0, 0, 1}}, 3, F);
  CHECK(s.dim() == 2);
  CHECK(s.contains({1, 2, 1}, F));
  CHECK_FALSE(s.contains({0, 1, 0}, F));
  Subspace t = make_subspace({{2, 1, 0}, {0, 0, 2}}, 3, F);
  CHECK(s.same_span(t, F));
}
