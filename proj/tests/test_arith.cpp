#include <catch_amalgamated.hpp>

#include "glk/arith.hpp"
#include "glk/checks.hpp"

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

TEST_CASE("binomial coefficients") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(7, 0) == 1);
  CHECK(binom(3, 5) == 0);
  for (Int s = 0; s <= 5; ++s) CHECK(binom(-1, s) == (s % 2 == 0 ? 1 : -1));
  // shifted negative upper index
  CHECK(binom(-2, 2) == 3);
  CHECK(binom(-3, 3) == -10);
  PrimeField F5(5);
  CHECK(binom_mod(-1, 3, F5) == 4);
  CHECK(binom_mod(10, 5, F5) == binom_mod(10 % 25, 5, F5));
}

TEST_CASE("alternating binomial sum identity") {
  expect_checks({1, 1, 2, 1}, {"lemma:abinomialsum"});
}

TEST_CASE("prime field") {
  CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(127), GuardError);
  PrimeField F(7);
  CHECK(F.from_int(-1) == 6);
  CHECK(F.inv(3) == 5);
  CHECK_THROWS_AS(F.inv(0), std::domain_error);
  CHECK(F.pow(3, -1) == 5);
  CHECK(F.sign(2) == 1);
  CHECK(F.sign(3) == 6);
  expect_checks({1, 1, 2, 1}, {"arith:field-axioms", "arith:lucas"});
}

TEST_CASE("prime powers and the desk guard") {
  CHECK(prime_power(2, 6) == 64);
  CHECK(prime_power(5, 3) == 125);
  CHECK_THROWS_AS(prime_power(2, 7), GuardError);
  CHECK_THROWS_AS(prime_power(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(prime_power(2, 0), std::invalid_argument);
}

TEST_CASE("bar reduction") {
  CHECK(bar(Weight{3, -1}, 2) == (Weight{1, 1}));
  CHECK(bar(Weight{0, 0}, 5) == (Weight{0, 0}));
  CHECK(bar(-7, 3) == 2);
  // iterating lambda -> bar(lambda+alpha) q times returns lambda
  for (Int p : {2, 3, 5}) {
    for (auto& lam : weight_box(p, 2)) {
      Weight cur = lam;
      for (Int i = 0; i < p; ++i) cur = bar(cur + Weight{1, -1}, p);
      CHECK(cur == lam);
    }
  }
  expect_checks({1, 1, 2, 1}, {"arith:bar-orbits"});
}

TEST_CASE("orbits of the shift map") {
  CHECK(orbit(0, 2) == std::vector<Weight>{Weight{0, 0}, Weight{1, 1}});
  CHECK(orbit(1, 2) == std::vector<Weight>{Weight{0, 1}, Weight{1, 0}});
  CHECK_THROWS_AS(orbit(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(orbit(-1, 3), std::invalid_argument);
}

TEST_CASE("weights") {
  Weight a{1, 2, 3};
  CHECK(a.sum() == 6);
  CHECK((a + eps(0, 3)) == (Weight{2, 2, 3}));
  CHECK((a - eps(2, 3)) == (Weight{1, 2, 2}));
  CHECK((a * 2) == (Weight{2, 4, 6}));
  CHECK(Weight{0, 1}.dominated_by(Weight{1, 1}));
  CHECK_FALSE(Weight{2, 0}.dominated_by(Weight{1, 1}));
  // lexicographic order drives every deterministic enumeration
  auto box = weight_box(2, 2);
  REQUIRE(box.size() == 4);
  CHECK(box[0] == (Weight{0, 0}));
  CHECK(box[3] == (Weight{1, 1}));
  CHECK(std::is_sorted(box.begin(), box.end()));
}

TEST_CASE("dominance for GL(m|n)") {
  // vacuous at (1|1)
  CHECK(is_dominant(Weight{-3, 7}, 1, 1));
  CHECK(is_dominant(Weight{3, 1, 5}, 2, 1));
  CHECK_FALSE(is_dominant(Weight{1, 3, 5}, 2, 1));
  CHECK(is_dominant(Weight{2, 2, 4, 0}, 2, 2));
  CHECK_FALSE(is_dominant(Weight{2, 2, 0, 4}, 2, 2));
}
