#include "doctest.h"
#include "helpers.hpp"

#include "sched/bounds.hpp"

using namespace sched;
using namespace sched::testing;

TEST_CASE("the single-server bound at gamma 2, mu 4, s 8 is exactly 9") {
  BoundParams params;
  params.at = ATParams(Q("2"), Q("4"));
  CHECK(bound_formula(BoundFamily::AtSingle, Q("8"), params) == 9);
  // Recommended parameters at s = 8 are the same pair.
  BoundParams automatic;
  CHECK(bound_formula(BoundFamily::AtSingle, Q("8"), automatic) == 9);
}

TEST_CASE("hand-checked plug-ins") {
  BoundParams params;
  params.at = ATParams(Q("2"), Q("4"));
  // Multi form: (1 + gamma*s/(s-mu)) * (1 + gamma/((gamma-1)(mu-1)-1)).
  CHECK(bound_formula(BoundFamily::AtMulti, Q("8"), params) == 10);
  // s = 12: 1 + 2*(12/8)*(1 + 1) = 7 and (1+3)*2 = 8.
  CHECK(bound_formula(BoundFamily::AtSingle, Q("12"), params) == 7);
  CHECK(bound_formula(BoundFamily::AtMulti, Q("12"), params) == 8);
}

TEST_CASE("the committed composition divides by omega(1-omega)") {
  BoundParams params;
  params.omega = Q("1/2");
  params.at = ATParams(Q("2"), Q("4"));
  // Inner slackness 32 * 1/4 = 8 gives the inner bound 9; the reduction
  // multiplies by 4.
  CHECK(bound_formula(BoundFamily::CommittedSingle, Q("32"), params) == 36);
  // Only the beta term carries the blowup in the refined form:
  // 1 + 4 * (9 - 1) = 33.
  CHECK(bound_formula(BoundFamily::CommittedSingleBeta, Q("32"), params) == 33);
}

TEST_CASE("the refined constants approach their headline values") {
  // The beta-refined committed single bound tends to 5, the truthful
  // committed single bound to 9.
  BoundParams params;
  Rational committed = bound_formula(BoundFamily::CommittedSingleBeta, Q("4000000"), params);
  CHECK(committed > 5);
  CHECK(committed < Q("11/2"));
  params.sigma = Q("1000000");
  Rational atc = bound_formula(BoundFamily::AtcSingleBeta, 12 * params.sigma, params);
  CHECK(atc > 9);
  CHECK(atc < Q("19/2"));
}

TEST_CASE("headline constants") {
  FamilyConstants single = atc_constants(false);
  CHECK(single.c0 == 9);
  CHECK(single.s0 == 12);
  FamilyConstants multi = atc_constants(true);
  CHECK(multi.c0 == Q("94248/1000"));
  CHECK(multi.s0 == Q("139872/1000"));
}

TEST_CASE("domain errors") {
  BoundParams params;
  params.at = ATParams(Q("2"), Q("4"));
  CHECK_THROWS_AS(bound_formula(BoundFamily::AtSingle, Q("4"), params), OutOfDomain);
  CHECK_THROWS_AS(bound_formula(BoundFamily::AtSingle, Q("1"), BoundParams{}), OutOfDomain);
  BoundParams sigma_low;
  sigma_low.sigma = Q("2");
  CHECK_THROWS_AS(bound_formula(BoundFamily::AtcSingle, Q("23"), sigma_low), OutOfDomain);
  CHECK_THROWS_AS(bound_formula(BoundFamily::CommittedMigratory, Q("40"), BoundParams{}),
                  OutOfDomain);
  // mu = 1 parameters never satisfy the bound domain.
  BoundParams degenerate;
  degenerate.at = ATParams(Q("2"), Q("1"));
  CHECK_THROWS_AS(bound_formula(BoundFamily::AtSingle, Q("8"), degenerate), OutOfDomain);
}

TEST_CASE("bounds with recommended parameters fall as slackness grows") {
  std::vector<Rational> grid{Q("6"), Q("8"), Q("12"), Q("27"), Q("64"), Q("125"), Q("1000")};
  std::optional<Rational> previous;
  for (const Rational& s : grid) {
    Rational bound = bound_formula(BoundFamily::AtSingle, s, BoundParams{});
    if (previous) CHECK(bound <= *previous);
    previous = bound;
  }
  previous.reset();
  for (const Rational& s : grid) {
    Rational bound = bound_formula(BoundFamily::CommittedSingleBeta, 5 * s, BoundParams{});
    if (previous) CHECK(bound <= *previous);
    previous = bound;
  }
}

TEST_CASE("family names round-trip") {
  for (BoundFamily family :
       {BoundFamily::AtSingle, BoundFamily::AtMulti, BoundFamily::CommittedSingle,
        BoundFamily::CommittedSingleBeta, BoundFamily::CommittedMigratory,
        BoundFamily::AtcSingle, BoundFamily::AtcSingleBeta, BoundFamily::AtcMulti}) {
    auto parsed = bound_family_from_name(bound_family_name(family));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == family);
  }
  CHECK_FALSE(bound_family_from_name("nonsense").has_value());
}
