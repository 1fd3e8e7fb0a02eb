#include "doctest.h"
#include "helpers.hpp"

#include "sched/dualfit.hpp"
#include "sched/oracle.hpp"
#include "sched/prng.hpp"

using namespace sched;
using namespace sched::testing;

namespace {

// Feasible by construction: alpha covers a random subset at full density,
// one shared beta step covers everyone else's window at their density.
DualSolution random_feasible_dual(const Instance& instance, int servers, SplitMix64& rng) {
  DualSolution dual;
  std::vector<std::pair<Time, Rational>> events;
  std::vector<const JobType*> uncovered;
  for (const JobType& j : instance.jobs()) {
    if (rng.below(2) == 0)
      dual.alpha[j.id] = j.density() + Rational(static_cast<long>(rng.below(3)));
    else
      uncovered.push_back(&j);
  }
  // Envelope of the uncovered densities as a step function.
  std::vector<Time> points;
  for (const JobType* j : uncovered) {
    points.push_back(j->arrival);
    points.push_back(j->deadline);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<std::pair<Time, Rational>> steps;
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    Rational peak = 0;
    for (const JobType* j : uncovered)
      if (j->arrival <= points[k] && points[k + 1] <= j->deadline)
        peak = std::max(peak, j->density());
    steps.emplace_back(points[k], peak);
  }
  if (!points.empty()) steps.emplace_back(points.back(), Rational(0));
  // Collapse repeated values so breakpoints stay strictly increasing.
  std::vector<std::pair<Time, Rational>> packed;
  for (const auto& step : steps)
    if (packed.empty() || packed.back().second != step.second) packed.push_back(step);
  StepFunction beta = packed.empty() ? StepFunction() : StepFunction(packed);
  for (int s = 0; s < servers; ++s) dual.beta.push_back(beta);
  return dual;
}

}  // namespace

TEST_CASE("step functions") {
  StepFunction fn({{Q("1"), Q("3")}, {Q("4"), Q("1")}, {Q("6"), Q("0")}});
  CHECK(fn.value_at(Q("0")) == 0);
  CHECK(fn.value_at(Q("1")) == 3);
  CHECK(fn.value_at(Q("5")) == 1);
  CHECK(fn.value_at(Q("6")) == 0);
  CHECK(fn.integral() == 3 * 3 + 2 * 1);
  CHECK(fn.min_on(Q("1"), Q("4")).first == 3);      // half-open: the drop at 4 is excluded
  CHECK(fn.min_on(Q("1"), Q("9/2")).first == 1);
  CHECK(fn.min_on(Q("1"), Q("7")).first == 0);      // runs past the support
  CHECK(fn.min_on(Q("2"), Q("3")).first == 3);
  CHECK(fn.min_on(Q("0"), Q("1")).first == 0);   // zero before the first breakpoint
  CHECK_THROWS_AS(StepFunction({{Q("0"), Q("1")}}), std::invalid_argument);  // no trailing zero
  CHECK_THROWS_AS(StepFunction({{Q("1"), Q("1")}, {Q("1"), Q("0")}}), std::invalid_argument);
}

TEST_CASE("dual cost") {
  Instance instance({job("a", "3", "1", "0", "5"), job("b", "8", "2", "0", "5")});
  SUBCASE("alpha at density, beta zero: cost is the total value") {
    DualSolution dual;
    dual.alpha["a"] = Q("3");
    dual.alpha["b"] = Q("4");
    CHECK(dual_cost(instance, dual) == 11);
  }
  SUBCASE("flat beta of one over [0,5]: cost 5") {
    DualSolution dual;
    dual.beta.push_back(step_on(Q("0"), Q("5"), Q("1")));
    CHECK(dual_cost(instance, dual) == 5);
  }
  SUBCASE("mixed case adds up") {
    DualSolution dual;
    dual.alpha["a"] = Q("3");
    dual.beta.push_back(step_on(Q("0"), Q("5"), Q("1")));
    CHECK(dual_cost(instance, dual) == 8);
  }
}

TEST_CASE("feasibility checking") {
  Instance instance({job("a", "3", "1", "0", "5"), job("b", "8", "2", "1", "6")});
  SUBCASE("alpha at densities is feasible") {
    DualSolution dual;
    dual.alpha["a"] = Q("3");
    dual.alpha["b"] = Q("4");
    CHECK_FALSE(check_feasible(instance, dual, 1).has_value());
  }
  SUBCASE("a horizon-wide beta at the peak density is feasible") {
    DualSolution dual;
    dual.beta.push_back(step_on(Q("0"), Q("6"), Q("4")));
    CHECK_FALSE(check_feasible(instance, dual, 1).has_value());
  }
  SUBCASE("the zero dual is violated at the first job's arrival") {
    DualSolution dual;
    auto violation = check_feasible(instance, dual, 1);
    REQUIRE(violation.has_value());
    CHECK(violation->job == "a");
    CHECK(violation->at == instance.job("a").arrival);
  }
  SUBCASE("every server must be covered") {
    DualSolution dual;
    dual.beta.push_back(step_on(Q("0"), Q("6"), Q("4")));  // server 0 only
    CHECK(check_feasible(instance, dual, 2).has_value());
  }
}

TEST_CASE("resize") {
  Instance instance({job("a", "1", "1", "0", "2")});
  DualSolution dual;
  dual.alpha["a"] = Q("1");
  dual.beta.push_back(step_on(Q("0"), Q("1"), Q("1")));

  SUBCASE("factor one is the identity") {
    DualSolution same = resize(dual, Q("1"));
    CHECK(dual_cost(instance, same) == dual_cost(instance, dual));
  }
  SUBCASE("the worked example: cost 1 + 1/2 at factor 2") {
    DualSolution halved = resize(dual, Q("2"));
    // Demands double, so the alpha part keeps its cost and beta halves.
    Instance resized({job("a", "1", "2", "0", "2")});
    CHECK(dual_cost(resized, halved) == Q("3/2"));
  }
  SUBCASE("nonpositive factors are rejected") {
    CHECK_THROWS_AS(resize(dual, Q("0")), std::invalid_argument);
    CHECK_THROWS_AS(resize(dual, Q("-2")), std::invalid_argument);
  }
  SUBCASE("feasibility carries to the resized instance, cost identity exact") {
    SplitMix64 rng(31);
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      // Slack at least 12 so even the 11.656 factor leaves valid windows.
      Instance base = grid_instance(seed, 5, 12, 4);
      DualSolution feasible = random_feasible_dual(base, 1, rng);
      REQUIRE_FALSE(check_feasible(base, feasible, 1).has_value());
      for (const char* f : {"1/2", "2", "11656/1000"}) {
        Rational factor = Q(f);
        std::vector<JobType> scaled;
        for (const JobType& j : base.jobs()) {
          JobType k = j;
          k.demand = j.demand * factor;
          scaled.push_back(k);
        }
        Instance resized_instance(scaled);
        DualSolution resized_dual = resize(feasible, factor);
        // Feasible for the demand-rescaled jobs (densities shrink by f).
        CHECK_FALSE(check_feasible(resized_instance, resized_dual, 1).has_value());
        Rational beta_total = 0;
        for (const auto& fn : feasible.beta) beta_total += fn.integral();
        Rational alpha_total = 0;
        for (const auto& [id, a] : feasible.alpha) alpha_total += base.job(id).demand * a;
        CHECK(dual_cost(resized_instance, resized_dual) == alpha_total + beta_total / factor);
      }
    }
  }
}

TEST_CASE("weak duality: every feasible dual costs at least the offline optimum") {
  SplitMix64 rng(77);
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    Instance instance = grid_instance(seed, 6);
    for (int servers : {1, 2}) {
      DualSolution dual = random_feasible_dual(instance, servers, rng);
      REQUIRE_FALSE(check_feasible(instance, dual, servers).has_value());
      CHECK(dual_cost(instance, dual) >= offline_opt(instance, servers).value);
    }
  }
}

TEST_CASE("certify_ratio") {
  Instance instance({job("a", "3", "1", "0", "5"), job("b", "8", "2", "0", "5")});
  SUBCASE("full coverage of a fully-completed run certifies 1") {
    DualSolution dual;
    dual.alpha["a"] = Q("3");
    dual.alpha["b"] = Q("4");
    auto result = certify_ratio(instance, dual, Q("11"), 1);
    CHECK(std::get<CertifiedRatio>(result).ratio == 1);
  }
  SUBCASE("an infeasible dual is rejected with its witness") {
    DualSolution dual;
    auto result = certify_ratio(instance, dual, Q("11"), 1);
    CHECK(std::holds_alternative<DualViolation>(result));
  }
  SUBCASE("certified ratios dominate the true optimum ratio") {
    SplitMix64 rng(13);
    for (std::uint64_t seed = 200; seed < 220; ++seed) {
      Instance random_instance = grid_instance(seed, 5);
      DualSolution dual = random_feasible_dual(random_instance, 1, rng);
      Rational mech_value = 1;  // any positive stand-in
      auto result = certify_ratio(random_instance, dual, mech_value, 1);
      REQUIRE(std::holds_alternative<CertifiedRatio>(result));
      CHECK(std::get<CertifiedRatio>(result).ratio >=
            offline_opt(random_instance, 1).value / mech_value);
    }
  }
}

TEST_CASE("stretched-deadline duals are accepted with the stretched cost") {
  // A dual built for deadlines d' = d + f(d-a): the per-window beta covers
  // the longer window, costing (1+f) times the original beta integral.
  Instance base({job("a", "6", "2", "1", "5")});
  Rational f = Q("1/2");
  Instance stretched({job("a", "6", "2", "1", "7")});  // 5 + (1/2)*4

  DualSolution original;
  original.beta.push_back(step_on(Q("1"), Q("5"), Q("3")));
  REQUIRE_FALSE(check_feasible(base, original, 1).has_value());

  DualSolution stretched_dual;
  stretched_dual.beta.push_back(step_on(Q("1"), Q("7"), Q("3")));
  auto result = certify_ratio(stretched, stretched_dual, Q("6"), 1);
  REQUIRE(std::holds_alternative<CertifiedRatio>(result));
  Rational original_beta = original.beta[0].integral();
  CHECK(dual_cost(stretched, stretched_dual) == (1 + f) * original_beta);
}
