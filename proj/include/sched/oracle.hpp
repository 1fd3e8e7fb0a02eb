#pragma once

#include "sched/core.hpp"

#include <vector>

namespace sched {

struct OfflineOpt {
  Rational value;
  std::vector<JobId> witness;  // lexicographically least maximizing subset, sorted
};

/// Exponential-time offline optimum for the preemptive-with-migration model:
/// the maximum total value over subsets schedulable per feasible_migratory.
/// Branch-and-bound over jobs in decreasing value order with infeasibility
/// pruning and a feasibility memo. Exact; throws above the size cap.
OfflineOpt offline_opt(const Instance& instance, int servers, std::size_t size_cap = 20);

struct EmpiricalRatio {
  bool infinite = false;  // mechanism value zero against a positive optimum
  Rational value = 1;
};

/// Offline optimal value divided by the mechanism's completed value.
EmpiricalRatio empirical_ratio(const Instance& instance, const Rational& mechanism_value,
                               int servers, std::size_t size_cap = 20);

}  // namespace sched
