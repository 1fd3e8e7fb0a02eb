#pragma once

#include "sched/core.hpp"

#include <map>
#include <optional>

namespace sched {

enum class DecisionKind { Uncommitted, Committed, Rejected };

/// Per-job decision record produced by a mechanism run.
///
/// Committed mechanisms promise: Committed implies completed. Non-committed
/// mechanisms leave every job Uncommitted and only report completion.
struct JobOutcome {
  DecisionKind decision = DecisionKind::Uncommitted;
  std::optional<Time> decision_time;
  bool completed = false;
  std::optional<Time> notification_time;
  Duration processed = 0;
  std::optional<Rational> payment;
};

using OutcomeSet = std::map<JobId, JobOutcome>;

/// Total value of completed jobs in an outcome set.
Rational outcome_value(const Instance& instance, const OutcomeSet& outcomes);

/// Committed jobs that were not completed. Empty on every valid run of the
/// committed mechanisms in this library.
std::vector<JobId> broken_commitments(const OutcomeSet& outcomes);

}  // namespace sched
