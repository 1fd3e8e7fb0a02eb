#include "sched/outcome.hpp"

namespace sched {

Rational outcome_value(const Instance& instance, const OutcomeSet& outcomes) {
  Rational total = 0;
  for (const auto& [id, o] : outcomes)
    if (o.completed) total += instance.job(id).value;
  return total;
}

std::vector<JobId> broken_commitments(const OutcomeSet& outcomes) {
  std::vector<JobId> broken;
  for (const auto& [id, o] : outcomes)
    if (o.decision == DecisionKind::Committed && !o.completed) broken.push_back(id);
  return broken;
}

}  // namespace sched
