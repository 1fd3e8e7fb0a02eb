#include "sched/payments.hpp"

#include "sched/prng.hpp"

#include <algorithm>

namespace sched {

Rational critical_payment(const Instance& instance, const JobId& job_id,
                          const AcceptanceRule& rule, const Rational& gamma) {
  const JobType& job = instance.job(job_id);
  const long job_class = class_of(job, gamma);
  long floor_class = job_class;
  for (const JobType& j : instance.jobs()) floor_class = std::min(floor_class, class_of(j, gamma));
  --floor_class;

  const bool base_accepted = rule(instance).count(job_id) != 0;

  // Acceptance by class, scanning downward with the class-bottom value as
  // the representative report. The reported class anchors to the actual run.
  std::vector<std::pair<long, bool>> scan;
  scan.emplace_back(job_class, base_accepted);
  for (long l = job_class - 1; l >= floor_class; --l) {
    JobType probe = job;
    probe.value = pow_int(gamma, l) * job.demand;
    bool accepted = rule(instance.with_job_replaced(probe)).count(job_id) != 0;
    scan.emplace_back(l, accepted);
  }

  // Monotone acceptance means a contiguous accepted suffix of classes: any
  // acceptance strictly below a rejection is a witness against the rule.
  for (std::size_t hi = 0; hi < scan.size(); ++hi) {
    if (scan[hi].second) continue;
    for (std::size_t lo = hi + 1; lo < scan.size(); ++lo) {
      if (scan[lo].second)
        throw MonotonicityViolationError(
            MonotonicityWitness{job_id, scan[lo].first, scan[hi].first},
            "monotonicity violation: job '" + job_id + "' accepted at class " +
                std::to_string(scan[lo].first) + " but rejected at class " +
                std::to_string(scan[hi].first));
    }
  }

  if (!base_accepted) return Rational(0);
  long critical_class = job_class;
  for (const auto& [l, accepted] : scan) {
    if (!accepted) break;
    critical_class = l;
  }
  if (critical_class == floor_class) return Rational(0);
  return pow_int(gamma, critical_class) * job.demand;
}

std::vector<ProbeViolation> monotonicity_probe(const Instance& instance,
                                               const AcceptanceRule& rule, int trials,
                                               std::uint64_t seed,
                                               const std::string& coordinates) {
  std::vector<ProbeViolation> violations;
  if (instance.empty() || coordinates.empty()) return violations;

  std::set<JobId> accepted = rule(instance);
  std::vector<JobId> accepted_list(accepted.begin(), accepted.end());
  if (accepted_list.empty()) return violations;

  SplitMix64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const JobId& id = accepted_list[rng.below(accepted_list.size())];
    const JobType& job = instance.job(id);
    char coord = coordinates[rng.below(coordinates.size())];
    Rational u = make_rational(1 + static_cast<long>(rng.below(16)), 16);

    JobType probe = job;
    Rational from, to;
    switch (coord) {
      case 'v':
        from = job.value;
        probe.value = job.value * (1 + u);
        to = probe.value;
        break;
      case 'D':
        from = job.demand;
        probe.demand = job.demand * (1 - u / 2);
        to = probe.demand;
        break;
      case 'a':
        from = job.arrival;
        probe.arrival = job.arrival * (1 - u);
        to = probe.arrival;
        break;
      case 'd':
        from = job.deadline;
        probe.deadline = job.deadline + (job.deadline - job.arrival) * u;
        to = probe.deadline;
        break;
      default:
        throw std::invalid_argument("unknown perturbation coordinate");
    }
    if (!rule(instance.with_job_replaced(probe)).count(id))
      violations.push_back(ProbeViolation{id, coord, from, to});
  }
  return violations;
}

}  // namespace sched
