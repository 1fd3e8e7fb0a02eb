#pragma once

#include "sched/core.hpp"

#include <functional>
#include <optional>
#include <set>
#include <vector>

namespace sched {

/// A mechanism reduced to its acceptance behaviour: the set of jobs it
/// completes (non-committed mechanisms) or commits to (committed ones).
/// Payments and the monotonicity fuzzer re-run mechanisms through this.
using AcceptanceRule = std::function<std::set<JobId>(const Instance&)>;

struct MonotonicityWitness {
  JobId job;
  long accepted_class;
  long rejected_class;  // accepted_class < rejected_class <= reported class
};

/// Thrown by critical_payment when the acceptance scan finds a lower class
/// accepted above a rejected one: the allocation rule is not monotone and
/// no truthful payment exists.
class MonotonicityViolationError : public std::runtime_error {
 public:
  MonotonicityViolationError(MonotonicityWitness witness, const std::string& what)
      : std::runtime_error(what), witness(witness) {}
  MonotonicityWitness witness;
};

/// Critical-value payment at class granularity: gamma^l* times the demand,
/// where l* is the lowest class at which re-simulation still accepts the
/// job. Scans classes from the job's reported class down to one below the
/// lowest class present in the instance; acceptance there, or rejection at
/// the report, yields payment zero.
Rational critical_payment(const Instance& instance, const JobId& job_id,
                          const AcceptanceRule& rule, const Rational& gamma);

struct ProbeViolation {
  JobId job;
  char coordinate;  // 'v', 'D', 'a', 'd'
  Rational from;
  Rational to;
};

/// Random dominating-perturbation trials: pick an accepted job, strengthen
/// one coordinate (raise value, lower demand, earlier arrival, later
/// deadline), and report every case that loses acceptance. Deterministic
/// given the seed. `coordinates` restricts which fields are perturbed.
std::vector<ProbeViolation> monotonicity_probe(const Instance& instance,
                                               const AcceptanceRule& rule, int trials,
                                               std::uint64_t seed,
                                               const std::string& coordinates = "vDad");

}  // namespace sched
