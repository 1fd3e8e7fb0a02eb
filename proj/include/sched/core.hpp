#pragma once

#include "sched/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace sched {

using JobId = std::string;

/// One job request: a value, a resource demand, and an execution window.
/// Jobs are the atoms every mechanism in this library operates on.
struct JobType {
  JobId id;
  Rational value;     // > 0
  Duration demand;    // > 0 time units of processing
  Time arrival;       // >= 0
  Time deadline;      // deadline - arrival >= demand

  /// Value per unit of demand; the priority currency of the greedy rules.
  Rational density() const { return value / demand; }

  /// (deadline - arrival) / demand for this job alone.
  Rational slack() const { return (deadline - arrival) / demand; }
};

/// A validated set of jobs with distinct ids.
///
/// Construction rejects malformed jobs outright: nonpositive value or
/// demand, negative arrival, duplicate ids, and windows too short to ever
/// complete the job (deadline - arrival < demand).
class Instance {
 public:
  Instance() = default;
  explicit Instance(std::vector<JobType> jobs);

  const std::vector<JobType>& jobs() const { return jobs_; }
  bool empty() const { return jobs_.empty(); }
  std::size_t size() const { return jobs_.size(); }

  bool contains(const JobId& id) const { return index_.count(id) != 0; }
  const JobType& job(const JobId& id) const;

  /// Minimum of (deadline - arrival) / demand over all jobs; always >= 1.
  /// Throws std::invalid_argument("no jobs") on an empty instance.
  Rational slackness() const;

  /// Copy with one job's fields replaced (id must already exist).
  Instance with_job_replaced(const JobType& replacement) const;

 private:
  std::vector<JobType> jobs_;
  std::map<JobId, std::size_t> index_;
};

/// Density class index: the unique integer l with gamma^l <= density < gamma^(l+1).
/// Computed by exact integer search on powers of gamma.
long class_of_density(const Rational& density, const Rational& gamma);
long class_of(const JobType& job, const Rational& gamma);

}  // namespace sched
