#include "sched/core.hpp"

#include <stdexcept>

namespace sched {

Instance::Instance(std::vector<JobType> jobs) : jobs_(std::move(jobs)) {
  for (std::size_t i = 0; i < jobs_.size(); ++i) {
    const JobType& j = jobs_[i];
    if (j.id.empty()) throw std::invalid_argument("job with empty id");
    if (j.value <= 0) throw std::invalid_argument("job '" + j.id + "': value must be positive");
    if (j.demand <= 0) throw std::invalid_argument("job '" + j.id + "': demand must be positive");
    if (j.arrival < 0) throw std::invalid_argument("job '" + j.id + "': arrival must be nonnegative");
    if (j.deadline - j.arrival < j.demand)
      throw std::invalid_argument("job '" + j.id + "': window shorter than demand");
    if (!index_.emplace(j.id, i).second)
      throw std::invalid_argument("duplicate job id '" + j.id + "'");
  }
}

const JobType& Instance::job(const JobId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::invalid_argument("unknown job id '" + id + "'");
  return jobs_[it->second];
}

Rational Instance::slackness() const {
  if (jobs_.empty()) throw std::invalid_argument("no jobs");
  Rational s = jobs_[0].slack();
  for (const JobType& j : jobs_) {
    Rational js = j.slack();
    if (js < s) s = js;
  }
  return s;
}

Instance Instance::with_job_replaced(const JobType& replacement) const {
  std::vector<JobType> copy = jobs_;
  auto it = index_.find(replacement.id);
  if (it == index_.end()) throw std::invalid_argument("unknown job id '" + replacement.id + "'");
  copy[it->second] = replacement;
  return Instance(std::move(copy));
}

long class_of_density(const Rational& density, const Rational& gamma) {
  if (gamma <= 1) throw std::invalid_argument("class base gamma must exceed 1");
  if (density <= 0) throw std::invalid_argument("density must be positive");
  return floor_log(gamma, density);
}

long class_of(const JobType& job, const Rational& gamma) {
  return class_of_density(job.density(), gamma);
}

}  // namespace sched
