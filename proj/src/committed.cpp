#include "sched/committed.hpp"

#include <algorithm>
#include <stdexcept>

namespace sched {

namespace {

void check_omega(const Rational& omega) {
  if (omega <= 0 || omega >= 1) throw std::invalid_argument("omega must lie in (0,1)");
}

Time completion_time(const ScheduleTrace& trace, const JobId& id) {
  Time latest = 0;
  bool found = false;
  for (const auto& server : trace.per_server)
    for (const Segment& seg : server)
      if (seg.job == id && (!found || seg.end > latest)) {
        latest = seg.end;
        found = true;
      }
  if (!found) throw std::logic_error("no segments for job '" + id + "'");
  return latest;
}

Instance virtual_instance(const Instance& instance, const Rational& omega,
                          const Rational& factor) {
  std::vector<JobType> virtuals;
  virtuals.reserve(instance.size());
  for (const JobType& j : instance.jobs()) {
    VirtualType v = virtualize(j, omega, factor);
    virtuals.push_back(JobType{v.id, v.value, v.virtual_demand, v.arrival, v.virtual_deadline});
  }
  return Instance(std::move(virtuals));
}

}  // namespace

VirtualType virtualize(const JobType& job, const Rational& omega, const Rational& factor) {
  check_omega(omega);
  if (factor < 1) throw std::invalid_argument("virtual demand factor must be at least 1");
  VirtualType v;
  v.id = job.id;
  v.value = job.value;
  v.virtual_demand = factor * job.demand / omega;
  v.arrival = job.arrival;
  v.virtual_deadline = job.deadline - omega * (job.deadline - job.arrival);
  if (v.virtual_demand > v.virtual_deadline - v.arrival)
    throw InfeasibleVirtualDemand("infeasible-virtual-demand: job '" + job.id +
                                  "' cannot complete in its simulation window");
  return v;
}

Rational migration_demand_factor() { return make_rational(11656, 1000); }

namespace {

struct Decisions {
  std::map<JobId, Time> committed;  // commit time
  std::map<JobId, Time> rejected;   // rejection time
};

CommittedResult assemble(const Instance& instance, const Decisions& decisions,
                         const EdfResult& real, const ScheduleTrace& sim_trace) {
  CommittedResult result{real.trace, sim_trace, {}};
  for (const JobType& j : instance.jobs()) {
    JobOutcome o;
    if (auto it = decisions.committed.find(j.id); it != decisions.committed.end()) {
      o.decision = DecisionKind::Committed;
      o.decision_time = it->second;
    } else {
      o.decision = DecisionKind::Rejected;
      o.decision_time = decisions.rejected.at(j.id);
    }
    o.notification_time = o.decision_time;
    if (auto it = real.progress.find(j.id); it != real.progress.end()) {
      o.processed = it->second.processed;
      o.completed = it->second.completed;
    }
    result.outcomes[j.id] = o;
  }
  return result;
}

}  // namespace

CommittedResult run_committed_single(const Instance& instance, const Rational& omega,
                                     const MechanismFactory& inner) {
  check_omega(omega);
  Instance virtuals = virtual_instance(instance, omega, 1);
  auto mechanism = inner();
  RunResult sim = run(virtuals, *mechanism, 1);

  Decisions decisions;
  std::vector<WindowJob> admitted;
  for (const JobType& j : instance.jobs()) {
    const JobType& vj = virtuals.job(j.id);
    if (sim.outcomes.at(j.id).completed) {
      decisions.committed[j.id] = completion_time(sim.trace, j.id);
      admitted.push_back(WindowJob{j.id, vj.deadline, j.deadline, j.demand});
    } else {
      decisions.rejected[j.id] = vj.deadline;
    }
  }
  EdfResult real = edf_single(admitted);
  real.trace.servers = 1;
  return assemble(instance, decisions, real, sim.trace);
}

CommittedResult run_committed_single(const Instance& instance, const Rational& omega,
                                     const ATParams& inner_params) {
  return run_committed_single(instance, omega, [&]() -> std::unique_ptr<Mechanism> {
    return std::make_unique<AtSingleMechanism>(inner_params);
  });
}

namespace {

// The server a job's virtual segments live on; faults on migration.
std::map<JobId, int> virtual_servers(const ScheduleTrace& sim_trace) {
  std::map<JobId, int> assignment;
  for (int s = 0; s < sim_trace.servers; ++s)
    for (const Segment& seg : sim_trace.per_server[static_cast<std::size_t>(s)]) {
      auto [it, inserted] = assignment.emplace(seg.job, s);
      if (!inserted && it->second != s)
        throw EngineContractFault("non-migratory reduction given a migrating inner mechanism: job '" +
                                  seg.job + "'");
    }
  return assignment;
}

}  // namespace

CommittedResult run_committed_nonmigratory(const Instance& instance, const Rational& omega,
                                           int servers, const MechanismFactory& inner) {
  check_omega(omega);
  if (servers < 1) throw std::invalid_argument("server count must be at least 1");
  Instance virtuals = virtual_instance(instance, omega, 1);
  auto mechanism = inner();
  RunResult sim = run(virtuals, *mechanism, servers);
  std::map<JobId, int> placement = virtual_servers(sim.trace);

  Decisions decisions;
  std::vector<std::vector<WindowJob>> admitted(static_cast<std::size_t>(servers));
  for (const JobType& j : instance.jobs()) {
    const JobType& vj = virtuals.job(j.id);
    if (sim.outcomes.at(j.id).completed) {
      decisions.committed[j.id] = completion_time(sim.trace, j.id);
      int s = placement.at(j.id);
      admitted[static_cast<std::size_t>(s)].push_back(
          WindowJob{j.id, vj.deadline, j.deadline, j.demand});
    } else {
      decisions.rejected[j.id] = vj.deadline;
    }
  }

  EdfResult merged{ScheduleTrace(servers), {}, {}};
  for (int s = 0; s < servers; ++s) {
    EdfResult one = edf_single(admitted[static_cast<std::size_t>(s)]);
    merged.trace.per_server[static_cast<std::size_t>(s)] = one.trace.per_server[0];
    for (auto& [id, p] : one.progress) merged.progress[id] = p;
  }
  return assemble(instance, decisions, merged, sim.trace);
}

CommittedResult run_committed_nonmigratory(const Instance& instance, const Rational& omega,
                                           int servers, const ATParams& inner_params) {
  return run_committed_nonmigratory(instance, omega, servers,
                                    [&]() -> std::unique_ptr<Mechanism> {
                                      return std::make_unique<AtMultiMechanism>(inner_params,
                                                                                false);
                                    });
}

CommittedResult run_committed_migratory(const Instance& instance, const Rational& omega,
                                        int servers, const MechanismFactory& inner) {
  check_omega(omega);
  if (servers < 1) throw std::invalid_argument("server count must be at least 1");
  Instance virtuals = virtual_instance(instance, omega, migration_demand_factor());
  auto mechanism = inner();
  RunResult sim = run(virtuals, *mechanism, servers);

  Decisions decisions;
  std::vector<WindowJob> admitted;
  for (const JobType& j : instance.jobs()) {
    const JobType& vj = virtuals.job(j.id);
    if (sim.outcomes.at(j.id).completed) {
      decisions.committed[j.id] = completion_time(sim.trace, j.id);
      admitted.push_back(WindowJob{j.id, vj.deadline, j.deadline, j.demand});
    } else {
      decisions.rejected[j.id] = vj.deadline;
    }
  }
  EdfResult real = edf_global(admitted, servers);
  return assemble(instance, decisions, real, sim.trace);
}

CommittedResult run_committed_migratory(const Instance& instance, const Rational& omega,
                                        int servers, const ATParams& inner_params) {
  return run_committed_migratory(instance, omega, servers, [&]() -> std::unique_ptr<Mechanism> {
    return std::make_unique<AtMultiMechanism>(inner_params, true);
  });
}

long interval_scale(const JobType& job, const Rational& sigma) {
  if (sigma <= 1) throw std::invalid_argument("sigma must exceed 1");
  Rational target = 2 * sigma * job.demand;
  long k = floor_log(Rational(2), target);
  if (pow2(k) < target) ++k;
  return k;
}

AlignedIntervalSet aligned_intervals(const JobType& job, const Rational& sigma) {
  AlignedIntervalSet result;
  result.scale = interval_scale(job, sigma);

  // Collect every aligned interval level by level, then keep the maximal
  // ones. Dyadic intervals of different levels either nest or are disjoint,
  // so containment reduces to an ancestor lookup.
  std::vector<std::vector<Integer>> level_starts;  // t indices per level
  std::vector<long> levels;
  for (long k = result.scale;; ++k) {
    Rational len = pow2(k);
    if (2 * len > job.deadline - job.arrival) break;
    Integer t_lo = ceil_to_int(job.arrival / len);
    if (t_lo < 0) t_lo = 0;
    Integer t_hi = floor_to_int(job.deadline / len) - 2;
    std::vector<Integer> starts;
    for (Integer t = t_lo; t <= t_hi; ++t) starts.push_back(t);
    levels.push_back(k);
    level_starts.push_back(std::move(starts));
  }

  std::vector<std::pair<Time, Time>> kept;
  for (std::size_t li = 0; li < levels.size(); ++li) {
    Rational len = pow2(levels[li]);
    for (const Integer& t : level_starts[li]) {
      bool contained = false;
      for (std::size_t lj = li + 1; lj < levels.size() && !contained; ++lj) {
        // Ancestor index of [t*2^k, (t+1)*2^k] at the coarser level.
        Integer shifted;
        mpz_fdiv_q_2exp(shifted.get_mpz_t(), t.get_mpz_t(),
                        static_cast<unsigned long>(levels[lj] - levels[li]));
        const auto& coarse = level_starts[lj];
        contained = std::binary_search(coarse.begin(), coarse.end(), shifted);
      }
      if (!contained) kept.emplace_back(Rational(t) * len, Rational(t + 1) * len);
    }
  }
  std::sort(kept.begin(), kept.end());
  result.intervals = std::move(kept);
  return result;
}

namespace {

// Forwards phantom events to the inner mechanism, swallowing arrivals of
// phantoms whose owner is already committed; the first completed phantom of
// each owner records the commitment.
class PhantomFilter : public Mechanism {
 public:
  struct Commit {
    Time when;
    Time interval_end;
  };

  PhantomFilter(std::unique_ptr<Mechanism> inner, std::map<JobId, JobId> owner_of,
                std::map<JobId, Time> interval_end_of)
      : inner_(std::move(inner)),
        owner_of_(std::move(owner_of)),
        interval_end_of_(std::move(interval_end_of)) {}

  void on_arrival(const JobType& job, EngineView& view) override {
    if (commits_.count(owner_of_.at(job.id))) return;  // removed phantom
    inner_->on_arrival(job, view);
  }

  void on_completion(const JobType& job, int server, EngineView& view) override {
    const JobId& owner = owner_of_.at(job.id);
    commits_.emplace(owner, Commit{view.now(), interval_end_of_.at(job.id)});
    inner_->on_completion(job, server, view);
  }

  void on_expiry(const JobType& job, int server, EngineView& view) override {
    inner_->on_expiry(job, server, view);
  }

  const std::map<JobId, Commit>& commits() const { return commits_; }

 private:
  std::unique_ptr<Mechanism> inner_;
  std::map<JobId, JobId> owner_of_;
  std::map<JobId, Time> interval_end_of_;
  std::map<JobId, Commit> commits_;
};

}  // namespace

CommittedResult run_phantom_truthful(const Instance& instance, const Rational& sigma,
                                     int servers, bool enforce_slack_domain) {
  if (sigma <= 1) throw std::invalid_argument("sigma must exceed 1");
  if (servers < 1) throw std::invalid_argument("server count must be at least 1");
  const bool multi = servers > 1;
  const Rational inflation = multi ? migration_demand_factor() : Rational(1);
  const Rational slack_floor = 12 * inflation * sigma;
  if (enforce_slack_domain && !instance.empty() && instance.slackness() < slack_floor)
    throw std::invalid_argument("phantom mechanism requires slackness at least " +
                                to_string(slack_floor));

  const Rational interval_sigma = inflation * sigma;
  const Rational demand_factor = 2 * inflation;

  std::vector<JobType> phantoms;
  std::map<JobId, JobId> owner_of;
  std::map<JobId, Time> interval_end_of;
  std::map<JobId, Time> last_interval_end;
  for (const JobType& j : instance.jobs()) {
    AlignedIntervalSet set = aligned_intervals(j, interval_sigma);
    for (std::size_t i = 0; i < set.intervals.size(); ++i) {
      const auto& [lo, hi] = set.intervals[i];
      JobId pid = j.id + "#" + std::to_string(i);
      phantoms.push_back(JobType{pid, j.value, demand_factor * j.demand, lo, hi});
      owner_of[pid] = j.id;
      interval_end_of[pid] = hi;
      last_interval_end[j.id] = hi;
    }
  }

  Instance phantom_instance{std::move(phantoms)};
  ATParams inner_params = recommended_params(sigma);
  auto inner = [&]() -> std::unique_ptr<Mechanism> {
    if (multi) return std::make_unique<AtMultiMechanism>(inner_params, true);
    return std::make_unique<AtSingleMechanism>(inner_params);
  }();
  PhantomFilter filter(std::move(inner), owner_of, interval_end_of);
  RunResult sim = run(phantom_instance, filter, servers);

  Decisions decisions;
  std::vector<WindowJob> admitted;
  for (const JobType& j : instance.jobs()) {
    if (auto it = filter.commits().find(j.id); it != filter.commits().end()) {
      decisions.committed[j.id] = it->second.when;
      admitted.push_back(WindowJob{j.id, it->second.interval_end, j.deadline, j.demand});
    } else if (auto last = last_interval_end.find(j.id); last != last_interval_end.end()) {
      decisions.rejected[j.id] = last->second;
    } else {
      // No simulation window at all: the report itself broke the slackness
      // guarantee; reject on arrival.
      decisions.rejected[j.id] = j.arrival;
    }
  }

  EdfResult real = multi ? edf_global(admitted, servers) : edf_single(admitted);
  if (!multi) real.trace.servers = 1;
  CommittedResult result = assemble(instance, decisions, real, sim.trace);
  if (result.trace.servers != servers) {
    result.trace.servers = servers;
    result.trace.per_server.resize(static_cast<std::size_t>(servers));
  }
  return result;
}

ResponsivenessReport responsiveness_report(const OutcomeSet& outcomes,
                                           const Instance& instance) {
  ResponsivenessReport report;
  bool first = true;
  for (const auto& [id, outcome] : outcomes) {
    if (outcome.decision == DecisionKind::Uncommitted || !outcome.decision_time)
      throw std::invalid_argument("undecided job '" + id + "' in responsiveness report");
    const JobType& j = instance.job(id);
    ResponsivenessEntry entry;
    entry.lead_additive = (j.deadline - *outcome.decision_time) / j.demand;
    entry.lead_multiplicative = (j.deadline - *outcome.decision_time) / (j.deadline - j.arrival);
    if (first || entry.lead_additive < report.min_additive)
      report.min_additive = entry.lead_additive;
    if (first || entry.lead_multiplicative < report.min_multiplicative)
      report.min_multiplicative = entry.lead_multiplicative;
    first = false;
    report.per_job[id] = entry;
  }
  return report;
}

}  // namespace sched
