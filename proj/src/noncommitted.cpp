#include "sched/noncommitted.hpp"

#include <set>
#include <stdexcept>

namespace sched {

ATParams::ATParams(Rational gamma_base, Rational latest_start_factor)
    : gamma(std::move(gamma_base)), mu(std::move(latest_start_factor)) {
  if (gamma <= 1) throw std::invalid_argument("gamma must exceed 1");
  if (mu < 1) throw std::invalid_argument("mu must be at least 1");
}

bool ATParams::bound_domain_holds(const Rational& s) const {
  return mu > 1 && mu < s && (gamma - 1) * (mu - 1) > 1;
}

ATParams recommended_params(const Rational& s) {
  if (s <= 1) throw std::invalid_argument("recommended_params requires slackness above 1");
  // mu = floor(s^(2/3) * K) / K from below, so mu < s holds automatically
  // (s^(2/3) < s for s > 1). K large enough that mu lands strictly above 1.
  const long precision = 1000000;
  Integer k(precision);
  Integer scaled = s.get_num() * s.get_num() * s.get_den() * k * k * k;
  Rational mu(icbrt_floor(scaled), s.get_den() * k);
  mu.canonicalize();
  if (mu <= 1) mu = (1 + s) / 2;

  // gamma = r/(r-1) with r a rational approximation of sqrt(mu) from below;
  // r <= sqrt(mu) < mu gives (gamma-1)(mu-1) = (mu-1)/(r-1) > 1 exactly.
  Integer sq = mu.get_num() * mu.get_den() * k * k;
  Rational r(isqrt_floor(sq), mu.get_den() * k);
  r.canonicalize();
  if (r <= 1) throw std::invalid_argument("slackness too close to 1 for recommended parameters");
  Rational gamma = r / (r - 1);
  ATParams params(gamma, mu);
  if (!params.bound_domain_holds(s))
    throw std::invalid_argument("recommended parameters fell outside the bound domain");
  return params;
}

bool running_anywhere(const EngineView& view, const JobId& id) {
  for (int s = 0; s < view.servers(); ++s)
    if (view.running(s) == id) return true;
  return false;
}

bool pending_partial(const EngineView& view, const JobId& id, std::optional<int> server) {
  if (!view.arrived(id) || view.completed(id) || view.expired(id)) return false;
  if (view.processed(id) <= 0) return false;
  if (view.now() >= view.job(id).deadline) return false;
  if (running_anywhere(view, id)) return false;
  if (server && !view.ran_on(id, *server)) return false;
  return true;
}

bool pending_eligible(const EngineView& view, const JobId& id, const Rational& mu,
                      std::optional<int> server, bool allow_migration) {
  if (!view.arrived(id) || view.completed(id) || view.expired(id)) return false;
  if (running_anywhere(view, id)) return false;
  const JobType& j = view.job(id);
  if (view.now() < j.arrival || view.now() > j.deadline - mu * j.demand) return false;
  if (server) {
    if (view.ran_on(id, *server)) return false;
    if (!allow_migration && view.processed(id) > 0) return false;
  } else if (view.processed(id) > 0) {
    return false;
  }
  return true;
}

namespace {

// Candidate order everywhere: densest first, earlier global start first
// (never-started jobs sort last within equal density), then id.
struct Candidate {
  JobId id;
  Rational density;
  std::optional<Time> start;
};

bool better_candidate(const Candidate& a, const Candidate& b) {
  if (a.density != b.density) return a.density > b.density;
  if (a.start.has_value() != b.start.has_value()) return a.start.has_value();
  if (a.start && b.start && *a.start != *b.start) return *a.start < *b.start;
  return a.id < b.id;
}

template <typename Pred>
std::optional<JobId> best_job(const EngineView& view, const std::set<JobId>& universe,
                              Pred&& pred) {
  std::optional<Candidate> best;
  for (const JobId& id : universe) {
    if (!pred(id)) continue;
    Candidate c{id, view.job(id).density(), view.start_time(id)};
    if (!best || better_candidate(c, *best)) best = c;
  }
  if (!best) return std::nullopt;
  return best->id;
}

}  // namespace

void AtSingleMechanism::on_arrival(const JobType& job, EngineView& view) {
  known_.insert(job.id);
  preemption_rule(view);
}

void AtSingleMechanism::on_completion(const JobType&, int, EngineView& view) {
  resume_best(view);
  preemption_rule(view);
}

void AtSingleMechanism::on_expiry(const JobType&, int, EngineView& view) {
  resume_best(view);
  preemption_rule(view);
}

void AtSingleMechanism::resume_best(EngineView& view) {
  auto next =
      best_job(view, known_, [&](const JobId& id) { return pending_partial(view, id, {}); });
  if (next) view.assign(0, *next);
}

void AtSingleMechanism::preemption_rule(EngineView& view) {
  auto candidate = best_job(view, known_, [&](const JobId& id) {
    return pending_eligible(view, id, params_.mu, {}, true);
  });
  if (!candidate) return;
  const auto& running = view.running(0);
  if (!running || class_of(view.job(*candidate), params_.gamma) >
                      class_of(view.job(*running), params_.gamma))
    view.assign(0, *candidate);
}

void AtMultiMechanism::on_arrival(const JobType& job, EngineView& view) {
  known_.insert(job.id);
  preemption_rule(lowest_class_server(view), view);
}

void AtMultiMechanism::on_completion(const JobType&, int server, EngineView& view) {
  resume_best(server, view);
  preemption_rule(server, view);
}

void AtMultiMechanism::on_expiry(const JobType&, int server, EngineView& view) {
  resume_best(server, view);
  preemption_rule(server, view);
}

int AtMultiMechanism::lowest_class_server(EngineView& view) const {
  // Lowest running-job class wins; idle servers rank below every class.
  // Ties among busy servers go to the later-started running job, then the
  // lower index; among idle servers, the lower index.
  std::optional<int> first_idle;
  std::optional<int> best_busy;
  long best_class = 0;
  Time best_start = 0;
  for (int s = 0; s < view.servers(); ++s) {
    const auto& r = view.running(s);
    if (!r) {
      if (!first_idle) first_idle = s;
      continue;
    }
    long cls = class_of(view.job(*r), params_.gamma);
    Time start = view.start_time(*r).value_or(view.now());
    if (!best_busy || cls < best_class || (cls == best_class && start > best_start)) {
      best_busy = s;
      best_class = cls;
      best_start = start;
    }
  }
  return first_idle ? *first_idle : best_busy.value_or(0);
}

void AtMultiMechanism::resume_best(int server, EngineView& view) {
  auto next = best_job(view, known_,
                       [&](const JobId& id) { return pending_partial(view, id, server); });
  if (next) view.assign(server, *next);
}

void AtMultiMechanism::preemption_rule(int server, EngineView& view) {
  auto candidate = best_job(view, known_, [&](const JobId& id) {
    return pending_eligible(view, id, params_.mu, server, allow_migration_);
  });
  if (!candidate) return;
  const auto& running = view.running(server);
  if (!running || class_of(view.job(*candidate), params_.gamma) >
                      class_of(view.job(*running), params_.gamma))
    view.assign(server, *candidate);
}

void GreedyBaselineMechanism::on_arrival(const JobType& job, EngineView& view) {
  known_.insert(job.id);
  preemption_rule(view);
}

void GreedyBaselineMechanism::on_completion(const JobType&, int, EngineView& view) {
  auto next =
      best_job(view, known_, [&](const JobId& id) { return pending_partial(view, id, {}); });
  if (next) view.assign(0, *next);
  preemption_rule(view);
}

void GreedyBaselineMechanism::on_expiry(const JobType& job, int server, EngineView& view) {
  on_completion(job, server, view);
}

void GreedyBaselineMechanism::preemption_rule(EngineView& view) {
  auto candidate = best_job(view, known_, [&](const JobId& id) {
    return pending_eligible(view, id, params_.mu, {}, true);
  });
  if (!candidate) return;
  const auto& running = view.running(0);
  if (!running ||
      view.job(*candidate).density() > params_.gamma * view.job(*running).density())
    view.assign(0, *candidate);
}

namespace {

RunResult run_with_deadline_notifications(const Instance& instance, Mechanism& mechanism,
                                          int servers) {
  RunResult result = run(instance, mechanism, servers);
  for (auto& [id, outcome] : result.outcomes)
    outcome.notification_time = instance.job(id).deadline;
  return result;
}

}  // namespace

RunResult run_at_single(const Instance& instance, const ATParams& params) {
  AtSingleMechanism mech(params);
  return run_with_deadline_notifications(instance, mech, 1);
}

RunResult run_at_multi(const Instance& instance, const ATParams& params, int servers,
                       bool allow_migration) {
  AtMultiMechanism mech(params, allow_migration);
  return run_with_deadline_notifications(instance, mech, servers);
}

RunResult run_greedy_baseline(const Instance& instance, const ATParams& params) {
  GreedyBaselineMechanism mech(params);
  return run_with_deadline_notifications(instance, mech, 1);
}

}  // namespace sched
