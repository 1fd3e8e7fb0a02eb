#pragma once

#include "sched/engine.hpp"

#include <optional>
#include <set>

namespace sched {

/// Parameters of the class-based greedy mechanisms: the class base gamma
/// (> 1) and the latest-start factor mu (>= 1; a job never started by
/// deadline - mu * demand is discarded).
///
/// The closed-form competitive-ratio bound additionally needs
/// (gamma - 1)(mu - 1) > 1 and mu < s; that domain is checked where the
/// bound is evaluated, not here, so the mechanisms themselves can run at
/// any valid (gamma, mu).
struct ATParams {
  Rational gamma;
  Rational mu;

  ATParams(Rational gamma_base, Rational latest_start_factor);

  /// True when the ratio bound's validity constraints hold at slackness s.
  bool bound_domain_holds(const Rational& s) const;
};

/// mu ~ s^(2/3) and gamma = sqrt(mu)/(sqrt(mu)-1), realized as rational
/// approximations that preserve 1 < mu < s and (gamma-1)(mu-1) > 1 exactly.
/// Throws std::invalid_argument for s <= 1.
ATParams recommended_params(const Rational& s);

/// Truthful class-based mechanism, single server: an arriving job preempts
/// the running one only if its density class is strictly higher; on
/// completion the densest partially-processed job resumes, then the
/// preemption rule runs again; jobs never started by deadline - mu * demand
/// are never started.
class AtSingleMechanism : public Mechanism {
 public:
  explicit AtSingleMechanism(ATParams params) : params_(std::move(params)) {}
  void on_arrival(const JobType& job, EngineView& view) override;
  void on_completion(const JobType& job, int server, EngineView& view) override;
  void on_expiry(const JobType& job, int server, EngineView& view) override;

 private:
  void preemption_rule(EngineView& view);
  void resume_best(EngineView& view);
  ATParams params_;
  std::set<JobId> known_;
};

/// Multi-server variant: each server runs a local copy; arrivals invoke the
/// preemption rule only on the server running the lowest-class job (ties to
/// the later-started job); preempted jobs may start on a server they have
/// not used while the latest-start cutoff allows, and may resume only on
/// servers where they already ran.
class AtMultiMechanism : public Mechanism {
 public:
  AtMultiMechanism(ATParams params, bool allow_migration = true)
      : params_(std::move(params)), allow_migration_(allow_migration) {}
  void on_arrival(const JobType& job, EngineView& view) override;
  void on_completion(const JobType& job, int server, EngineView& view) override;
  void on_expiry(const JobType& job, int server, EngineView& view) override;

 private:
  void preemption_rule(int server, EngineView& view);
  void resume_best(int server, EngineView& view);
  int lowest_class_server(EngineView& view) const;
  ATParams params_;
  bool allow_migration_;
  std::set<JobId> known_;
};

/// Density-threshold baseline, single server: a running job is preempted
/// only by a candidate with density strictly above gamma times the running
/// density (raw densities, no classes), with the same latest-start cutoff.
/// Intentionally non-monotone; kept as the differential regression target.
class GreedyBaselineMechanism : public Mechanism {
 public:
  explicit GreedyBaselineMechanism(ATParams params) : params_(std::move(params)) {}
  void on_arrival(const JobType& job, EngineView& view) override;
  void on_completion(const JobType& job, int server, EngineView& view) override;
  void on_expiry(const JobType& job, int server, EngineView& view) override;

 private:
  void preemption_rule(EngineView& view);
  ATParams params_;
  std::set<JobId> known_;
};

RunResult run_at_single(const Instance& instance, const ATParams& params);
RunResult run_at_multi(const Instance& instance, const ATParams& params, int servers,
                       bool allow_migration = true);
RunResult run_greedy_baseline(const Instance& instance, const ATParams& params);

// Pending-set predicates shared by the mechanisms and the invariant checks.
// A job is "started" once it has accrued processing; zero-length assignments
// do not count.

/// Partially processed, still live, not currently running; with a server,
/// restricted to jobs that ran on it.
bool pending_partial(const EngineView& view, const JobId& id, std::optional<int> server);

/// Never-run-here candidates whose latest-start cutoff has not passed:
/// arrival <= now <= deadline - mu * demand, not currently running. With a
/// server: never ran on that server; migration off additionally requires
/// never ran anywhere.
bool pending_eligible(const EngineView& view, const JobId& id, const Rational& mu,
                      std::optional<int> server, bool allow_migration);

bool running_anywhere(const EngineView& view, const JobId& id);

}  // namespace sched
