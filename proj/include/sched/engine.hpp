#pragma once

#include "sched/core.hpp"
#include "sched/outcome.hpp"
#include "sched/trace.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace sched {

/// Thrown when a mechanism breaks the engine contract, e.g. assigns a job
/// outside its execution window. This is a programming fault, not an input
/// error.
class EngineContractFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Engine;

/// The mechanism-facing view of the running engine.
///
/// Mechanisms may only reassign servers at event times; between events the
/// allocation is constant. Processed totals, start times, and completion
/// bookkeeping are engine-owned so every mechanism sees one source of truth.
class EngineView {
 public:
  explicit EngineView(Engine& engine) : engine_(engine) {}

  Time now() const;
  int servers() const;
  const std::optional<JobId>& running(int server) const;
  bool arrived(const JobId& id) const;
  Duration processed(const JobId& id) const;
  Duration remaining(const JobId& id) const;
  bool completed(const JobId& id) const;
  bool expired(const JobId& id) const;
  /// First instant the job ever accrued processing, if any.
  std::optional<Time> start_time(const JobId& id) const;
  /// True if the job has accrued processing on this server.
  bool ran_on(const JobId& id, int server) const;
  const JobType& job(const JobId& id) const;
  /// Ids of all jobs that have arrived so far, in id order.
  const std::set<JobId>& arrived_jobs() const;

  /// Run a job on a server from now on. Faults if the job is outside its
  /// window, already completed, or running elsewhere.
  void assign(int server, const JobId& id);
  void clear(int server);

  void commit(const JobId& id, Time when);
  void reject(const JobId& id, Time when);
  void set_notification(const JobId& id, Time when);

 private:
  Engine& engine_;
};

/// Behavioral contract for continuous-time online mechanisms.
///
/// The engine delivers arrivals and completions; expiry fires when a running
/// job reaches its deadline unfinished, which is where the continuous
/// "re-evaluate at every instant" semantics collapses to a discrete event.
class Mechanism {
 public:
  virtual ~Mechanism() = default;
  virtual void on_arrival(const JobType& job, EngineView& view) = 0;
  virtual void on_completion(const JobType& job, int server, EngineView& view) = 0;
  virtual void on_expiry(const JobType& job, int server, EngineView& view) {
    (void)job;
    (void)server;
    (void)view;
  }
};

struct RunResult {
  ScheduleTrace trace;
  OutcomeSet outcomes;
};

/// Deterministic event-driven execution of a mechanism over an instance.
///
/// Event order: nondecreasing time; at equal times completions and expiries
/// before arrivals, each group in ascending job id. Completion events are
/// computed by the engine exactly when a job's processed total reaches its
/// demand.
RunResult run(const Instance& instance, Mechanism& mechanism, int servers);

}  // namespace sched
