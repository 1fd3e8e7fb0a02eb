#pragma once

#include "sched/feasibility.hpp"
#include "sched/noncommitted.hpp"

#include <functional>
#include <memory>

namespace sched {

/// The inflated-demand, shortened-deadline proxy job fed to the simulator by
/// the committed reductions: demand factor*D/omega within
/// [arrival, deadline - omega*(deadline - arrival)].
struct VirtualType {
  JobId id;
  Rational value;
  Duration virtual_demand;
  Time arrival;
  Time virtual_deadline;
};

/// Thrown when a job's inflated demand does not fit its shortened window,
/// i.e. the job's own slack is below factor / (omega * (1 - omega)).
class InfeasibleVirtualDemand : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

VirtualType virtualize(const JobType& job, const Rational& omega, const Rational& factor);

/// Demand-inflation constant for migratory multi-server reductions,
/// 2(3+2*sqrt(2)) rounded as 11.656 and used exactly in that rounded form
/// throughout all stated bounds.
Rational migration_demand_factor();  // 11656/1000

struct CommittedResult {
  ScheduleTrace trace;            // the real servers
  ScheduleTrace simulator_trace;  // virtual servers (consumes no real resources)
  OutcomeSet outcomes;
};

using MechanismFactory = std::function<std::unique_ptr<Mechanism>()>;

/// Single-server reduction: simulate a non-committed mechanism on virtual
/// types; a virtually completed job is committed at that moment and handed
/// to the real server, which runs EDF over admitted windows
/// [virtual deadline, deadline]. Every job is decided by its virtual
/// deadline; every committed job completes.
CommittedResult run_committed_single(const Instance& instance, const Rational& omega,
                                     const MechanismFactory& inner);
CommittedResult run_committed_single(const Instance& instance, const Rational& omega,
                                     const ATParams& inner_params);

/// Per-server reduction for non-migratory inner mechanisms: a job completed
/// on virtual server i is admitted to real server i, each real server runs
/// its own EDF. Faults if the inner mechanism migrates a job.
CommittedResult run_committed_nonmigratory(const Instance& instance, const Rational& omega,
                                           int servers, const MechanismFactory& inner);
CommittedResult run_committed_nonmigratory(const Instance& instance, const Rational& omega,
                                           int servers, const ATParams& inner_params);

/// Migratory reduction: virtual demands carry the extra 11.656 factor and
/// admitted jobs go to global EDF, which keeps every commitment.
CommittedResult run_committed_migratory(const Instance& instance, const Rational& omega,
                                        int servers, const MechanismFactory& inner);
CommittedResult run_committed_migratory(const Instance& instance, const Rational& omega,
                                        int servers, const ATParams& inner_params);

/// Minimal k with 2^k >= 2 * sigma * demand (may be negative).
long interval_scale(const JobType& job, const Rational& sigma);

/// The maximal aligned simulation intervals of a job's window: dyadic
/// intervals [t*2^k, (t+1)*2^k] with k >= interval_scale, contained in the
/// window together with their equal-length successor, maximal under
/// inclusion. Disjoint, contiguous, and covering at least a quarter of the
/// window whenever nonempty.
struct AlignedIntervalSet {
  long scale = 0;  // interval_scale of the job
  std::vector<std::pair<Time, Time>> intervals;
};

AlignedIntervalSet aligned_intervals(const JobType& job, const Rational& sigma);

/// The fully truthful committed mechanism: one phantom job per aligned
/// interval (demand doubled, times 11.656 more on multiple servers) fed to
/// the class-based mechanism; the first phantom completion commits the job
/// and removes its later phantoms; committed jobs run under EDF within
/// [interval end, deadline]. The stated guarantees need s >= 12*sigma on one
/// server and s >= 139.872*sigma on several; enforce_slack_domain rejects
/// configurations below that floor. The mechanism itself is total: reports
/// that shrink a window below the floor simply earn few or no simulation
/// intervals, which is what the truthfulness argument relies on.
CommittedResult run_phantom_truthful(const Instance& instance, const Rational& sigma,
                                     int servers, bool enforce_slack_domain = false);

struct ResponsivenessEntry {
  Rational lead_additive;        // (deadline - decision) / demand
  Rational lead_multiplicative;  // (deadline - decision) / (deadline - arrival)
};

struct ResponsivenessReport {
  std::map<JobId, ResponsivenessEntry> per_job;
  Rational min_additive;
  Rational min_multiplicative;
};

/// Both responsiveness metrics per job plus instance-level minima.
/// Throws if any job is undecided.
ResponsivenessReport responsiveness_report(const OutcomeSet& outcomes, const Instance& instance);

}  // namespace sched
