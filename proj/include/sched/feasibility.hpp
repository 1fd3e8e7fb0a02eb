#pragma once

#include "sched/trace.hpp"

#include <map>
#include <optional>
#include <vector>

namespace sched {

/// A demand with a release/deadline window, the unit the feasibility
/// algorithms schedule. Mechanisms map their admitted jobs onto these.
struct WindowJob {
  JobId id;
  Time release;
  Time deadline;
  Duration demand;
};

struct EdfResult {
  ScheduleTrace trace;
  std::map<JobId, JobProgress> progress;
  std::vector<JobId> incomplete;  // ids with processed < demand, in id order
};

/// Preemptive earliest-deadline-first on one server: at every event time the
/// released, unfinished job with the earliest deadline runs (ties by id).
/// Completes every feasibly schedulable set; infeasible sets yield
/// incomplete jobs, reported, never an error.
EdfResult edf_single(const std::vector<WindowJob>& jobs);

/// Global EDF on C servers: the at-most-C earliest-deadline pending jobs
/// run, one server each, ties by id; running jobs stay put while they remain
/// in the top C. Not optimal for C > 1; incomplete jobs are reported.
EdfResult edf_global(const std::vector<WindowJob>& jobs, int servers);

/// Input to the latest-fit construction: place demand within
/// [window_start, deadline], as late as possible.
struct LatestFitJob {
  JobId id;
  Time window_start;
  Time deadline;
  Duration demand;
};

struct LatestFitFailure {
  JobId job;
  Duration missing;  // demand that found no free room
};

/// Offline single-server construction: iterate jobs by decreasing
/// window_start (ties: decreasing deadline, then id), giving each the latest
/// free demand units before its deadline. Succeeds on every admitted set the
/// committed reductions emit; a failure report signals the caller's
/// feasibility obligation was violated.
std::optional<LatestFitFailure> latest_fit(const std::vector<LatestFitJob>& jobs,
                                           ScheduleTrace& out);

/// Exact feasibility of preemptive scheduling with migration on C identical
/// servers: maximum flow over jobs x elementary intervals, computed in exact
/// rational arithmetic.
bool feasible_migratory(const std::vector<WindowJob>& jobs, int servers);

/// Convenience mapping from instance jobs (release = arrival).
std::vector<WindowJob> as_window_jobs(const Instance& instance);

}  // namespace sched
