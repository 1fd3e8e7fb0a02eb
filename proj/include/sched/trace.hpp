#pragma once

#include "sched/core.hpp"

#include <map>
#include <variant>
#include <vector>

namespace sched {

/// Half-open processing interval [start, end) of one job on one server.
struct Segment {
  Time start;
  Time end;
  JobId job;
};

/// Piecewise-constant allocation of jobs to servers over continuous time.
struct ScheduleTrace {
  int servers = 1;
  std::vector<std::vector<Segment>> per_server;  // one sorted list per server

  explicit ScheduleTrace(int server_count = 1)
      : servers(server_count), per_server(static_cast<std::size_t>(server_count)) {}
};

struct JobProgress {
  Duration processed = 0;
  bool completed = false;
};

struct TraceViolation {
  std::string kind;  // empty-segment | overlap-on-server | segment-outside-window | job-on-two-servers
  JobId job;
  int server = 0;
  Time start = 0;
  Time end = 0;
};

struct TraceReport {
  std::map<JobId, JobProgress> per_job;
};

/// Check a trace against the model constraints and report per-job progress.
///
/// Violations are reported with the first offending interval found, scanning
/// servers in order and segments in order, then cross-server overlaps by
/// interval start. Segments referring to ids absent from the instance are a
/// caller error and throw.
std::variant<TraceReport, TraceViolation> validate_trace(const Instance& instance,
                                                         const ScheduleTrace& trace);

/// Total value of jobs completed in the report.
Rational completed_value(const Instance& instance, const TraceReport& report);

}  // namespace sched
