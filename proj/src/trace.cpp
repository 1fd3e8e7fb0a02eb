#include "sched/trace.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace sched {

std::variant<TraceReport, TraceViolation> validate_trace(const Instance& instance,
                                                         const ScheduleTrace& trace) {
  if (trace.servers < 1 || trace.per_server.size() != static_cast<std::size_t>(trace.servers))
    throw std::invalid_argument("malformed trace: server list does not match server count");

  TraceReport report;
  for (const JobType& j : instance.jobs()) report.per_job[j.id] = JobProgress{};

  for (int s = 0; s < trace.servers; ++s) {
    const auto& segs = trace.per_server[static_cast<std::size_t>(s)];
    for (std::size_t i = 0; i < segs.size(); ++i) {
      const Segment& seg = segs[i];
      if (!instance.contains(seg.job))
        throw std::invalid_argument("trace refers to unknown job id '" + seg.job + "'");
      if (seg.end <= seg.start)
        return TraceViolation{"empty-segment", seg.job, s, seg.start, seg.end};
      if (i > 0 && segs[i - 1].end > seg.start)
        return TraceViolation{"overlap-on-server", seg.job, s, seg.start, seg.end};
      const JobType& j = instance.job(seg.job);
      if (seg.start < j.arrival || seg.end > j.deadline)
        return TraceViolation{"segment-outside-window", seg.job, s, seg.start, seg.end};
    }
  }

  // Cross-server exclusivity: a job may migrate between segments but never
  // occupy two servers at once.
  std::map<JobId, std::vector<std::tuple<Time, Time, int>>> by_job;
  for (int s = 0; s < trace.servers; ++s)
    for (const Segment& seg : trace.per_server[static_cast<std::size_t>(s)])
      by_job[seg.job].emplace_back(seg.start, seg.end, s);

  for (auto& [id, segs] : by_job) {
    std::sort(segs.begin(), segs.end());
    Duration total = 0;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      auto& [start, end, server] = segs[i];
      if (i > 0 && std::get<1>(segs[i - 1]) > start)
        return TraceViolation{"job-on-two-servers", id, server, start, end};
      total += end - start;
    }
    JobProgress& p = report.per_job[id];
    p.processed = total;
    p.completed = total >= instance.job(id).demand;
  }
  return report;
}

Rational completed_value(const Instance& instance, const TraceReport& report) {
  Rational total = 0;
  for (const auto& [id, progress] : report.per_job)
    if (progress.completed) total += instance.job(id).value;
  return total;
}

}  // namespace sched
