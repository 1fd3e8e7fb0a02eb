#include "sched/feasibility.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace sched {

namespace {

void check_window_jobs(const std::vector<WindowJob>& jobs) {
  std::set<JobId> seen;
  for (const WindowJob& j : jobs) {
    if (j.id.empty()) throw std::invalid_argument("window job with empty id");
    if (j.demand <= 0) throw std::invalid_argument("window job '" + j.id + "': demand must be positive");
    if (!seen.insert(j.id).second) throw std::invalid_argument("duplicate window job id '" + j.id + "'");
  }
}

struct OpenSegment {
  Time start;
  std::size_t job;
};

void close_segment(ScheduleTrace& trace, int server, std::optional<OpenSegment>& open,
                   const Time& now, const std::vector<WindowJob>& jobs) {
  if (!open) return;
  if (now > open->start) {
    auto& segs = trace.per_server[static_cast<std::size_t>(server)];
    const JobId& id = jobs[open->job].id;
    if (!segs.empty() && segs.back().job == id && segs.back().end == open->start)
      segs.back().end = now;
    else
      segs.push_back(Segment{open->start, now, id});
  }
  open.reset();
}

EdfResult edf_run(const std::vector<WindowJob>& jobs, int servers) {
  check_window_jobs(jobs);
  if (servers < 1) throw std::invalid_argument("server count must be at least 1");

  EdfResult result{ScheduleTrace(servers), {}, {}};
  const std::size_t n = jobs.size();
  std::vector<Duration> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = jobs[i].demand;

  std::vector<std::size_t> by_release(n);
  for (std::size_t i = 0; i < n; ++i) by_release[i] = i;
  std::sort(by_release.begin(), by_release.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(jobs[a].release, jobs[a].id) < std::tie(jobs[b].release, jobs[b].id);
  });
  std::size_t next_release = 0;

  std::vector<std::optional<std::size_t>> running(static_cast<std::size_t>(servers));
  std::vector<std::optional<OpenSegment>> open(static_cast<std::size_t>(servers));
  Time now = 0;
  if (!jobs.empty()) now = jobs[by_release[0]].release;

  while (true) {
    std::optional<Time> next;
    auto consider = [&](const Time& t) {
      if (!next || t < *next) next = t;
    };
    for (int s = 0; s < servers; ++s) {
      const auto& r = running[static_cast<std::size_t>(s)];
      if (!r) continue;
      Time done = now + remaining[*r];
      consider(done <= jobs[*r].deadline ? done : jobs[*r].deadline);
    }
    if (next_release < n) consider(jobs[by_release[next_release]].release);
    bool idle = true;
    for (int s = 0; s < servers; ++s)
      if (running[static_cast<std::size_t>(s)]) idle = false;
    if (!next || (idle && next_release >= n)) break;

    // Accrue the elapsed slice.
    if (*next > now) {
      for (int s = 0; s < servers; ++s) {
        const auto& r = running[static_cast<std::size_t>(s)];
        if (r) remaining[*r] -= *next - now;
      }
      now = *next;
    } else {
      now = *next;
    }
    while (next_release < n && jobs[by_release[next_release]].release == now) ++next_release;

    // Recompute the top-C pending set by (deadline, id).
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < n; ++i)
      if (jobs[i].release <= now && remaining[i] > 0 && jobs[i].deadline > now)
        pending.push_back(i);
    std::sort(pending.begin(), pending.end(), [&](std::size_t a, std::size_t b) {
      return std::tie(jobs[a].deadline, jobs[a].id) < std::tie(jobs[b].deadline, jobs[b].id);
    });
    if (pending.size() > static_cast<std::size_t>(servers))
      pending.resize(static_cast<std::size_t>(servers));

    std::set<std::size_t> chosen(pending.begin(), pending.end());
    // Running jobs still chosen keep their server; everyone else vacates.
    std::vector<bool> placed(n, false);
    for (int s = 0; s < servers; ++s) {
      auto& r = running[static_cast<std::size_t>(s)];
      if (r && chosen.count(*r)) {
        placed[*r] = true;
      } else {
        close_segment(result.trace, s, open[static_cast<std::size_t>(s)], now, jobs);
        r.reset();
      }
    }
    std::size_t fill = 0;
    for (int s = 0; s < servers && fill < pending.size(); ++s) {
      auto& r = running[static_cast<std::size_t>(s)];
      if (r) continue;
      while (fill < pending.size() && placed[pending[fill]]) ++fill;
      if (fill == pending.size()) break;
      r = pending[fill];
      open[static_cast<std::size_t>(s)] = OpenSegment{now, pending[fill]};
      placed[pending[fill]] = true;
    }
  }

  for (int s = 0; s < servers; ++s)
    close_segment(result.trace, s, open[static_cast<std::size_t>(s)], now, jobs);

  for (std::size_t i = 0; i < n; ++i) {
    JobProgress p{jobs[i].demand - remaining[i], remaining[i] == 0};
    result.progress[jobs[i].id] = p;
  }
  for (const auto& [id, p] : result.progress)
    if (!p.completed) result.incomplete.push_back(id);
  return result;
}

}  // namespace

EdfResult edf_single(const std::vector<WindowJob>& jobs) { return edf_run(jobs, 1); }

EdfResult edf_global(const std::vector<WindowJob>& jobs, int servers) {
  return edf_run(jobs, servers);
}

std::optional<LatestFitFailure> latest_fit(const std::vector<LatestFitJob>& jobs,
                                           ScheduleTrace& out) {
  {
    std::set<JobId> seen;
    for (const LatestFitJob& j : jobs) {
      if (j.demand <= 0)
        throw std::invalid_argument("latest-fit job '" + j.id + "': demand must be positive");
      if (!seen.insert(j.id).second)
        throw std::invalid_argument("duplicate latest-fit job id '" + j.id + "'");
    }
  }
  out = ScheduleTrace(1);
  if (jobs.empty()) return std::nullopt;

  std::vector<std::size_t> order(jobs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (jobs[a].window_start != jobs[b].window_start)
      return jobs[a].window_start > jobs[b].window_start;
    if (jobs[a].deadline != jobs[b].deadline) return jobs[a].deadline > jobs[b].deadline;
    return jobs[a].id < jobs[b].id;
  });

  std::map<Time, Time> free;  // start -> end, disjoint, sorted
  {
    Time lo = jobs[0].window_start, hi = jobs[0].deadline;
    for (const LatestFitJob& j : jobs) {
      lo = std::min(lo, j.window_start);
      hi = std::max(hi, j.deadline);
    }
    free[lo] = hi;
  }

  std::vector<Segment> segments;
  for (std::size_t idx : order) {
    const LatestFitJob& j = jobs[idx];
    Duration need = j.demand;
    // Latest free room first: walk free intervals overlapping the window
    // from the right, carving from each overlap's right end.
    std::vector<std::pair<Time, Time>> carves;
    auto it = free.upper_bound(j.deadline);
    while (need > 0 && it != free.begin()) {
      --it;
      Time lo = std::max(it->first, j.window_start);
      Time hi = std::min(it->second, j.deadline);
      if (hi <= lo) {
        if (it->second <= j.window_start) break;
        continue;
      }
      Duration take = std::min(need, Duration(hi - lo));
      carves.emplace_back(hi - take, hi);
      need -= take;
    }
    if (need > 0) return LatestFitFailure{j.id, need};
    for (const auto& [lo, hi] : carves) {
      auto containing = free.upper_bound(lo);
      --containing;
      Time a = containing->first, b = containing->second;
      free.erase(containing);
      if (a < lo) free[a] = lo;
      if (hi < b) free[hi] = b;
      segments.push_back(Segment{lo, hi, j.id});
    }
  }

  std::sort(segments.begin(), segments.end(),
            [](const Segment& a, const Segment& b) { return a.start < b.start; });
  // Merge adjacent pieces of the same job.
  for (const Segment& seg : segments) {
    auto& list = out.per_server[0];
    if (!list.empty() && list.back().job == seg.job && list.back().end == seg.start)
      list.back().end = seg.end;
    else
      list.push_back(seg);
  }
  return std::nullopt;
}

namespace {

struct FlowEdge {
  std::size_t to;
  Rational cap;
  std::size_t rev;
};

class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : adj_(nodes) {}

  void add_edge(std::size_t from, std::size_t to, const Rational& cap) {
    adj_[from].push_back(FlowEdge{to, cap, adj_[to].size()});
    adj_[to].push_back(FlowEdge{from, Rational(0), adj_[from].size() - 1});
  }

  Rational max_flow(std::size_t source, std::size_t sink) {
    Rational total = 0;
    while (true) {
      std::vector<std::pair<std::size_t, std::size_t>> parent(adj_.size(),
                                                              {SIZE_MAX, SIZE_MAX});
      std::deque<std::size_t> queue{source};
      parent[source] = {source, SIZE_MAX};
      while (!queue.empty() && parent[sink].first == SIZE_MAX) {
        std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < adj_[u].size(); ++k) {
          const FlowEdge& e = adj_[u][k];
          if (e.cap > 0 && parent[e.to].first == SIZE_MAX) {
            parent[e.to] = {u, k};
            queue.push_back(e.to);
          }
        }
      }
      if (parent[sink].first == SIZE_MAX) break;
      Rational push = 0;
      bool first = true;
      for (std::size_t v = sink; v != source;) {
        auto [u, k] = parent[v];
        const FlowEdge& e = adj_[u][k];
        if (first || e.cap < push) push = e.cap;
        first = false;
        v = u;
      }
      for (std::size_t v = sink; v != source;) {
        auto [u, k] = parent[v];
        FlowEdge& e = adj_[u][k];
        e.cap -= push;
        adj_[e.to][e.rev].cap += push;
        v = u;
      }
      total += push;
    }
    return total;
  }

 private:
  std::vector<std::vector<FlowEdge>> adj_;
};

}  // namespace

bool feasible_migratory(const std::vector<WindowJob>& jobs, int servers) {
  check_window_jobs(jobs);
  if (servers < 1) throw std::invalid_argument("server count must be at least 1");
  if (jobs.empty()) return true;

  std::vector<Time> points;
  for (const WindowJob& j : jobs) {
    if (j.deadline - j.release < j.demand) return false;
    points.push_back(j.release);
    points.push_back(j.deadline);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  const std::size_t n = jobs.size();
  const std::size_t m = points.size() - 1;
  FlowNetwork net(n + m + 2);
  const std::size_t source = 0, sink = n + m + 1;
  Rational total_demand = 0;
  for (std::size_t i = 0; i < n; ++i) {
    net.add_edge(source, 1 + i, jobs[i].demand);
    total_demand += jobs[i].demand;
  }
  for (std::size_t k = 0; k < m; ++k) {
    Rational len = points[k + 1] - points[k];
    net.add_edge(1 + n + k, sink, Rational(servers) * len);
    for (std::size_t i = 0; i < n; ++i)
      if (jobs[i].release <= points[k] && points[k + 1] <= jobs[i].deadline)
        net.add_edge(1 + i, 1 + n + k, len);
  }
  return net.max_flow(source, sink) == total_demand;
}

std::vector<WindowJob> as_window_jobs(const Instance& instance) {
  std::vector<WindowJob> jobs;
  jobs.reserve(instance.size());
  for (const JobType& j : instance.jobs())
    jobs.push_back(WindowJob{j.id, j.arrival, j.deadline, j.demand});
  return jobs;
}

}  // namespace sched
