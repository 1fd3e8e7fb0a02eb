#include "sched/engine.hpp"

#include <algorithm>
#include <map>

namespace sched {

class Engine {
 public:
  Engine(const Instance& instance, int servers)
      : instance_(instance),
        servers_(servers),
        trace_(servers),
        running_(static_cast<std::size_t>(servers)),
        open_start_(static_cast<std::size_t>(servers), Rational(0)) {
    if (servers < 1) throw std::invalid_argument("server count must be at least 1");
    for (const JobType& j : instance.jobs()) {
      state_[j.id] = JobState{};
      outcomes_[j.id] = JobOutcome{};
    }
  }

  RunResult execute(Mechanism& mechanism) {
    EngineView view(*this);
    std::vector<std::pair<Time, JobId>> arrivals;
    arrivals.reserve(instance_.size());
    for (const JobType& j : instance_.jobs()) arrivals.emplace_back(j.arrival, j.id);
    std::sort(arrivals.begin(), arrivals.end());
    std::size_t next_arrival = 0;

    while (true) {
      std::optional<Time> next_time;
      auto consider = [&](const Time& t) {
        if (!next_time || t < *next_time) next_time = t;
      };
      for (int s = 0; s < servers_; ++s) {
        if (!running_[static_cast<std::size_t>(s)]) continue;
        const JobType& j = instance_.job(*running_[static_cast<std::size_t>(s)]);
        Time done = now_ + (j.demand - state_.at(j.id).processed);
        consider(done <= j.deadline ? done : j.deadline);
      }
      if (next_arrival < arrivals.size()) consider(arrivals[next_arrival].first);
      if (!next_time) break;

      advance_to(*next_time);

      // Completions and expiries first, ascending job id. Callbacks may
      // reassign servers, so re-scan until nothing is due at this instant.
      while (true) {
        std::optional<std::pair<JobId, int>> due;
        bool due_is_completion = false;
        for (int s = 0; s < servers_; ++s) {
          const auto& r = running_[static_cast<std::size_t>(s)];
          if (!r) continue;
          const JobType& j = instance_.job(*r);
          const JobState& st = state_.at(*r);
          bool completion = st.processed == j.demand;
          bool expiry = !completion && j.deadline <= now_;
          if (!completion && !expiry) continue;
          if (!due || *r < due->first) {
            due = std::make_pair(*r, s);
            due_is_completion = completion;
          }
        }
        if (!due) break;
        const auto& [id, server] = *due;
        close_segment(server);
        running_[static_cast<std::size_t>(server)] = std::nullopt;
        JobState& st = state_.at(id);
        if (due_is_completion) {
          st.completed = true;
          mechanism.on_completion(instance_.job(id), server, view);
        } else {
          st.expired = true;
          mechanism.on_expiry(instance_.job(id), server, view);
        }
      }

      while (next_arrival < arrivals.size() && arrivals[next_arrival].first == now_) {
        const JobId& id = arrivals[next_arrival].second;
        state_.at(id).arrived = true;
        arrived_set_.insert(id);
        mechanism.on_arrival(instance_.job(id), view);
        ++next_arrival;
      }
    }

    for (auto& [id, outcome] : outcomes_) {
      outcome.processed = state_.at(id).processed;
      outcome.completed = state_.at(id).completed;
    }
    return RunResult{trace_, outcomes_};
  }

 private:
  friend class EngineView;

  struct JobState {
    bool arrived = false;
    bool completed = false;
    bool expired = false;
    Duration processed = 0;
    std::optional<Time> start;
    std::set<int> servers_used;
  };

  void advance_to(const Time& t) {
    if (t < now_) throw EngineContractFault("time went backwards");
    if (t == now_) return;
    for (int s = 0; s < servers_; ++s) {
      const auto& r = running_[static_cast<std::size_t>(s)];
      if (!r) continue;
      JobState& st = state_.at(*r);
      if (!st.start) st.start = now_;
      st.servers_used.insert(s);
      st.processed += t - now_;
      if (st.processed > instance_.job(*r).demand)
        throw EngineContractFault("job processed past its demand");
    }
    now_ = t;
  }

  void close_segment(int server) {
    auto& r = running_[static_cast<std::size_t>(server)];
    if (!r) return;
    Time start = open_start_[static_cast<std::size_t>(server)];
    if (now_ > start) {
      auto& segs = trace_.per_server[static_cast<std::size_t>(server)];
      if (!segs.empty() && segs.back().job == *r && segs.back().end == start)
        segs.back().end = now_;
      else
        segs.push_back(Segment{start, now_, *r});
    }
  }

  void assign(int server, const JobId& id) {
    check_server(server);
    const JobType& j = instance_.job(id);
    const JobState& st = state_.at(id);
    if (!st.arrived || now_ < j.arrival)
      throw EngineContractFault("assigning job '" + id + "' before its arrival");
    if (st.completed) throw EngineContractFault("assigning completed job '" + id + "'");
    if (st.expired) throw EngineContractFault("assigning expired job '" + id + "'");
    if (now_ >= j.deadline)
      throw EngineContractFault("assigning job '" + id + "' at or past its deadline");
    for (int s = 0; s < servers_; ++s)
      if (s != server && running_[static_cast<std::size_t>(s)] == id)
        throw EngineContractFault("job '" + id + "' already running on another server");
    auto& slot = running_[static_cast<std::size_t>(server)];
    if (slot == id) return;
    close_segment(server);
    slot = id;
    open_start_[static_cast<std::size_t>(server)] = now_;
  }

  void clear(int server) {
    check_server(server);
    close_segment(server);
    running_[static_cast<std::size_t>(server)] = std::nullopt;
  }

  void check_server(int server) const {
    if (server < 0 || server >= servers_) throw EngineContractFault("server index out of range");
  }

  const Instance& instance_;
  int servers_;
  Time now_ = 0;
  ScheduleTrace trace_;
  std::vector<std::optional<JobId>> running_;
  std::vector<Time> open_start_;
  std::map<JobId, JobState> state_;
  std::set<JobId> arrived_set_;
  OutcomeSet outcomes_;
};

Time EngineView::now() const { return engine_.now_; }
int EngineView::servers() const { return engine_.servers_; }

const std::optional<JobId>& EngineView::running(int server) const {
  engine_.check_server(server);
  return engine_.running_[static_cast<std::size_t>(server)];
}

bool EngineView::arrived(const JobId& id) const { return engine_.state_.at(id).arrived; }
Duration EngineView::processed(const JobId& id) const { return engine_.state_.at(id).processed; }

Duration EngineView::remaining(const JobId& id) const {
  return engine_.instance_.job(id).demand - engine_.state_.at(id).processed;
}

bool EngineView::completed(const JobId& id) const { return engine_.state_.at(id).completed; }
bool EngineView::expired(const JobId& id) const { return engine_.state_.at(id).expired; }

std::optional<Time> EngineView::start_time(const JobId& id) const {
  return engine_.state_.at(id).start;
}

bool EngineView::ran_on(const JobId& id, int server) const {
  return engine_.state_.at(id).servers_used.count(server) != 0;
}

const JobType& EngineView::job(const JobId& id) const { return engine_.instance_.job(id); }
const std::set<JobId>& EngineView::arrived_jobs() const { return engine_.arrived_set_; }

void EngineView::assign(int server, const JobId& id) { engine_.assign(server, id); }
void EngineView::clear(int server) { engine_.clear(server); }

void EngineView::commit(const JobId& id, Time when) {
  JobOutcome& o = engine_.outcomes_.at(id);
  o.decision = DecisionKind::Committed;
  o.decision_time = when;
  if (!o.notification_time) o.notification_time = when;
}

void EngineView::reject(const JobId& id, Time when) {
  JobOutcome& o = engine_.outcomes_.at(id);
  o.decision = DecisionKind::Rejected;
  o.decision_time = when;
  if (!o.notification_time) o.notification_time = when;
}

void EngineView::set_notification(const JobId& id, Time when) {
  engine_.outcomes_.at(id).notification_time = when;
}

RunResult run(const Instance& instance, Mechanism& mechanism, int servers) {
  Engine engine(instance, servers);
  RunResult result = engine.execute(mechanism);
  auto verdict = validate_trace(instance, result.trace);
  if (std::holds_alternative<TraceViolation>(verdict)) {
    const auto& v = std::get<TraceViolation>(verdict);
    throw EngineContractFault("engine produced invalid trace: " + v.kind + " for job '" + v.job +
                              "'");
  }
  return result;
}

}  // namespace sched
