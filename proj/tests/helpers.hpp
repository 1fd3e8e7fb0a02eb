#pragma once

#include "sched/committed.hpp"
#include "sched/core.hpp"
#include "sched/engine.hpp"
#include "sched/feasibility.hpp"
#include "sched/noncommitted.hpp"
#include "sched/prng.hpp"

#include <climits>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace sched::testing {

inline Rational Q(const std::string& text) { return parse_rational(text); }

inline JobType job(const std::string& id, const std::string& v, const std::string& D,
                   const std::string& a, const std::string& d) {
  return JobType{id, Q(v), Q(D), Q(a), Q(d)};
}

inline std::set<JobId> completed_set(const OutcomeSet& outcomes) {
  std::set<JobId> out;
  for (const auto& [id, o] : outcomes)
    if (o.completed) out.insert(id);
  return out;
}

inline std::set<JobId> committed_set(const OutcomeSet& outcomes) {
  std::set<JobId> out;
  for (const auto& [id, o] : outcomes)
    if (o.decision == DecisionKind::Committed) out.insert(id);
  return out;
}

/// The Appendix-style four-type single-server counterexample instance.
/// With gamma = 2, mu = 1 and the density of job "a" at exactly 1 the
/// threshold baseline starves "a"; lowering its density to 1/2 completes it.
/// The class-based mechanism treats both cases identically.
inline Instance baseline_counterexample(bool low_density_a) {
  std::vector<JobType> jobs;
  // rho_a is 1 or 1/2; demand 5/4; window [0, 5] (slack 4).
  jobs.push_back(job("a", low_density_a ? "5/8" : "5/4", "5/4", "0", "5"));
  // Shielding job: density 2 = gamma, window starts just after 1/2 mu.
  jobs.push_back(job("b", "7", "7/2", "3/4", "59/4"));
  // Four unit blockers of density 4 = gamma^2 sharing deadline 5.
  for (int i = 1; i <= 4; ++i) jobs.push_back(job("c" + std::to_string(i), "4", "1", "1", "5"));
  return Instance(std::move(jobs));
}

inline ATParams b1_params() { return ATParams(Q("2"), Q("1")); }

/// Wraps a mechanism and asserts the running-job dominance and
/// one-partial-job-per-class claims after every event, via the engine view.
class InvariantProbe : public Mechanism {
 public:
  InvariantProbe(Mechanism& inner, ATParams params, bool allow_migration = true)
      : inner_(inner), params_(std::move(params)), allow_migration_(allow_migration) {}

  int violations() const { return violations_; }

  void on_arrival(const JobType& j, EngineView& view) override {
    known_.insert(j.id);
    inner_.on_arrival(j, view);
    check(view);
  }
  void on_completion(const JobType& j, int server, EngineView& view) override {
    inner_.on_completion(j, server, view);
    check(view);
  }
  void on_expiry(const JobType& j, int server, EngineView& view) override {
    inner_.on_expiry(j, server, view);
    check(view);
  }

 private:
  void check(EngineView& view) {
    // Claim: no pending job outclasses any running job (per server), and the
    // partially-processed pool holds at most one job per class (per server).
    for (int s = 0; s < view.servers(); ++s) {
      const auto& running = view.running(s);
      std::set<long> partial_classes;
      for (const JobId& id : known_) {
        bool partial = pending_partial(view, id, view.servers() > 1 ? std::optional<int>(s)
                                                                    : std::nullopt);
        bool eligible = pending_eligible(view, id, params_.mu,
                                         view.servers() > 1 ? std::optional<int>(s) : std::nullopt,
                                         allow_migration_);
        long cls = class_of(view.job(id), params_.gamma);
        if (partial && !partial_classes.insert(cls).second) ++violations_;
        if (!running) continue;
        if ((partial || eligible) && cls > class_of(view.job(*running), params_.gamma))
          ++violations_;
      }
    }
  }

  Mechanism& inner_;
  ATParams params_;
  bool allow_migration_;
  std::set<JobId> known_;
  int violations_ = 0;
};

namespace detail {
inline void require_integral(bool ok) {
  if (!ok) throw std::logic_error("discretization denominator does not clear the times");
}
}  // namespace detail

// Independent feasibility check on a unit-slot discretization: scale all
// times to integers and run an integer max-flow with one node per slot.
// Exact whenever the scaled times are integral.
inline bool discretized_feasible(const std::vector<WindowJob>& jobs, int servers,
                                 long denominator) {
  struct Edge {
    std::size_t to;
    long cap;
    std::size_t rev;
  };
  std::vector<long> release, deadline, demand;
  long horizon = 0;
  for (const WindowJob& j : jobs) {
    Rational r = j.release * denominator, d = j.deadline * denominator,
             dem = j.demand * denominator;
    detail::require_integral(r.get_den() == 1);
    detail::require_integral(d.get_den() == 1);
    detail::require_integral(dem.get_den() == 1);
    release.push_back(r.get_num().get_si());
    deadline.push_back(d.get_num().get_si());
    demand.push_back(dem.get_num().get_si());
    horizon = std::max(horizon, deadline.back());
  }
  std::size_t n = jobs.size();
  std::size_t slots = static_cast<std::size_t>(horizon);
  std::vector<std::vector<Edge>> adj(2 + n + slots);
  auto add_edge = [&](std::size_t a, std::size_t b, long cap) {
    adj[a].push_back(Edge{b, cap, adj[b].size()});
    adj[b].push_back(Edge{a, 0, adj[a].size() - 1});
  };
  std::size_t source = 0, sink = 1 + n + slots;
  long total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    add_edge(source, 1 + i, demand[i]);
    total += demand[i];
    for (long t = release[i]; t < deadline[i]; ++t)
      add_edge(1 + i, 1 + n + static_cast<std::size_t>(t), 1);
  }
  for (std::size_t t = 0; t < slots; ++t) add_edge(1 + n + t, sink, servers);
  long flow = 0;
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> parent(adj.size(), {SIZE_MAX, SIZE_MAX});
    std::vector<std::size_t> queue{source};
    parent[source] = {source, SIZE_MAX};
    for (std::size_t qi = 0; qi < queue.size() && parent[sink].first == SIZE_MAX; ++qi) {
      std::size_t u = queue[qi];
      for (std::size_t k = 0; k < adj[u].size(); ++k)
        if (adj[u][k].cap > 0 && parent[adj[u][k].to].first == SIZE_MAX) {
          parent[adj[u][k].to] = {u, k};
          queue.push_back(adj[u][k].to);
        }
    }
    if (parent[sink].first == SIZE_MAX) break;
    long push = LONG_MAX;
    for (std::size_t v = sink; v != source;) {
      auto [u, k] = parent[v];
      push = std::min(push, adj[u][k].cap);
      v = u;
    }
    for (std::size_t v = sink; v != source;) {
      auto [u, k] = parent[v];
      adj[u][k].cap -= push;
      adj[adj[u][k].to][adj[u][k].rev].cap += push;
      v = u;
    }
    flow += push;
  }
  return flow == total;
}


/// Random instance on a coarse grid: every time lands on quarters, so the
/// unit-slot discretization with denominator 4 is exact.
inline Instance grid_instance(std::uint64_t seed, int n, long slack_lo = 2,
                              long slack_span = 4) {
  SplitMix64 rng(seed);
  std::vector<JobType> jobs;
  for (int i = 0; i < n; ++i) {
    JobType j;
    j.id = "g" + std::to_string(i);
    j.arrival = make_rational(static_cast<long>(rng.below(25)), 2);
    j.demand = make_rational(1 + static_cast<long>(rng.below(6)), 2);
    long slack = slack_lo + static_cast<long>(rng.below(static_cast<std::uint64_t>(slack_span)));
    j.deadline = j.arrival + slack * j.demand;
    j.value = Rational(1 + static_cast<long>(rng.below(16)));
    jobs.push_back(j);
  }
  return Instance(std::move(jobs));
}

inline Rational completed_value_of(const Instance& instance, const OutcomeSet& outcomes) {
  Rational total = 0;
  for (const auto& [id, o] : outcomes)
    if (o.completed) total += instance.job(id).value;
  return total;
}

}  // namespace sched::testing
