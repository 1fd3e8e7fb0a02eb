#include "sched/oracle.hpp"

#include "sched/feasibility.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sched {

namespace {

struct Search {
  const std::vector<const JobType*>& by_value;  // decreasing value
  int servers;
  std::map<std::uint32_t, bool> feasible_memo;  // bitmask over by_value order

  Rational best_value = 0;
  std::vector<JobId> best_witness;  // sorted ids
  std::vector<Rational> suffix_value;

  bool feasible(std::uint32_t mask) {
    if (auto it = feasible_memo.find(mask); it != feasible_memo.end()) return it->second;
    std::vector<WindowJob> jobs;
    for (std::size_t i = 0; i < by_value.size(); ++i)
      if (mask & (1u << i)) {
        const JobType& j = *by_value[i];
        jobs.push_back(WindowJob{j.id, j.arrival, j.deadline, j.demand});
      }
    bool ok = feasible_migratory(jobs, servers);
    feasible_memo.emplace(mask, ok);
    return ok;
  }

  void consider(std::uint32_t mask, const Rational& value) {
    if (value < best_value) return;
    std::vector<JobId> ids;
    for (std::size_t i = 0; i < by_value.size(); ++i)
      if (mask & (1u << i)) ids.push_back(by_value[i]->id);
    std::sort(ids.begin(), ids.end());
    if (value > best_value || ids < best_witness) {
      best_value = value;
      best_witness = std::move(ids);
    }
  }

  void dfs(std::size_t depth, std::uint32_t mask, const Rational& value) {
    if (depth == by_value.size()) {
      consider(mask, value);
      return;
    }
    if (value + suffix_value[depth] < best_value) return;  // cannot beat the best
    // Include first: high-value branches reach good bounds early.
    std::uint32_t with = mask | (1u << depth);
    if (feasible(with)) dfs(depth + 1, with, value + by_value[depth]->value);
    dfs(depth + 1, mask, value);
  }
};

}  // namespace

OfflineOpt offline_opt(const Instance& instance, int servers, std::size_t size_cap) {
  if (servers < 1) throw std::invalid_argument("server count must be at least 1");
  if (instance.size() > size_cap)
    throw std::invalid_argument("offline_opt size cap exceeded: " +
                                std::to_string(instance.size()) + " jobs > cap " +
                                std::to_string(size_cap));
  if (instance.size() > 31) throw std::invalid_argument("offline_opt limited to 31 jobs");

  std::vector<const JobType*> by_value;
  for (const JobType& j : instance.jobs()) by_value.push_back(&j);
  std::sort(by_value.begin(), by_value.end(), [](const JobType* a, const JobType* b) {
    if (a->value != b->value) return a->value > b->value;
    return a->id < b->id;
  });

  Search search{by_value, servers, {}, 0, {}, {}};
  search.suffix_value.assign(by_value.size() + 1, Rational(0));
  for (std::size_t i = by_value.size(); i-- > 0;)
    search.suffix_value[i] = search.suffix_value[i + 1] + by_value[i]->value;
  search.dfs(0, 0, 0);
  return OfflineOpt{search.best_value, search.best_witness};
}

EmpiricalRatio empirical_ratio(const Instance& instance, const Rational& mechanism_value,
                               int servers, std::size_t size_cap) {
  if (mechanism_value < 0) throw std::invalid_argument("mechanism value must be nonnegative");
  OfflineOpt opt = offline_opt(instance, servers, size_cap);
  if (mechanism_value == 0) {
    if (opt.value > 0) return EmpiricalRatio{true, Rational(0)};
    return EmpiricalRatio{false, Rational(1)};
  }
  return EmpiricalRatio{false, opt.value / mechanism_value};
}

}  // namespace sched
