#include "sched/dualfit.hpp"

#include <stdexcept>

namespace sched {

StepFunction::StepFunction(std::vector<std::pair<Time, Rational>> points)
    : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i > 0 && points_[i - 1].first >= points_[i].first)
      throw std::invalid_argument("step function breakpoints must be strictly increasing");
    if (points_[i].second < 0)
      throw std::invalid_argument("step function values must be nonnegative");
  }
  if (!points_.empty() && points_.back().second != 0)
    throw std::invalid_argument("step function must end at zero");
}

Rational StepFunction::value_at(const Time& t) const {
  Rational v = 0;
  for (const auto& [start, value] : points_) {
    if (start > t) break;
    v = value;
  }
  return v;
}

Rational StepFunction::integral() const {
  Rational total = 0;
  for (std::size_t i = 0; i + 1 < points_.size(); ++i)
    total += points_[i].second * (points_[i + 1].first - points_[i].first);
  return total;
}

std::pair<Rational, Time> StepFunction::min_on(const Time& lo, const Time& hi) const {
  if (hi <= lo) throw std::invalid_argument("empty interval");
  std::optional<Rational> best;
  Time at = lo;
  auto offer = [&](const Rational& v, const Time& t) {
    if (!best || v < *best) {
      best = v;
      at = t;
    }
  };
  if (points_.empty() || lo < points_.front().first) offer(Rational(0), lo);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    Time seg_lo = points_[i].first;
    bool last = i + 1 == points_.size();
    if (seg_lo >= hi) break;
    if (!last && points_[i + 1].first <= lo) continue;  // segment entirely before
    offer(points_[i].second, std::max(seg_lo, lo));
  }
  return {*best, at};
}

StepFunction StepFunction::scaled(const Rational& factor) const {
  std::vector<std::pair<Time, Rational>> pts = points_;
  for (auto& [t, v] : pts) v *= factor;
  return StepFunction(std::move(pts));
}

StepFunction step_on(const Time& lo, const Time& hi, const Rational& value) {
  if (hi <= lo) throw std::invalid_argument("step_on needs a nonempty interval");
  if (value == 0) return StepFunction();
  return StepFunction({{lo, value}, {hi, Rational(0)}});
}

const Rational DualSolution::alpha_of(const JobId& id) const {
  auto it = alpha.find(id);
  return it == alpha.end() ? Rational(0) : it->second;
}

Rational dual_cost(const Instance& instance, const DualSolution& dual) {
  Rational total = 0;
  for (const auto& [id, a] : dual.alpha) {
    if (a < 0) throw std::invalid_argument("negative alpha for job '" + id + "'");
    total += instance.job(id).demand * a;
  }
  for (const StepFunction& beta : dual.beta) total += beta.integral();
  return total;
}

std::optional<DualViolation> check_feasible(const Instance& instance, const DualSolution& dual,
                                            int servers) {
  if (servers < 1) throw std::invalid_argument("server count must be at least 1");
  if (dual.beta.size() > static_cast<std::size_t>(servers))
    throw std::invalid_argument("more beta functions than servers");
  static const StepFunction kZero;
  for (const JobType& j : instance.jobs()) {
    Rational alpha = dual.alpha_of(j.id);
    Rational needed = j.density() - alpha;
    for (int s = 0; s < servers; ++s) {
      const StepFunction& beta =
          static_cast<std::size_t>(s) < dual.beta.size() ? dual.beta[static_cast<std::size_t>(s)]
                                                         : kZero;
      auto [min_value, at] = beta.min_on(j.arrival, j.deadline);
      if (min_value < needed) return DualViolation{j.id, s, at};
    }
  }
  return std::nullopt;
}

DualSolution resize(const DualSolution& dual, const Rational& factor) {
  if (factor <= 0) throw std::invalid_argument("resize factor must be positive");
  DualSolution out;
  for (const auto& [id, a] : dual.alpha) out.alpha[id] = a / factor;
  for (const StepFunction& beta : dual.beta) out.beta.push_back(beta.scaled(1 / factor));
  return out;
}

std::variant<CertifiedRatio, DualViolation> certify_ratio(const Instance& instance,
                                                          const DualSolution& dual,
                                                          const Rational& mechanism_value,
                                                          int servers) {
  if (mechanism_value <= 0) throw std::invalid_argument("mechanism value must be positive");
  if (auto violation = check_feasible(instance, dual, servers)) return *violation;
  return CertifiedRatio{dual_cost(instance, dual) / mechanism_value};
}

}  // namespace sched
