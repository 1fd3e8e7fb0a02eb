#pragma once

#include "sched/core.hpp"

#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace sched {

/// Right-open piecewise-constant step function with finitely many
/// breakpoints; zero before the first breakpoint, and the trailing value
/// must be zero so the integral is finite.
class StepFunction {
 public:
  StepFunction() = default;
  /// points: sorted strictly increasing times with their values from that
  /// time on (value v_i on [t_i, t_{i+1})); last value must be 0.
  explicit StepFunction(std::vector<std::pair<Time, Rational>> points);

  const std::vector<std::pair<Time, Rational>>& points() const { return points_; }
  bool zero() const { return points_.empty(); }

  Rational value_at(const Time& t) const;
  Rational integral() const;
  /// Minimum over the half-open interval [lo, hi) (lo < hi), counting the
  /// implicit zero outside the breakpoint range; also reports the earliest
  /// time attaining it. Right endpoints carry no measure in the continuous
  /// program, so constraints are never evaluated at them.
  std::pair<Rational, Time> min_on(const Time& lo, const Time& hi) const;

  StepFunction scaled(const Rational& factor) const;

 private:
  std::vector<std::pair<Time, Rational>> points_;
};

/// Constant value on [lo, hi), zero elsewhere.
StepFunction step_on(const Time& lo, const Time& hi, const Rational& value);

/// A dual certificate: one alpha per job, one beta step function per server.
/// The per-job time-varying dual variables are fixed to zero throughout.
struct DualSolution {
  std::map<JobId, Rational> alpha;          // missing entries read as 0
  std::vector<StepFunction> beta;           // one per server

  const Rational alpha_of(const JobId& id) const;
};

/// Sum of demand-weighted alphas plus the beta integrals, computed exactly
/// from the step segments.
Rational dual_cost(const Instance& instance, const DualSolution& dual);

struct DualViolation {
  JobId job;
  int server;
  Time at;
};

/// Verifies alpha_j + beta_i(t) >= density_j for every job, server, and
/// time in the job's window [arrival, deadline); piecewise-constant betas
/// make the check exact at finitely many segment minima.
std::optional<DualViolation> check_feasible(const Instance& instance, const DualSolution& dual,
                                            int servers);

/// Dual for the demand-rescaled instance (demands f*D): alpha/f and beta/f.
/// Feasibility carries over exactly; the cost becomes
/// sum D_j alpha_j + (1/f) * integral(beta).
DualSolution resize(const DualSolution& dual, const Rational& factor);

struct CertifiedRatio {
  Rational ratio;
};

/// If the dual is feasible, returns dual_cost / mechanism_value, an exact
/// upper bound on the instance's competitive ratio by weak duality;
/// otherwise returns the violation.
std::variant<CertifiedRatio, DualViolation> certify_ratio(const Instance& instance,
                                                          const DualSolution& dual,
                                                          const Rational& mechanism_value,
                                                          int servers);

}  // namespace sched
