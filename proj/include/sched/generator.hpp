#pragma once

#include "sched/core.hpp"

#include <cstdint>

namespace sched {

/// Workload generator knobs. All sampled quantities land on a 1/8 grid so
/// instances stay exactly rational and reproducible; the value mixture is
/// heavy-tailed across powers of two to populate many density classes.
struct GenConfig {
  int n = 8;
  Rational s_target = 8;           // every job's slack is at least this
  std::uint64_t seed = 1;
  long interarrival_scale = 8;     // geometric tail parameter, eighths
  Rational demand_lo = 1;          // uniform demand range, 1/8 grid
  Rational demand_hi = 4;
  long density_exponent_lo = -2;   // density ~ 2^e * uniform[1,2)
  long density_exponent_hi = 6;
  long slack_spread_eighths = 24;  // extra slack up to this many eighths of s_target
};

/// Deterministic random instance: renewal arrivals, gridded demands, and
/// deadlines a + max(s_target, sampled slack) * D, so the instance slackness
/// is at least s_target exactly.
Instance gen_random(const GenConfig& config);

}  // namespace sched
