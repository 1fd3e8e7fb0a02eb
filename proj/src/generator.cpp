#include "sched/generator.hpp"

#include "sched/prng.hpp"

#include <stdexcept>

namespace sched {

Instance gen_random(const GenConfig& config) {
  if (config.n < 1) throw std::invalid_argument("generator needs at least one job");
  if (config.s_target < 1) throw std::invalid_argument("slackness target must be at least 1");
  if (config.demand_lo <= 0 || config.demand_hi < config.demand_lo)
    throw std::invalid_argument("bad demand range");
  if (config.density_exponent_hi < config.density_exponent_lo)
    throw std::invalid_argument("bad density exponent range");
  if (config.interarrival_scale < 1) throw std::invalid_argument("bad interarrival scale");

  SplitMix64 rng(config.seed);

  // Discrete geometric interarrivals on the 1/8 grid stand in for an
  // exponential renewal process without touching floating point.
  auto next_gap = [&]() {
    long eighths = 1;
    while (rng.below(static_cast<std::uint64_t>(config.interarrival_scale)) != 0 &&
           eighths < 64 * config.interarrival_scale)
      ++eighths;
    return make_rational(eighths, 8);
  };

  Integer lo_e = floor_to_int(config.demand_lo * 8);
  Integer hi_e = floor_to_int(config.demand_hi * 8);
  long demand_lo8 = lo_e.get_si();
  long demand_hi8 = hi_e.get_si();

  std::vector<JobType> jobs;
  Time arrival = 0;
  for (int i = 0; i < config.n; ++i) {
    if (i > 0) arrival += next_gap();
    JobType job;
    char name[16];
    std::snprintf(name, sizeof(name), "j%03d", i);
    job.id = name;
    job.arrival = arrival;
    job.demand =
        make_rational(demand_lo8 + static_cast<long>(rng.below(
                                       static_cast<std::uint64_t>(demand_hi8 - demand_lo8 + 1))),
                      8);
    long span = config.density_exponent_hi - config.density_exponent_lo + 1;
    // Geometric-ish weights toward the low exponents, with occasional spikes.
    long exponent = config.density_exponent_lo;
    for (long step = 0; step + 1 < span && rng.below(2) == 0; ++step) ++exponent;
    Rational density = pow2(exponent) * make_rational(8 + static_cast<long>(rng.below(8)), 8);
    job.value = density * job.demand;
    Rational slack =
        config.s_target *
        (1 + make_rational(static_cast<long>(rng.below(
                               static_cast<std::uint64_t>(config.slack_spread_eighths + 1))),
                           8));
    job.deadline = job.arrival + slack * job.demand;
    jobs.push_back(job);
  }
  return Instance(std::move(jobs));
}

}  // namespace sched
