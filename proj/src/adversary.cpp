#include "sched/adversary.hpp"

#include "sched/committed.hpp"

#include <stdexcept>

namespace sched {

AdversaryTranscript run_adversary(InteractiveScheduler& scheduler, const Rational& s,
                                  const Rational& c, int round_cap) {
  if (s <= 1) throw std::invalid_argument("adversary requires slackness above 1");
  if (c < 1) throw std::invalid_argument("target ratio must be at least 1");
  if (round_cap < 1) throw std::invalid_argument("round cap must be positive");

  AdversaryTranscript transcript;
  if (!scheduler.applicable(s)) {
    transcript.outcome = AdversaryTranscript::Outcome::NotApplicable;
    return transcript;
  }
  scheduler.begin(s);

  Time arrival = 0;
  Rational value = 1;
  std::vector<std::pair<Time, Duration>> admissions;  // (decision time, demand)
  std::optional<Time> previous_completion;            // t_{n-1} + D_{n-1}

  for (int n = 1; n <= round_cap; ++n) {
    if (arrival >= s) break;  // the horizon is exhausted; nothing left to issue
    JobType job{"adv" + std::to_string(n), value, (s - arrival) / s, arrival, s};
    AdversaryRound round;
    round.job = job;

    AdmitDecision decision = scheduler.submit(job);
    if (decision.at < job.arrival)
      throw std::invalid_argument("scheduler decided before the job arrived");
    round.admitted = decision.admitted;
    round.decision_time = decision.at;

    if (!decision.admitted) {
      transcript.rounds.push_back(round);
      transcript.outcome = AdversaryTranscript::Outcome::RatioWitness;
      return transcript;
    }

    admissions.emplace_back(decision.at, job.demand);
    // No early processing: each admitted job needs its full demand after its
    // decision time, so work admitted at or after any T must fit in [T, s].
    for (const auto& [t_k, _] : admissions) {
      Duration load = 0;
      for (const auto& [t_i, d_i] : admissions)
        if (t_i >= t_k) load += d_i;
      if (load > s - t_k) {
        transcript.rounds.push_back(round);
        transcript.outcome = AdversaryTranscript::Outcome::Overcommitted;
        return transcript;
      }
    }

    // Wait correction: if the scheduler admitted before the previous job's
    // natural completion, delay the next arrival by the overlap.
    Duration correction = 0;
    if (previous_completion && decision.at < *previous_completion)
      correction = *previous_completion - decision.at;
    round.wait_correction = correction;
    transcript.rounds.push_back(round);

    previous_completion = decision.at + job.demand;
    arrival = decision.at + correction;
    value *= c + 1;
  }
  transcript.outcome = AdversaryTranscript::Outcome::RoundCapReached;
  return transcript;
}

bool CommittedReductionScheduler::applicable(const Rational& s) const {
  return s * omega_ * (1 - omega_) > 1;
}

void CommittedReductionScheduler::begin(const Rational&) { submitted_.clear(); }

AdmitDecision CommittedReductionScheduler::submit(const JobType& job) {
  submitted_.push_back(job);
  CommittedResult result = run_committed_single(Instance(submitted_), omega_,
                                                recommended_params(Instance(submitted_).slackness() *
                                                                   omega_ * (1 - omega_)));
  const JobOutcome& outcome = result.outcomes.at(job.id);
  return {outcome.decision == DecisionKind::Committed, *outcome.decision_time};
}

DeltaRecurrence delta_recurrence(const Rational& s, std::size_t n_max) {
  if (s <= 0) throw std::invalid_argument("slackness must be positive");
  DeltaRecurrence result;
  Rational before = s;   // delta_{n-1}
  Rational current = s;  // delta_n, starting at n = 1
  for (std::size_t n = 1; n <= n_max; ++n) {
    result.deltas.push_back(current);
    if (current < 0) {
      result.first_negative = n;
      break;
    }
    Rational next = current - before / s;
    before = current;
    current = next;
  }
  return result;
}

}  // namespace sched
