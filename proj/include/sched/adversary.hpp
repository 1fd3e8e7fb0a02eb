#pragma once

#include "sched/core.hpp"

#include <optional>
#include <vector>

namespace sched {

struct AdmitDecision {
  bool admitted;
  Time at;  // decision time, >= the job's arrival
};

/// Interactive contract for committed schedulers under adversarial input:
/// jobs are submitted one at a time and the scheduler answers with an
/// admit/reject decision and its time. Implementations must never process a
/// job before committing to it; work-preserving behaviour is the
/// implementation's responsibility.
class InteractiveScheduler {
 public:
  virtual ~InteractiveScheduler() = default;
  /// Domain guard: a scheduler may refuse slackness outside its guarantee.
  virtual bool applicable(const Rational& /*s*/) const { return true; }
  virtual void begin(const Rational& s) = 0;
  virtual AdmitDecision submit(const JobType& job) = 0;
};

struct AdversaryRound {
  JobType job;
  bool admitted = false;
  Time decision_time = 0;
  Duration wait_correction = 0;  // extra wait applied before the next arrival
};

struct AdversaryTranscript {
  enum class Outcome { Overcommitted, RatioWitness, RoundCapReached, NotApplicable };
  Outcome outcome = Outcome::RoundCapReached;
  std::vector<AdversaryRound> rounds;
};

/// The single-server lower-bound session: jobs share the deadline horizon s,
/// each with the largest demand the slackness constraint allows and a value
/// above c times everything issued before. A new job arrives the moment the
/// previous one is admitted, delayed by the wait correction when the
/// scheduler admitted early. Ends on a rejection (ratio witness), on
/// admitted work that provably cannot meet the horizon (overcommitment), or
/// at the round cap.
AdversaryTranscript run_adversary(InteractiveScheduler& scheduler, const Rational& s,
                                  const Rational& c, int round_cap);

/// Always admits at arrival; the textbook victim of the adversary.
class NaiveCommitOnArrival : public InteractiveScheduler {
 public:
  void begin(const Rational&) override {}
  AdmitDecision submit(const JobType& job) override { return {true, job.arrival}; }
};

/// The single-server committed reduction behind the interactive contract:
/// each submission replays the reduction on everything issued so far (the
/// reduction is online, so earlier decisions never change). Applicable only
/// above its slackness threshold 1/(omega(1-omega)).
class CommittedReductionScheduler : public InteractiveScheduler {
 public:
  explicit CommittedReductionScheduler(Rational omega) : omega_(std::move(omega)) {}
  bool applicable(const Rational& s) const override;
  void begin(const Rational& s) override;
  AdmitDecision submit(const JobType& job) override;

 private:
  Rational omega_;
  std::vector<JobType> submitted_;
};

struct DeltaRecurrence {
  std::vector<Rational> deltas;  // delta_1, delta_2, ...
  std::optional<std::size_t> first_negative;  // 1-based index into deltas
};

/// The extremal free-time recurrence delta_{n+1} = delta_n - delta_{n-1}/s
/// from delta_0 = delta_1 = s, iterated exactly. A negative term witnesses
/// that no committed scheduler survives; none appears for s >= 4.
DeltaRecurrence delta_recurrence(const Rational& s, std::size_t n_max);

}  // namespace sched
