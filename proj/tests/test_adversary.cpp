#include "doctest.h"
#include "helpers.hpp"

#include "sched/adversary.hpp"

using namespace sched;
using namespace sched::testing;

TEST_CASE("delta recurrence") {
  SUBCASE("the opening terms are exact") {
    DeltaRecurrence r = delta_recurrence(Q("4"), 6);
    // s, s-1, s-2+1/s, ... from the two preceding terms each time.
    CHECK(r.deltas[0] == 4);
    CHECK(r.deltas[1] == 3);
    CHECK(r.deltas[2] == 2);
    CHECK(r.deltas[3] == Q("5/4"));
    CHECK_FALSE(r.first_negative.has_value());
  }
  SUBCASE("below four the sequence goes negative") {
    for (const char* s : {"3/2", "2", "3", "39/10", "399/100"}) {
      DeltaRecurrence r = delta_recurrence(Q(s), 10000);
      REQUIRE(r.first_negative.has_value());
      CHECK(r.deltas.back() < 0);
    }
  }
  SUBCASE("at four and above it stays nonnegative for ten thousand terms") {
    for (const char* s : {"4", "9/2", "8"}) {
      DeltaRecurrence r = delta_recurrence(Q(s), 10000);
      CHECK_FALSE(r.first_negative.has_value());
      CHECK(r.deltas.size() == 10000);
    }
  }
  SUBCASE("tiny slackness collapses immediately") {
    DeltaRecurrence r = delta_recurrence(Q("1"), 10);
    REQUIRE(r.first_negative.has_value());
    CHECK(*r.first_negative <= 4);
  }
}

TEST_CASE("adversary versus the naive commit-on-arrival scheduler") {
  NaiveCommitOnArrival naive;
  AdversaryTranscript t = run_adversary(naive, Q("3"), Q("2"), 100);
  CHECK(t.outcome == AdversaryTranscript::Outcome::Overcommitted);
  CHECK(t.rounds.size() <= 5);
  // Invariant: every issued job has deadline s and the largest demand the
  // slackness constraint allows.
  for (const AdversaryRound& r : t.rounds) {
    CHECK(r.job.deadline == 3);
    CHECK(r.job.demand == (Q("3") - r.job.arrival) / 3);
  }
  // Values escalate beyond c times everything before.
  Rational total = 0;
  for (const AdversaryRound& r : t.rounds) {
    if (total > 0) CHECK(r.job.value > 2 * total);
    total += r.job.value;
  }
  // Committing at arrival overlaps the previous job's natural completion,
  // so the very next round carries a wait correction.
  REQUIRE(t.rounds.size() >= 2);
  CHECK(t.rounds[1].wait_correction == 1);
}

TEST_CASE("adversary versus the committed reduction") {
  SUBCASE("below its domain the scheduler is not applicable") {
    CommittedReductionScheduler scheduler(Q("1/2"));
    AdversaryTranscript t = run_adversary(scheduler, Q("3"), Q("2"), 50);
    CHECK(t.outcome == AdversaryTranscript::Outcome::NotApplicable);
    CHECK(t.rounds.empty());
  }
  SUBCASE("above four the adversary exhausts its rounds without a witness") {
    CommittedReductionScheduler scheduler(Q("1/2"));
    AdversaryTranscript t = run_adversary(scheduler, Q("9/2"), Q("2"), 40);
    CHECK(t.outcome == AdversaryTranscript::Outcome::RoundCapReached);
    for (const AdversaryRound& r : t.rounds) CHECK(r.admitted);
  }
}

TEST_CASE("a scheduler rejecting a dominant-value job is a ratio witness") {
  class RejectSecond : public InteractiveScheduler {
   public:
    void begin(const Rational&) override { count_ = 0; }
    AdmitDecision submit(const JobType& job) override {
      ++count_;
      return {count_ == 1, job.arrival};
    }

   private:
    int count_ = 0;
  };
  RejectSecond scheduler;
  AdversaryTranscript t = run_adversary(scheduler, Q("3"), Q("2"), 50);
  CHECK(t.outcome == AdversaryTranscript::Outcome::RatioWitness);
  CHECK(t.rounds.size() == 2);
  CHECK_FALSE(t.rounds.back().admitted);
}
