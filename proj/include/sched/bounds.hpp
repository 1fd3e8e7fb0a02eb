#pragma once

#include "sched/noncommitted.hpp"

#include <optional>
#include <string>

namespace sched {

/// Closed-form competitive-ratio bounds, evaluated exactly. The *Beta
/// variants apply the reduction blowup to the beta (lost-partial-value) term
/// only, which is where all of it lands; they are the tight versions whose
/// constants appear in the headline results (5 for the committed single
/// server reduction, 9 for the truthful committed single-server mechanism).
enum class BoundFamily {
  AtSingle,          // 1 + gamma*s/(s-mu) * (1 + gamma/((gamma-1)(mu-1)-1))
  AtMulti,           // (1 + gamma*s/(s-mu)) * (1 + gamma/((gamma-1)(mu-1)-1))
  CommittedSingle,   // AtSingle at s*omega*(1-omega), divided by omega*(1-omega)
  CommittedSingleBeta,
  CommittedMigratory,  // 11.656/(omega(1-omega)) * AtMulti(s*omega(1-omega)/11.656)
  AtcSingle,           // 8 * AtSingle(sigma), domain s >= 12*sigma
  AtcSingleBeta,
  AtcMulti,            // (8*11.656) * AtMulti(sigma), domain s >= 139.872*sigma
};

struct BoundParams {
  std::optional<ATParams> at;  // defaults to recommended at the inner slackness
  Rational omega = make_rational(1, 2);
  Rational sigma = 2;
};

class OutOfDomain : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Rational bound_formula(BoundFamily family, const Rational& s, const BoundParams& params = {});

/// Headline constants (limit ratio c0, slackness threshold s0) for the
/// truthful committed mechanism.
struct FamilyConstants {
  Rational c0;
  Rational s0;
};
FamilyConstants atc_constants(bool multi_server);

std::optional<BoundFamily> bound_family_from_name(const std::string& name);
std::string bound_family_name(BoundFamily family);

}  // namespace sched
