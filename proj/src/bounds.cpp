#include "sched/bounds.hpp"

#include "sched/committed.hpp"

namespace sched {

namespace {

ATParams params_at(const BoundParams& params, const Rational& inner_s) {
  ATParams at = params.at ? *params.at : recommended_params(inner_s);
  if (!at.bound_domain_holds(inner_s))
    throw OutOfDomain("parameters outside the bound domain at slackness " + to_string(inner_s));
  return at;
}

// The two factors of the single-server bound: the alpha part is exactly the
// completed value, everything else rides on the beta term.
Rational beta_term(const ATParams& at, const Rational& s) {
  const Rational& g = at.gamma;
  const Rational& m = at.mu;
  return g * s / (s - m) * (1 + g / ((g - 1) * (m - 1) - 1));
}

Rational at_single(const ATParams& at, const Rational& s) { return 1 + beta_term(at, s); }

Rational at_multi(const ATParams& at, const Rational& s) {
  const Rational& g = at.gamma;
  const Rational& m = at.mu;
  return (1 + g * s / (s - m)) * (1 + g / ((g - 1) * (m - 1) - 1));
}

Rational committed_inner_slack(const Rational& s, const Rational& omega) {
  if (omega <= 0 || omega >= 1) throw OutOfDomain("omega must lie in (0,1)");
  Rational inner = s * omega * (1 - omega);
  if (inner <= 1) throw OutOfDomain("slackness below the committed reduction threshold");
  return inner;
}

}  // namespace

Rational bound_formula(BoundFamily family, const Rational& s, const BoundParams& params) {
  switch (family) {
    case BoundFamily::AtSingle: {
      if (s <= 1) throw OutOfDomain("slackness must exceed 1");
      return at_single(params_at(params, s), s);
    }
    case BoundFamily::AtMulti: {
      if (s <= 1) throw OutOfDomain("slackness must exceed 1");
      return at_multi(params_at(params, s), s);
    }
    case BoundFamily::CommittedSingle: {
      Rational inner = committed_inner_slack(s, params.omega);
      return at_single(params_at(params, inner), inner) / (params.omega * (1 - params.omega));
    }
    case BoundFamily::CommittedSingleBeta: {
      Rational inner = committed_inner_slack(s, params.omega);
      return 1 + beta_term(params_at(params, inner), inner) / (params.omega * (1 - params.omega));
    }
    case BoundFamily::CommittedMigratory: {
      Rational blowup = migration_demand_factor() / (params.omega * (1 - params.omega));
      Rational inner = s * params.omega * (1 - params.omega) / migration_demand_factor();
      if (inner <= 1) throw OutOfDomain("slackness below the migratory reduction threshold");
      return blowup * at_multi(params_at(params, inner), inner);
    }
    case BoundFamily::AtcSingle: {
      if (params.sigma <= 1) throw OutOfDomain("sigma must exceed 1");
      if (s < 12 * params.sigma) throw OutOfDomain("slackness below 12*sigma");
      return 8 * at_single(params_at(params, params.sigma), params.sigma);
    }
    case BoundFamily::AtcSingleBeta: {
      if (params.sigma <= 1) throw OutOfDomain("sigma must exceed 1");
      if (s < 12 * params.sigma) throw OutOfDomain("slackness below 12*sigma");
      return 1 + 8 * beta_term(params_at(params, params.sigma), params.sigma);
    }
    case BoundFamily::AtcMulti: {
      if (params.sigma <= 1) throw OutOfDomain("sigma must exceed 1");
      if (s < 12 * migration_demand_factor() * params.sigma)
        throw OutOfDomain("slackness below 139.872*sigma");
      return 8 * migration_demand_factor() *
             at_multi(params_at(params, params.sigma), params.sigma);
    }
  }
  throw std::invalid_argument("unknown bound family");
}

FamilyConstants atc_constants(bool multi_server) {
  if (multi_server)
    return FamilyConstants{1 + 8 * migration_demand_factor(), 12 * migration_demand_factor()};
  return FamilyConstants{Rational(9), Rational(12)};
}

std::optional<BoundFamily> bound_family_from_name(const std::string& name) {
  if (name == "at-single") return BoundFamily::AtSingle;
  if (name == "at-multi") return BoundFamily::AtMulti;
  if (name == "committed-single") return BoundFamily::CommittedSingle;
  if (name == "committed-single-beta") return BoundFamily::CommittedSingleBeta;
  if (name == "committed-migratory") return BoundFamily::CommittedMigratory;
  if (name == "atc-single") return BoundFamily::AtcSingle;
  if (name == "atc-single-beta") return BoundFamily::AtcSingleBeta;
  if (name == "atc-multi") return BoundFamily::AtcMulti;
  return std::nullopt;
}

std::string bound_family_name(BoundFamily family) {
  switch (family) {
    case BoundFamily::AtSingle: return "at-single";
    case BoundFamily::AtMulti: return "at-multi";
    case BoundFamily::CommittedSingle: return "committed-single";
    case BoundFamily::CommittedSingleBeta: return "committed-single-beta";
    case BoundFamily::CommittedMigratory: return "committed-migratory";
    case BoundFamily::AtcSingle: return "atc-single";
    case BoundFamily::AtcSingleBeta: return "atc-single-beta";
    case BoundFamily::AtcMulti: return "atc-multi";
  }
  return "unknown";
}

}  // namespace sched
