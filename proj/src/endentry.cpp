#include "lpkit/endentry.hpp"

namespace lpkit {

bool EndEntries::operator==(const EndEntries& o) const {
  return field->same(*o.field) && d == o.d && th0 == o.th0 && thd == o.thd &&
         ths0 == o.ths0 && thsd == o.thsd && a0 == o.a0 && ad == o.ad &&
         as0 == o.as0 && asd == o.asd;
}

bool EndParams::operator==(const EndParams& o) const {
  return varphi1 == o.varphi1 && varphid == o.varphid && phi1 == o.phi1 &&
         phid == o.phid;
}

std::vector<std::string> end_invariant_violations(const EndEntries& ee) {
  std::vector<std::string> out;
  if (ee.th0 == ee.thd) out.push_back("theta_0 = theta_d");
  if (ee.ths0 == ee.thsd) out.push_back("theta*_0 = theta*_d");
  auto check = [&out](const Scalar& a, const Scalar& lo, const Scalar& hi,
                      const char* what) {
    if (a == lo || a == hi) out.push_back(what);
  };
  check(ee.a0, ee.th0, ee.thd, "a_0 meets a theta end");
  check(ee.ad, ee.th0, ee.thd, "a_d meets a theta end");
  check(ee.as0, ee.ths0, ee.thsd, "a*_0 meets a theta* end");
  check(ee.asd, ee.ths0, ee.thsd, "a*_d meets a theta* end");
  return out;
}

EndEntries end_entries(const ParameterArray& pa) {
  if (!validate(pa).valid) fail(ErrorKind::InvalidArray, "array fails validation");
  const Scalar &vphi1 = pa.varphi[0], &vphid = pa.varphi[pa.d - 1];
  const Scalar &phi1 = pa.phi[0], &phid = pa.phi[pa.d - 1];
  EndEntries ee{pa.field,
                pa.d,
                pa.theta[0],
                pa.theta[pa.d],
                pa.theta_star[0],
                pa.theta_star[pa.d],
                (pa.theta[0] * phi1 - pa.theta[pa.d] * vphi1) / (phi1 - vphi1),
                (pa.theta[pa.d] * phid - pa.theta[0] * vphid) / (phid - vphid),
                (pa.theta_star[0] * phid - pa.theta_star[pa.d] * vphi1) / (phid - vphi1),
                (pa.theta_star[pa.d] * phi1 - pa.theta_star[0] * vphid) / (phi1 - vphid)};
  internal_check(end_invariant_violations(ee).empty(),
                 "end entries of a valid array violate their invariants");
  return ee;
}

EndParams end_params(const ParameterArray& pa) {
  if (!validate(pa).valid) fail(ErrorKind::InvalidArray, "array fails validation");
  return {pa.varphi[0], pa.varphi[pa.d - 1], pa.phi[0], pa.phi[pa.d - 1]};
}

Scalar omega(const ParameterArray& pa) {
  if (pa.d < 3) fail(ErrorKind::DiameterTooSmall, "omega needs d >= 3");
  if (!validate(pa).valid) fail(ErrorKind::InvalidArray, "array fails validation");
  const Scalar num = pa.phi[0] + pa.phi[pa.d - 1] - pa.varphi[0] - pa.varphi[pa.d - 1];
  return num / ((pa.theta[0] - pa.theta[pa.d]) *
                (pa.theta_star[0] - pa.theta_star[pa.d]));
}

Scalar omega_closed_form(LeonardType type, const std::optional<Scalar>& q,
                         int d, const FieldPtr& field) {
  switch (type) {
    case LeonardType::I: {
      if (!q) fail(ErrorKind::MissingQ, "type I needs q with beta = q + 1/q");
      const Scalar one = field->one();
      return (*q - one) * (pow(*q, d - 1) + one) / (pow(*q, d) - one);
    }
    case LeonardType::II: {
      const Scalar dv = field->from_int(d);
      if (dv.is_zero())
        fail(ErrorKind::CharacteristicDividesD, "characteristic divides d");
      return field->from_int(2) / dv;
    }
    case LeonardType::IIIPlus: {
      const Scalar dv = field->from_int(d);
      if (dv.is_zero())
        fail(ErrorKind::CharacteristicDividesD, "characteristic divides d");
      return field->from_int(2) * field->from_int(d - 1) / dv;
    }
    case LeonardType::IIIMinus:
      return field->from_int(2);
    case LeonardType::IV:
      return field->zero();
  }
  fail(ErrorKind::Internal, "bad type");
}

EndScalars delta_and_gammas(const EndEntries& ee,
                            const std::optional<TypeInfo>& type) {
  const Scalar delta = (ee.a0 - ee.th0) * (ee.as0 - ee.thsd) -
                       (ee.ad - ee.th0) * (ee.as0 - ee.ths0);
  const Scalar span = ee.ths0 - ee.thsd;
  std::array<Scalar, 4> gamma{
      (ee.a0 - ee.th0) * (ee.ad - ee.th0) * (ee.as0 - ee.ths0) * span,
      (ee.a0 - ee.th0) * (ee.ad - ee.thd) * (ee.as0 - ee.thsd) * span,
      (ee.a0 - ee.thd) * (ee.ad - ee.th0) * (ee.as0 - ee.ths0) * span,
      (ee.a0 - ee.th0) * (ee.ad - ee.th0) * (ee.as0 - ee.thsd) * span,
  };
  std::optional<Scalar> omega_value;
  if (type) {
    std::optional<Scalar> q;
    if (!type->q_candidates.empty()) q = type->q_candidates.front();
    if (type->type_tag != LeonardType::I || q)
      omega_value = omega_closed_form(type->type_tag, q, ee.d, ee.field);
  }
  return {std::move(omega_value), delta, std::move(gamma)};
}

bool check_restriction(const EndEntries& ee) {
  // cross-multiplied form of the cross-ratio identity
  return (ee.a0 - ee.th0) * (ee.ad - ee.thd) * (ee.as0 - ee.thsd) * (ee.asd - ee.ths0) ==
         (ee.a0 - ee.thd) * (ee.ad - ee.th0) * (ee.as0 - ee.ths0) * (ee.asd - ee.thsd);
}

Scalar restriction_cross_ratio(const EndEntries& ee) {
  return ((ee.a0 - ee.th0) * (ee.ad - ee.thd)) /
         ((ee.a0 - ee.thd) * (ee.ad - ee.th0));
}

Scalar solve_fourth_end_entry(const Scalar& th0, const Scalar& thd,
                              const Scalar& ths0, const Scalar& thsd,
                              const std::array<std::optional<Scalar>, 4>& avals) {
  int missing = -1;
  for (int i = 0; i < 4; ++i) {
    if (!avals[i]) {
      if (missing >= 0)
        fail(ErrorKind::ParseError, "exactly one of a0, ad, a*0, a*d may be absent");
      missing = i;
    }
  }
  if (missing < 0)
    fail(ErrorKind::ParseError, "exactly one of a0, ad, a*0, a*d must be absent");

  const FieldPtr field = th0.field();
  auto residual = [&](const Scalar& probe) {
    std::array<Scalar, 4> a{avals[0] ? *avals[0] : probe, avals[1] ? *avals[1] : probe,
                            avals[2] ? *avals[2] : probe, avals[3] ? *avals[3] : probe};
    return (a[0] - th0) * (a[1] - thd) * (a[2] - thsd) * (a[3] - ths0) -
           (a[0] - thd) * (a[1] - th0) * (a[2] - ths0) * (a[3] - thsd);
  };
  // the identity is linear in each end entry separately
  const Scalar at_zero = residual(field->zero());
  const Scalar coefficient = residual(field->one()) - at_zero;
  if (coefficient.is_zero())
    fail(ErrorKind::DegenerateCoefficient, "coefficient of the unknown vanishes");
  return -at_zero / coefficient;
}

bool degenerate_ratios(const EndEntries& ee) {
  const Scalar base = ee.a0 - ee.th0;
  const Scalar base_star = ee.as0 - ee.ths0;
  return (ee.ad - ee.th0) * base_star == (ee.as0 - ee.thsd) * base &&
         (ee.a0 - ee.thd) * base_star == (ee.asd - ee.ths0) * base &&
         (ee.ad - ee.thd) * base_star == (ee.asd - ee.thsd) * base &&
         (ee.a0 - ee.ad) * base_star == (ee.thsd - ee.ths0) * base;
}

}  // namespace lpkit
