#include "lpkit/families.hpp"

namespace lpkit {

void validate_family_base(const FamilyBase& base) {
  if (base.d < 3) fail(ErrorKind::WrongCase, "families need d >= 3");
  const auto violations = end_invariant_violations(base.ends);
  if (!violations.empty())
    fail(ErrorKind::WrongCase, "end entries: " + violations.front());
  if (!degenerate_ratios(base.ends))
    fail(ErrorKind::WrongCase,
         "end entries do not satisfy the degenerate ratio identities");
  switch (base.family_case) {
    case FamilyCase::TypeI: {
      if (base.field->characteristic() == 2)
        fail(ErrorKind::WrongCase, "type I family needs characteristic != 2");
      if (!base.q) fail(ErrorKind::MissingQ, "type I family needs q");
      const Scalar& q = *base.q;
      if (q.is_zero()) fail(ErrorKind::WrongCase, "q must be nonzero");
      for (int i = 1; i <= base.d; ++i)
        if (pow(q, i).is_one())
          fail(ErrorKind::WrongCase, "q^i = 1 for some 1 <= i <= d");
      if (pow(q, base.d - 1) != -base.field->one())
        fail(ErrorKind::WrongCase, "q^(d-1) != -1: not the degenerate type I case");
      break;
    }
    case FamilyCase::TypeIV:
      if (base.field->characteristic() != 2)
        fail(ErrorKind::WrongCase, "type IV family needs characteristic 2");
      if (base.d != 3) fail(ErrorKind::WrongCase, "type IV has d = 3");
      break;
  }
}

namespace {

FamilyInstance finish(const Scalar& zeta, ParameterArray candidate) {
  const ValidationReport report = validate(candidate);
  internal_check(candidate.varphi[0] == zeta, "varphi~_1(zeta) must equal zeta");
  for (const ValidationFailure& f : report.failures)
    internal_check(f.kind != FailureKind::EqIII && f.kind != FailureKind::EqIV &&
                       f.kind != FailureKind::RatioNotConstant,
                   "family candidate violates an unconditional identity");
  return {zeta, std::move(candidate), report.valid, report.failures};
}

}  // namespace

FamilyInstance family_type_I(const FamilyBase& base, const Scalar& zeta) {
  if (base.family_case != FamilyCase::TypeI)
    fail(ErrorKind::WrongCase, "base is not a type I family base");
  validate_family_base(base);
  if (zeta.is_zero()) fail(ErrorKind::ZeroZeta, "zeta must be nonzero");

  const EndEntries& ee = base.ends;
  const FieldPtr& field = base.field;
  const Scalar one = field->one();
  const Scalar two = field->from_int(2);
  const Scalar& q = *base.q;
  const int d = base.d;

  const Scalar q2m1 = q * q - one;  // q^2 - 1, nonzero since q != +-1
  // L_i and K_i from a zeta-value and the pair (a*-corner, theta-span) the
  // display uses; the starred and double-arrow variants reuse this with the
  // substituted data
  auto build = [&](const Scalar& z, const Scalar& corner, const Scalar& span,
                   std::vector<Scalar>& l_out, std::vector<Scalar>& k_out) {
    for (int i = 0; i <= d; ++i) {
      const Scalar qi1 = pow(q, i - 1);
      const Scalar l = (q + one) * (qi1 + one) * z -
                       (q - one) * (qi1 - one) * corner * span;
      k_out.push_back(-(pow(q, i) - one) / (two * qi1 * q2m1 * corner) * l);
      l_out.push_back(l);
    }
  };

  std::vector<Scalar> l, k, l_star, k_star, l_down, k_down;
  const Scalar theta_span = ee.th0 - ee.thd;
  const Scalar zeta_down = (ee.a0 - ee.thd) * zeta / (ee.a0 - ee.th0);
  build(zeta, ee.as0 - ee.ths0, theta_span, l, k);
  build(zeta, ee.a0 - ee.th0, ee.ths0 - ee.thsd, l_star, k_star);
  // the double arrow reverses the theta span and replaces a*_0 by a*_d
  build(zeta_down, ee.asd - ee.ths0, ee.thd - ee.th0, l_down, k_down);

  ParameterArray candidate;
  candidate.field = field;
  candidate.d = d;
  for (int i = 0; i <= d; ++i) {
    candidate.theta.push_back(ee.th0 + k[i]);
    candidate.theta_star.push_back(ee.ths0 + k_star[i]);
  }
  for (int i = 1; i <= d; ++i) {
    // (q^i-1)(q^(i-2)+1) / (q^(i-2)(q^2-1))
    const Scalar qi2 = pow(q, i - 2);
    const Scalar vth = (pow(q, i) - one) * (qi2 + one) / (qi2 * q2m1);
    candidate.varphi.push_back(k_down[d - i + 1] * k_star[i] + vth * zeta_down);
    candidate.phi.push_back(k[d - i + 1] * k_star[i] + vth * zeta);
  }
  return finish(zeta, std::move(candidate));
}

FamilyInstance family_type_IV(const FamilyBase& base, const Scalar& zeta) {
  if (base.family_case != FamilyCase::TypeIV)
    fail(ErrorKind::WrongCase, "base is not a type IV family base");
  validate_family_base(base);
  if (zeta.is_zero()) fail(ErrorKind::ZeroZeta, "zeta must be nonzero");

  const EndEntries& ee = base.ends;
  const Scalar shift = zeta / (ee.as0 - ee.ths0);
  const Scalar shift_star = zeta / (ee.a0 - ee.th0);

  ParameterArray candidate;
  candidate.field = base.field;
  candidate.d = 3;
  candidate.theta = {ee.th0, ee.th0 + shift, ee.thd + shift, ee.thd};
  candidate.theta_star = {ee.ths0, ee.ths0 + shift_star, ee.thsd + shift_star,
                          ee.thsd};
  const Scalar middle =
      (ee.ths0 - ee.thsd + shift_star) * (ee.th0 - ee.thd + shift);
  candidate.varphi = {zeta, middle, (ee.ad - ee.thd) * shift_star};
  candidate.phi = {(ee.a0 - ee.thd) * shift_star, middle,
                   (ee.ad - ee.th0) * shift_star};
  return finish(zeta, std::move(candidate));
}

FamilyPropertyReport assert_family_properties(const FamilyBase& base,
                                              const FamilyInstance& inst) {
  if (!inst.valid)
    fail(ErrorKind::PropertyViolation, "instance is not a valid parameter array");
  FamilyPropertyReport report;
  auto check = [&report](bool ok, const char* what) {
    if (!ok) fail(ErrorKind::PropertyViolation, what);
    report.checked.push_back(what);
  };

  const Scalar beta = fundamental_beta(inst.candidate);
  if (base.family_case == FamilyCase::TypeI)
    check(beta == *base.q + base.q->inverse(),
          "fundamental parameter equals q + 1/q");
  else
    check(beta.is_zero(), "fundamental parameter equals 0");
  check(end_entries(inst.candidate) == base.ends,
        "all eight end entries coincide with the base's");
  check(inst.candidate.varphi[0] == inst.zeta, "varphi_1 equals zeta");
  return report;
}

int sweep_failure_bound(int d) {
  // one zeta per eigenvalue pair, two per varphi / phi index
  return (d + 1) * d + 4 * d;
}

SweepResult sweep(const FamilyBase& base, const std::vector<Scalar>& zetas) {
  SweepResult result;
  result.failure_bound = sweep_failure_bound(base.d);
  for (const Scalar& zeta : zetas) {
    FamilyInstance inst = base.family_case == FamilyCase::TypeI
                              ? family_type_I(base, zeta)
                              : family_type_IV(base, zeta);
    if (inst.valid) {
      assert_family_properties(base, inst);
      ++result.valid_count;
    } else {
      ++result.invalid_count;
    }
    result.instances.push_back(std::move(inst));
  }
  return result;
}

SweepResult sweep_full_field(const FamilyBase& base) {
  if (base.field->kind() != FieldKind::FiniteField)
    fail(ErrorKind::WrongCase, "full sweeps need a finite field");
  std::vector<Scalar> zetas;
  for (BigInt idx = 1; idx < base.field->order(); ++idx)
    zetas.push_back(base.field->element_at(idx));
  return sweep(base, zetas);
}

}  // namespace lpkit
