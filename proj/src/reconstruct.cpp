#include "lpkit/reconstruct.hpp"

namespace lpkit {

namespace {

// The eight end entries viewed as a substitution target for the D4 symbols:
// star swaps the starred and unstarred families, the double arrow swaps
// theta_0 <-> theta_d and a*_0 <-> a*_d while fixing a_0, a_d and theta*.
// Decorated closed-form symbols (K*, L*, K-double-arrow, ...) are the base
// formulas evaluated on the transformed view.
struct EndsView {
  Scalar th0, thd, ths0, thsd, a0, ad, as0, asd;

  static EndsView of(const EndEntries& ee) {
    return {ee.th0, ee.thd, ee.ths0, ee.thsd, ee.a0, ee.ad, ee.as0, ee.asd};
  }
  EndsView star() const { return {ths0, thsd, th0, thd, as0, asd, a0, ad}; }
  EndsView ddown() const { return {thd, th0, ths0, thsd, a0, ad, asd, as0}; }

  Scalar delta() const {
    return (a0 - th0) * (as0 - thsd) - (ad - th0) * (as0 - ths0);
  }
  Scalar delta_star() const { return star().delta(); }
};

struct TypeFormulas {
  LeonardType type;
  int d;
  FieldPtr field;
  std::optional<Scalar> q;

  Scalar qp(int e) const { return pow(*q, e); }
  Scalar ci(long long v) const { return field->from_int(v); }

  Scalar l(const EndsView& e, int i) const {
    const Scalar first = (e.a0 - e.th0) * (e.asd - e.ths0);
    const Scalar second = (e.a0 - e.thd) * (e.as0 - e.ths0);
    switch (type) {
      case LeonardType::I:
        return (qp(2 * d - i - 1) - field->one()) * first -
               qp(d - i) * (qp(i - 1) - field->one()) * second;
      case LeonardType::II:
        return ci(2 * d - i - 1) * first - ci(i - 1) * second;
      case LeonardType::IIIPlus:
        return ci(2 * d - i - 1) * first + ci(i - 1) * second;
      case LeonardType::IIIMinus:
        if (i % 2 == 0) return ci(i) * first + ci(i) * second;
        return ci(2 * d - i - 1) * first - ci(i - 1) * second;
      default:
        fail(ErrorKind::Internal, "no L formula for this type");
    }
  }

  Scalar k(const EndsView& e, int i) const {
    const Scalar span = e.th0 - e.thd;
    switch (type) {
      case LeonardType::I:
        return (qp(i) - field->one()) * span /
               ((qp(d - 1) - field->one()) * (qp(d) - field->one()) *
                e.delta_star()) *
               l(e, i);
      case LeonardType::II:
        return ci(i) * span / (ci(d) * ci(d - 1) * e.delta_star()) * l(e, i);
      case LeonardType::IIIPlus:
        if (i % 2 == 0) return -(ci(i) * span / ci(d));
        return span / (ci(d) * e.delta_star()) * l(e, i);
      case LeonardType::IIIMinus:
        return span / (ci(d - 1) * e.delta_star()) * l(e, i);
      default:
        fail(ErrorKind::Internal, "no K formula for this type");
    }
  }

  // coefficient of the correction term in the varphi_i / phi_i displays
  Scalar correction_coefficient(int i) const {
    switch (type) {
      case LeonardType::I:
        return (qp(i) - field->one()) * (qp(d - i + 1) - field->one()) *
               (qp(d - 1) + field->one());
      case LeonardType::II:
        return ci(2LL * i * (d - i + 1));
      case LeonardType::IIIPlus:
        return i % 2 == 0 ? ci(2LL * i * (d - 1)) : ci(2LL * (d - i + 1) * (d - 1));
      case LeonardType::IIIMinus:
        return i % 2 == 0 ? field->zero() : ci(2);
      default:
        fail(ErrorKind::Internal, "no correction for this type");
    }
  }

  // denominator of the correction term: (q^d-1)^2 Delta, d^2 Delta or Delta
  Scalar correction_denominator(const Scalar& delta) const {
    switch (type) {
      case LeonardType::I: {
        const Scalar f = qp(d) - field->one();
        return f * f * delta;
      }
      case LeonardType::II:
      case LeonardType::IIIPlus:
        return ci(d) * ci(d) * delta;
      case LeonardType::IIIMinus:
        return delta;
      default:
        fail(ErrorKind::Internal, "no correction for this type");
    }
  }
};

void check_nonzero_integers(const TypeFormulas& tf) {
  // these cannot vanish for end data of a genuine array (the type bounds the
  // characteristic), so a hit means inconsistent raw input
  auto require = [&](long long v, const char* what) {
    if (tf.ci(v).is_zero()) fail(ErrorKind::CharacteristicDividesD, what);
  };
  switch (tf.type) {
    case LeonardType::II:
      require(tf.d, "characteristic divides d");
      require(tf.d - 1, "characteristic divides d-1");
      break;
    case LeonardType::IIIPlus:
      require(tf.d, "characteristic divides d");
      break;
    case LeonardType::IIIMinus:
      require(tf.d - 1, "characteristic divides d-1");
      break;
    default:
      break;
  }
}

std::string missing_q_hint(const Scalar& beta) {
  const FieldPtr& field = beta.field();
  if (!field->solve_unit_quadratic(beta).empty())
    return "type I needs q; beta = q + 1/q has roots in this field, pass one";
  switch (field->kind()) {
    case FieldKind::Rationals:
    case FieldKind::QuadraticExt:
      return "type I needs q; no root of q + 1/q = beta here, adjoining "
             "sqrt(beta^2 - 4) would provide one";
    case FieldKind::FiniteField:
      return "type I needs q; no root of q + 1/q = beta here, the degree-2 "
             "extension of this field would provide one";
  }
  return "type I needs q";
}

std::optional<Scalar> pick_q(const ReconstructionInput& input, LeonardType type) {
  const FieldPtr& field = input.field;
  if (type != LeonardType::I) return std::nullopt;
  if (!input.q) fail(ErrorKind::MissingQ, missing_q_hint(input.beta));
  const Scalar& q = *input.q;
  if (q.is_zero() || q + q.inverse() != input.beta)
    fail(ErrorKind::ValidationFailed, "q does not satisfy q + 1/q = beta");
  for (int i = 1; i <= input.d; ++i)
    if (pow(q, i) == field->one())
      fail(ErrorKind::ValidationFailed, "q^i = 1 for some i <= d");
  return q;
}

Scalar omega_for(const ReconstructionInput& input, LeonardType type,
                 const std::optional<Scalar>& q) {
  return omega_closed_form(type, q, input.d, input.field);
}

}  // namespace

EndParams recover_end_parameters(const ReconstructionInput& input) {
  if (input.d < 3) fail(ErrorKind::DiameterTooSmall, "reconstruction needs d >= 3");
  const LeonardType type = type_from_beta(input.beta, input.d);
  const std::optional<Scalar> q = pick_q(input, type);
  const EndScalars es = delta_and_gammas(input.ends);
  if (es.delta.is_zero())
    fail(ErrorKind::DegenerateDelta,
         "Delta = 0: the end entries do not determine the system");
  const Scalar omega_value = omega_for(input, type, q);
  auto recover = [&](const Scalar& gamma) { return -(omega_value * gamma) / es.delta; };
  return {recover(es.gamma[0]), recover(es.gamma[1]), recover(es.gamma[2]),
          recover(es.gamma[3])};
}

ReconstructionResult reconstruct(const ReconstructionInput& input) {
  if (input.d < 3) fail(ErrorKind::DiameterTooSmall, "reconstruction needs d >= 3");
  {
    const auto violations = end_invariant_violations(input.ends);
    if (!violations.empty())
      fail(ErrorKind::ValidationFailed, "end entries: " + violations.front());
  }
  const EndsView base = EndsView::of(input.ends);
  const Scalar delta = base.delta();
  if (delta.is_zero())
    fail(ErrorKind::DegenerateDelta,
         "Delta = 0: infinitely many systems share these end entries "
         "(see the family constructions)");
  if (base.delta_star().is_zero())
    fail(ErrorKind::ValidationFailed, "Delta* = 0 while Delta != 0: inconsistent ends");
  const LeonardType type = type_from_beta(input.beta, input.d);
  if (type == LeonardType::IV)
    fail(ErrorKind::UnsupportedType,
         "type IV is always degenerate; no closed-form reconstruction exists");
  const std::optional<Scalar> q = pick_q(input, type);

  const TypeFormulas tf{type, input.d, input.field, q};
  check_nonzero_integers(tf);

  const EndsView starred = base.star();
  const EndsView ddowned = base.ddown();
  const int d = input.d;

  ReconstructionTrace trace{{}, {}, {}, {}, {}, {},
                            delta, base.delta_star(), recover_end_parameters(input)};
  for (int i = 0; i <= d; ++i) {
    trace.l.push_back(tf.l(base, i));
    trace.k.push_back(tf.k(base, i));
    trace.l_star.push_back(tf.l(starred, i));
    trace.k_star.push_back(tf.k(starred, i));
    trace.l_down.push_back(tf.l(ddowned, i));
    trace.k_down.push_back(tf.k(ddowned, i));
  }
  internal_check(trace.k[0].is_zero() && trace.k_star[0].is_zero(),
                 "K_0 and K*_0 must vanish");

  ParameterArray out;
  out.field = input.field;
  out.d = d;
  for (int i = 0; i <= d; ++i) {
    out.theta.push_back(input.ends.th0 + trace.k[i]);
    out.theta_star.push_back(input.ends.ths0 + trace.k_star[i]);
  }
  const Scalar shared = (input.ends.ad - input.ends.th0) *
                        (input.ends.as0 - input.ends.ths0) *
                        (input.ends.ths0 - input.ends.thsd);
  for (int i = 1; i <= d; ++i) {
    const Scalar correction = tf.correction_coefficient(i) * shared /
                              tf.correction_denominator(delta);
    out.varphi.push_back(trace.k_down[d - i + 1] * trace.k_star[i] -
                         correction * (input.ends.a0 - input.ends.thd));
    out.phi.push_back(trace.k[d - i + 1] * trace.k_star[i] -
                      correction * (input.ends.a0 - input.ends.th0));
  }

  if (!validate(out).valid)
    fail(ErrorKind::ValidationFailed,
         "reconstructed sequence is not a parameter array; inconsistent ends");
  if (end_entries(out) != input.ends || fundamental_beta(out) != input.beta)
    fail(ErrorKind::ValidationFailed,
         "reconstructed array does not reproduce the given ends and beta");
  internal_check(end_params(out) ==
                     EndParams{out.varphi[0], out.varphi[d - 1], out.phi[0],
                               out.phi[d - 1]} &&
                 end_params(out) == trace.recovered_end_params,
                 "recovered end parameters disagree with the array");
  return {std::move(out), std::move(trace)};
}

}  // namespace lpkit
