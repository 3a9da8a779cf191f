#include "lpkit/parray.hpp"

#include <sstream>

namespace lpkit {

bool ParameterArray::operator==(const ParameterArray& o) const {
  return field->same(*o.field) && d == o.d && theta == o.theta &&
         theta_star == o.theta_star && varphi == o.varphi && phi == o.phi;
}

void check_structure(const ParameterArray& pa) {
  if (!pa.field) fail(ErrorKind::InvalidArray, "missing field");
  if (pa.d < 1) fail(ErrorKind::InvalidArray, "diameter must be >= 1");
  const size_t n = static_cast<size_t>(pa.d) + 1;
  if (pa.theta.size() != n || pa.theta_star.size() != n)
    fail(ErrorKind::InvalidArray, "eigenvalue sequences must have d+1 entries");
  if (pa.varphi.size() != n - 1 || pa.phi.size() != n - 1)
    fail(ErrorKind::InvalidArray, "varphi and phi must have d entries");
  auto check_field = [&](const std::vector<Scalar>& v) {
    for (const Scalar& s : v)
      if (!s.field()->same(*pa.field))
        fail(ErrorKind::FieldMismatch, "scalar outside the array's field");
  };
  check_field(pa.theta);
  check_field(pa.theta_star);
  check_field(pa.varphi);
  check_field(pa.phi);
}

const char* to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::DistinctTheta: return "Distinctness-theta";
    case FailureKind::DistinctThetaStar: return "Distinctness-theta-star";
    case FailureKind::NonzeroVarphi: return "Nonzero-varphi";
    case FailureKind::NonzeroPhi: return "Nonzero-phi";
    case FailureKind::EqIII: return "Eq-iii";
    case FailureKind::EqIV: return "Eq-iv";
    case FailureKind::RatioNotConstant: return "RatioNotConstant";
  }
  return "?";
}

namespace {

// vartheta_i = sum_{l=0}^{i-1} (theta_l - theta_{d-l}) / (theta_0 - theta_d),
// for i = 1..d; requires theta_0 != theta_d
std::vector<Scalar> compute_vartheta(const ParameterArray& pa) {
  const Scalar span = pa.theta[0] - pa.theta[pa.d];
  std::vector<Scalar> out;
  Scalar acc = pa.field->zero();
  for (int i = 1; i <= pa.d; ++i) {
    acc = acc + (pa.theta[i - 1] - pa.theta[pa.d - (i - 1)]) / span;
    out.push_back(acc);
  }
  return out;
}

}  // namespace

ValidationReport validate(const ParameterArray& pa) {
  check_structure(pa);
  ValidationReport report;

  // (i) pairwise distinct eigenvalues
  for (int i = 0; i <= pa.d; ++i)
    for (int j = i + 1; j <= pa.d; ++j) {
      if (pa.theta[i] == pa.theta[j])
        report.failures.push_back({FailureKind::DistinctTheta, i, j});
      if (pa.theta_star[i] == pa.theta_star[j])
        report.failures.push_back({FailureKind::DistinctThetaStar, i, j});
    }

  // (ii) nonvanishing split sequences
  for (int i = 1; i <= pa.d; ++i) {
    if (pa.varphi[i - 1].is_zero())
      report.failures.push_back({FailureKind::NonzeroVarphi, i, -1});
    if (pa.phi[i - 1].is_zero())
      report.failures.push_back({FailureKind::NonzeroPhi, i, -1});
  }

  // (iii), (iv): need theta_0 != theta_d for the vartheta sums
  if (pa.theta[0] != pa.theta[pa.d]) {
    report.vartheta = compute_vartheta(pa);
    for (int i = 1; i <= pa.d; ++i) {
      const Scalar off = pa.theta_star[i] - pa.theta_star[0];
      const Scalar lhs3 = pa.phi[0] * report.vartheta[i - 1] +
                          off * (pa.theta[i - 1] - pa.theta[pa.d]);
      if (pa.varphi[i - 1] != lhs3)
        report.failures.push_back({FailureKind::EqIII, i, -1});
      const Scalar lhs4 = pa.varphi[0] * report.vartheta[i - 1] +
                          off * (pa.theta[pa.d - i + 1] - pa.theta[0]);
      if (pa.phi[i - 1] != lhs4)
        report.failures.push_back({FailureKind::EqIV, i, -1});
    }
  }

  // (v) both ratios equal and independent of i over 2 <= i <= d-1
  if (pa.d >= 3) {
    bool denominators_ok = true;
    for (int i = 2; i <= pa.d - 1 && denominators_ok; ++i)
      if (pa.theta[i - 1] == pa.theta[i] || pa.theta_star[i - 1] == pa.theta_star[i])
        denominators_ok = false;
    if (denominators_ok) {
      const Scalar witness = (pa.theta[0] - pa.theta[3]) / (pa.theta[1] - pa.theta[2]);
      bool constant = true;
      for (int i = 2; i <= pa.d - 1; ++i) {
        const Scalar ratio =
            (pa.theta[i - 2] - pa.theta[i + 1]) / (pa.theta[i - 1] - pa.theta[i]);
        const Scalar ratio_star = (pa.theta_star[i - 2] - pa.theta_star[i + 1]) /
                                  (pa.theta_star[i - 1] - pa.theta_star[i]);
        if (ratio != witness || ratio_star != witness) {
          report.failures.push_back({FailureKind::RatioNotConstant, i, -1});
          constant = false;
        }
      }
      if (constant) report.beta_plus_one = witness;
    }
  }

  report.valid = report.failures.empty();
  return report;
}

Scalar fundamental_beta(const ParameterArray& pa) {
  check_structure(pa);
  if (pa.d < 3) fail(ErrorKind::DiameterTooSmall, "beta needs d >= 3");
  for (int i = 2; i <= pa.d - 1; ++i)
    if (pa.theta[i - 1] == pa.theta[i] || pa.theta_star[i - 1] == pa.theta_star[i])
      fail(ErrorKind::NotConstantRatio, "vanishing denominator in the ratio");
  const Scalar witness = (pa.theta[0] - pa.theta[3]) / (pa.theta[1] - pa.theta[2]);
  for (int i = 2; i <= pa.d - 1; ++i) {
    const Scalar ratio =
        (pa.theta[i - 2] - pa.theta[i + 1]) / (pa.theta[i - 1] - pa.theta[i]);
    const Scalar ratio_star = (pa.theta_star[i - 2] - pa.theta_star[i + 1]) /
                              (pa.theta_star[i - 1] - pa.theta_star[i]);
    if (ratio != witness || ratio_star != witness)
      fail(ErrorKind::NotConstantRatio, "condition (v) fails");
  }
  return witness - pa.field->one();
}

const char* to_string(LeonardType type) {
  switch (type) {
    case LeonardType::I: return "I";
    case LeonardType::II: return "II";
    case LeonardType::IIIPlus: return "IIIplus";
    case LeonardType::IIIMinus: return "IIIminus";
    case LeonardType::IV: return "IV";
  }
  return "?";
}

LeonardType type_from_beta(const Scalar& beta, int d) {
  const FieldPtr& f = beta.field();
  const Scalar two = f->from_int(2);
  const Scalar minus_two = f->from_int(-2);
  if (beta != two && beta != minus_two) return LeonardType::I;
  if (f->characteristic() != 2) {
    if (beta == two) return LeonardType::II;
    return d % 2 == 0 ? LeonardType::IIIPlus : LeonardType::IIIMinus;
  }
  // char 2: here beta = 2 = -2 = 0
  return LeonardType::IV;
}

TypeInfo classify_type(const ParameterArray& pa) {
  if (pa.d < 3) fail(ErrorKind::DiameterTooSmall, "types need d >= 3");
  const ValidationReport report = validate(pa);
  if (!report.valid) fail(ErrorKind::InvalidArray, "array fails conditions (i)-(v)");

  TypeInfo info{fundamental_beta(pa), {}, LeonardType::I, false};
  info.type_tag = type_from_beta(info.beta, pa.d);
  info.q_candidates = pa.field->solve_unit_quadratic(info.beta);
  info.degenerate = (pa.varphi[0] + pa.varphi[pa.d - 1]) ==
                    (pa.phi[0] + pa.phi[pa.d - 1]);

  // consistency with the degenerate-regime dichotomy
  switch (info.type_tag) {
    case LeonardType::I:
      if (!info.q_candidates.empty()) {
        const Scalar& q = info.q_candidates.front();
        const bool root_condition = pow(q, pa.d - 1) == -pa.field->one();
        internal_check(info.degenerate == root_condition,
                       "type I degeneracy disagrees with q^(d-1) = -1");
      }
      break;
    case LeonardType::II:
    case LeonardType::IIIPlus:
    case LeonardType::IIIMinus:
      internal_check(!info.degenerate, "types II and III are never degenerate");
      break;
    case LeonardType::IV:
      internal_check(info.degenerate, "type IV is always degenerate");
      break;
  }
  return info;
}

ParameterArray complete_from_seed(const FieldPtr& field, int d,
                                  std::vector<Scalar> theta,
                                  std::vector<Scalar> theta_star,
                                  const Scalar& phi1_seed) {
  ParameterArray pa;
  pa.field = field;
  pa.d = d;
  pa.theta = std::move(theta);
  pa.theta_star = std::move(theta_star);
  if (d < 1 || pa.theta.size() != static_cast<size_t>(d) + 1 ||
      pa.theta_star.size() != static_cast<size_t>(d) + 1)
    fail(ErrorKind::InvalidArray, "eigenvalue sequences must have d+1 entries");
  for (int i = 0; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      if (pa.theta[i] == pa.theta[j])
        fail(ErrorKind::InvalidArray, "theta entries are not pairwise distinct");
      if (pa.theta_star[i] == pa.theta_star[j])
        fail(ErrorKind::InvalidArray, "theta* entries are not pairwise distinct");
    }
  if (d >= 3) {
    const Scalar witness = (pa.theta[0] - pa.theta[3]) / (pa.theta[1] - pa.theta[2]);
    for (int i = 2; i <= d - 1; ++i) {
      const Scalar ratio =
          (pa.theta[i - 2] - pa.theta[i + 1]) / (pa.theta[i - 1] - pa.theta[i]);
      const Scalar ratio_star = (pa.theta_star[i - 2] - pa.theta_star[i + 1]) /
                                (pa.theta_star[i - 1] - pa.theta_star[i]);
      if (ratio != witness || ratio_star != witness)
        fail(ErrorKind::NotConstantRatio, "condition (v) fails for the seeds");
    }
  }

  const std::vector<Scalar> vartheta = compute_vartheta(pa);
  for (int i = 1; i <= d; ++i) {
    const Scalar off = pa.theta_star[i] - pa.theta_star[0];
    pa.varphi.push_back(phi1_seed * vartheta[i - 1] +
                        off * (pa.theta[i - 1] - pa.theta[d]));
  }
  for (int i = 1; i <= d; ++i) {
    const Scalar off = pa.theta_star[i] - pa.theta_star[0];
    pa.phi.push_back(pa.varphi[0] * vartheta[i - 1] +
                     off * (pa.theta[d - i + 1] - pa.theta[0]));
  }
  // the i = 1 instance of (iv) must reproduce the seed; an algebraic identity
  if (pa.phi[0] != phi1_seed)
    fail(ErrorKind::SeedInconsistent, "phi_1 does not reproduce the seed");

  std::ostringstream zeros;
  for (int i = 1; i <= d; ++i) {
    if (pa.varphi[i - 1].is_zero())
      zeros << (zeros.tellp() > 0 ? ", " : "") << "varphi_" << i;
    if (pa.phi[i - 1].is_zero())
      zeros << (zeros.tellp() > 0 ? ", " : "") << "phi_" << i;
  }
  if (zeros.tellp() > 0) fail(ErrorKind::ZeroParameter, zeros.str());

  internal_check(validate(pa).valid, "completed array fails validation");
  return pa;
}

}  // namespace lpkit
