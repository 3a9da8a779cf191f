#pragma once

#include <optional>
#include <vector>

#include "lpkit/field.hpp"

namespace lpkit {

/// The raw data of a parameter array of diameter d: eigenvalue sequences
/// theta_0..theta_d and theta*_0..theta*_d plus the split-sequence values
/// varphi_1..varphi_d and phi_1..phi_d.  Only structural invariants (lengths,
/// shared field) are enforced here; whether the five defining conditions hold
/// is the job of validate().
struct ParameterArray {
  FieldPtr field;
  int d = 0;
  std::vector<Scalar> theta;       // size d+1
  std::vector<Scalar> theta_star;  // size d+1
  std::vector<Scalar> varphi;      // size d, varphi[i-1] is varphi_i
  std::vector<Scalar> phi;         // size d

  bool operator==(const ParameterArray& o) const;
};

/// Throws InvalidArray unless lengths and fields are consistent.
void check_structure(const ParameterArray& pa);

enum class FailureKind {
  DistinctTheta,      // condition (i), theta
  DistinctThetaStar,  // condition (i), theta*
  NonzeroVarphi,      // condition (ii), varphi
  NonzeroPhi,         // condition (ii), phi
  EqIII,              // condition (iii) at index i
  EqIV,               // condition (iv) at index i
  RatioNotConstant,   // condition (v) at index i
};

const char* to_string(FailureKind kind);

struct ValidationFailure {
  FailureKind kind;
  int i = -1;
  int j = -1;  // second index for distinctness pairs
};

struct ValidationReport {
  bool valid = false;
  std::vector<ValidationFailure> failures;
  // vartheta_1..vartheta_d, the partial sums of (theta_l - theta_{d-l}) /
  // (theta_0 - theta_d); empty when theta_0 = theta_d makes them undefined.
  std::vector<Scalar> vartheta;
  // common value of the condition-(v) ratios, present for d >= 3 when the
  // ratios are constant; equals beta + 1
  std::optional<Scalar> beta_plus_one;
  int witness_index = 2;  // the index the common ratio was read from
};

/// Checks conditions (i)-(v) exactly; failures are data, not errors.
ValidationReport validate(const ParameterArray& pa);

/// (theta_0 - theta_3)/(theta_1 - theta_2) - 1, read from the witness index
/// and checked constant across all admissible indices.
/// Throws DiameterTooSmall (d < 3) or NotConstantRatio.
Scalar fundamental_beta(const ParameterArray& pa);

enum class LeonardType { I, II, IIIPlus, IIIMinus, IV };

const char* to_string(LeonardType type);

/// Classification by beta, the characteristic and the parity of d.  Total:
/// every (beta, char, d) combination lands in exactly one type.
LeonardType type_from_beta(const Scalar& beta, int d);

struct TypeInfo {
  Scalar beta;
  std::vector<Scalar> q_candidates;  // roots of q + 1/q = beta, possibly empty
  LeonardType type_tag;
  bool degenerate;  // varphi_1 + varphi_d = phi_1 + phi_d
};

/// Requires d >= 3 and a valid array (InvalidArray otherwise).
TypeInfo classify_type(const ParameterArray& pa);

/// Builds the unique parameter array with the given eigenvalue sequences and
/// phi_1 = phi1_seed: varphi_i from condition (iii), then phi_i from (iv).
/// Throws ZeroParameter listing every vanishing varphi_i / phi_i.
ParameterArray complete_from_seed(const FieldPtr& field, int d,
                                  std::vector<Scalar> theta,
                                  std::vector<Scalar> theta_star,
                                  const Scalar& phi1_seed);

}  // namespace lpkit
