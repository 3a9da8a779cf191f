#pragma once

#include <optional>
#include <string>

#include "lpkit/endentry.hpp"
#include "lpkit/parray.hpp"

namespace lpkit {

enum class FamilyCase { TypeI, TypeIV };

/// The data driving a degenerate-regime family: the eight end entries plus,
/// for the type I case, a q with q^(d-1) = -1 and q^i != 1 for i <= d.
struct FamilyBase {
  FieldPtr field;
  int d = 0;
  EndEntries ends;
  std::optional<Scalar> q;  // type I only
  FamilyCase family_case = FamilyCase::TypeI;
};

/// Checks the case invariants (characteristic, q conditions, d = 3 for type
/// IV, degenerate ratio identities of the ends); throws WrongCase / MissingQ.
void validate_family_base(const FamilyBase& base);

/// One member of the family: the candidate sequence at a given zeta together
/// with its validation outcome.  Candidates always satisfy conditions
/// (iii)-(v); failures can only be of the distinctness or nonzero kinds.
struct FamilyInstance {
  Scalar zeta;
  ParameterArray candidate;
  bool valid = false;
  std::vector<ValidationFailure> failures;
};

/// The type I family: theta~_i = theta_0 + K_i(zeta) etc., built from
///   L_i(zeta) = (q+1)(q^(i-1)+1) zeta
///                 - (q-1)(q^(i-1)-1)(a*_0-theta*_0)(theta_0-theta_d)
///   K_i(zeta) = -(q^i-1) / (2 q^(i-1) (q^2-1)(a*_0-theta*_0)) L_i(zeta)
/// with starred / double-arrow variants via the substitutions zeta* = zeta
/// and zeta^dd = (a_0-theta_d) zeta / (a_0-theta_0).
FamilyInstance family_type_I(const FamilyBase& base, const Scalar& zeta);

/// The type IV family (characteristic 2, d = 3), the twelve displays built
/// directly from the end entries.
FamilyInstance family_type_IV(const FamilyBase& base, const Scalar& zeta);

struct FamilyPropertyReport {
  std::vector<std::string> checked;
};

/// For a valid instance, asserts (PropertyViolation otherwise):
/// the candidate's fundamental parameter equals q + 1/q (type I) resp. 0
/// (type IV); all eight end entries coincide with the base's; varphi~_1 =
/// zeta, so distinct valid zetas give distinct (non-isomorphic) arrays.
FamilyPropertyReport assert_family_properties(const FamilyBase& base,
                                              const FamilyInstance& inst);

struct SweepResult {
  std::vector<FamilyInstance> instances;
  int valid_count = 0;
  int invalid_count = 0;
  int failure_bound = 0;
};

/// Upper bound on the number of invalid zeta values in a full sweep: one per
/// eigenvalue pair plus two per varphi / phi index.
int sweep_failure_bound(int d);

SweepResult sweep(const FamilyBase& base, const std::vector<Scalar>& zetas);

/// Sweeps every nonzero element of a finite field in enumeration order.
SweepResult sweep_full_field(const FamilyBase& base);

}  // namespace lpkit
