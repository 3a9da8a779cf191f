#pragma once

#include <array>
#include <optional>

#include "lpkit/parray.hpp"

namespace lpkit {

/// The eight end-entries of a Leonard system: the extreme eigenvalues and the
/// extreme entries of the principal and dual principal sequences.
struct EndEntries {
  FieldPtr field;
  int d = 0;
  Scalar th0, thd;    // theta_0, theta_d
  Scalar ths0, thsd;  // theta*_0, theta*_d
  Scalar a0, ad;      // a_0, a_d
  Scalar as0, asd;    // a*_0, a*_d

  bool operator==(const EndEntries& o) const;
};

/// Violations of the end-entry invariants (theta_0 != theta_d etc. and
/// a-values distinct from the theta ends); empty for ends of a valid array.
std::vector<std::string> end_invariant_violations(const EndEntries& ee);

struct EndParams {
  Scalar varphi1, varphid;  // varphi_1, varphi_d
  Scalar phi1, phid;        // phi_1, phi_d

  bool operator==(const EndParams& o) const;
};

struct EndScalars {
  std::optional<Scalar> omega;  // present when type information was supplied
  Scalar delta;
  std::array<Scalar, 4> gamma;  // Gamma_1..Gamma_4
};

/// a_0, a_d, a*_0, a*_d by the closed forms
///   a_0  = (theta_0 phi_1 - theta_d varphi_1) / (phi_1 - varphi_1)
///   a_d  = (theta_d phi_d - theta_0 varphi_d) / (phi_d - varphi_d)
///   a*_0 = (theta*_0 phi_d - theta*_d varphi_1) / (phi_d - varphi_1)
///   a*_d = (theta*_d phi_1 - theta*_0 varphi_d) / (phi_1 - varphi_d)
/// Requires a valid array with d >= 1.
EndEntries end_entries(const ParameterArray& pa);

EndParams end_params(const ParameterArray& pa);

/// (phi_1 + phi_d - varphi_1 - varphi_d) / ((theta_0-theta_d)(theta*_0-theta*_d)),
/// for valid arrays with d >= 3.
Scalar omega(const ParameterArray& pa);

/// The closed form of omega by type:
///   I: (q-1)(q^(d-1)+1)/(q^d-1)   II: 2/d   III+: 2(d-1)/d   III-: 2   IV: 0.
/// q is consulted only for type I (MissingQ when absent there); the result is
/// invariant under q -> 1/q.  CharacteristicDividesD when a II/III+ row would
/// divide by zero.
Scalar omega_closed_form(LeonardType type, const std::optional<Scalar>& q,
                         int d, const FieldPtr& field);

/// Delta = (a_0-theta_0)(a*_0-theta*_d) - (a_d-theta_0)(a*_0-theta*_0) and
/// the four products Gamma_1..Gamma_4; omega is filled from the closed form
/// when type information is supplied (and a q candidate exists for type I).
EndScalars delta_and_gammas(const EndEntries& ee,
                            const std::optional<TypeInfo>& type = std::nullopt);

/// The cross-ratio identity
///   (a_0-theta_0)(a_d-theta_d) / ((a_0-theta_d)(a_d-theta_0))
///     = (a*_0-theta*_0)(a*_d-theta*_d) / ((a*_0-theta*_d)(a*_d-theta*_0));
/// true for the ends of every valid array.
bool check_restriction(const EndEntries& ee);

/// Both sides of the restriction cross-ratio equal
/// varphi_1 varphi_d / (phi_1 phi_d); exposed for cross-checks.
Scalar restriction_cross_ratio(const EndEntries& ee);

/// Given the four theta ends and three of (a_0, a_d, a*_0, a*_d), solves the
/// linearized restriction identity for the missing one.  Exactly one entry of
/// `avals` must be absent.  DegenerateCoefficient when the linear coefficient
/// of the unknown vanishes.
Scalar solve_fourth_end_entry(const Scalar& th0, const Scalar& thd,
                              const Scalar& ths0, const Scalar& thsd,
                              const std::array<std::optional<Scalar>, 4>& avals);

/// The four ratio identities of the degenerate regime, e.g.
/// (a_d-theta_0)/(a_0-theta_0) = (a*_0-theta*_d)/(a*_0-theta*_0); all four
/// hold iff the ends come from an array with varphi_1+varphi_d = phi_1+phi_d.
bool degenerate_ratios(const EndEntries& ee);

}  // namespace lpkit
