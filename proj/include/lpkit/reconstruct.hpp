#pragma once

#include <optional>

#include "lpkit/endentry.hpp"
#include "lpkit/parray.hpp"

namespace lpkit {

struct ReconstructionInput {
  FieldPtr field;
  int d = 0;
  EndEntries ends;
  Scalar beta;
  std::optional<Scalar> q;  // required when beta != +-2; q + 1/q = beta
};

/// Intermediate values of the reconstruction, kept for debuggability: the
/// base sequences L_i, K_i and their star- and double-arrow-decorated
/// variants (obtained by the D4 substitution on the end entries), plus the
/// two deltas and the recovered end parameters.
struct ReconstructionTrace {
  std::vector<Scalar> l, k;            // L_0..L_d, K_0..K_d
  std::vector<Scalar> l_star, k_star;  // starred variants
  std::vector<Scalar> l_down, k_down;  // double-arrow variants
  Scalar delta;
  Scalar delta_star;
  EndParams recovered_end_params;
};

struct ReconstructionResult {
  ParameterArray array;
  ReconstructionTrace trace;
};

/// (varphi_1, varphi_d, phi_1, phi_d) = -(Omega Gamma_k)/Delta for k = 1..4.
/// Throws DegenerateDelta when Delta = 0 (the end entries then do not
/// determine the system) and MissingQ for type I without q.
EndParams recover_end_parameters(const ReconstructionInput& input);

/// Rebuilds the full parameter array from beta (or q) and the eight end
/// entries, for types I, II, III+ and III-.  The result is validated and its
/// end entries and fundamental parameter are checked against the input.
ReconstructionResult reconstruct(const ReconstructionInput& input);

}  // namespace lpkit
