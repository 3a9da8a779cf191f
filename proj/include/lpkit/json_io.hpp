#pragma once

#include <json.hpp>

#include "lpkit/d4.hpp"
#include "lpkit/endentry.hpp"
#include "lpkit/families.hpp"
#include "lpkit/matrixrep.hpp"
#include "lpkit/parray.hpp"
#include "lpkit/reconstruct.hpp"

namespace lpkit {

// ordered_json keeps insertion order, which together with the canonical
// scalar encoding makes every emitted document byte-deterministic
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Wraps a payload as a top-level document carrying "lpkit_schema": 1.
Json make_document(Json payload);

/// Checks and strips the schema tag of an input document (ParseError when
/// missing or unsupported).
void require_schema(const Json& doc);

Json field_to_json(const FieldPtr& field);
FieldPtr field_from_json(const Json& j);

Json scalars_to_json(const FieldPtr& field, const std::vector<Scalar>& v);
std::vector<Scalar> scalars_from_json(const FieldPtr& field, const Json& j);

/// {"lpkit_schema":1,"field":...,"d":...,"theta":[...],"theta_star":[...],
///  "varphi":[...],"phi":[...]}; key order fixed, lengths enforced.
Json parray_to_json(const ParameterArray& pa);
ParameterArray parray_from_json(const Json& doc);

Json report_to_json(const ValidationReport& report, const FieldPtr& field);
Json typeinfo_to_json(const TypeInfo& info, const FieldPtr& field);

Json ends_to_json(const EndEntries& ee);
EndEntries ends_from_json(const FieldPtr& field, int d, const Json& j);

Json end_params_to_json(const EndParams& ep, const FieldPtr& field);

/// Output of the `end` command.
Json end_report_to_json(const ParameterArray& pa);

ReconstructionInput reconstruction_input_from_json(const Json& doc);
Json reconstruction_to_json(const ReconstructionResult& result, bool with_trace);

FamilyBase family_base_from_json(const Json& doc, FamilyCase family_case);
Json family_instance_to_json(const FamilyInstance& inst);
Json sweep_to_json(const FamilyBase& base, const SweepResult& result);

/// Output of the `oracle` command: the trace-recomputed array and the
/// principal sequences.
Json oracle_to_json(const ParameterArray& recomputed,
                    const std::vector<Scalar>& principal,
                    const std::vector<Scalar>& dual_principal);

/// Input of the `complete` command: field, d and the eigenvalue sequences.
struct CompletionInput {
  FieldPtr field;
  int d = 0;
  std::vector<Scalar> theta, theta_star;
};
CompletionInput completion_input_from_json(const Json& doc);

Json error_to_json(const Error& e);

}  // namespace lpkit
