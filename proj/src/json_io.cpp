#include "lpkit/json_io.hpp"

namespace lpkit {

namespace {

const Json& expect(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    fail(ErrorKind::ParseError, std::string("missing key '") + key + "'");
  return *it;
}

int expect_int(const Json& j, const char* key) {
  const Json& v = expect(j, key);
  if (!v.is_number_integer())
    fail(ErrorKind::ParseError, std::string("key '") + key + "' must be an integer");
  return v.get<int>();
}

std::string expect_string(const Json& j, const char* key) {
  const Json& v = expect(j, key);
  if (!v.is_string())
    fail(ErrorKind::ParseError, std::string("key '") + key + "' must be a string");
  return v.get<std::string>();
}

Scalar expect_scalar(const FieldPtr& field, const Json& j, const char* key) {
  return field->parse(expect_string(j, key));
}

}  // namespace

Json make_document(Json payload) {
  Json doc;
  doc["lpkit_schema"] = kSchemaVersion;
  for (auto& [key, value] : payload.items()) doc[key] = std::move(value);
  return doc;
}

void require_schema(const Json& doc) {
  if (!doc.is_object()) fail(ErrorKind::ParseError, "document must be a JSON object");
  auto it = doc.find("lpkit_schema");
  if (it == doc.end()) fail(ErrorKind::ParseError, "missing lpkit_schema");
  if (!it->is_number_integer() || it->get<int>() != kSchemaVersion)
    fail(ErrorKind::ParseError, "unsupported lpkit_schema version");
}

Json field_to_json(const FieldPtr& field) {
  Json j;
  switch (field->kind()) {
    case FieldKind::Rationals:
      j["kind"] = "Q";
      break;
    case FieldKind::QuadraticExt:
      j["kind"] = "Qsqrt";
      j["D"] = static_cast<long long>(field->radicand());
      break;
    case FieldKind::FiniteField: {
      j["kind"] = "GF";
      j["p"] = static_cast<long long>(field->prime());
      j["k"] = field->extension_degree();
      Json mod = Json::array();
      for (const BigInt& c : field->modulus()) mod.push_back(static_cast<long long>(c));
      j["modulus"] = std::move(mod);
      break;
    }
  }
  return j;
}

FieldPtr field_from_json(const Json& j) {
  const std::string kind = expect_string(j, "kind");
  if (kind == "Q") return Field::rationals();
  if (kind == "Qsqrt") {
    const Json& d = expect(j, "D");
    if (!d.is_number_integer()) fail(ErrorKind::ParseError, "D must be an integer");
    return Field::quadratic(BigInt(d.get<long long>()));
  }
  if (kind == "GF") {
    const long long p = expect(j, "p").get<long long>();
    const int k = expect_int(j, "k");
    if (j.contains("modulus")) {
      std::vector<BigInt> modulus;
      for (const Json& c : j.at("modulus")) {
        if (!c.is_number_integer())
          fail(ErrorKind::ParseError, "modulus coefficients must be integers");
        modulus.emplace_back(c.get<long long>());
      }
      return Field::finite(BigInt(p), k, std::move(modulus));
    }
    return Field::finite(BigInt(p), k);
  }
  fail(ErrorKind::ParseError, "unknown field kind '" + kind + "'");
}

Json scalars_to_json(const FieldPtr& field, const std::vector<Scalar>& v) {
  Json out = Json::array();
  for (const Scalar& s : v) out.push_back(field->format(s));
  return out;
}

std::vector<Scalar> scalars_from_json(const FieldPtr& field, const Json& j) {
  if (!j.is_array()) fail(ErrorKind::ParseError, "expected an array of scalars");
  std::vector<Scalar> out;
  for (const Json& s : j) {
    if (!s.is_string()) fail(ErrorKind::ParseError, "scalars must be strings");
    out.push_back(field->parse(s.get<std::string>()));
  }
  return out;
}

Json parray_to_json(const ParameterArray& pa) {
  Json j;
  j["field"] = field_to_json(pa.field);
  j["d"] = pa.d;
  j["theta"] = scalars_to_json(pa.field, pa.theta);
  j["theta_star"] = scalars_to_json(pa.field, pa.theta_star);
  j["varphi"] = scalars_to_json(pa.field, pa.varphi);
  j["phi"] = scalars_to_json(pa.field, pa.phi);
  return make_document(std::move(j));
}

ParameterArray parray_from_json(const Json& doc) {
  require_schema(doc);
  ParameterArray pa;
  pa.field = field_from_json(expect(doc, "field"));
  pa.d = expect_int(doc, "d");
  pa.theta = scalars_from_json(pa.field, expect(doc, "theta"));
  pa.theta_star = scalars_from_json(pa.field, expect(doc, "theta_star"));
  pa.varphi = scalars_from_json(pa.field, expect(doc, "varphi"));
  pa.phi = scalars_from_json(pa.field, expect(doc, "phi"));
  check_structure(pa);
  return pa;
}

Json report_to_json(const ValidationReport& report, const FieldPtr& field) {
  Json j;
  j["valid"] = report.valid;
  Json failures = Json::array();
  for (const ValidationFailure& f : report.failures) {
    Json entry;
    entry["kind"] = to_string(f.kind);
    entry["i"] = f.i;
    if (f.j >= 0) entry["j"] = f.j;
    failures.push_back(std::move(entry));
  }
  j["failures"] = std::move(failures);
  if (!report.vartheta.empty())
    j["vartheta"] = scalars_to_json(field, report.vartheta);
  if (report.beta_plus_one) {
    j["beta_plus_one"] = field->format(*report.beta_plus_one);
    j["witness_index"] = report.witness_index;
  }
  return make_document(std::move(j));
}

Json typeinfo_to_json(const TypeInfo& info, const FieldPtr& field) {
  Json j;
  j["beta"] = field->format(info.beta);
  j["q_candidates"] = scalars_to_json(field, info.q_candidates);
  j["type"] = to_string(info.type_tag);
  j["degenerate"] = info.degenerate;
  return make_document(std::move(j));
}

Json ends_to_json(const EndEntries& ee) {
  const FieldPtr& f = ee.field;
  Json j;
  j["theta0"] = f->format(ee.th0);
  j["thetad"] = f->format(ee.thd);
  j["theta_star0"] = f->format(ee.ths0);
  j["theta_stard"] = f->format(ee.thsd);
  j["a0"] = f->format(ee.a0);
  j["ad"] = f->format(ee.ad);
  j["a_star0"] = f->format(ee.as0);
  j["a_stard"] = f->format(ee.asd);
  return j;
}

EndEntries ends_from_json(const FieldPtr& field, int d, const Json& j) {
  return {field,
          d,
          expect_scalar(field, j, "theta0"),
          expect_scalar(field, j, "thetad"),
          expect_scalar(field, j, "theta_star0"),
          expect_scalar(field, j, "theta_stard"),
          expect_scalar(field, j, "a0"),
          expect_scalar(field, j, "ad"),
          expect_scalar(field, j, "a_star0"),
          expect_scalar(field, j, "a_stard")};
}

Json end_params_to_json(const EndParams& ep, const FieldPtr& field) {
  Json j;
  j["varphi1"] = field->format(ep.varphi1);
  j["varphid"] = field->format(ep.varphid);
  j["phi1"] = field->format(ep.phi1);
  j["phid"] = field->format(ep.phid);
  return j;
}

Json end_report_to_json(const ParameterArray& pa) {
  const EndEntries ee = end_entries(pa);
  const EndParams ep = end_params(pa);
  std::optional<TypeInfo> info;
  if (pa.d >= 3) info = classify_type(pa);
  const EndScalars es = delta_and_gammas(ee, info);

  Json j;
  j["field"] = field_to_json(pa.field);
  j["d"] = pa.d;
  j["end_entries"] = ends_to_json(ee);
  j["end_params"] = end_params_to_json(ep, pa.field);
  if (pa.d >= 3) j["omega"] = pa.field->format(omega(pa));
  j["delta"] = pa.field->format(es.delta);
  Json gammas = Json::array();
  for (const Scalar& g : es.gamma) gammas.push_back(pa.field->format(g));
  j["gammas"] = std::move(gammas);
  return make_document(std::move(j));
}

ReconstructionInput reconstruction_input_from_json(const Json& doc) {
  require_schema(doc);
  FieldPtr field = field_from_json(expect(doc, "field"));
  const int d = expect_int(doc, "d");
  EndEntries ends = ends_from_json(field, d, expect(doc, "ends"));
  Scalar beta = expect_scalar(field, doc, "beta");
  std::optional<Scalar> q;
  if (doc.contains("q")) q = expect_scalar(field, doc, "q");
  return {std::move(field), d, std::move(ends), std::move(beta), std::move(q)};
}

Json reconstruction_to_json(const ReconstructionResult& result, bool with_trace) {
  Json doc = parray_to_json(result.array);
  if (with_trace) {
    const FieldPtr& f = result.array.field;
    Json t;
    t["L"] = scalars_to_json(f, result.trace.l);
    t["K"] = scalars_to_json(f, result.trace.k);
    t["Lstar"] = scalars_to_json(f, result.trace.l_star);
    t["Kstar"] = scalars_to_json(f, result.trace.k_star);
    t["Ldown"] = scalars_to_json(f, result.trace.l_down);
    t["Kdown"] = scalars_to_json(f, result.trace.k_down);
    t["delta"] = f->format(result.trace.delta);
    t["delta_star"] = f->format(result.trace.delta_star);
    t["recovered_end_params"] =
        end_params_to_json(result.trace.recovered_end_params, f);
    doc["trace"] = std::move(t);
  }
  return doc;
}

FamilyBase family_base_from_json(const Json& doc, FamilyCase family_case) {
  require_schema(doc);
  FieldPtr field = field_from_json(expect(doc, "field"));
  const int d = expect_int(doc, "d");
  EndEntries ends = ends_from_json(field, d, expect(doc, "ends"));
  std::optional<Scalar> q;
  if (doc.contains("q")) q = expect_scalar(field, doc, "q");
  return {std::move(field), d, std::move(ends), std::move(q), family_case};
}

Json family_instance_to_json(const FamilyInstance& inst) {
  const FieldPtr& field = inst.candidate.field;
  Json j;
  j["zeta"] = field->format(inst.zeta);
  j["valid"] = inst.valid;
  Json failures = Json::array();
  for (const ValidationFailure& f : inst.failures) {
    Json entry;
    entry["kind"] = to_string(f.kind);
    entry["i"] = f.i;
    if (f.j >= 0) entry["j"] = f.j;
    failures.push_back(std::move(entry));
  }
  j["failures"] = std::move(failures);
  j["candidate"] = parray_to_json(inst.candidate);
  return j;
}

Json sweep_to_json(const FamilyBase& base, const SweepResult& result) {
  Json j;
  j["case"] = base.family_case == FamilyCase::TypeI ? "I" : "IV";
  j["valid_count"] = result.valid_count;
  j["invalid_count"] = result.invalid_count;
  j["failure_bound"] = result.failure_bound;
  Json instances = Json::array();
  for (const FamilyInstance& inst : result.instances)
    instances.push_back(family_instance_to_json(inst));
  j["instances"] = std::move(instances);
  return make_document(std::move(j));
}

Json oracle_to_json(const ParameterArray& recomputed,
                    const std::vector<Scalar>& principal,
                    const std::vector<Scalar>& dual_principal) {
  Json j;
  j["array"] = parray_to_json(recomputed);
  j["principal"] = scalars_to_json(recomputed.field, principal);
  j["dual_principal"] = scalars_to_json(recomputed.field, dual_principal);
  return make_document(std::move(j));
}

CompletionInput completion_input_from_json(const Json& doc) {
  require_schema(doc);
  CompletionInput in;
  in.field = field_from_json(expect(doc, "field"));
  in.d = expect_int(doc, "d");
  in.theta = scalars_from_json(in.field, expect(doc, "theta"));
  in.theta_star = scalars_from_json(in.field, expect(doc, "theta_star"));
  return in;
}

Json error_to_json(const Error& e) {
  Json inner;
  inner["kind"] = to_string(e.kind());
  inner["detail"] = e.detail();
  Json j;
  j["error"] = std::move(inner);
  return make_document(std::move(j));
}

}  // namespace lpkit
