// lpkit: batch command-line front end for Leonard-system parameter arrays.
// Every command reads one JSON document (file path or '-' for stdin) and
// writes one JSON document to stdout; diagnostics go to stderr.  Exit status:
// 0 on success, 1 when a well-formed input fails validation, 2 on malformed
// input or errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lpkit/json_io.hpp"

namespace {

using lpkit::Json;

Json read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(path);
    if (!in) lpkit::fail(lpkit::ErrorKind::ParseError, "cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    lpkit::fail(lpkit::ErrorKind::ParseError, e.what());
  }
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"exact toolkit for Leonard-system parameter arrays"};
  app.require_subcommand(1);

  std::string input_path;
  std::string word_text;
  std::string case_text;
  std::string zeta_text;
  std::string phi1_text;
  bool with_trace = false;
  bool do_sweep = false;

  auto add_input = [&input_path](CLI::App* cmd) {
    cmd->add_option("input", input_path, "input JSON file, or - for stdin")
        ->required();
  };

  CLI::App* cmd_validate =
      app.add_subcommand("validate", "check the five parameter-array conditions");
  add_input(cmd_validate);

  CLI::App* cmd_classify =
      app.add_subcommand("classify", "fundamental parameter, type and degeneracy");
  add_input(cmd_classify);

  CLI::App* cmd_d4 = app.add_subcommand("d4", "apply a D4 word to an array");
  cmd_d4->add_option("--word", word_text, "word over s (star), d (down), D (ddown)")
      ->required();
  add_input(cmd_d4);

  CLI::App* cmd_end =
      app.add_subcommand("end", "end entries, end parameters, omega, delta, gammas");
  add_input(cmd_end);

  CLI::App* cmd_reconstruct = app.add_subcommand(
      "reconstruct", "rebuild the array from beta and the end entries");
  cmd_reconstruct->add_flag("--trace", with_trace, "attach intermediate values");
  add_input(cmd_reconstruct);

  CLI::App* cmd_family = app.add_subcommand(
      "family", "degenerate-regime families with shared end entries");
  cmd_family->add_option("--case", case_text, "I or IV")->required();
  CLI::Option* zeta_opt = cmd_family->add_option("--zeta", zeta_text, "a single zeta");
  CLI::Option* sweep_opt = cmd_family->add_flag(
      "--sweep", do_sweep, "sweep every nonzero zeta of a finite field");
  zeta_opt->excludes(sweep_opt);
  add_input(cmd_family);

  CLI::App* cmd_complete = app.add_subcommand(
      "complete", "build the array from eigenvalue sequences and phi_1");
  cmd_complete->add_option("--phi1", phi1_text, "the phi_1 seed")->required();
  add_input(cmd_complete);

  CLI::App* cmd_oracle = app.add_subcommand(
      "oracle", "recompute the array and principal sequences from traces");
  add_input(cmd_oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help, or the message to stderr
    if (code == 0) return 0;
    emit(lpkit::error_to_json(lpkit::Error(lpkit::ErrorKind::ParseError, e.what())));
    return 2;
  }

  if (cmd_validate->parsed()) {
    const lpkit::ParameterArray pa = lpkit::parray_from_json(read_document(input_path));
    const lpkit::ValidationReport report = lpkit::validate(pa);
    emit(lpkit::report_to_json(report, pa.field));
    return report.valid ? 0 : 1;
  }
  if (cmd_classify->parsed()) {
    const lpkit::ParameterArray pa = lpkit::parray_from_json(read_document(input_path));
    emit(lpkit::typeinfo_to_json(lpkit::classify_type(pa), pa.field));
    return 0;
  }
  if (cmd_d4->parsed()) {
    const lpkit::ParameterArray pa = lpkit::parray_from_json(read_document(input_path));
    emit(lpkit::parray_to_json(lpkit::apply(pa, lpkit::parse_word(word_text))));
    return 0;
  }
  if (cmd_end->parsed()) {
    const lpkit::ParameterArray pa = lpkit::parray_from_json(read_document(input_path));
    emit(lpkit::end_report_to_json(pa));
    return 0;
  }
  if (cmd_reconstruct->parsed()) {
    const lpkit::ReconstructionInput input =
        lpkit::reconstruction_input_from_json(read_document(input_path));
    emit(lpkit::reconstruction_to_json(lpkit::reconstruct(input), with_trace));
    return 0;
  }
  if (cmd_family->parsed()) {
    lpkit::FamilyCase family_case;
    if (case_text == "I") {
      family_case = lpkit::FamilyCase::TypeI;
    } else if (case_text == "IV") {
      family_case = lpkit::FamilyCase::TypeIV;
    } else {
      lpkit::fail(lpkit::ErrorKind::ParseError, "--case must be I or IV");
    }
    const lpkit::FamilyBase base =
        lpkit::family_base_from_json(read_document(input_path), family_case);
    if (do_sweep) {
      emit(lpkit::sweep_to_json(base, lpkit::sweep_full_field(base)));
      return 0;
    }
    if (zeta_text.empty())
      lpkit::fail(lpkit::ErrorKind::ParseError, "family needs --zeta or --sweep");
    const lpkit::Scalar zeta = base.field->parse(zeta_text);
    const lpkit::FamilyInstance inst = family_case == lpkit::FamilyCase::TypeI
                                           ? lpkit::family_type_I(base, zeta)
                                           : lpkit::family_type_IV(base, zeta);
    emit(lpkit::make_document(lpkit::family_instance_to_json(inst)));
    return inst.valid ? 0 : 1;
  }
  if (cmd_complete->parsed()) {
    const lpkit::CompletionInput in =
        lpkit::completion_input_from_json(read_document(input_path));
    const lpkit::Scalar seed = in.field->parse(phi1_text);
    emit(lpkit::parray_to_json(
        lpkit::complete_from_seed(in.field, in.d, in.theta, in.theta_star, seed)));
    return 0;
  }
  if (cmd_oracle->parsed()) {
    const lpkit::ParameterArray pa = lpkit::parray_from_json(read_document(input_path));
    const lpkit::MatrixModel model = lpkit::build_split_model(pa);
    const lpkit::IdempotentSet idem = lpkit::primitive_idempotents(model);
    const auto [principal, dual] = lpkit::principal_sequences(model, idem);
    emit(lpkit::oracle_to_json(lpkit::parray_from_traces(model), principal, dual));
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const lpkit::Error& e) {
    std::cerr << e.what() << "\n";
    emit(lpkit::error_to_json(e));
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    emit(lpkit::error_to_json(lpkit::Error(lpkit::ErrorKind::Internal, e.what())));
    return 2;
  }
}
