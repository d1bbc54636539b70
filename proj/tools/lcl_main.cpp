// Command-line front end for the LCL toolkit: normalization, principal
// typing, Hilbert proof checking, bounded entailment and term-model
// satisfaction, with stable exit codes for scripting:
//   0 positive verdict, 1 definitive negative, 2 resource-bounded unknown,
//   3 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lcl/lcl.hpp"

namespace {

using nlohmann::json;

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInputError = 3;

struct Options {
  lcl::Bounds bounds;
  std::string format = "text";
};

long env_long(const char* name, long fallback) {
  const char* v = std::getenv(name);
  if (!v) return fallback;
  try {
    return std::stol(v);
  } catch (...) {
    return fallback;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lcl::parse_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Options& opt, const json& payload, const std::string& text) {
  if (opt.format == "json")
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << text;
}

json bounds_json(const lcl::Bounds& b) {
  return json{{"fuel", b.fuel}, {"arity", b.arity}, {"depth", b.depth}};
}

int cmd_normalize(const Options& opt, const std::string& term_text) {
  lcl::Term t = lcl::parse_term(term_text);
  lcl::NormalizeResult r = lcl::normalize(t, opt.bounds.fuel);
  json payload{{"command", "normalize"},
               {"input", lcl::print_term(t)},
               {"result", lcl::print_term(r.term)},
               {"steps", r.steps},
               {"status", r.reached_normal_form ? "normal_form" : "fuel_exhausted"},
               {"bounds", bounds_json(opt.bounds)}};
  if (r.reached_normal_form) {
    emit(opt, payload,
         lcl::print_term(r.term) + " (" + std::to_string(r.steps) + " steps)\n");
    return kExitPositive;
  }
  emit(opt, payload,
       "fuel exhausted after " + std::to_string(r.steps) + " steps; so far: " +
           lcl::print_term(r.term) + "\n");
  return kExitUnknown;
}

int cmd_infer(const Options& opt, const std::string& basis_text, const std::string& term_text) {
  lcl::Basis gamma = lcl::parse_basis(basis_text);
  lcl::Term t = lcl::parse_term(term_text);
  auto ty = lcl::infer_type(gamma, t);
  json payload{{"command", "infer"},
               {"basis", lcl::print_basis(gamma)},
               {"term", lcl::print_term(t)},
               {"typable", ty.has_value()}};
  if (ty) payload["principal_type"] = lcl::print_type(*ty);
  if (ty) {
    emit(opt, payload, lcl::print_type(*ty) + "\n");
    return kExitPositive;
  }
  emit(opt, payload, "Untypable\n");
  return kExitNegative;
}

json line_reports_json(const lcl::ProofCheckResult& result) {
  json lines = json::array();
  for (std::size_t i = 0; i < result.lines.size(); ++i) {
    const lcl::LineReport& rep = result.lines[i];
    json entry{{"line", i + 1},
               {"status", rep.status == lcl::LineReport::Status::Ok          ? "ok"
                          : rep.status == lcl::LineReport::Status::Undecided ? "undecided"
                                                                             : "bad"}};
    if (!rep.note.empty()) entry["note"] = rep.note;
    if (rep.side_conditions && rep.side_conditions->equality)
      entry["ax5_equality"] = rep.side_conditions->equality->str();
    lines.push_back(std::move(entry));
  }
  return lines;
}

int report_proof_result(const Options& opt, const lcl::ProofCheckResult& result,
                        const std::string& heading) {
  std::string verdict = result.status == lcl::ProofCheckResult::Status::Accepted ? "Accepted"
                        : result.status == lcl::ProofCheckResult::Status::Rejected
                            ? "Rejected"
                            : "Inconclusive";
  json payload{{"command", heading},
               {"verdict", verdict},
               {"lines", line_reports_json(result)},
               {"bounds", bounds_json(opt.bounds)}};
  std::string text = verdict;
  if (result.status != lcl::ProofCheckResult::Status::Accepted) {
    payload["line"] = result.line + 1;
    payload["reason"] = result.reason;
    text += " at line " + std::to_string(result.line + 1) + ": " + result.reason;
  }
  text += "\n";
  for (std::size_t i = 0; i < result.lines.size(); ++i) {
    const lcl::LineReport& rep = result.lines[i];
    text += "  line " + std::to_string(i + 1) + ": ";
    text += rep.status == lcl::LineReport::Status::Ok          ? "ok"
            : rep.status == lcl::LineReport::Status::Undecided ? "undecided"
                                                               : "bad";
    if (!rep.note.empty()) text += " (" + rep.note + ")";
    text += "\n";
  }
  emit(opt, payload, text);
  switch (result.status) {
    case lcl::ProofCheckResult::Status::Accepted: return kExitPositive;
    case lcl::ProofCheckResult::Status::Rejected: return kExitNegative;
    default: return kExitUnknown;
  }
}

int cmd_check_proof(const Options& opt, const std::string& path) {
  lcl::HilbertProof proof = lcl::parse_proof(read_file(path));
  return report_proof_result(opt, lcl::check_proof(proof, opt.bounds), "check-proof");
}

std::vector<lcl::Formula> parse_theory_file(const std::string& text) {
  std::vector<lcl::Formula> theory;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);
    if (line.empty() || line[0] == '#') continue;
    theory.push_back(lcl::parse_formula(line));
  }
  return theory;
}

int cmd_entail(const Options& opt, const std::string& theory_path, const std::string& goal_text,
               const std::string& out_path) {
  std::vector<lcl::Formula> theory =
      theory_path.empty() ? std::vector<lcl::Formula>{} : parse_theory_file(read_file(theory_path));
  lcl::Formula goal = lcl::parse_formula(goal_text);
  lcl::EntailResult r = lcl::entails(theory, goal, opt.bounds);

  json payload{{"command", "entail"},
               {"goal", lcl::print_formula(goal)},
               {"bounds", bounds_json(opt.bounds)},
               {"note", r.note}};
  switch (r.status) {
    case lcl::EntailResult::Status::Proved: {
      payload["verdict"] = "Proved";
      std::string proof_text = lcl::print_proof(*r.proof);
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw lcl::parse_error("cannot write proof file: " + out_path);
        out << proof_text;
        payload["proof_file"] = out_path;
        emit(opt, payload, "Proved (" + r.note + "); proof written to " + out_path + "\n");
      } else {
        payload["proof"] = proof_text;
        emit(opt, payload, "Proved (" + r.note + ")\n" + proof_text);
      }
      return kExitPositive;
    }
    case lcl::EntailResult::Status::Refuted: {
      payload["verdict"] = "Refuted";
      json cv = json::object();
      std::string text = "Refuted; countervaluation over the saturated set:\n";
      for (const auto& [atom, val] : r.countervaluation) {
        cv[atom] = val;
        text += "  " + atom + " := " + (val ? "T" : "F") + "\n";
      }
      payload["countervaluation"] = cv;
      emit(opt, payload, text);
      return kExitNegative;
    }
    default: {
      payload["verdict"] = "Unknown";
      emit(opt, payload, "Unknown: " + r.note + "\n");
      return kExitUnknown;
    }
  }
}

int cmd_model_sat(const Options& opt, const std::string& model_path,
                  const std::string& formula_text) {
  lcl::ModelDescription desc = lcl::parse_model_file(read_file(model_path));
  lcl::Bounds bounds = desc.bounds.value_or(opt.bounds);
  lcl::Formula f = lcl::parse_formula(formula_text);
  lcl::WfResult wf = lcl::wf_formula(f);
  if (!wf.well_formed)
    throw lcl::parse_error("ill-formed formula: atom " + lcl::print_statement(*wf.offending) +
                           " is not in CL->");

  lcl::TermModel model = lcl::term_model(desc.basis, bounds);
  lcl::SatVerdict verdict = lcl::satisfies(model, lcl::Environment::standard(), f);

  json atoms = json::array();
  std::string text = std::string(verdict.value.str()) + "\n";
  for (const lcl::AtomTrace& at : verdict.atoms) {
    atoms.push_back(json{{"atom", lcl::print_statement(at.statement)},
                         {"element", lcl::print_term(at.element)},
                         {"verdict", at.verdict.str()}});
    text += "  " + lcl::print_statement(at.statement) + " -> " + at.verdict.str() +
            "  [element " + lcl::print_term(at.element) + "]\n";
  }
  json payload{{"command", "model-sat"},
               {"basis", lcl::print_basis(desc.basis)},
               {"formula", lcl::print_formula(f)},
               {"verdict", verdict.value.str()},
               {"atoms", atoms},
               {"bounds", bounds_json(bounds)}};
  emit(opt, payload, text);
  if (verdict.value.is_true()) return kExitPositive;
  if (verdict.value.is_false()) return kExitNegative;
  return kExitUnknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LCL toolkit: SKI rewriting, simple types, Hilbert proofs, term models"};
  app.require_subcommand(1);

  Options opt;
  opt.bounds.fuel = env_long("LCL_FUEL", opt.bounds.fuel);
  opt.bounds.arity = static_cast<int>(env_long("LCL_ARITY", opt.bounds.arity));
  opt.bounds.depth = static_cast<int>(env_long("LCL_DEPTH", opt.bounds.depth));
  if (const char* f = std::getenv("LCL_FORMAT")) opt.format = f;

  app.add_option("--fuel", opt.bounds.fuel, "reduction step budget")->capture_default_str();
  app.add_option("--arity", opt.bounds.arity, "fresh-variable bound for =w,eta")
      ->capture_default_str();
  app.add_option("--depth", opt.bounds.depth, "axiom saturation depth")->capture_default_str();
  app.add_option("--format", opt.format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string term_text, basis_text, proof_path, theory_path, goal_text, out_path, model_path,
      formula_text;

  CLI::App* normalize = app.add_subcommand("normalize", "reduce a term to weak normal form");
  normalize->add_option("term", term_text, "term text")->required();

  CLI::App* infer = app.add_subcommand("infer", "principal type under a basis");
  infer->add_option("basis", basis_text, "basis text, may be empty")->required();
  infer->add_option("term", term_text, "term text")->required();

  CLI::App* check = app.add_subcommand("check-proof", "check a Hilbert proof file");
  check->add_option("file", proof_path, "proof file")->required();

  CLI::App* entail = app.add_subcommand("entail", "bounded entailment with proof output");
  entail->add_option("theory", theory_path, "theory file (one formula per line)")->required();
  entail->add_option("goal", goal_text, "goal formula")->required();
  entail->add_option("--out", out_path, "write the proof file here on success");

  CLI::App* sat = app.add_subcommand("model-sat", "satisfaction in a term model");
  sat->add_option("model", model_path, "model description file")->required();
  sat->add_option("formula", formula_text, "formula text")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(normalize)) return cmd_normalize(opt, term_text);
    if (app.got_subcommand(infer)) return cmd_infer(opt, basis_text, term_text);
    if (app.got_subcommand(check)) return cmd_check_proof(opt, proof_path);
    if (app.got_subcommand(entail)) return cmd_entail(opt, theory_path, goal_text, out_path);
    if (app.got_subcommand(sat)) return cmd_model_sat(opt, model_path, formula_text);
  } catch (const lcl::parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const lcl::precondition_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
