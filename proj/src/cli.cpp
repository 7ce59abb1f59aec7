#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcons/engine.hpp"

namespace pcons {

namespace {

using json = nlohmann::json;

constexpr int kOkExit = 0;        // consistent / entailed
constexpr int kNegativeExit = 1;  // inconsistent / not entailed / ambiguous
constexpr int kErrorExit = 2;     // parse or contract errors

json assignment_json(const TruthAssignment& t) {
  json bits = json::object();
  for (const auto& [atom, v] : t.values()) bits[atom] = v ? 1 : 0;
  return bits;
}

void print_certificate(const KnowledgeBase& kb, const ConsistencyCertificate& certificate,
                       std::ostream& out) {
  if (!certificate.removals.empty()) {
    out << "removal sequence:\n";
    for (const RemovalStep& step : certificate.removals) {
      out << "  [" << step.id << "] " << kb.by_id(step.id).to_string() << "   via "
          << step.witness.to_string() << "\n";
    }
  }
  if (!certificate.strict_witnesses.empty()) {
    out << "strict witnesses:\n";
    for (const auto& [id, witness] : certificate.strict_witnesses) {
      out << "  [" << id << "] " << kb.by_id(id).to_string() << "   via " << witness.to_string()
          << "\n";
    }
  }
}

int run_check(const std::string& kb_path, bool minimize, bool as_json, std::ostream& out) {
  const KnowledgeBase kb = KnowledgeBase::load_file(kb_path);
  SolverSession session;
  const ConsistencyVerdict verdict = check_consistency(kb, session);

  if (verdict.is_consistent()) {
    if (as_json) {
      json removals = json::array();
      for (const RemovalStep& step : verdict.certificate().removals) {
        removals.push_back({step.id, assignment_json(step.witness)});
      }
      json stricts = json::object();
      for (const auto& [id, witness] : verdict.certificate().strict_witnesses) {
        stricts[std::to_string(id)] = assignment_json(witness);
      }
      out << json{{"verdict", "consistent"},
                  {"core", json::array()},
                  {"removals", std::move(removals)},
                  {"strict_witnesses", std::move(stricts)}}
                 .dump()
          << "\n";
    } else {
      out << "consistent\n";
      print_certificate(kb, verdict.certificate(), out);
    }
    return kOkExit;
  }

  std::set<int> core = verdict.core().ids;
  if (minimize) core = minimize_core(kb, core);
  const char* phase =
      verdict.core().phase == StallPhase::DefeasibleStall ? "defeasible stall" : "strict stall";
  if (as_json) {
    out << json{{"verdict", "inconsistent"},
                {"phase", phase},
                {"minimized", minimize},
                {"core", std::vector<int>(core.begin(), core.end())},
                {"removals", json::array()}}
               .dump()
        << "\n";
  } else {
    out << "inconsistent (" << phase << ")\n";
    out << (minimize ? "minimal core:\n" : "core:\n");
    for (const int id : core) {
      out << "  [" << id << "] " << kb.by_id(id).to_string() << "\n";
    }
  }
  return kNegativeExit;
}

int run_entail(const std::string& kb_path, const std::string& query_text, bool as_json,
               std::ostream& out) {
  const KnowledgeBase kb = KnowledgeBase::load_file(kb_path);
  const Conditional query = parse_conditional(query_text);
  SolverSession session;

  if (query.modality == Modality::Defeasible) {
    const EntailmentResult result = p_entails(kb, query, session);
    if (as_json) {
      out << json{{"verdict", to_string(result.kind)},
                  {"negation_class", to_string(result.negation.cls)},
                  {"query_class", to_string(result.query.cls)}}
                 .dump()
          << "\n";
    } else {
      out << to_string(result.kind) << "\n";
    }
    return result.kind == EntailmentKind::Entailed ? kOkExit : kNegativeExit;
  }

  const bool entailed = strict_p_entails(kb, query, session);
  if (as_json) {
    out << json{{"verdict", entailed ? "StrictlyEntailed" : "NotStrictlyEntailed"}}.dump() << "\n";
  } else {
    out << (entailed ? "StrictlyEntailed" : "NotStrictlyEntailed") << "\n";
  }
  return entailed ? kOkExit : kNegativeExit;
}

int run_witness(const std::string& kb_path, const std::string& epsilon_text, bool as_json,
                std::ostream& out) {
  const KnowledgeBase kb = KnowledgeBase::load_file(kb_path);
  const Rational epsilon = parse_rational(epsilon_text);
  SolverSession session;
  const ConsistencyVerdict verdict = check_consistency(kb, session);

  if (!verdict.is_consistent()) {
    std::set<int> core = verdict.core().ids;
    if (as_json) {
      out << json{{"verdict", "inconsistent"},
                  {"core", std::vector<int>(core.begin(), core.end())}}
                 .dump()
          << "\n";
    } else {
      out << "inconsistent; no witness model exists\n";
    }
    return kNegativeExit;
  }

  const ProbabilityModel model = build_witness_model(verdict.certificate(), epsilon);
  std::map<std::string, std::string> probabilities;
  for (const Conditional& sentence : kb.sentences()) {
    probabilities[sentence.to_string()] =
        rational_to_string(conditional_probability(model, sentence));
  }

  if (as_json) {
    out << json{{"verdict", "consistent"},
                {"model", json::parse(model_to_json_text(model))},
                {"probabilities", probabilities}}
               .dump()
        << "\n";
  } else {
    out << "consistent; witness model over " << model.points().size()
        << " assignment(s) at epsilon = " << rational_to_string(epsilon) << "\n";
    for (const auto& [assignment, weight] : model.points()) {
      out << "  weight " << rational_to_string(weight) << ": " << assignment.to_string() << "\n";
    }
    for (const auto& [sentence, probability] : probabilities) {
      out << "P(" << sentence << ") = " << probability << "\n";
    }
  }
  return kOkExit;
}

int run_eval(const std::string& model_path, const std::string& query_text, std::ostream& out) {
  std::ifstream in(model_path);
  if (!in) throw Error("cannot open model file '" + model_path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const ProbabilityModel model = model_from_json_text(buffer.str());
  const Conditional query = parse_conditional(query_text);
  out << rational_to_string(conditional_probability(model, query)) << "\n";
  return kOkExit;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Consistency, entailment and witness models for knowledge bases of defeasible"
               " (->) and strict (=>) conditionals."};
  app.name("pcons");
  app.require_subcommand(1);

  std::string kb_path;
  std::string model_path;
  std::string query_text;
  std::string epsilon_text;
  bool minimize = false;
  bool json_check = false;
  bool json_entail = false;
  bool json_witness = false;

  CLI::App* check = app.add_subcommand("check", "Decide consistency of a knowledge base");
  check->add_option("kbfile", kb_path, "knowledge base file")->required();
  check->add_flag("--minimize", minimize, "shrink the reported core to a minimal one");
  check->add_flag("--json", json_check, "machine-readable output");

  CLI::App* entail = app.add_subcommand("entail", "Decide whether a conditional follows");
  entail->add_option("kbfile", kb_path, "knowledge base file")->required();
  entail->add_option("conditional", query_text, "query, e.g. \"p & b -> ~f\"")->required();
  entail->add_flag("--json", json_entail, "machine-readable output");

  CLI::App* witness = app.add_subcommand("witness", "Construct an explicit probability model");
  witness->add_option("kbfile", kb_path, "knowledge base file")->required();
  witness->add_option("--epsilon", epsilon_text, "margin as a rational, e.g. 1/10")->required();
  witness->add_flag("--json", json_witness, "machine-readable output");

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a conditional on a stored model");
  eval->add_option("modelfile", model_path, "model file (witness output)")->required();
  eval->add_option("conditional", query_text, "query conditional")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOkExit : kErrorExit;
  }

  try {
    if (check->parsed()) return run_check(kb_path, minimize, json_check, out);
    if (entail->parsed()) return run_entail(kb_path, query_text, json_entail, out);
    if (witness->parsed()) return run_witness(kb_path, epsilon_text, json_witness, out);
    return run_eval(model_path, query_text, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kErrorExit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kErrorExit;
  }
}

}  // namespace pcons
