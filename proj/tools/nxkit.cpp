// Command line front end: parse/print, census, logic-specification
// normalization, classical embedding, model checking, bounded countermodel
// search, and derivation verification.
//
// Exit codes: 0 success (model found / checks passed), 1 negative outcome
// (check failed / nothing found within bounds), 2 input or usage error,
// 3 search budget exhausted.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nxkit/census.hpp"
#include "nxkit/derivation.hpp"
#include "nxkit/embed.hpp"
#include "nxkit/interp.hpp"
#include "nxkit/logic.hpp"
#include "nxkit/parser.hpp"
#include "nxkit/printer.hpp"
#include "nxkit/search.hpp"
#include "nxkit/typing.hpp"

namespace {

using namespace nxkit;

void report(const std::vector<Diagnostic>& diags) {
  for (const auto& d : diags) std::cerr << d.str() << "\n";
}

std::vector<std::filesystem::path> to_paths(const std::vector<std::string>& dirs) {
  return {dirs.begin(), dirs.end()};
}

// Parses a file, reporting diagnostics; nullopt when there are errors.
std::optional<Problem> load(const std::string& file,
                            const std::vector<std::string>& include_dirs) {
  try {
    ParseResult parsed = parse_file(file, to_paths(include_dirs));
    report(parsed.diagnostics);
    if (has_errors(parsed.diagnostics)) return std::nullopt;
    return std::move(parsed.problem);
  } catch (const std::exception& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

const LogicSpecification* find_spec(const Problem& problem) {
  for (const auto& st : problem.statements)
    if (const auto* spec = std::get_if<LogicSpecification>(&st.body))
      if (st.role.base == "logic") return spec;
  return nullptr;
}

std::string axiom_list(const AxiomSet& axioms) {
  std::string out;
  for (ModalAxiom a : axioms) {
    if (!out.empty()) out += ",";
    out += axiom_name(a);
  }
  return out;
}

int run_parse(const std::string& file, const std::vector<std::string>& dirs) {
  auto problem = load(file, dirs);
  if (!problem) return 2;
  std::cout << print_problem(*problem);
  return 0;
}

int run_census(const std::string& file, const std::vector<std::string>& dirs) {
  auto problem = load(file, dirs);
  if (!problem) return 2;
  std::cout << format_census(census(*problem));
  return 0;
}

int run_check_spec(const std::string& file, const std::vector<std::string>& dirs) {
  auto problem = load(file, dirs);
  if (!problem) return 2;
  const LogicSpecification* spec = find_spec(*problem);
  if (!spec) {
    std::cerr << file << ": no logic specification\n";
    return 2;
  }
  try {
    NormalizedModalLogic logic = normalize_spec(*spec);
    std::cout << "logic: " << family_info(logic.family).logic_name << "\n"
              << "domains: " << to_string(logic.domains) << "\n"
              << "designation: " << to_string(logic.designation) << "\n"
              << "terms: " << to_string(logic.terms) << "\n";
    if (logic.default_modality)
      std::cout << "modality: {" << axiom_list(*logic.default_modality) << "}\n";
    for (const auto& [idx, axioms] : logic.indexed_modalities)
      std::cout << "modality #" << idx << ": {" << axiom_list(axioms) << "}\n";
    return 0;
  } catch (const SpecError& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return 2;
  }
}

// Shared pipeline for the semantic commands: default types, type check,
// normalize the logic specification (absent ⇒ a purely classical default).
std::optional<std::pair<TypedProblem, NormalizedModalLogic>> analyze(
    const std::string& file, const std::vector<std::string>& dirs,
    bool require_spec) {
  auto problem = load(file, dirs);
  if (!problem) return std::nullopt;
  TypedProblem tp = resolve_defaults(*problem);
  report(tp.diagnostics);
  if (has_errors(tp.diagnostics)) return std::nullopt;
  std::vector<Diagnostic> type_diags = check_types(tp);
  report(type_diags);
  if (has_errors(type_diags)) return std::nullopt;
  NormalizedModalLogic logic;
  const LogicSpecification* spec = find_spec(tp.problem);
  if (spec) {
    try {
      logic = normalize_spec(*spec);
    } catch (const SpecError& e) {
      std::cerr << file << ": " << e.what() << "\n";
      return std::nullopt;
    }
  } else if (require_spec) {
    std::cerr << file << ": no logic specification\n";
    return std::nullopt;
  }
  return std::make_pair(std::move(tp), std::move(logic));
}

int run_embed(const std::string& file, const std::vector<std::string>& dirs,
              const std::string& out_path, bool with_ledger) {
  auto analyzed = analyze(file, dirs, /*require_spec=*/true);
  if (!analyzed) return 2;
  try {
    EmbeddingOutput out = embed(analyzed->first, analyzed->second);
    std::ostream* os = &std::cout;
    std::ofstream of;
    if (!out_path.empty()) {
      of.open(out_path);
      if (!of) {
        std::cerr << out_path << ": cannot write\n";
        return 2;
      }
      os = &of;
    }
    if (with_ledger) {
      *os << "% statement ledger:\n";
      for (const auto& entry : out.ledger)
        *os << "%   " << ledger_class_name(entry.cls) << ": " << entry.name
            << " (" << entry.detail << ")\n";
    }
    *os << print_problem(out.problem);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return 2;
  }
}

int run_check_model(const std::string& problem_file, const std::string& model_file,
                    const std::vector<std::string>& dirs) {
  auto analyzed = analyze(problem_file, dirs, /*require_spec=*/false);
  if (!analyzed) return 2;
  auto model_problem = load(model_file, dirs);
  if (!model_problem) return 2;
  try {
    InterpretationResult parsed =
        parse_interpretation(*model_problem, &analyzed->first.signature);
    report(parsed.diagnostics);
    if (has_errors(parsed.diagnostics)) return 2;
    ModelCheckReport rep =
        check_model(parsed.model, analyzed->first, analyzed->second);
    auto show = [](const CheckItem& item) {
      std::cout << (item.pass ? "ok   " : "FAIL ") << item.label;
      if (!item.detail.empty()) std::cout << " — " << item.detail;
      std::cout << "\n";
    };
    for (const auto& item : rep.statement_checks) show(item);
    for (const auto& item : rep.frame_checks) show(item);
    for (const auto& item : rep.structure_checks) show(item);
    if (rep.conjecture_value)
      std::cout << "conjecture " << rep.conjecture_name << " is "
                << (*rep.conjecture_value ? "true" : "false")
                << " at the local world\n";
    std::cout << "% SZS status " << szs_status(rep.classification) << " for "
              << problem_file << "\n";
    return rep.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << model_file << ": " << e.what() << "\n";
    return 2;
  }
}

int run_find_countermodel(const std::string& file,
                          const std::vector<std::string>& dirs,
                          const SearchBounds& bounds) {
  auto analyzed = analyze(file, dirs, /*require_spec=*/false);
  if (!analyzed) return 2;
  try {
    SearchOutcome outcome =
        find_countermodel(analyzed->first, analyzed->second, bounds);
    std::cerr << "search evaluations: " << outcome.evaluations << "\n";
    if (outcome.status == SearchStatus::Found) {
      try {
        std::cout << print_model(*outcome.model, analyzed->first.signature);
      } catch (const SemanticError& e) {
        std::cout << "% model not printable: " << e.what() << "\n";
      }
      std::cout << "% SZS status " << szs_status(outcome.report->classification)
                << " for " << file << "\n";
      return 0;
    }
    if (outcome.status == SearchStatus::BudgetExhausted) {
      std::cout << "% SZS status GaveUp for " << file << "\n";
      return 3;
    }
    std::cout << "% SZS status Unknown for " << file << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return 2;
  }
}

int run_verify_derivation(const std::string& file,
                          const std::vector<std::string>& dirs,
                          const std::string& original_file) {
  auto derivation = load(file, dirs);
  if (!derivation) return 2;
  std::optional<Problem> original;
  if (!original_file.empty()) {
    original = load(original_file, dirs);
    if (!original) return 2;
  }
  DerivationDag dag = build_dag(*derivation);
  report(dag.diagnostics);
  StructureReport rep = verify_structure(dag, original ? &*original : nullptr);
  for (const auto& check : rep.checks) {
    std::cout << (check.pass ? "ok   " : "FAIL ") << check.label;
    if (!check.detail.empty()) std::cout << " — " << check.detail;
    std::cout << "\n";
  }
  std::cout << "structure: " << (rep.ok ? "verified" : "not verified") << "\n";
  return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toolkit for typed problems with modal connectives"};
  app.require_subcommand(1);

  std::string file, second_file, out_path, original_file;
  std::vector<std::string> include_dirs;
  SearchBounds bounds;
  bool no_ledger = false;
  std::vector<std::string> sort_caps;

  auto add_common = [&](CLI::App* sub, bool model_arg = false) {
    sub->add_option("file", file, "input file")->required();
    if (model_arg)
      sub->add_option("model", second_file, "interpretation file")->required();
    sub->add_option("-I,--include-dir", include_dirs,
                    "directory searched for include directives");
  };

  CLI::App* parse_cmd = app.add_subcommand("parse", "parse and reprint a file");
  add_common(parse_cmd);

  CLI::App* census_cmd =
      app.add_subcommand("census", "count the syntactic features of a file");
  add_common(census_cmd);

  CLI::App* spec_cmd = app.add_subcommand(
      "check-spec", "normalize and print the logic specification");
  add_common(spec_cmd);

  CLI::App* embed_cmd = app.add_subcommand(
      "embed", "translate a modal problem into a classical one");
  add_common(embed_cmd);
  embed_cmd->add_option("-o,--output", out_path, "write the result here");
  embed_cmd->add_flag("--no-ledger", no_ledger,
                      "omit the statement ledger comments");

  CLI::App* check_cmd = app.add_subcommand(
      "check-model", "verify an interpretation against a problem");
  add_common(check_cmd, /*model_arg=*/true);

  CLI::App* find_cmd = app.add_subcommand(
      "find-countermodel", "search for a finite structure within bounds");
  add_common(find_cmd);
  find_cmd->add_option("--max-worlds", bounds.max_worlds, "world bound")
      ->capture_default_str();
  find_cmd->add_option("--max-elements", bounds.max_elements,
                       "per-sort universe bound")
      ->capture_default_str();
  find_cmd->add_option("--budget", bounds.budget, "atomic evaluation budget")
      ->capture_default_str();
  find_cmd->add_option("--sort-cap", sort_caps,
                       "per-sort bound override, sort=N");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify-derivation", "check the structure of a derivation");
  add_common(verify_cmd);
  verify_cmd->add_option("--original", original_file,
                         "problem the derivation claims to solve");

  CLI11_PARSE(app, argc, argv);

  for (const auto& cap : sort_caps) {
    auto eq = cap.find('=');
    if (eq == std::string::npos) {
      std::cerr << "--sort-cap expects sort=N, got '" << cap << "'\n";
      return 2;
    }
    try {
      bounds.sort_caps[cap.substr(0, eq)] = std::stoi(cap.substr(eq + 1));
    } catch (const std::exception&) {
      std::cerr << "--sort-cap expects sort=N, got '" << cap << "'\n";
      return 2;
    }
  }

  if (parse_cmd->parsed()) return run_parse(file, include_dirs);
  if (census_cmd->parsed()) return run_census(file, include_dirs);
  if (spec_cmd->parsed()) return run_check_spec(file, include_dirs);
  if (embed_cmd->parsed())
    return run_embed(file, include_dirs, out_path, !no_ledger);
  if (check_cmd->parsed())
    return run_check_model(file, second_file, include_dirs);
  if (find_cmd->parsed())
    return run_find_countermodel(file, include_dirs, bounds);
  if (verify_cmd->parsed())
    return run_verify_derivation(file, include_dirs, original_file);
  return 2;
}
