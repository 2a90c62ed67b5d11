// Python bindings: string-level access to the main operations. Inputs and
// outputs are plain strings and dicts so the module stays easy to script.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nxkit/census.hpp"
#include "nxkit/derivation.hpp"
#include "nxkit/embed.hpp"
#include "nxkit/interp.hpp"
#include "nxkit/logic.hpp"
#include "nxkit/parser.hpp"
#include "nxkit/printer.hpp"
#include "nxkit/search.hpp"
#include "nxkit/typing.hpp"

namespace py = pybind11;
using namespace nxkit;

namespace {

Problem parse_or_throw(const std::string& text) {
  ParseResult parsed = parse_problem(text);
  if (has_errors(parsed.diagnostics)) {
    std::string msg;
    for (const auto& d : parsed.diagnostics) {
      if (!msg.empty()) msg += "\n";
      msg += d.str();
    }
    throw std::invalid_argument(msg);
  }
  return std::move(parsed.problem);
}

const LogicSpecification* find_spec(const Problem& problem) {
  for (const auto& st : problem.statements)
    if (const auto* spec = std::get_if<LogicSpecification>(&st.body))
      if (st.role.base == "logic") return spec;
  return nullptr;
}

std::pair<TypedProblem, NormalizedModalLogic> analyze(const std::string& text,
                                                      bool require_spec) {
  TypedProblem tp = resolve_defaults(parse_or_throw(text));
  if (has_errors(tp.diagnostics))
    throw std::invalid_argument("type defaulting failed");
  std::vector<Diagnostic> diags = check_types(tp);
  if (has_errors(diags)) {
    std::string msg;
    for (const auto& d : diags) {
      if (!msg.empty()) msg += "\n";
      msg += d.str();
    }
    throw std::invalid_argument(msg);
  }
  NormalizedModalLogic logic;
  const LogicSpecification* spec = find_spec(tp.problem);
  if (spec)
    logic = normalize_spec(*spec);
  else if (require_spec)
    throw std::invalid_argument("no logic specification");
  return {std::move(tp), std::move(logic)};
}

std::vector<std::string> axiom_names(const AxiomSet& axioms) {
  std::vector<std::string> out;
  for (ModalAxiom a : axioms) out.push_back(axiom_name(a));
  return out;
}

py::dict check_report_dict(const ModelCheckReport& rep) {
  py::list checks;
  auto add = [&checks](const CheckItem& item) {
    py::dict d;
    d["label"] = item.label;
    d["pass"] = item.pass;
    d["detail"] = item.detail;
    checks.append(d);
  };
  for (const auto& c : rep.statement_checks) add(c);
  for (const auto& c : rep.frame_checks) add(c);
  for (const auto& c : rep.structure_checks) add(c);
  py::dict out;
  out["checks"] = checks;
  out["ok"] = rep.all_pass();
  out["status"] = szs_status(rep.classification);
  if (rep.conjecture_value) out["conjecture_value"] = *rep.conjecture_value;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Typed modal problem toolkit";

  // Malformed input of any kind surfaces as ValueError.
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const SpecError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const SemanticError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def(
      "parse_print",
      [](const std::string& text) { return print_problem(parse_or_throw(text)); },
      py::arg("text"),
      "Parse a problem and return its canonical rendering.");

  m.def(
      "census",
      [](const std::string& text) {
        SyntaxStatistics s = census(parse_or_throw(text));
        py::dict d;
        d["statements"] = s.statements;
        d["by_role"] = s.by_role;
        d["type_declarations"] = s.type_declarations;
        d["user_sorts"] = s.user_sorts;
        d["logic_specifications"] = s.logic_specifications;
        d["nc_plain"] = s.nc_plain;
        d["nc_indexed"] = s.nc_indexed;
        d["nc_by_name"] = s.nc_by_name;
        d["nc_indices"] = std::vector<std::string>(s.nc_indices.begin(),
                                                   s.nc_indices.end());
        d["equalities"] = s.equalities;
        d["quantifiers"] = s.quantifiers;
        return d;
      },
      py::arg("text"), "Count the syntactic features of a problem.");

  m.def(
      "check_types",
      [](const std::string& text) {
        TypedProblem tp = resolve_defaults(parse_or_throw(text));
        std::vector<std::string> out;
        for (const auto& d : tp.diagnostics) out.push_back(d.str());
        for (const auto& d : check_types(tp)) out.push_back(d.str());
        return out;
      },
      py::arg("text"),
      "Default missing types and type-check; returns diagnostic strings.");

  m.def(
      "normalize_logic",
      [](const std::string& text) {
        Problem problem = parse_or_throw(text);
        const LogicSpecification* spec = find_spec(problem);
        if (!spec) throw std::invalid_argument("no logic specification");
        NormalizedModalLogic logic = normalize_spec(*spec);
        py::dict d;
        d["logic"] = family_info(logic.family).logic_name;
        d["domains"] = to_string(logic.domains);
        d["designation"] = to_string(logic.designation);
        d["terms"] = to_string(logic.terms);
        if (logic.default_modality)
          d["modality"] = axiom_names(*logic.default_modality);
        py::dict indexed;
        for (const auto& [idx, axioms] : logic.indexed_modalities)
          indexed[py::str(idx)] = axiom_names(axioms);
        d["indexed"] = indexed;
        return d;
      },
      py::arg("text"), "Normalize the logic specification of a problem.");

  m.def(
      "system_axioms",
      [](const std::string& name) {
        auto axioms = system_axioms(name);
        if (!axioms) throw std::invalid_argument("unknown system '" + name + "'");
        return axiom_names(*axioms);
      },
      py::arg("name"), "Axioms of a named system, e.g. '$modal_system_S5'.");

  m.def(
      "embed",
      [](const std::string& text) {
        auto [tp, logic] = analyze(text, /*require_spec=*/true);
        EmbeddingOutput out = embed(tp, logic);
        py::list ledger;
        for (const auto& entry : out.ledger) {
          py::dict e;
          e["class"] = ledger_class_name(entry.cls);
          e["name"] = entry.name;
          e["detail"] = entry.detail;
          ledger.append(e);
        }
        py::dict d;
        d["problem"] = print_problem(out.problem);
        d["ledger"] = ledger;
        return d;
      },
      py::arg("text"),
      "Translate a modal problem to a classical one; returns the text and "
      "the statement ledger.");

  m.def(
      "check_model",
      [](const std::string& problem_text, const std::string& model_text) {
        auto [tp, logic] = analyze(problem_text, /*require_spec=*/false);
        InterpretationResult parsed =
            parse_interpretation(parse_or_throw(model_text), &tp.signature);
        if (has_errors(parsed.diagnostics)) {
          std::string msg;
          for (const auto& d : parsed.diagnostics) {
            if (!msg.empty()) msg += "\n";
            msg += d.str();
          }
          throw std::invalid_argument(msg);
        }
        return check_report_dict(check_model(parsed.model, tp, logic));
      },
      py::arg("problem"), py::arg("model"),
      "Verify an interpretation against a problem.");

  m.def(
      "find_countermodel",
      [](const std::string& text, int max_worlds, int max_elements,
         long long budget) {
        auto [tp, logic] = analyze(text, /*require_spec=*/false);
        SearchBounds bounds;
        bounds.max_worlds = max_worlds;
        bounds.max_elements = max_elements;
        bounds.budget = budget;
        SearchOutcome outcome = find_countermodel(tp, logic, bounds);
        py::dict d;
        d["evaluations"] = outcome.evaluations;
        switch (outcome.status) {
          case SearchStatus::Found: {
            d["status"] = szs_status(outcome.report->classification);
            d["model"] = print_model(*outcome.model, tp.signature);
            break;
          }
          case SearchStatus::NotFound:
            d["status"] = "Unknown";
            break;
          case SearchStatus::BudgetExhausted:
            d["status"] = "GaveUp";
            break;
        }
        return d;
      },
      py::arg("text"), py::arg("max_worlds") = 3, py::arg("max_elements") = 3,
      py::arg("budget") = 50'000'000LL,
      "Bounded search for a structure; a countermodel when a conjecture is "
      "present.");

  m.def(
      "verify_derivation",
      [](const std::string& text, const std::optional<std::string>& original) {
        Problem derivation = parse_or_throw(text);
        std::optional<Problem> orig;
        if (original) orig = parse_or_throw(*original);
        DerivationDag dag = build_dag(derivation);
        StructureReport rep = verify_structure(dag, orig ? &*orig : nullptr);
        py::list checks;
        for (const auto& c : rep.checks) {
          py::dict e;
          e["label"] = c.label;
          e["pass"] = c.pass;
          e["detail"] = c.detail;
          checks.append(e);
        }
        py::dict d;
        d["ok"] = rep.ok;
        d["acyclic"] = rep.acyclic;
        d["origins_ok"] = rep.origins_ok;
        d["refutation_found"] = rep.refutation_found;
        d["checks"] = checks;
        return d;
      },
      py::arg("text"), py::arg("original") = std::nullopt,
      "Check the structure of a derivation, optionally against the original "
      "problem.");
}
