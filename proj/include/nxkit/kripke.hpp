#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nxkit/logic.hpp"
#include "nxkit/typing.hpp"

namespace nxkit {

using Elem = std::uint32_t;
using WorldId = std::uint32_t;

// Union-style finite domains: every sort has one element universe shared by
// all worlds plus a per-world membership matrix.
struct SortDomain {
  std::vector<std::string> element_names;
  std::vector<std::vector<bool>> member;  // [world][element]

  std::size_t size() const { return element_names.size(); }
  std::optional<Elem> find(const std::string& name) const {
    for (Elem i = 0; i < element_names.size(); ++i)
      if (element_names[i] == name) return i;
    return std::nullopt;
  }
};

// Functions are interpreted per world over the union universe; under rigid
// designation all per-world tables coincide.
struct FunctionInterp {
  std::vector<std::string> arg_sorts;
  std::string result_sort;
  std::vector<std::map<std::vector<Elem>, Elem>> tables;  // [world]
};

struct PredicateInterp {
  std::vector<std::string> arg_sorts;
  std::vector<std::set<std::vector<Elem>>> positives;  // [world]
};

struct FiniteKripkeModel {
  std::vector<std::string> world_names;
  WorldId local_world = 0;
  // Accessibility per connective index; "" is the un-indexed relation.
  std::map<std::string, std::vector<std::vector<bool>>> accessibility;
  std::map<std::string, SortDomain> domains;
  std::map<std::string, FunctionInterp> functions;
  std::map<std::string, PredicateInterp> predicates;

  std::size_t world_count() const { return world_names.size(); }
  std::optional<WorldId> world_id(const std::string& name) const {
    for (WorldId i = 0; i < world_names.size(); ++i)
      if (world_names[i] == name) return i;
    return std::nullopt;
  }
};

// Variable assignment used during evaluation.
struct Assignment {
  std::vector<std::pair<std::string, Elem>> bound;

  std::optional<Elem> lookup(const std::string& name) const {
    for (auto it = bound.rbegin(); it != bound.rend(); ++it)
      if (it->first == name) return it->second;
    return std::nullopt;
  }
};

// Evaluates a formula at a world. Box/Dia connectives are resolved through
// `logic` (pass nullptr for purely classical formulas). Quantifiers range
// over the bound sort's members at the evaluation world. Throws
// SemanticError for foreign connectives, unknown symbols, or sort/model
// mismatches.
bool eval_formula(const FiniteKripkeModel& model, WorldId world,
                  const FormulaPtr& formula, const NormalizedModalLogic* logic,
                  Assignment& assignment);

Elem eval_term(const FiniteKripkeModel& model, WorldId world, const TermPtr& term,
               const Assignment& assignment);

// Checks one frame condition on one accessibility matrix.
bool frame_condition_holds(FrameCondition condition,
                           const std::vector<std::vector<bool>>& acc);

struct CheckItem {
  std::string label;
  bool pass = false;
  std::string detail;
};

enum class ModelClassification {
  NotAModel,          // some assumption or structural condition fails
  Satisfiable,        // all assumptions hold, no conjecture present
  CounterSatisfiable, // all assumptions hold, conjecture false at local world
  ConsistentWithConjecture  // all assumptions hold, conjecture true
};

struct ModelCheckReport {
  std::vector<CheckItem> statement_checks;
  std::vector<CheckItem> frame_checks;
  std::vector<CheckItem> structure_checks;
  std::optional<bool> conjecture_value;
  std::string conjecture_name;
  ModelClassification classification = ModelClassification::NotAModel;

  bool all_pass() const {
    for (const auto& c : statement_checks)
      if (!c.pass) return false;
    for (const auto& c : frame_checks)
      if (!c.pass) return false;
    for (const auto& c : structure_checks)
      if (!c.pass) return false;
    return true;
  }
};

// SZS status string for a classification: CounterSatisfiable / Satisfiable /
// Unknown.
std::string szs_status(ModelClassification c);

// Verifies a candidate model against a problem: axiom-like statements at
// every world, hypothesis-like statements at the local world (subroles -local
// and -global override), frame conditions of every accessibility index used,
// domain regime, per-world nonemptiness, designation rigidity, and term
// locality. The conjecture (if any) is evaluated at the local world and
// drives the classification.
ModelCheckReport check_model(const FiniteKripkeModel& model,
                             const TypedProblem& problem,
                             const NormalizedModalLogic& logic);

// True when the role makes a statement a global assumption (axiom-like),
// false for local assumptions (hypothesis-like). Subroles override.
bool role_is_global(const Role& role);
bool role_is_assumption(const Role& role);

}  // namespace nxkit
