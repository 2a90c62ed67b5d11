#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "nxkit/ast.hpp"

namespace nxkit {

// Declared and inferred symbol types of a problem. Sorts are the user sorts
// declared with $tType; symbols maps every function/predicate/constant symbol
// to its type (an AtomicSort for constants/propositions, a MappingType
// otherwise).
struct Signature {
  std::set<std::string> sorts;
  std::map<std::string, TypePtr> symbols;
  std::set<std::string> defaulted;  // symbols whose type was inferred

  bool declares(const std::string& symbol) const { return symbols.count(symbol) > 0; }
  TypePtr type_of(const std::string& symbol) const {
    auto it = symbols.find(symbol);
    return it == symbols.end() ? nullptr : it->second;
  }
};

struct TypedProblem {
  Problem problem;
  Signature signature;
  std::vector<Diagnostic> diagnostics;
};

// Collects declarations and infers missing types: an undeclared symbol used
// with n arguments becomes ($i * ... * $i) > $i as a function or
// ($i * ... * $i) > $o as a predicate, by position of use; undeclared
// quantified variables default to $i. Inference is reported via Note
// diagnostics; conflicting uses produce Error diagnostics. Running the
// resolution twice yields the same signature.
TypedProblem resolve_defaults(const Problem& problem);

// Checks well-typedness of every first-order statement against the signature:
// applied arity and argument sorts, equality between equally sorted terms (not
// $o), binder sorts naming known sorts, and use of non-classical connectives
// only in problems that carry a logic specification. Higher-order bodies are
// skipped. Returns diagnostics; empty means well-typed.
std::vector<Diagnostic> check_types(const TypedProblem& tp);

// Helpers shared by the semantic modules.
bool is_predicate_type(const TypePtr& t);
std::vector<std::string> arg_sort_names(const TypePtr& t);
std::string result_sort_name(const TypePtr& t);

}  // namespace nxkit
