#pragma once

#include "nxkit/logic.hpp"
#include "nxkit/typing.hpp"

namespace nxkit {

// Provenance record for one statement of the embedded output.
struct LedgerEntry {
  enum class Class {
    Declaration,         // world sort, accessibility, local world, guards
    Frame,               // accessibility-condition axiom
    Nonemptiness,        // per-sort domain nonemptiness axiom
    DomainMonotonicity,  // cumulative/decreasing domain axiom
    TermLocality,        // local-terms axiom for a function symbol
    Lifted               // translated statement of the source problem
  };
  Class cls;
  std::string name;    // statement name in the output
  std::string detail;  // source statement / condition / sort / symbol
};

std::string ledger_class_name(LedgerEntry::Class c);

// Naming and policy context shared by the statement translations.
struct EmbeddingContext {
  const NormalizedModalLogic* logic = nullptr;
  const Signature* signature = nullptr;
  std::string world_sort;
  std::string local_world_symbol;
  std::map<std::string, std::string> acc_symbols;  // index ("" = plain) -> name
  std::map<std::string, std::string> guards;       // sort -> guard predicate
  std::set<std::string> used_variables;            // to keep fresh vars fresh

  bool guarded() const { return !guards.empty(); }
  std::string fresh_world_var();
  std::string fresh_var(const std::string& base);

 private:
  int fresh_counter_ = 0;
};

struct EmbeddingOutput {
  Problem problem;
  std::vector<LedgerEntry> ledger;
  EmbeddingContext context;
};

// Translates one formula as seen from the world denoted by `world`:
// predicates gain the world as first argument, flexible designation threads
// the world through function symbols, box/dia become guarded quantifiers over
// accessible worlds, and (under non-constant domains) quantifiers are guarded
// by the exists-in-world predicates. Throws SemanticError on foreign
// connectives, non-unary box/dia applications, and world-scoping operators.
FormulaPtr embed_formula(const FormulaPtr& formula, const TermPtr& world,
                         EmbeddingContext& ctx);

// Translates a whole problem into its classical counterpart: declarations
// for the world machinery, frame axioms for every connective index in use
// (plus explicitly keyed ones), nonemptiness and domain monotonicity axioms
// when domains vary, term-locality axioms under local terms, and the lifted
// source statements (global assumptions universally over worlds, local
// assumptions and the conjecture at the local world). The output carries a
// ledger attributing every statement.
EmbeddingOutput embed(const TypedProblem& tp, const NormalizedModalLogic& logic);

}  // namespace nxkit
