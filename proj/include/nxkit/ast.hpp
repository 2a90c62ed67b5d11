#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nxkit/diagnostics.hpp"
#include "nxkit/token.hpp"

namespace nxkit {

// ---------------------------------------------------------------------------
// Types
// ---------------------------------------------------------------------------

struct Type;
using TypePtr = std::shared_ptr<const Type>;

// Atomic sort: "$i", "$o", "$world", "$tType", or a user sort name.
struct AtomicSort {
  std::string name;
};

// (a1 * ... * an) > r, or a > r for unary.
struct MappingType {
  std::vector<TypePtr> args;
  TypePtr result;
};

struct Type {
  std::variant<AtomicSort, MappingType> node;
  Position pos;
};

TypePtr make_sort(std::string name);
TypePtr make_mapping(std::vector<TypePtr> args, TypePtr result);
bool equal(const TypePtr& a, const TypePtr& b);
bool is_sort(const TypePtr& t, const std::string& name);

// ---------------------------------------------------------------------------
// Terms
// ---------------------------------------------------------------------------

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Variable {
  std::string name;
};

// Constants are zero-argument applications. The symbol is kept verbatim,
// including quotes for 'quoted atoms' and the '$' of defined constants such
// as $local_world.
struct FunctionApp {
  std::string symbol;
  std::vector<TermPtr> args;
};

// Integers lex as terms; they are only meaningful inside connective
// parameters and are rejected by the type checker elsewhere.
struct IntegerTerm {
  std::string digits;
};

struct Term {
  std::variant<Variable, FunctionApp, IntegerTerm> node;
  Position pos;
};

TermPtr make_variable(std::string name);
TermPtr make_app(std::string symbol, std::vector<TermPtr> args = {});
bool equal(const TermPtr& a, const TermPtr& b);

// ---------------------------------------------------------------------------
// Formulas
// ---------------------------------------------------------------------------

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class Quantifier { Forall, Exists };
enum class BinaryOp { And, Or, Implies, ReverseImplies, Iff, Xor };

struct VarBinding {
  std::string name;
  TypePtr sort;  // null when the binder has no explicit sort (defaults to $i)
};

// A parameter value of a non-classical connective: a term, a parenthesized
// formula, or a list of values.
struct ParamValue;
using ParamValues = std::vector<ParamValue>;

struct ParamValue {
  std::variant<TermPtr, FormulaPtr, ParamValues> value;
};

// {$name}, {$name(#index)}, {$name(key:=value,...)}, {$name(#index,key:=value,...)}
struct NCConnective {
  std::string name;                     // "$box", "$possible", "$$sys", ...
  std::optional<std::string> index;     // "1" for #1, "alex" for #alex
  std::vector<std::pair<std::string, ParamValue>> params;
};

struct AtomF {
  std::string predicate;  // may be a defined word, e.g. $accessible_world
  std::vector<TermPtr> args;
};

struct EqualityF {
  TermPtr lhs;
  TermPtr rhs;
  bool negated = false;  // true for !=
};

struct TrueF {};
struct FalseF {};

struct NotF {
  FormulaPtr arg;
};

struct BinaryF {
  BinaryOp op;
  FormulaPtr lhs;
  FormulaPtr rhs;
};

struct QuantF {
  Quantifier quantifier;
  std::vector<VarBinding> vars;
  FormulaPtr body;
};

// {conn} @ (arg1,...,argn). Short forms [.] and <.> parse to {$box}/{$dia}
// applications; the tree has no separate short-form node.
struct NCAppF {
  NCConnective connective;
  std::vector<FormulaPtr> args;
};

// $in_world(w, formula) — world scoping inside interpretations.
struct InWorldF {
  TermPtr world;
  FormulaPtr body;
};

struct Formula {
  std::variant<AtomF, EqualityF, TrueF, FalseF, NotF, BinaryF, QuantF, NCAppF,
               InWorldF>
      node;
  Position pos;
};

FormulaPtr make_atom(std::string predicate, std::vector<TermPtr> args = {});
FormulaPtr make_equality(TermPtr lhs, TermPtr rhs, bool negated = false);
FormulaPtr make_true();
FormulaPtr make_false();
FormulaPtr make_not(FormulaPtr arg);
FormulaPtr make_binary(BinaryOp op, FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr make_quant(Quantifier q, std::vector<VarBinding> vars, FormulaPtr body);
FormulaPtr make_nc_app(NCConnective conn, std::vector<FormulaPtr> args);
FormulaPtr make_in_world(TermPtr world, FormulaPtr body);

bool equal(const FormulaPtr& a, const FormulaPtr& b);
bool equal(const NCConnective& a, const NCConnective& b);

// Conjunction of a list; returns $true for an empty list.
FormulaPtr make_conjunction(std::vector<FormulaPtr> parts);

// ---------------------------------------------------------------------------
// Logic specifications
// ---------------------------------------------------------------------------

// One entry of a logic-specification list: `key == value`, `{conn} == value`,
// or a bare value (used for defaults).
struct LogicEntry {
  enum class KeyKind { None, Word, Connective };
  KeyKind key_kind = KeyKind::None;
  std::string word_key;                  // "$domains", ... when key_kind == Word
  std::optional<NCConnective> conn_key;  // when key_kind == Connective
  std::variant<TermPtr, std::vector<LogicEntry>> value;
};

// name == [ entries ] at role `logic`.
struct LogicSpecification {
  std::string name;  // "$modal", "$alethic_modal", ...
  std::vector<LogicEntry> entries;
  Position pos;
};

// ---------------------------------------------------------------------------
// Statements and problems
// ---------------------------------------------------------------------------

enum class Language { Tff, Thf };

struct Role {
  std::string base;
  std::optional<std::string> subrole;

  std::string str() const { return subrole ? base + "-" + *subrole : base; }
  bool operator==(const Role& other) const {
    return base == other.base && subrole == other.subrole;
  }
};

struct TypeDeclaration {
  std::string symbol;  // verbatim, possibly quoted
  TypePtr type;
};

// Body of a statement whose dialect is recognized but not analyzed
// (higher-order bodies). The token stream is kept for faithful printing.
struct RawFormula {
  std::vector<Token> tokens;
};

// Sources and useful-info are free-form annotation terms: atoms with optional
// arguments, lists, variables, and integers.
struct GeneralTerm;
using GeneralTermPtr = std::shared_ptr<const GeneralTerm>;

struct GeneralTerm {
  enum class Kind { Atom, List, Variable, Int, Distinct };
  Kind kind = Kind::Atom;
  std::string name;                   // Atom/Variable/Int/Distinct: lexeme
  std::vector<GeneralTermPtr> args;   // Atom arguments or List elements
};

GeneralTermPtr make_general_atom(std::string name, std::vector<GeneralTermPtr> args = {});
GeneralTermPtr make_general_list(std::vector<GeneralTermPtr> elems);
bool equal(const GeneralTermPtr& a, const GeneralTermPtr& b);

struct AnnotatedFormula {
  Language language = Language::Tff;
  std::string name;  // verbatim: lower word, integer, or quoted
  Role role;
  std::variant<FormulaPtr, TypeDeclaration, LogicSpecification, RawFormula> body;
  GeneralTermPtr source;                    // null when absent
  std::vector<GeneralTermPtr> useful_info;  // valid only if has_useful_info
  bool has_useful_info = false;
  Position pos;

  bool is_formula() const { return std::holds_alternative<FormulaPtr>(body); }
  const FormulaPtr& formula() const { return std::get<FormulaPtr>(body); }
};

struct IncludeDirective {
  std::string file;                    // without quotes
  std::vector<std::string> selection;  // optional list of statement names
  Position pos;
};

struct Problem {
  std::vector<IncludeDirective> includes;
  std::vector<AnnotatedFormula> statements;

  const AnnotatedFormula* find(const std::string& name) const {
    for (const auto& st : statements)
      if (st.name == name) return &st;
    return nullptr;
  }
};

}  // namespace nxkit
