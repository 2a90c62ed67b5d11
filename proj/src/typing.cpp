#include "nxkit/typing.hpp"

#include <functional>

namespace nxkit {

namespace {

TypePtr builtin_symbol_type(const std::string& symbol) {
  if (symbol == "$local_world") return make_sort("$world");
  if (symbol == "$accessible_world")
    return make_mapping({make_sort("$world"), make_sort("$world")}, make_sort("$o"));
  return nullptr;
}

bool is_builtin_sort(const std::string& name) {
  return name == "$i" || name == "$o" || name == "$world";
}

TypePtr default_type(std::size_t arity, bool predicate) {
  TypePtr result = make_sort(predicate ? "$o" : "$i");
  if (arity == 0) return result;
  std::vector<TypePtr> args(arity, make_sort("$i"));
  return make_mapping(std::move(args), std::move(result));
}

// Walks every term and formula of a statement, reporting each symbol
// occurrence as (symbol, arity, used-as-predicate).
class OccurrenceWalker {
 public:
  std::function<void(const std::string&, std::size_t, bool, Position)> on_symbol;

  void walk(const FormulaPtr& f) {
    if (!f) return;
    if (const auto* atom = std::get_if<AtomF>(&f->node)) {
      if (atom->predicate[0] != '$')
        on_symbol(atom->predicate, atom->args.size(), true, f->pos);
      for (const auto& arg : atom->args) walk_term(arg);
      return;
    }
    if (const auto* eq = std::get_if<EqualityF>(&f->node)) {
      walk_term(eq->lhs);
      walk_term(eq->rhs);
      return;
    }
    if (const auto* n = std::get_if<NotF>(&f->node)) return walk(n->arg);
    if (const auto* b = std::get_if<BinaryF>(&f->node)) {
      walk(b->lhs);
      walk(b->rhs);
      return;
    }
    if (const auto* q = std::get_if<QuantF>(&f->node)) return walk(q->body);
    if (const auto* nc = std::get_if<NCAppF>(&f->node)) {
      for (const auto& arg : nc->args) walk(arg);
      return;
    }
    if (const auto* w = std::get_if<InWorldF>(&f->node)) {
      walk_term(w->world);
      walk(w->body);
      return;
    }
  }

  void walk_term(const TermPtr& t) {
    if (!t) return;
    if (const auto* app = std::get_if<FunctionApp>(&t->node)) {
      if (app->symbol[0] != '$')
        on_symbol(app->symbol, app->args.size(), false, t->pos);
      for (const auto& arg : app->args) walk_term(arg);
    }
  }
};

}  // namespace

bool is_predicate_type(const TypePtr& t) {
  if (!t) return false;
  if (const auto* s = std::get_if<AtomicSort>(&t->node)) return s->name == "$o";
  return is_sort(std::get<MappingType>(t->node).result, "$o");
}

std::vector<std::string> arg_sort_names(const TypePtr& t) {
  std::vector<std::string> out;
  if (!t) return out;
  if (const auto* m = std::get_if<MappingType>(&t->node))
    for (const auto& a : m->args) out.push_back(std::get<AtomicSort>(a->node).name);
  return out;
}

std::string result_sort_name(const TypePtr& t) {
  if (!t) return "";
  if (const auto* s = std::get_if<AtomicSort>(&t->node)) return s->name;
  return result_sort_name(std::get<MappingType>(t->node).result);
}

TypedProblem resolve_defaults(const Problem& problem) {
  TypedProblem tp;
  tp.problem = problem;
  Signature& sig = tp.signature;
  auto& diags = tp.diagnostics;

  for (const auto& st : problem.statements) {
    const auto* decl = std::get_if<TypeDeclaration>(&st.body);
    if (!decl) continue;
    if (is_sort(decl->type, "$tType")) {
      sig.sorts.insert(decl->symbol);
      continue;
    }
    auto it = sig.symbols.find(decl->symbol);
    if (it != sig.symbols.end()) {
      if (equal(it->second, decl->type))
        diags.push_back({Severity::Warning, st.pos,
                         "duplicate declaration of '" + decl->symbol + "'"});
      else
        diags.push_back({Severity::Error, st.pos,
                         "conflicting declaration of '" + decl->symbol + "'"});
      continue;
    }
    sig.symbols[decl->symbol] = decl->type;
  }

  OccurrenceWalker walker;
  walker.on_symbol = [&](const std::string& symbol, std::size_t arity,
                         bool predicate, Position pos) {
    auto it = sig.symbols.find(symbol);
    if (it != sig.symbols.end()) {
      if (!sig.defaulted.count(symbol)) return;  // explicitly declared
      // Previously inferred: the new occurrence must agree.
      bool was_predicate = is_predicate_type(it->second);
      std::size_t was_arity = arg_sort_names(it->second).size();
      if (was_predicate != predicate || was_arity != arity)
        diags.push_back({Severity::Error, pos,
                         "inconsistent use of undeclared symbol '" + symbol + "'"});
      return;
    }
    sig.symbols[symbol] = default_type(arity, predicate);
    sig.defaulted.insert(symbol);
    diags.push_back({Severity::Note, pos,
                     "symbol '" + symbol + "' defaulted to " +
                         (predicate ? (arity ? "a predicate over $i" : "$o")
                                    : (arity ? "a function over $i" : "$i"))});
  };

  for (const auto& st : problem.statements) {
    if (!st.is_formula()) continue;
    walker.walk(st.formula());
  }
  return tp;
}

namespace {

class TypeChecker {
 public:
  TypeChecker(const TypedProblem& tp) : tp_(tp) {}

  std::vector<Diagnostic> run() {
    bool has_logic = false;
    bool uses_nc = false;
    for (const auto& st : tp_.problem.statements) {
      if (st.role.base == "logic") has_logic = true;
      if (st.is_formula()) {
        statement_ = st.name;
        env_.clear();
        check(st.formula());
        if (uses_nc_) uses_nc = true;
      }
      if (const auto* decl = std::get_if<TypeDeclaration>(&st.body))
        check_declared_type(*decl, st.pos);
    }
    if (uses_nc && !has_logic)
      diags_.push_back({Severity::Error, {},
                        "non-classical connectives are used but no logic "
                        "specification is given"});
    return std::move(diags_);
  }

 private:
  const TypedProblem& tp_;
  std::vector<Diagnostic> diags_;
  std::vector<std::pair<std::string, std::string>> env_;  // variable -> sort
  std::string statement_;
  bool uses_nc_ = false;

  void report(Position pos, const std::string& msg) {
    diags_.push_back({Severity::Error, pos, "in '" + statement_ + "': " + msg});
  }

  bool known_sort(const std::string& name) const {
    return is_builtin_sort(name) || tp_.signature.sorts.count(name);
  }

  void check_declared_type(const TypeDeclaration& decl, Position pos) {
    statement_ = decl.symbol;
    if (is_sort(decl.type, "$tType")) return;
    auto names = arg_sort_names(decl.type);
    names.push_back(result_sort_name(decl.type));
    for (const auto& n : names) {
      if (n == "$tType")
        report(pos, "nested $tType in declaration of '" + decl.symbol + "'");
      else if (!known_sort(n))
        report(pos, "unknown sort '" + n + "' in declaration of '" + decl.symbol + "'");
    }
    for (const auto& n : arg_sort_names(decl.type))
      if (n == "$o") report(pos, "predicate argument of sort $o in '" + decl.symbol + "'");
  }

  std::string lookup_var(const std::string& name) const {
    for (auto it = env_.rbegin(); it != env_.rend(); ++it)
      if (it->first == name) return it->second;
    return "";
  }

  // Returns the sort of a term, or "" if it cannot be determined.
  std::string term_sort(const TermPtr& t) {
    if (const auto* v = std::get_if<Variable>(&t->node)) {
      std::string s = lookup_var(v->name);
      if (s.empty()) report(t->pos, "unbound variable '" + v->name + "'");
      return s;
    }
    if (std::get_if<IntegerTerm>(&t->node)) {
      report(t->pos, "arithmetic is not supported");
      return "";
    }
    const auto& app = std::get<FunctionApp>(t->node);
    TypePtr type = app.symbol[0] == '$' ? builtin_symbol_type(app.symbol)
                                        : tp_.signature.type_of(app.symbol);
    if (!type) {
      report(t->pos, "unknown symbol '" + app.symbol + "'");
      for (const auto& a : app.args) term_sort(a);
      return "";
    }
    check_application(app.symbol, type, app.args, t->pos, /*as_predicate=*/false);
    return result_sort_name(type);
  }

  void check_application(const std::string& symbol, const TypePtr& type,
                         const std::vector<TermPtr>& args, Position pos,
                         bool as_predicate) {
    auto expected = arg_sort_names(type);
    if (expected.size() != args.size()) {
      report(pos, "'" + symbol + "' expects " + std::to_string(expected.size()) +
                      " arguments but got " + std::to_string(args.size()));
      for (const auto& a : args) term_sort(a);
      return;
    }
    for (std::size_t i = 0; i < args.size(); ++i) {
      std::string got = term_sort(args[i]);
      if (!got.empty() && got != expected[i])
        report(args[i]->pos, "argument " + std::to_string(i + 1) + " of '" + symbol +
                                 "' has sort " + got + " but " + expected[i] +
                                 " is expected");
    }
    bool predicate = is_predicate_type(type);
    if (as_predicate && !predicate)
      report(pos, "'" + symbol + "' is used as a predicate but maps to " +
                      result_sort_name(type));
    if (!as_predicate && predicate)
      report(pos, "'" + symbol + "' is a predicate but is used as a term");
  }

  void check(const FormulaPtr& f) {
    if (!f) return;
    if (const auto* atom = std::get_if<AtomF>(&f->node)) {
      TypePtr type = atom->predicate[0] == '$'
                         ? builtin_symbol_type(atom->predicate)
                         : tp_.signature.type_of(atom->predicate);
      if (!type) {
        report(f->pos, "unknown predicate '" + atom->predicate + "'");
        for (const auto& a : atom->args) term_sort(a);
        return;
      }
      check_application(atom->predicate, type, atom->args, f->pos, true);
      return;
    }
    if (const auto* eq = std::get_if<EqualityF>(&f->node)) {
      std::string ls = term_sort(eq->lhs);
      std::string rs = term_sort(eq->rhs);
      if (!ls.empty() && !rs.empty() && ls != rs)
        report(f->pos, "equality between sorts " + ls + " and " + rs);
      if (ls == "$o" || rs == "$o")
        report(f->pos, "equality between formulas is not first-order");
      return;
    }
    if (std::get_if<TrueF>(&f->node) || std::get_if<FalseF>(&f->node)) return;
    if (const auto* n = std::get_if<NotF>(&f->node)) return check(n->arg);
    if (const auto* b = std::get_if<BinaryF>(&f->node)) {
      check(b->lhs);
      check(b->rhs);
      return;
    }
    if (const auto* q = std::get_if<QuantF>(&f->node)) {
      std::size_t base = env_.size();
      for (const auto& vb : q->vars) {
        std::string sort = "$i";
        if (vb.sort) {
          if (const auto* a = std::get_if<AtomicSort>(&vb.sort->node)) {
            sort = a->name;
            if (sort == "$o")
              report(f->pos, "quantification over $o is not first-order");
            else if (!known_sort(sort))
              report(f->pos, "unknown sort '" + sort + "' in binder");
          } else {
            report(f->pos, "binder sorts must be atomic in a first-order problem");
          }
        }
        env_.emplace_back(vb.name, sort);
      }
      check(q->body);
      env_.resize(base);
      return;
    }
    if (const auto* nc = std::get_if<NCAppF>(&f->node)) {
      uses_nc_ = true;
      for (const auto& arg : nc->args) check(arg);
      return;
    }
    const auto& w = std::get<InWorldF>(f->node);
    std::string ws = term_sort(w.world);
    if (!ws.empty() && ws != "$world")
      report(f->pos, "$in_world scope must be a $world term");
    check(w.body);
  }
};

}  // namespace

std::vector<Diagnostic> check_types(const TypedProblem& tp) {
  return TypeChecker(tp).run();
}

}  // namespace nxkit
