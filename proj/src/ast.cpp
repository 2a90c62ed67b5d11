#include "nxkit/ast.hpp"

namespace nxkit {

TypePtr make_sort(std::string name) {
  return std::make_shared<Type>(Type{AtomicSort{std::move(name)}, {}});
}

TypePtr make_mapping(std::vector<TypePtr> args, TypePtr result) {
  return std::make_shared<Type>(Type{MappingType{std::move(args), std::move(result)}, {}});
}

bool is_sort(const TypePtr& t, const std::string& name) {
  if (!t) return false;
  const auto* a = std::get_if<AtomicSort>(&t->node);
  return a && a->name == name;
}

bool equal(const TypePtr& a, const TypePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->node.index() != b->node.index()) return false;
  if (const auto* sa = std::get_if<AtomicSort>(&a->node)) {
    return sa->name == std::get<AtomicSort>(b->node).name;
  }
  const auto& ma = std::get<MappingType>(a->node);
  const auto& mb = std::get<MappingType>(b->node);
  if (ma.args.size() != mb.args.size()) return false;
  for (std::size_t i = 0; i < ma.args.size(); ++i)
    if (!equal(ma.args[i], mb.args[i])) return false;
  return equal(ma.result, mb.result);
}

TermPtr make_variable(std::string name) {
  return std::make_shared<Term>(Term{Variable{std::move(name)}, {}});
}

TermPtr make_app(std::string symbol, std::vector<TermPtr> args) {
  return std::make_shared<Term>(Term{FunctionApp{std::move(symbol), std::move(args)}, {}});
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->node.index() != b->node.index()) return false;
  if (const auto* va = std::get_if<Variable>(&a->node))
    return va->name == std::get<Variable>(b->node).name;
  if (const auto* fa = std::get_if<FunctionApp>(&a->node)) {
    const auto& fb = std::get<FunctionApp>(b->node);
    if (fa->symbol != fb.symbol || fa->args.size() != fb.args.size()) return false;
    for (std::size_t i = 0; i < fa->args.size(); ++i)
      if (!equal(fa->args[i], fb.args[i])) return false;
    return true;
  }
  return std::get<IntegerTerm>(a->node).digits == std::get<IntegerTerm>(b->node).digits;
}

namespace {
FormulaPtr wrap(Formula f) { return std::make_shared<Formula>(std::move(f)); }

bool equal_param(const ParamValue& a, const ParamValue& b) {
  if (a.value.index() != b.value.index()) return false;
  if (const auto* ta = std::get_if<TermPtr>(&a.value))
    return equal(*ta, std::get<TermPtr>(b.value));
  if (const auto* fa = std::get_if<FormulaPtr>(&a.value))
    return equal(*fa, std::get<FormulaPtr>(b.value));
  const auto& la = std::get<ParamValues>(a.value);
  const auto& lb = std::get<ParamValues>(b.value);
  if (la.size() != lb.size()) return false;
  for (std::size_t i = 0; i < la.size(); ++i)
    if (!equal_param(la[i], lb[i])) return false;
  return true;
}
}  // namespace

FormulaPtr make_atom(std::string predicate, std::vector<TermPtr> args) {
  return wrap(Formula{AtomF{std::move(predicate), std::move(args)}, {}});
}

FormulaPtr make_equality(TermPtr lhs, TermPtr rhs, bool negated) {
  return wrap(Formula{EqualityF{std::move(lhs), std::move(rhs), negated}, {}});
}

FormulaPtr make_true() { return wrap(Formula{TrueF{}, {}}); }
FormulaPtr make_false() { return wrap(Formula{FalseF{}, {}}); }

FormulaPtr make_not(FormulaPtr arg) { return wrap(Formula{NotF{std::move(arg)}, {}}); }

FormulaPtr make_binary(BinaryOp op, FormulaPtr lhs, FormulaPtr rhs) {
  return wrap(Formula{BinaryF{op, std::move(lhs), std::move(rhs)}, {}});
}

FormulaPtr make_quant(Quantifier q, std::vector<VarBinding> vars, FormulaPtr body) {
  return wrap(Formula{QuantF{q, std::move(vars), std::move(body)}, {}});
}

FormulaPtr make_nc_app(NCConnective conn, std::vector<FormulaPtr> args) {
  return wrap(Formula{NCAppF{std::move(conn), std::move(args)}, {}});
}

FormulaPtr make_in_world(TermPtr world, FormulaPtr body) {
  return wrap(Formula{InWorldF{std::move(world), std::move(body)}, {}});
}

FormulaPtr make_conjunction(std::vector<FormulaPtr> parts) {
  if (parts.empty()) return make_true();
  FormulaPtr acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i)
    acc = make_binary(BinaryOp::And, acc, parts[i]);
  return acc;
}

bool equal(const NCConnective& a, const NCConnective& b) {
  if (a.name != b.name || a.index != b.index || a.params.size() != b.params.size())
    return false;
  for (std::size_t i = 0; i < a.params.size(); ++i) {
    if (a.params[i].first != b.params[i].first) return false;
    if (!equal_param(a.params[i].second, b.params[i].second)) return false;
  }
  return true;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->node.index() != b->node.index()) return false;
  if (const auto* x = std::get_if<AtomF>(&a->node)) {
    const auto& y = std::get<AtomF>(b->node);
    if (x->predicate != y.predicate || x->args.size() != y.args.size()) return false;
    for (std::size_t i = 0; i < x->args.size(); ++i)
      if (!equal(x->args[i], y.args[i])) return false;
    return true;
  }
  if (const auto* x = std::get_if<EqualityF>(&a->node)) {
    const auto& y = std::get<EqualityF>(b->node);
    return x->negated == y.negated && equal(x->lhs, y.lhs) && equal(x->rhs, y.rhs);
  }
  if (std::get_if<TrueF>(&a->node) || std::get_if<FalseF>(&a->node)) return true;
  if (const auto* x = std::get_if<NotF>(&a->node))
    return equal(x->arg, std::get<NotF>(b->node).arg);
  if (const auto* x = std::get_if<BinaryF>(&a->node)) {
    const auto& y = std::get<BinaryF>(b->node);
    return x->op == y.op && equal(x->lhs, y.lhs) && equal(x->rhs, y.rhs);
  }
  if (const auto* x = std::get_if<QuantF>(&a->node)) {
    const auto& y = std::get<QuantF>(b->node);
    if (x->quantifier != y.quantifier || x->vars.size() != y.vars.size()) return false;
    for (std::size_t i = 0; i < x->vars.size(); ++i) {
      if (x->vars[i].name != y.vars[i].name) return false;
      const TypePtr& sa = x->vars[i].sort;
      const TypePtr& sb = y.vars[i].sort;
      if (static_cast<bool>(sa) != static_cast<bool>(sb)) return false;
      if (sa && !equal(sa, sb)) return false;
    }
    return equal(x->body, y.body);
  }
  if (const auto* x = std::get_if<NCAppF>(&a->node)) {
    const auto& y = std::get<NCAppF>(b->node);
    if (!equal(x->connective, y.connective) || x->args.size() != y.args.size())
      return false;
    for (std::size_t i = 0; i < x->args.size(); ++i)
      if (!equal(x->args[i], y.args[i])) return false;
    return true;
  }
  const auto& x = std::get<InWorldF>(a->node);
  const auto& y = std::get<InWorldF>(b->node);
  return equal(x.world, y.world) && equal(x.body, y.body);
}

GeneralTermPtr make_general_atom(std::string name, std::vector<GeneralTermPtr> args) {
  auto g = std::make_shared<GeneralTerm>();
  g->kind = GeneralTerm::Kind::Atom;
  g->name = std::move(name);
  g->args = std::move(args);
  return g;
}

GeneralTermPtr make_general_list(std::vector<GeneralTermPtr> elems) {
  auto g = std::make_shared<GeneralTerm>();
  g->kind = GeneralTerm::Kind::List;
  g->args = std::move(elems);
  return g;
}

bool equal(const GeneralTermPtr& a, const GeneralTermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name || a->args.size() != b->args.size())
    return false;
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!equal(a->args[i], b->args[i])) return false;
  return true;
}

}  // namespace nxkit
