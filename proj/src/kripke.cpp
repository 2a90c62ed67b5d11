#include "nxkit/kripke.hpp"

#include <functional>

#include "nxkit/printer.hpp"

namespace nxkit {

namespace {

const SortDomain& domain_of(const FiniteKripkeModel& m, const std::string& sort) {
  auto it = m.domains.find(sort);
  if (it == m.domains.end()) throw SemanticError("model has no domain for sort " + sort);
  return it->second;
}

const std::vector<std::vector<bool>>& acc_of(const FiniteKripkeModel& m,
                                             const std::optional<std::string>& index) {
  auto it = m.accessibility.find(index.value_or(""));
  if (it == m.accessibility.end())
    throw SemanticError("model has no accessibility relation for index " +
                        (index ? "#" + *index : "(plain)"));
  return it->second;
}

std::string binder_sort(const VarBinding& vb) {
  if (!vb.sort) return "$i";
  const auto* a = std::get_if<AtomicSort>(&vb.sort->node);
  if (!a) throw SemanticError("non-atomic binder sort");
  return a->name;
}

}  // namespace

Elem eval_term(const FiniteKripkeModel& model, WorldId world, const TermPtr& term,
               const Assignment& assignment) {
  if (const auto* v = std::get_if<Variable>(&term->node)) {
    auto val = assignment.lookup(v->name);
    if (!val) throw SemanticError("unbound variable '" + v->name + "'");
    return *val;
  }
  if (std::get_if<IntegerTerm>(&term->node))
    throw SemanticError("integer term has no interpretation");
  const auto& app = std::get<FunctionApp>(term->node);
  auto it = model.functions.find(app.symbol);
  if (it == model.functions.end())
    throw SemanticError("model does not interpret symbol '" + app.symbol + "'");
  const FunctionInterp& fn = it->second;
  if (world >= fn.tables.size())
    throw SemanticError("world out of range for '" + app.symbol + "'");
  std::vector<Elem> args;
  args.reserve(app.args.size());
  for (const auto& a : app.args) args.push_back(eval_term(model, world, a, assignment));
  const auto& table = fn.tables[world];
  auto entry = table.find(args);
  if (entry == table.end())
    throw SemanticError("no table entry for '" + app.symbol + "' at " +
                        print_term(term));
  return entry->second;
}

bool eval_formula(const FiniteKripkeModel& model, WorldId world,
                  const FormulaPtr& formula, const NormalizedModalLogic* logic,
                  Assignment& assignment) {
  const auto& node = formula->node;
  if (const auto* atom = std::get_if<AtomF>(&node)) {
    auto it = model.predicates.find(atom->predicate);
    if (it == model.predicates.end())
      throw SemanticError("model does not interpret predicate '" + atom->predicate + "'");
    std::vector<Elem> args;
    args.reserve(atom->args.size());
    for (const auto& a : atom->args)
      args.push_back(eval_term(model, world, a, assignment));
    return it->second.positives[world].count(args) > 0;
  }
  if (const auto* eq = std::get_if<EqualityF>(&node)) {
    bool same = eval_term(model, world, eq->lhs, assignment) ==
                eval_term(model, world, eq->rhs, assignment);
    return eq->negated ? !same : same;
  }
  if (std::get_if<TrueF>(&node)) return true;
  if (std::get_if<FalseF>(&node)) return false;
  if (const auto* n = std::get_if<NotF>(&node))
    return !eval_formula(model, world, n->arg, logic, assignment);
  if (const auto* b = std::get_if<BinaryF>(&node)) {
    switch (b->op) {
      case BinaryOp::And:
        return eval_formula(model, world, b->lhs, logic, assignment) &&
               eval_formula(model, world, b->rhs, logic, assignment);
      case BinaryOp::Or:
        return eval_formula(model, world, b->lhs, logic, assignment) ||
               eval_formula(model, world, b->rhs, logic, assignment);
      case BinaryOp::Implies:
        return !eval_formula(model, world, b->lhs, logic, assignment) ||
               eval_formula(model, world, b->rhs, logic, assignment);
      case BinaryOp::ReverseImplies:
        return eval_formula(model, world, b->lhs, logic, assignment) ||
               !eval_formula(model, world, b->rhs, logic, assignment);
      case BinaryOp::Iff:
        return eval_formula(model, world, b->lhs, logic, assignment) ==
               eval_formula(model, world, b->rhs, logic, assignment);
      case BinaryOp::Xor:
        return eval_formula(model, world, b->lhs, logic, assignment) !=
               eval_formula(model, world, b->rhs, logic, assignment);
    }
    throw SemanticError("unknown binary operator");
  }
  if (const auto* q = std::get_if<QuantF>(&node)) {
    // Quantifiers range over the binder sort's members at this world.
    std::function<bool(std::size_t)> go = [&](std::size_t vi) -> bool {
      if (vi == q->vars.size())
        return eval_formula(model, world, q->body, logic, assignment);
      const SortDomain& dom = domain_of(model, binder_sort(q->vars[vi]));
      bool forall = q->quantifier == Quantifier::Forall;
      for (Elem e = 0; e < dom.size(); ++e) {
        if (!dom.member[world][e]) continue;
        assignment.bound.emplace_back(q->vars[vi].name, e);
        bool sub = go(vi + 1);
        assignment.bound.pop_back();
        if (forall && !sub) return false;
        if (!forall && sub) return true;
      }
      return forall;
    };
    return go(0);
  }
  if (const auto* nc = std::get_if<NCAppF>(&node)) {
    if (!logic)
      throw SemanticError("non-classical connective in a classical evaluation");
    ConnectiveKind kind = connective_kind(nc->connective, *logic);
    if (kind == ConnectiveKind::Foreign)
      throw SemanticError("foreign connective '" + nc->connective.name + "'");
    if (nc->args.size() != 1)
      throw SemanticError("only unary box/dia applications can be evaluated");
    const auto& acc = acc_of(model, nc->connective.index);
    bool box = kind == ConnectiveKind::Box;
    for (WorldId v = 0; v < model.world_count(); ++v) {
      if (!acc[world][v]) continue;
      bool sub = eval_formula(model, v, nc->args[0], logic, assignment);
      if (box && !sub) return false;
      if (!box && sub) return true;
    }
    return box;
  }
  const auto& w = std::get<InWorldF>(node);
  const auto* app = std::get_if<FunctionApp>(&w.world->node);
  if (!app) throw SemanticError("$in_world scope must be a world constant");
  std::optional<WorldId> target;
  if (app->symbol == "$local_world")
    target = model.local_world;
  else
    target = model.world_id(app->symbol);
  if (!target) throw SemanticError("unknown world '" + app->symbol + "'");
  return eval_formula(model, *target, w.body, logic, assignment);
}

bool frame_condition_holds(FrameCondition condition,
                           const std::vector<std::vector<bool>>& acc) {
  const std::size_t n = acc.size();
  switch (condition) {
    case FrameCondition::Reflexive:
      for (std::size_t w = 0; w < n; ++w)
        if (!acc[w][w]) return false;
      return true;
    case FrameCondition::Symmetric:
      for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v)
          if (acc[w][v] && !acc[v][w]) return false;
      return true;
    case FrameCondition::Serial:
      for (std::size_t w = 0; w < n; ++w) {
        bool any = false;
        for (std::size_t v = 0; v < n; ++v) any = any || acc[w][v];
        if (!any) return false;
      }
      return true;
    case FrameCondition::Transitive:
      for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v)
          for (std::size_t u = 0; u < n; ++u)
            if (acc[w][v] && acc[v][u] && !acc[w][u]) return false;
      return true;
    case FrameCondition::Euclidean:
      for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v)
          for (std::size_t u = 0; u < n; ++u)
            if (acc[w][v] && acc[w][u] && !acc[v][u]) return false;
      return true;
    case FrameCondition::AtMostOneSuccessor:
      for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v)
          for (std::size_t u = 0; u < n; ++u)
            if (acc[w][v] && acc[w][u] && v != u) return false;
      return true;
    case FrameCondition::ShiftReflexive:
      for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v)
          if (acc[w][v] && !acc[v][v]) return false;
      return true;
    case FrameCondition::Dense:
      for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v) {
          if (!acc[w][v]) continue;
          bool mid = false;
          for (std::size_t u = 0; u < n && !mid; ++u)
            mid = acc[w][u] && acc[u][v];
          if (!mid) return false;
        }
      return true;
    case FrameCondition::Confluent:
      for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v)
          for (std::size_t u = 0; u < n; ++u) {
            if (!acc[w][v] || !acc[w][u]) continue;
            bool join = false;
            for (std::size_t x = 0; x < n && !join; ++x)
              join = acc[v][x] && acc[u][x];
            if (!join) return false;
          }
      return true;
  }
  throw SemanticError("unknown frame condition");
}

bool role_is_assumption(const Role& role) {
  const std::string& b = role.base;
  return b == "axiom" || b == "hypothesis" || b == "definition" ||
         b == "assumption" || b == "lemma" || b == "theorem" || b == "corollary";
}

bool role_is_global(const Role& role) {
  if (role.subrole) {
    if (*role.subrole == "local") return false;
    if (*role.subrole == "global") return true;
  }
  return role.base != "hypothesis" && role.base != "assumption";
}

std::string szs_status(ModelClassification c) {
  switch (c) {
    case ModelClassification::Satisfiable: return "Satisfiable";
    case ModelClassification::CounterSatisfiable: return "CounterSatisfiable";
    case ModelClassification::NotAModel:
    case ModelClassification::ConsistentWithConjecture: return "Unknown";
  }
  return "Unknown";
}

namespace {

// Union of all accessibility relations, used by the domain-regime checks.
std::vector<std::vector<bool>> accessibility_union(const FiniteKripkeModel& m) {
  std::size_t n = m.world_count();
  std::vector<std::vector<bool>> u(n, std::vector<bool>(n, false));
  for (const auto& [index, acc] : m.accessibility)
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t v = 0; v < n; ++v)
        if (acc[w][v]) u[w][v] = true;
  return u;
}

// Collects the connective indices used in the problem's formulas.
void collect_indices(const FormulaPtr& f, std::set<std::string>& out) {
  if (!f) return;
  if (const auto* nc = std::get_if<NCAppF>(&f->node)) {
    out.insert(nc->connective.index.value_or(""));
    for (const auto& a : nc->args) collect_indices(a, out);
    return;
  }
  if (const auto* n = std::get_if<NotF>(&f->node)) return collect_indices(n->arg, out);
  if (const auto* b = std::get_if<BinaryF>(&f->node)) {
    collect_indices(b->lhs, out);
    collect_indices(b->rhs, out);
    return;
  }
  if (const auto* q = std::get_if<QuantF>(&f->node))
    return collect_indices(q->body, out);
  if (const auto* w = std::get_if<InWorldF>(&f->node))
    return collect_indices(w->body, out);
}

}  // namespace

ModelCheckReport check_model(const FiniteKripkeModel& model,
                             const TypedProblem& problem,
                             const NormalizedModalLogic& logic) {
  ModelCheckReport report;
  const std::size_t n = model.world_count();

  // Statement checks.
  for (const auto& st : problem.problem.statements) {
    if (!st.is_formula()) continue;
    if (st.role.base == "conjecture") {
      Assignment a;
      bool value = eval_formula(model, model.local_world, st.formula(), &logic, a);
      report.conjecture_value = value;
      report.conjecture_name = st.name;
      continue;
    }
    if (!role_is_assumption(st.role)) continue;
    CheckItem item;
    item.label = st.name;
    if (role_is_global(st.role)) {
      item.pass = true;
      for (WorldId w = 0; w < n && item.pass; ++w) {
        Assignment a;
        if (!eval_formula(model, w, st.formula(), &logic, a)) {
          item.pass = false;
          item.detail = "fails at world " + model.world_names[w];
        }
      }
      if (item.pass) item.detail = "holds at every world";
    } else {
      Assignment a;
      item.pass = eval_formula(model, model.local_world, st.formula(), &logic, a);
      item.detail = item.pass ? "holds at the local world"
                              : "fails at the local world";
    }
    report.statement_checks.push_back(std::move(item));
  }

  // Frame checks for every index the problem uses plus every relation the
  // model carries.
  std::set<std::string> indices;
  for (const auto& st : problem.problem.statements)
    if (st.is_formula()) collect_indices(st.formula(), indices);
  for (const auto& [index, acc] : model.accessibility) indices.insert(index);
  for (const auto& index : indices) {
    auto accIt = model.accessibility.find(index);
    if (accIt == model.accessibility.end()) {
      CheckItem item;
      item.label = index.empty() ? "accessibility" : "accessibility #" + index;
      item.pass = false;
      item.detail = "missing relation";
      report.frame_checks.push_back(std::move(item));
      continue;
    }
    std::optional<std::string> key =
        index.empty() ? std::nullopt : std::make_optional(index);
    const AxiomSet& axioms = logic.modality_for(key);
    for (FrameCondition c : frame_conditions(axioms)) {
      CheckItem item;
      item.label = (index.empty() ? std::string("accessibility")
                                  : "accessibility #" + index) +
                   " " + frame_condition_name(c);
      item.pass = frame_condition_holds(c, accIt->second);
      if (!item.pass) item.detail = "condition violated";
      report.frame_checks.push_back(std::move(item));
    }
  }

  // Structural checks: nonemptiness, domain regime, rigidity, term locality.
  auto united = accessibility_union(model);
  for (const auto& [sort, dom] : model.domains) {
    CheckItem nonempty;
    nonempty.label = "domain " + sort + " nonempty";
    nonempty.pass = true;
    for (std::size_t w = 0; w < n; ++w) {
      bool any = false;
      for (Elem e = 0; e < dom.size(); ++e) any = any || dom.member[w][e];
      if (!any) {
        nonempty.pass = false;
        nonempty.detail = "empty at world " + model.world_names[w];
        break;
      }
    }
    report.structure_checks.push_back(std::move(nonempty));

    CheckItem regime;
    regime.label = "domain " + sort + " " + to_string(logic.domains);
    regime.pass = true;
    if (logic.domains == DomainsPolicy::Constant) {
      for (std::size_t w = 1; w < n && regime.pass; ++w)
        if (dom.member[w] != dom.member[0]) {
          regime.pass = false;
          regime.detail = "differs between worlds";
        }
    } else if (logic.domains == DomainsPolicy::Cumulative ||
               logic.domains == DomainsPolicy::Decreasing) {
      bool cumulative = logic.domains == DomainsPolicy::Cumulative;
      for (std::size_t w = 0; w < n && regime.pass; ++w)
        for (std::size_t v = 0; v < n && regime.pass; ++v) {
          if (!united[w][v]) continue;
          for (Elem e = 0; e < dom.size(); ++e) {
            bool bad = cumulative ? (dom.member[w][e] && !dom.member[v][e])
                                  : (dom.member[v][e] && !dom.member[w][e]);
            if (bad) {
              regime.pass = false;
              regime.detail = "not " +
                              std::string(cumulative ? "cumulative" : "decreasing") +
                              " along " + model.world_names[w] + " -> " +
                              model.world_names[v];
              break;
            }
          }
        }
    }
    report.structure_checks.push_back(std::move(regime));
  }

  if (logic.designation == DesignationPolicy::Rigid) {
    for (const auto& [symbol, fn] : model.functions) {
      CheckItem item;
      item.label = "function " + symbol + " rigid";
      item.pass = true;
      for (std::size_t w = 1; w < fn.tables.size(); ++w)
        if (fn.tables[w] != fn.tables[0]) {
          item.pass = false;
          item.detail = "varies between worlds";
          break;
        }
      report.structure_checks.push_back(std::move(item));
    }
  }

  if (logic.terms == TermsPolicy::Local) {
    for (const auto& [symbol, fn] : model.functions) {
      CheckItem item;
      item.label = "function " + symbol + " local";
      item.pass = true;
      const SortDomain* result_dom = nullptr;
      auto rd = model.domains.find(fn.result_sort);
      if (rd != model.domains.end()) result_dom = &rd->second;
      for (std::size_t w = 0; w < fn.tables.size() && item.pass; ++w) {
        for (const auto& [args, value] : fn.tables[w]) {
          bool args_local = true;
          for (std::size_t i = 0; i < args.size(); ++i) {
            const auto& ad = model.domains.at(fn.arg_sorts[i]);
            if (!ad.member[w][args[i]]) args_local = false;
          }
          if (!args_local) continue;
          if (result_dom && !result_dom->member[w][value]) {
            item.pass = false;
            item.detail = "value escapes the domain at world " + model.world_names[w];
            break;
          }
        }
      }
      report.structure_checks.push_back(std::move(item));
    }
  }

  // Classification.
  if (!report.all_pass()) {
    report.classification = ModelClassification::NotAModel;
  } else if (!report.conjecture_value.has_value()) {
    report.classification = ModelClassification::Satisfiable;
  } else if (*report.conjecture_value) {
    report.classification = ModelClassification::ConsistentWithConjecture;
  } else {
    report.classification = ModelClassification::CounterSatisfiable;
  }
  return report;
}

}  // namespace nxkit
