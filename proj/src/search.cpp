#include "nxkit/search.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace nxkit {

namespace {

using Matrix = std::vector<std::vector<bool>>;

struct BudgetExceeded {};

enum TV : std::int8_t { TV_F = 0, TV_T = 1, TV_U = 2 };

TV tv_not(TV a) { return a == TV_U ? TV_U : (a == TV_T ? TV_F : TV_T); }

std::string element_word(const std::string& sort) {
  std::string base = sort[0] == '$' ? sort.substr(1) : sort;
  std::string out;
  for (char c : base)
    out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return out.empty() ? std::string("x") : out;
}

// ---------------------------------------------------------------------------
// Problem shape: constraints, connective indices, sorts in play
// ---------------------------------------------------------------------------

struct Constraint {
  FormulaPtr formula;
  std::string name;
  bool global = true;
  bool negated = false;                 // require the formula to be false
  std::set<std::string> symbols;        // function/predicate symbols mentioned
};

void collect_symbols(const TermPtr& t, std::set<std::string>& out) {
  if (!t) return;
  if (const auto* app = std::get_if<FunctionApp>(&t->node)) {
    out.insert(app->symbol);
    for (const auto& a : app->args) collect_symbols(a, out);
  }
}

void collect_symbols(const FormulaPtr& f, std::set<std::string>& out) {
  if (!f) return;
  if (const auto* a = std::get_if<AtomF>(&f->node)) {
    out.insert(a->predicate);
    for (const auto& t : a->args) collect_symbols(t, out);
  } else if (const auto* e = std::get_if<EqualityF>(&f->node)) {
    collect_symbols(e->lhs, out);
    collect_symbols(e->rhs, out);
  } else if (const auto* n = std::get_if<NotF>(&f->node)) {
    collect_symbols(n->arg, out);
  } else if (const auto* b = std::get_if<BinaryF>(&f->node)) {
    collect_symbols(b->lhs, out);
    collect_symbols(b->rhs, out);
  } else if (const auto* q = std::get_if<QuantF>(&f->node)) {
    collect_symbols(q->body, out);
  } else if (const auto* nc = std::get_if<NCAppF>(&f->node)) {
    for (const auto& arg : nc->args) collect_symbols(arg, out);
  } else if (const auto* iw = std::get_if<InWorldF>(&f->node)) {
    collect_symbols(iw->world, out);
    collect_symbols(iw->body, out);
  }
}

void collect_indices(const FormulaPtr& f, const NormalizedModalLogic& logic,
                     std::set<std::string>& out) {
  if (!f) return;
  if (const auto* n = std::get_if<NotF>(&f->node)) {
    collect_indices(n->arg, logic, out);
  } else if (const auto* b = std::get_if<BinaryF>(&f->node)) {
    collect_indices(b->lhs, logic, out);
    collect_indices(b->rhs, logic, out);
  } else if (const auto* q = std::get_if<QuantF>(&f->node)) {
    collect_indices(q->body, logic, out);
  } else if (const auto* nc = std::get_if<NCAppF>(&f->node)) {
    if (connective_kind(nc->connective, logic) == ConnectiveKind::Foreign)
      throw SemanticError("cannot search under foreign connective '" +
                          nc->connective.name + "'");
    if (nc->args.size() != 1)
      throw SemanticError("connective '" + nc->connective.name +
                          "' must be applied to exactly one formula");
    out.insert(nc->connective.index ? *nc->connective.index : "");
    collect_indices(nc->args[0], logic, out);
  } else if (std::get_if<InWorldF>(&f->node)) {
    throw SemanticError("world scoping is only meaningful in interpretations");
  }
}

void collect_binder_sorts(const FormulaPtr& f, std::set<std::string>& out) {
  if (!f) return;
  if (const auto* n = std::get_if<NotF>(&f->node)) {
    collect_binder_sorts(n->arg, out);
  } else if (const auto* b = std::get_if<BinaryF>(&f->node)) {
    collect_binder_sorts(b->lhs, out);
    collect_binder_sorts(b->rhs, out);
  } else if (const auto* q = std::get_if<QuantF>(&f->node)) {
    for (const auto& v : q->vars)
      out.insert(v.sort ? std::get<AtomicSort>(v.sort->node).name : "$i");
    collect_binder_sorts(q->body, out);
  } else if (const auto* nc = std::get_if<NCAppF>(&f->node)) {
    for (const auto& arg : nc->args) collect_binder_sorts(arg, out);
  }
}

// ---------------------------------------------------------------------------
// Workspace: one candidate structure with undecided function/predicate cells
// ---------------------------------------------------------------------------

struct FnSpec {
  std::string symbol;
  std::vector<std::string> arg_sorts;
  std::string result_sort;
  bool per_world = false;  // flexible designation
  std::vector<std::vector<Elem>> tuples;
  std::size_t base = 0;  // first cell id

  std::size_t world_slots(std::size_t n_worlds) const {
    return per_world ? n_worlds : 1;
  }
  std::size_t cell(std::size_t world_slot, std::size_t tuple_idx) const {
    return base + world_slot * tuples.size() + tuple_idx;
  }
};

struct PrSpec {
  std::string symbol;
  std::vector<std::string> arg_sorts;
  std::vector<std::vector<Elem>> tuples;
  std::size_t base = 0;

  std::size_t cell(std::size_t world, std::size_t tuple_idx) const {
    return base + world * tuples.size() + tuple_idx;
  }
};

struct Workspace {
  FiniteKripkeModel skel;  // worlds, accessibility, domains all fixed
  const NormalizedModalLogic* logic = nullptr;
  std::size_t n_worlds = 0;

  std::vector<FnSpec> fns;
  std::vector<PrSpec> prs;
  std::map<std::string, std::size_t> fn_of;  // symbol -> index into fns
  std::map<std::string, std::size_t> pr_of;

  std::vector<std::vector<Elem>> fn_allowed;  // per fn cell: candidate values
  std::vector<int> fn_choice;                 // index into fn_allowed, -1 unset
  std::vector<TV> pr_state;

  long long evals = 0;
  long long budget = 0;

  void tick() {
    if (++evals > budget) throw BudgetExceeded{};
  }
};

std::size_t tuple_index(const Workspace& ws, const std::vector<std::string>& sorts,
                        const std::vector<Elem>& args) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < sorts.size(); ++i)
    idx = idx * ws.skel.domains.at(sorts[i]).size() + args[i];
  return idx;
}

std::vector<std::vector<Elem>> tuples_for(const FiniteKripkeModel& skel,
                                          const std::vector<std::string>& sorts) {
  std::vector<std::vector<Elem>> out{{}};
  for (const auto& s : sorts) {
    std::size_t n = skel.domains.at(s).size();
    std::vector<std::vector<Elem>> next;
    next.reserve(out.size() * n);
    for (const auto& prefix : out)
      for (Elem e = 0; e < n; ++e) {
        auto t = prefix;
        t.push_back(e);
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Three-valued evaluation over a partially decided workspace
// ---------------------------------------------------------------------------

std::optional<Elem> eval_term3(Workspace& ws, WorldId w, const TermPtr& t,
                               const Assignment& asg) {
  if (const auto* v = std::get_if<Variable>(&t->node)) {
    auto e = asg.lookup(v->name);
    if (!e) throw SemanticError("unbound variable '" + v->name + "'");
    return e;
  }
  if (const auto* app = std::get_if<FunctionApp>(&t->node)) {
    auto it = ws.fn_of.find(app->symbol);
    if (it == ws.fn_of.end())
      throw SemanticError("symbol '" + app->symbol + "' is not a function");
    const FnSpec& fn = ws.fns[it->second];
    std::vector<Elem> args;
    args.reserve(app->args.size());
    for (const auto& a : app->args) {
      auto e = eval_term3(ws, w, a, asg);
      if (!e) return std::nullopt;
      args.push_back(*e);
    }
    std::size_t slot = fn.per_world ? w : 0;
    std::size_t cell = fn.cell(slot, tuple_index(ws, fn.arg_sorts, args));
    int choice = ws.fn_choice[cell];
    if (choice < 0) return std::nullopt;
    return ws.fn_allowed[cell][static_cast<std::size_t>(choice)];
  }
  throw SemanticError("numbers cannot appear in a searched formula");
}

TV eval3(Workspace& ws, WorldId w, const FormulaPtr& f, Assignment& asg);

TV eval3_quant(Workspace& ws, WorldId w, const QuantF& q, Assignment& asg,
               std::size_t var_idx) {
  if (var_idx == q.vars.size()) return eval3(ws, w, q.body, asg);
  const VarBinding& v = q.vars[var_idx];
  std::string sort = v.sort ? std::get<AtomicSort>(v.sort->node).name : "$i";
  auto dit = ws.skel.domains.find(sort);
  if (dit == ws.skel.domains.end())
    throw SemanticError("no domain for sort '" + sort + "'");
  const SortDomain& dom = dit->second;
  bool forall = q.quantifier == Quantifier::Forall;
  TV result = forall ? TV_T : TV_F;
  for (Elem e = 0; e < dom.size(); ++e) {
    if (!dom.member[w][e]) continue;
    asg.bound.emplace_back(v.name, e);
    TV val = eval3_quant(ws, w, q, asg, var_idx + 1);
    asg.bound.pop_back();
    if (forall) {
      if (val == TV_F) return TV_F;
      if (val == TV_U) result = TV_U;
    } else {
      if (val == TV_T) return TV_T;
      if (val == TV_U) result = TV_U;
    }
  }
  return result;
}

TV eval3(Workspace& ws, WorldId w, const FormulaPtr& f, Assignment& asg) {
  if (const auto* a = std::get_if<AtomF>(&f->node)) {
    ws.tick();
    auto it = ws.pr_of.find(a->predicate);
    if (it == ws.pr_of.end())
      throw SemanticError("symbol '" + a->predicate + "' is not a predicate");
    const PrSpec& pr = ws.prs[it->second];
    std::vector<Elem> args;
    args.reserve(a->args.size());
    for (const auto& t : a->args) {
      auto e = eval_term3(ws, w, t, asg);
      if (!e) return TV_U;
      args.push_back(*e);
    }
    return ws.pr_state[pr.cell(w, tuple_index(ws, pr.arg_sorts, args))];
  }
  if (const auto* e = std::get_if<EqualityF>(&f->node)) {
    ws.tick();
    auto l = eval_term3(ws, w, e->lhs, asg);
    if (!l) return TV_U;
    auto r = eval_term3(ws, w, e->rhs, asg);
    if (!r) return TV_U;
    bool eq = *l == *r;
    return (eq != e->negated) ? TV_T : TV_F;
  }
  if (std::get_if<TrueF>(&f->node)) return TV_T;
  if (std::get_if<FalseF>(&f->node)) return TV_F;
  if (const auto* n = std::get_if<NotF>(&f->node))
    return tv_not(eval3(ws, w, n->arg, asg));
  if (const auto* b = std::get_if<BinaryF>(&f->node)) {
    switch (b->op) {
      case BinaryOp::And: {
        TV l = eval3(ws, w, b->lhs, asg);
        if (l == TV_F) return TV_F;
        TV r = eval3(ws, w, b->rhs, asg);
        if (r == TV_F) return TV_F;
        return (l == TV_T && r == TV_T) ? TV_T : TV_U;
      }
      case BinaryOp::Or: {
        TV l = eval3(ws, w, b->lhs, asg);
        if (l == TV_T) return TV_T;
        TV r = eval3(ws, w, b->rhs, asg);
        if (r == TV_T) return TV_T;
        return (l == TV_F && r == TV_F) ? TV_F : TV_U;
      }
      case BinaryOp::Implies: {
        TV l = eval3(ws, w, b->lhs, asg);
        if (l == TV_F) return TV_T;
        TV r = eval3(ws, w, b->rhs, asg);
        if (r == TV_T) return TV_T;
        if (l == TV_T && r == TV_F) return TV_F;
        return TV_U;
      }
      case BinaryOp::ReverseImplies: {
        TV r = eval3(ws, w, b->rhs, asg);
        if (r == TV_F) return TV_T;
        TV l = eval3(ws, w, b->lhs, asg);
        if (l == TV_T) return TV_T;
        if (r == TV_T && l == TV_F) return TV_F;
        return TV_U;
      }
      case BinaryOp::Iff: {
        TV l = eval3(ws, w, b->lhs, asg);
        if (l == TV_U) return TV_U;
        TV r = eval3(ws, w, b->rhs, asg);
        if (r == TV_U) return TV_U;
        return (l == r) ? TV_T : TV_F;
      }
      case BinaryOp::Xor: {
        TV l = eval3(ws, w, b->lhs, asg);
        if (l == TV_U) return TV_U;
        TV r = eval3(ws, w, b->rhs, asg);
        if (r == TV_U) return TV_U;
        return (l != r) ? TV_T : TV_F;
      }
    }
    return TV_U;
  }
  if (const auto* q = std::get_if<QuantF>(&f->node))
    return eval3_quant(ws, w, *q, asg, 0);
  if (const auto* nc = std::get_if<NCAppF>(&f->node)) {
    ConnectiveKind kind = connective_kind(nc->connective, *ws.logic);
    if (kind == ConnectiveKind::Foreign)
      throw SemanticError("cannot search under foreign connective '" +
                          nc->connective.name + "'");
    std::string key = nc->connective.index ? *nc->connective.index : "";
    auto it = ws.skel.accessibility.find(key);
    if (it == ws.skel.accessibility.end())
      throw SemanticError("no accessibility relation for index '" + key + "'");
    const Matrix& acc = it->second;
    bool box = kind == ConnectiveKind::Box;
    TV result = box ? TV_T : TV_F;
    for (WorldId v = 0; v < ws.n_worlds; ++v) {
      if (!acc[w][v]) continue;
      TV val = eval3(ws, v, nc->args[0], asg);
      if (box) {
        if (val == TV_F) return TV_F;
        if (val == TV_U) result = TV_U;
      } else {
        if (val == TV_T) return TV_T;
        if (val == TV_U) result = TV_U;
      }
    }
    return result;
  }
  throw SemanticError("world scoping is only meaningful in interpretations");
}

TV constraint_status(Workspace& ws, const Constraint& c) {
  Assignment asg;
  TV v;
  if (c.global) {
    v = TV_T;
    for (WorldId w = 0; w < ws.n_worlds; ++w) {
      TV at = eval3(ws, w, c.formula, asg);
      if (at == TV_F) {
        v = TV_F;
        break;
      }
      if (at == TV_U) v = TV_U;
    }
  } else {
    v = eval3(ws, ws.skel.local_world, c.formula, asg);
  }
  return c.negated ? tv_not(v) : v;
}

// ---------------------------------------------------------------------------
// Backtracking over undecided cells
// ---------------------------------------------------------------------------

struct SearchDriver {
  const TypedProblem* tp = nullptr;
  const NormalizedModalLogic* logic = nullptr;
  std::vector<Constraint> constraints;
  bool has_conjecture = false;

  FiniteKripkeModel finish(Workspace& ws) const {
    FiniteKripkeModel m = ws.skel;
    for (const auto& fn : ws.fns) {
      FunctionInterp interp;
      interp.arg_sorts = fn.arg_sorts;
      interp.result_sort = fn.result_sort;
      interp.tables.resize(ws.n_worlds);
      for (WorldId w = 0; w < ws.n_worlds; ++w) {
        std::size_t slot = fn.per_world ? w : 0;
        for (std::size_t ti = 0; ti < fn.tuples.size(); ++ti) {
          std::size_t cell = fn.cell(slot, ti);
          int choice = std::max(ws.fn_choice[cell], 0);
          interp.tables[w][fn.tuples[ti]] =
              ws.fn_allowed[cell][static_cast<std::size_t>(choice)];
        }
      }
      m.functions[fn.symbol] = std::move(interp);
    }
    for (const auto& pr : ws.prs) {
      PredicateInterp interp;
      interp.arg_sorts = pr.arg_sorts;
      interp.positives.resize(ws.n_worlds);
      for (WorldId w = 0; w < ws.n_worlds; ++w)
        for (std::size_t ti = 0; ti < pr.tuples.size(); ++ti)
          if (ws.pr_state[pr.cell(w, ti)] == TV_T)
            interp.positives[w].insert(pr.tuples[ti]);
      m.predicates[pr.symbol] = std::move(interp);
    }
    return m;
  }

  bool validate(const FiniteKripkeModel& m, SearchOutcome& out) const {
    ModelCheckReport report = check_model(m, *tp, *logic);
    ModelClassification want = has_conjecture
                                   ? ModelClassification::CounterSatisfiable
                                   : ModelClassification::Satisfiable;
    if (report.classification != want) return false;
    out.status = SearchStatus::Found;
    out.model = m;
    out.report = std::move(report);
    return true;
  }

  // `changed` is the symbol whose cells were just assigned; constraints not
  // mentioning it cannot have changed status. Empty = re-evaluate everything.
  bool dfs(Workspace& ws, std::vector<char> done, const std::string& changed,
           SearchOutcome& out) const {
    bool all_done = true;
    for (std::size_t i = 0; i < constraints.size(); ++i) {
      if (done[i]) continue;
      if (!changed.empty() && !constraints[i].symbols.count(changed)) {
        all_done = false;
        continue;
      }
      TV v = constraint_status(ws, constraints[i]);
      if (v == TV_F) return false;
      if (v == TV_T)
        done[i] = 1;
      else
        all_done = false;
    }
    if (all_done) return validate(finish(ws), out);

    for (const auto& fn : ws.fns) {
      std::size_t slots = fn.world_slots(ws.n_worlds);
      for (std::size_t slot = 0; slot < slots; ++slot)
        for (std::size_t ti = 0; ti < fn.tuples.size(); ++ti) {
          std::size_t cell = fn.cell(slot, ti);
          if (ws.fn_choice[cell] >= 0) continue;
          for (std::size_t k = 0; k < ws.fn_allowed[cell].size(); ++k) {
            ws.fn_choice[cell] = static_cast<int>(k);
            if (dfs(ws, done, fn.symbol, out)) return true;
          }
          ws.fn_choice[cell] = -1;
          return false;
        }
    }
    for (const auto& pr : ws.prs) {
      for (WorldId w = 0; w < ws.n_worlds; ++w)
        for (std::size_t ti = 0; ti < pr.tuples.size(); ++ti) {
          std::size_t cell = pr.cell(w, ti);
          if (ws.pr_state[cell] != TV_U) continue;
          for (TV v : {TV_F, TV_T}) {
            ws.pr_state[cell] = v;
            if (dfs(ws, done, pr.symbol, out)) return true;
          }
          ws.pr_state[cell] = TV_U;
          return false;
        }
    }
    return false;  // undecided constraints but no cell left: unreachable
  }
};

// ---------------------------------------------------------------------------
// Candidate structure enumeration
// ---------------------------------------------------------------------------

// All accessibility matrices of the given size satisfying every condition.
std::vector<Matrix> acc_matrices(std::size_t n,
                                 const std::vector<FrameCondition>& conditions) {
  std::vector<Matrix> out;
  std::size_t bits = n * n;
  for (std::size_t mask = 0; mask < (std::size_t{1} << bits); ++mask) {
    Matrix m(n, std::vector<bool>(n, false));
    for (std::size_t k = 0; k < bits; ++k)
      if (mask & (std::size_t{1} << k)) m[k / n][k % n] = true;
    bool ok = true;
    for (FrameCondition c : conditions)
      if (!frame_condition_holds(c, m)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(std::move(m));
  }
  return out;
}

// Size vectors (one entry per sort) ordered by total size, then
// lexicographically.
std::vector<std::vector<int>> size_vectors(const std::vector<int>& caps) {
  std::vector<std::vector<int>> out;
  if (caps.empty()) return {{}};
  int total_cap = 0;
  for (int c : caps) total_cap += c;
  for (int total = static_cast<int>(caps.size()); total <= total_cap; ++total) {
    std::vector<int> cur(caps.size(), 1);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i + 1 == caps.size()) {
        if (left >= 1 && left <= caps[i]) {
          cur[i] = left;
          out.push_back(cur);
        }
        return;
      }
      for (int v = 1; v <= std::min(caps[i], left); ++v) {
        cur[i] = v;
        rec(i + 1, left - v);
      }
    };
    rec(0, total);
  }
  return out;
}

// Per-world membership rows for one sort: every world non-empty, the union
// covering the whole universe, and the domain regime respected along the
// union of all accessibility relations.
std::vector<std::vector<std::vector<bool>>> membership_options(
    std::size_t n_worlds, std::size_t size, DomainsPolicy policy,
    const Matrix& acc_union) {
  std::vector<std::vector<std::vector<bool>>> out;
  if (policy == DomainsPolicy::Constant) {
    out.emplace_back(n_worlds, std::vector<bool>(size, true));
    return out;
  }
  std::size_t row_options = (std::size_t{1} << size) - 1;  // non-empty masks
  std::vector<std::size_t> rows(n_worlds, 1);
  for (;;) {
    // validate current row masks
    std::size_t unioned = 0;
    for (std::size_t w = 0; w < n_worlds; ++w) unioned |= rows[w];
    if (unioned == row_options) {
      bool ok = true;
      if (policy == DomainsPolicy::Cumulative ||
          policy == DomainsPolicy::Decreasing) {
        for (std::size_t w = 0; w < n_worlds && ok; ++w)
          for (std::size_t v = 0; v < n_worlds && ok; ++v) {
            if (!acc_union[w][v]) continue;
            std::size_t from = policy == DomainsPolicy::Cumulative ? rows[w] : rows[v];
            std::size_t to = policy == DomainsPolicy::Cumulative ? rows[v] : rows[w];
            if ((from & ~to) != 0) ok = false;
          }
      }
      if (ok) {
        std::vector<std::vector<bool>> member(n_worlds,
                                              std::vector<bool>(size, false));
        for (std::size_t w = 0; w < n_worlds; ++w)
          for (std::size_t e = 0; e < size; ++e)
            if (rows[w] & (std::size_t{1} << e)) member[w][e] = true;
        out.push_back(std::move(member));
      }
    }
    // next odometer position
    std::size_t k = 0;
    while (k < n_worlds) {
      if (rows[k] < row_options) {
        ++rows[k];
        break;
      }
      rows[k] = 1;
      ++k;
    }
    if (k == n_worlds) break;
  }
  return out;
}

}  // namespace

SearchOutcome find_countermodel(const TypedProblem& tp,
                                const NormalizedModalLogic& logic,
                                const SearchBounds& bounds) {
  SearchDriver driver;
  driver.tp = &tp;
  driver.logic = &logic;

  std::set<std::string> indices;
  std::set<std::string> sorts_used;
  for (const auto& st : tp.problem.statements) {
    if (!st.is_formula()) continue;
    collect_indices(st.formula(), logic, indices);
    collect_binder_sorts(st.formula(), sorts_used);
    if (st.role.base == "conjecture") {
      if (driver.has_conjecture)
        throw SemanticError("more than one conjecture");
      driver.has_conjecture = true;
      Constraint c;
      c.formula = st.formula();
      c.name = st.name;
      c.global = false;
      c.negated = true;
      collect_symbols(st.formula(), c.symbols);
      driver.constraints.push_back(std::move(c));
    } else if (role_is_assumption(st.role)) {
      Constraint c;
      c.formula = st.formula();
      c.name = st.name;
      c.global = role_is_global(st.role);
      collect_symbols(st.formula(), c.symbols);
      driver.constraints.push_back(std::move(c));
    }
  }
  for (const auto& [sym, type] : tp.signature.symbols) {
    (void)sym;
    for (const auto& s : arg_sort_names(type)) sorts_used.insert(s);
    std::string res = result_sort_name(type);
    if (res != "$o") sorts_used.insert(res);
  }
  sorts_used.erase("$o");
  std::vector<std::string> sorts(sorts_used.begin(), sorts_used.end());

  // Frame conditions per index, validated up front.
  std::map<std::string, std::vector<FrameCondition>> index_conditions;
  for (const auto& idx : indices) {
    const AxiomSet& axioms = logic.modality_for(
        idx.empty() ? std::optional<std::string>{} : std::optional<std::string>{idx});
    std::set<FrameCondition> cs;
    for (FrameCondition c : frame_conditions(axioms)) cs.insert(c);
    index_conditions[idx] = std::vector<FrameCondition>(cs.begin(), cs.end());
  }

  std::vector<int> caps;
  caps.reserve(sorts.size());
  for (const auto& s : sorts) caps.push_back(std::max(1, bounds.cap_for(s)));

  SearchOutcome outcome;
  long long used = 0;

  try {
    for (int n = 1; n <= bounds.max_worlds; ++n) {
      std::size_t nw = static_cast<std::size_t>(n);
      // accessibility options per index
      std::vector<std::string> index_list(indices.begin(), indices.end());
      std::vector<std::vector<Matrix>> acc_options;
      bool impossible = false;
      for (const auto& idx : index_list) {
        acc_options.push_back(acc_matrices(nw, index_conditions[idx]));
        if (acc_options.back().empty()) impossible = true;
      }
      if (impossible) continue;

      for (const auto& sizes : size_vectors(caps)) {
        // odometer over accessibility choices
        std::vector<std::size_t> pick(index_list.size(), 0);
        for (;;) {
          Matrix acc_union(nw, std::vector<bool>(nw, false));
          std::map<std::string, Matrix> acc;
          for (std::size_t i = 0; i < index_list.size(); ++i) {
            const Matrix& m = acc_options[i][pick[i]];
            acc[index_list[i]] = m;
            for (std::size_t a = 0; a < nw; ++a)
              for (std::size_t b = 0; b < nw; ++b)
                if (m[a][b]) acc_union[a][b] = true;
          }

          // membership options per sort
          std::vector<std::vector<std::vector<std::vector<bool>>>> mem_options;
          bool empty_mem = false;
          for (std::size_t si = 0; si < sorts.size(); ++si) {
            mem_options.push_back(membership_options(
                nw, static_cast<std::size_t>(sizes[si]), logic.domains, acc_union));
            if (mem_options.back().empty()) empty_mem = true;
          }
          if (!empty_mem) {
            std::vector<std::size_t> mpick(sorts.size(), 0);
            for (;;) {
              Workspace ws;
              ws.logic = &logic;
              ws.n_worlds = nw;
              ws.budget = bounds.budget - used;
              for (std::size_t w = 0; w < nw; ++w)
                ws.skel.world_names.push_back("w" + std::to_string(w + 1));
              ws.skel.local_world = 0;
              ws.skel.accessibility = acc;
              for (std::size_t si = 0; si < sorts.size(); ++si) {
                SortDomain dom;
                for (int e = 0; e < sizes[si]; ++e)
                  dom.element_names.push_back("e_" + element_word(sorts[si]) +
                                              "_" + std::to_string(e + 1));
                dom.member = mem_options[si][mpick[si]];
                ws.skel.domains[sorts[si]] = std::move(dom);
              }

              // cells
              bool dead = false;
              std::size_t next_cell = 0;
              for (const auto& [sym, type] : tp.signature.symbols) {
                std::vector<std::string> args = arg_sort_names(type);
                if (is_predicate_type(type)) {
                  PrSpec pr;
                  pr.symbol = sym;
                  pr.arg_sorts = args;
                  pr.tuples = tuples_for(ws.skel, args);
                  pr.base = 0;  // assigned after fn cells
                  ws.prs.push_back(std::move(pr));
                } else {
                  FnSpec fn;
                  fn.symbol = sym;
                  fn.arg_sorts = args;
                  fn.result_sort = result_sort_name(type);
                  fn.per_world =
                      logic.designation == DesignationPolicy::Flexible;
                  fn.tuples = tuples_for(ws.skel, args);
                  ws.fns.push_back(std::move(fn));
                }
              }
              for (auto& fn : ws.fns) {
                fn.base = next_cell;
                next_cell += fn.world_slots(nw) * fn.tuples.size();
              }
              ws.fn_choice.assign(next_cell, -1);
              ws.fn_allowed.assign(next_cell, {});
              for (auto& fn : ws.fns) {
                const SortDomain& res = ws.skel.domains.at(fn.result_sort);
                std::size_t slots = fn.world_slots(nw);
                for (std::size_t slot = 0; slot < slots && !dead; ++slot) {
                  for (std::size_t ti = 0; ti < fn.tuples.size() && !dead; ++ti) {
                    std::vector<Elem> allowed;
                    for (Elem v = 0; v < res.size(); ++v) {
                      bool ok = true;
                      if (logic.terms == TermsPolicy::Local) {
                        for (WorldId w = 0; w < nw && ok; ++w) {
                          if (fn.per_world && w != slot) continue;
                          bool args_in = true;
                          for (std::size_t ai = 0; ai < fn.arg_sorts.size(); ++ai)
                            if (!ws.skel.domains.at(fn.arg_sorts[ai])
                                     .member[w][fn.tuples[ti][ai]]) {
                              args_in = false;
                              break;
                            }
                          if (args_in && !res.member[w][v]) ok = false;
                        }
                      }
                      if (ok) allowed.push_back(v);
                    }
                    if (allowed.empty()) dead = true;
                    ws.fn_allowed[fn.cell(slot, ti)] = std::move(allowed);
                  }
                }
              }
              std::size_t pr_cells = 0;
              for (auto& pr : ws.prs) {
                pr.base = pr_cells;
                pr_cells += nw * pr.tuples.size();
              }
              ws.pr_state.assign(pr_cells, TV_U);
              for (std::size_t i = 0; i < ws.fns.size(); ++i)
                ws.fn_of[ws.fns[i].symbol] = i;
              for (std::size_t i = 0; i < ws.prs.size(); ++i)
                ws.pr_of[ws.prs[i].symbol] = i;

              if (!dead) {
                std::vector<char> done(driver.constraints.size(), 0);
                bool found = driver.dfs(ws, done, "", outcome);
                used += ws.evals;
                if (found) {
                  outcome.evaluations = used;
                  return outcome;
                }
              }

              // next membership pick
              std::size_t k = 0;
              while (k < sorts.size()) {
                if (++mpick[k] < mem_options[k].size()) break;
                mpick[k] = 0;
                ++k;
              }
              if (k == sorts.size() || sorts.empty()) break;
            }
          }

          // next accessibility pick
          std::size_t k = 0;
          while (k < index_list.size()) {
            if (++pick[k] < acc_options[k].size()) break;
            pick[k] = 0;
            ++k;
          }
          if (k == index_list.size() || index_list.empty()) break;
        }
      }
    }
  } catch (const BudgetExceeded&) {
    outcome.status = SearchStatus::BudgetExhausted;
    outcome.evaluations = bounds.budget;
    return outcome;
  }

  outcome.status = SearchStatus::NotFound;
  outcome.evaluations = used;
  return outcome;
}

}  // namespace nxkit
