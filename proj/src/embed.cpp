#include "nxkit/embed.hpp"

#include <algorithm>
#include <cctype>

#include "nxkit/kripke.hpp"

namespace nxkit {

namespace {

std::string sanitize_word(const std::string& raw) {
  std::string out;
  for (char c : raw) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
      out += c;
    else
      out += '_';
  }
  if (out.empty()) out = "x";
  if (!std::islower(static_cast<unsigned char>(out[0]))) out = "s_" + out;
  return out;
}

// Strips the leading '$' of defined sorts so they can appear inside fresh
// plain-word names ("$i" -> "i").
std::string sort_word(const std::string& sort) {
  return sanitize_word(sort[0] == '$' ? sort.substr(1) : sort);
}

class NameAllocator {
 public:
  explicit NameAllocator(std::set<std::string> taken) : taken_(std::move(taken)) {}

  std::string fresh(const std::string& base) {
    std::string name = base;
    for (int i = 1; taken_.count(name); ++i) name = base + "_" + std::to_string(i);
    taken_.insert(name);
    return name;
  }

 private:
  std::set<std::string> taken_;
};

void collect_variables(const FormulaPtr& f, std::set<std::string>& out);

void collect_variables(const TermPtr& t, std::set<std::string>& out) {
  if (!t) return;
  if (const auto* v = std::get_if<Variable>(&t->node)) {
    out.insert(v->name);
  } else if (const auto* app = std::get_if<FunctionApp>(&t->node)) {
    for (const auto& a : app->args) collect_variables(a, out);
  }
}

void collect_variables(const FormulaPtr& f, std::set<std::string>& out) {
  if (!f) return;
  if (const auto* a = std::get_if<AtomF>(&f->node)) {
    for (const auto& t : a->args) collect_variables(t, out);
  } else if (const auto* e = std::get_if<EqualityF>(&f->node)) {
    collect_variables(e->lhs, out);
    collect_variables(e->rhs, out);
  } else if (const auto* n = std::get_if<NotF>(&f->node)) {
    collect_variables(n->arg, out);
  } else if (const auto* b = std::get_if<BinaryF>(&f->node)) {
    collect_variables(b->lhs, out);
    collect_variables(b->rhs, out);
  } else if (const auto* q = std::get_if<QuantF>(&f->node)) {
    for (const auto& v : q->vars) out.insert(v.name);
    collect_variables(q->body, out);
  } else if (const auto* nc = std::get_if<NCAppF>(&f->node)) {
    for (const auto& arg : nc->args) collect_variables(arg, out);
  } else if (const auto* iw = std::get_if<InWorldF>(&f->node)) {
    collect_variables(iw->world, out);
    collect_variables(iw->body, out);
  }
}

// Collects the connective indices occurring in box/dia position ("" for
// un-indexed occurrences) and rejects foreign or non-unary applications.
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
      throw SemanticError("cannot embed foreign connective '" +
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

// Individual sorts a problem quantifies or applies symbols over. These are
// the sorts that need existence guards when domains may differ per world.
void collect_used_sorts(const FormulaPtr& f, std::set<std::string>& out) {
  if (!f) return;
  if (const auto* n = std::get_if<NotF>(&f->node)) {
    collect_used_sorts(n->arg, out);
  } else if (const auto* b = std::get_if<BinaryF>(&f->node)) {
    collect_used_sorts(b->lhs, out);
    collect_used_sorts(b->rhs, out);
  } else if (const auto* q = std::get_if<QuantF>(&f->node)) {
    for (const auto& v : q->vars)
      out.insert(v.sort ? std::get<AtomicSort>(v.sort->node).name : "$i");
    collect_used_sorts(q->body, out);
  } else if (const auto* nc = std::get_if<NCAppF>(&f->node)) {
    for (const auto& arg : nc->args) collect_used_sorts(arg, out);
  }
}

TermPtr var_term(const std::string& name) { return make_variable(name); }

FormulaPtr guard_atom(const EmbeddingContext& ctx, const std::string& sort,
                      TermPtr world, TermPtr subject) {
  auto it = ctx.guards.find(sort);
  if (it == ctx.guards.end())
    throw SemanticError("no existence guard for sort '" + sort + "'");
  return make_atom(it->second, {std::move(world), std::move(subject)});
}

TermPtr embed_term(const TermPtr& t, const TermPtr& world, EmbeddingContext& ctx) {
  if (const auto* v = std::get_if<Variable>(&t->node)) {
    (void)v;
    return t;
  }
  if (const auto* app = std::get_if<FunctionApp>(&t->node)) {
    if (!app->symbol.empty() && app->symbol[0] == '$')
      throw SemanticError("defined symbol '" + app->symbol +
                          "' cannot appear in an embeddable problem");
    std::vector<TermPtr> args;
    if (ctx.logic->designation == DesignationPolicy::Flexible)
      args.push_back(world);
    for (const auto& a : app->args) args.push_back(embed_term(a, world, ctx));
    return make_app(app->symbol, std::move(args));
  }
  throw SemanticError("numbers cannot appear in an embeddable problem");
}

}  // namespace

std::string ledger_class_name(LedgerEntry::Class c) {
  switch (c) {
    case LedgerEntry::Class::Declaration: return "declaration";
    case LedgerEntry::Class::Frame: return "frame";
    case LedgerEntry::Class::Nonemptiness: return "nonemptiness";
    case LedgerEntry::Class::DomainMonotonicity: return "domain";
    case LedgerEntry::Class::TermLocality: return "term_locality";
    case LedgerEntry::Class::Lifted: return "lifted";
  }
  return "?";
}

std::string EmbeddingContext::fresh_world_var() {
  static const char* bases[] = {"W", "V", "U", "Z"};
  for (;;) {
    int round = fresh_counter_ / 4;
    std::string name = bases[fresh_counter_ % 4];
    if (round > 0) name += std::to_string(round);
    ++fresh_counter_;
    if (!used_variables.count(name)) {
      used_variables.insert(name);
      return name;
    }
  }
}

std::string EmbeddingContext::fresh_var(const std::string& base) {
  std::string name = base;
  for (int i = 1; used_variables.count(name); ++i)
    name = base + std::to_string(i);
  used_variables.insert(name);
  return name;
}

FormulaPtr embed_formula(const FormulaPtr& formula, const TermPtr& world,
                         EmbeddingContext& ctx) {
  if (!formula) throw SemanticError("cannot embed a missing formula");
  if (!ctx.logic) throw SemanticError("embedding context has no logic");

  if (const auto* a = std::get_if<AtomF>(&formula->node)) {
    if (!a->predicate.empty() && a->predicate[0] == '$')
      throw SemanticError("defined predicate '" + a->predicate +
                          "' cannot appear in an embeddable problem");
    std::vector<TermPtr> args;
    args.push_back(world);
    for (const auto& t : a->args) args.push_back(embed_term(t, world, ctx));
    return make_atom(a->predicate, std::move(args));
  }
  if (const auto* e = std::get_if<EqualityF>(&formula->node)) {
    return make_equality(embed_term(e->lhs, world, ctx),
                         embed_term(e->rhs, world, ctx), e->negated);
  }
  if (std::get_if<TrueF>(&formula->node)) return make_true();
  if (std::get_if<FalseF>(&formula->node)) return make_false();
  if (const auto* n = std::get_if<NotF>(&formula->node)) {
    return make_not(embed_formula(n->arg, world, ctx));
  }
  if (const auto* b = std::get_if<BinaryF>(&formula->node)) {
    return make_binary(b->op, embed_formula(b->lhs, world, ctx),
                       embed_formula(b->rhs, world, ctx));
  }
  if (const auto* q = std::get_if<QuantF>(&formula->node)) {
    FormulaPtr body = embed_formula(q->body, world, ctx);
    if (ctx.guarded()) {
      std::vector<FormulaPtr> guards;
      for (const auto& v : q->vars) {
        std::string sort = v.sort ? std::get<AtomicSort>(v.sort->node).name : "$i";
        guards.push_back(guard_atom(ctx, sort, world, var_term(v.name)));
      }
      FormulaPtr guard = guards.front();
      for (std::size_t i = 1; i < guards.size(); ++i)
        guard = make_binary(BinaryOp::And, guard, guards[i]);
      body = make_binary(
          q->quantifier == Quantifier::Forall ? BinaryOp::Implies : BinaryOp::And,
          guard, body);
    }
    return make_quant(q->quantifier, q->vars, std::move(body));
  }
  if (const auto* nc = std::get_if<NCAppF>(&formula->node)) {
    ConnectiveKind kind = connective_kind(nc->connective, *ctx.logic);
    if (kind == ConnectiveKind::Foreign)
      throw SemanticError("cannot embed foreign connective '" +
                          nc->connective.name + "'");
    if (nc->args.size() != 1)
      throw SemanticError("connective '" + nc->connective.name +
                          "' must be applied to exactly one formula");
    std::string key = nc->connective.index ? *nc->connective.index : "";
    auto it = ctx.acc_symbols.find(key);
    if (it == ctx.acc_symbols.end())
      throw SemanticError("no accessibility symbol for connective index '" +
                          key + "'");
    std::string v = ctx.fresh_world_var();
    FormulaPtr reach = make_atom(it->second, {world, var_term(v)});
    FormulaPtr body = embed_formula(nc->args[0], var_term(v), ctx);
    std::vector<VarBinding> binding{{v, make_sort(ctx.world_sort)}};
    if (kind == ConnectiveKind::Box)
      return make_quant(Quantifier::Forall, binding,
                        make_binary(BinaryOp::Implies, reach, body));
    return make_quant(Quantifier::Exists, binding,
                      make_binary(BinaryOp::And, reach, body));
  }
  throw SemanticError("world scoping is only meaningful in interpretations");
}

namespace {

TypePtr lift_predicate_type(const TypePtr& t, const std::string& world_sort) {
  std::vector<TypePtr> args{make_sort(world_sort)};
  if (const auto* m = std::get_if<MappingType>(&t->node))
    for (const auto& a : m->args) args.push_back(a);
  TypePtr result = std::get_if<MappingType>(&t->node)
                       ? std::get<MappingType>(t->node).result
                       : t;
  return make_mapping(std::move(args), result);
}

struct Emitter {
  Problem out;
  std::vector<LedgerEntry>* ledger;
  NameAllocator* statement_names;

  void emit(LedgerEntry::Class cls, const std::string& base_name, Role role,
            std::variant<FormulaPtr, TypeDeclaration, LogicSpecification,
                         RawFormula>
                body,
            const std::string& detail) {
    AnnotatedFormula st;
    st.language = Language::Tff;
    st.name = statement_names->fresh(base_name);
    st.role = std::move(role);
    st.body = std::move(body);
    out.statements.push_back(std::move(st));
    ledger->push_back({cls, out.statements.back().name, detail});
  }
};

}  // namespace

EmbeddingOutput embed(const TypedProblem& tp, const NormalizedModalLogic& logic) {
  if (!tp.problem.includes.empty())
    throw SemanticError("resolve include directives before embedding");
  for (const auto& st : tp.problem.statements)
    if (std::holds_alternative<RawFormula>(st.body))
      throw SemanticError("higher-order statement '" + st.name +
                          "' cannot be embedded");

  EmbeddingOutput result;
  EmbeddingContext& ctx = result.context;
  ctx.logic = &logic;
  ctx.signature = &tp.signature;

  // Fresh symbol names, avoiding everything the problem already uses.
  std::set<std::string> taken = tp.signature.sorts;
  for (const auto& [sym, type] : tp.signature.symbols) {
    (void)type;
    taken.insert(sym);
  }
  NameAllocator symbols(taken);

  std::set<std::string> statement_taken;
  for (const auto& st : tp.problem.statements) statement_taken.insert(st.name);
  NameAllocator statement_names(statement_taken);

  for (const auto& st : tp.problem.statements)
    if (st.is_formula()) collect_variables(st.formula(), ctx.used_variables);

  // Connective indices: the occurring ones plus explicitly keyed ones.
  std::set<std::string> indices;
  for (const auto& st : tp.problem.statements)
    if (st.is_formula()) collect_indices(st.formula(), logic, indices);
  for (const auto& [idx, axioms] : logic.indexed_modalities) {
    (void)axioms;
    indices.insert(idx);
  }
  for (const auto& idx : indices)
    logic.modality_for(idx.empty() ? std::optional<std::string>{}
                                   : std::optional<std::string>{idx});

  ctx.world_sort = symbols.fresh("world");
  for (const auto& idx : indices)
    ctx.acc_symbols[idx] =
        symbols.fresh(idx.empty() ? "acc" : sanitize_word("acc_" + idx));
  ctx.local_world_symbol = symbols.fresh("local_world");

  // Guarded sorts: every individual sort the problem mentions in a signature
  // type or a binder. Guards exist only when domains may differ by world.
  std::set<std::string> guarded_sorts;
  if (logic.domains != DomainsPolicy::Constant) {
    guarded_sorts = tp.signature.sorts;
    for (const auto& [sym, type] : tp.signature.symbols) {
      (void)sym;
      for (const auto& s : arg_sort_names(type)) guarded_sorts.insert(s);
      std::string res = result_sort_name(type);
      if (res != "$o") guarded_sorts.insert(res);
    }
    for (const auto& st : tp.problem.statements)
      if (st.is_formula()) collect_used_sorts(st.formula(), guarded_sorts);
    guarded_sorts.erase("$o");
    for (const auto& s : guarded_sorts)
      ctx.guards[s] = symbols.fresh("eiw_" + sort_word(s));
  }

  Emitter em{Problem{}, &result.ledger, &statement_names};
  Role type_role{"type", std::nullopt};
  Role axiom_role{"axiom", std::nullopt};

  // World machinery declarations.
  em.emit(LedgerEntry::Class::Declaration, ctx.world_sort + "_type", type_role,
          TypeDeclaration{ctx.world_sort, make_sort("$tType")}, "world sort");
  for (const auto& [idx, name] : ctx.acc_symbols)
    em.emit(LedgerEntry::Class::Declaration, name + "_type", type_role,
            TypeDeclaration{name,
                            make_mapping({make_sort(ctx.world_sort),
                                          make_sort(ctx.world_sort)},
                                         make_sort("$o"))},
            idx.empty() ? "accessibility" : "accessibility for index " + idx);
  em.emit(LedgerEntry::Class::Declaration, ctx.local_world_symbol + "_type",
          type_role, TypeDeclaration{ctx.local_world_symbol, make_sort(ctx.world_sort)},
          "evaluation world");
  for (const auto& [sort, guard] : ctx.guards)
    em.emit(LedgerEntry::Class::Declaration, guard + "_type", type_role,
            TypeDeclaration{guard,
                            make_mapping({make_sort(ctx.world_sort), make_sort(sort)},
                                         make_sort("$o"))},
            "existence guard for " + sort);

  // Declarations for symbols whose types were only inferred, so the output
  // stands alone.
  for (const auto& sym : tp.signature.defaulted) {
    TypePtr t = tp.signature.type_of(sym);
    if (!t) continue;
    TypePtr lifted = t;
    bool is_pred = is_predicate_type(t);
    bool flex = logic.designation == DesignationPolicy::Flexible;
    if (is_pred || flex) lifted = lift_predicate_type(t, ctx.world_sort);
    em.emit(LedgerEntry::Class::Declaration, sanitize_word(sym) + "_type",
            type_role, TypeDeclaration{sym, lifted}, "inferred type for " + sym);
  }

  // Frame axioms per accessibility relation.
  auto wvar = [&ctx](std::vector<VarBinding>& binds) {
    std::string n = ctx.fresh_world_var();
    binds.push_back({n, make_sort(ctx.world_sort)});
    return var_term(n);
  };
  for (const auto& [idx, acc] : ctx.acc_symbols) {
    const AxiomSet& axioms = logic.modality_for(
        idx.empty() ? std::optional<std::string>{} : std::optional<std::string>{idx});
    std::set<FrameCondition> conditions;
    for (FrameCondition c : frame_conditions(axioms)) conditions.insert(c);
    for (FrameCondition c : conditions) {
      std::vector<VarBinding> binds;
      TermPtr w = wvar(binds);
      auto rel = [&acc](TermPtr a, TermPtr b) {
        return make_atom(acc, {std::move(a), std::move(b)});
      };
      FormulaPtr body;
      switch (c) {
        case FrameCondition::Reflexive:
          body = rel(w, w);
          break;
        case FrameCondition::Symmetric: {
          TermPtr v = wvar(binds);
          body = make_binary(BinaryOp::Implies, rel(w, v), rel(v, w));
          break;
        }
        case FrameCondition::Serial: {
          std::vector<VarBinding> inner;
          TermPtr v = wvar(inner);
          body = make_quant(Quantifier::Exists, inner, rel(w, v));
          break;
        }
        case FrameCondition::Transitive: {
          TermPtr v = wvar(binds);
          TermPtr u = wvar(binds);
          body = make_binary(BinaryOp::Implies,
                             make_binary(BinaryOp::And, rel(w, v), rel(v, u)),
                             rel(w, u));
          break;
        }
        case FrameCondition::Euclidean: {
          TermPtr v = wvar(binds);
          TermPtr u = wvar(binds);
          body = make_binary(BinaryOp::Implies,
                             make_binary(BinaryOp::And, rel(w, v), rel(w, u)),
                             rel(v, u));
          break;
        }
        case FrameCondition::AtMostOneSuccessor: {
          TermPtr v = wvar(binds);
          TermPtr u = wvar(binds);
          body = make_binary(BinaryOp::Implies,
                             make_binary(BinaryOp::And, rel(w, v), rel(w, u)),
                             make_equality(v, u));
          break;
        }
        case FrameCondition::ShiftReflexive: {
          TermPtr v = wvar(binds);
          body = make_binary(BinaryOp::Implies, rel(w, v), rel(v, v));
          break;
        }
        case FrameCondition::Dense: {
          TermPtr v = wvar(binds);
          std::vector<VarBinding> inner;
          TermPtr u = wvar(inner);
          body = make_binary(
              BinaryOp::Implies, rel(w, v),
              make_quant(Quantifier::Exists, inner,
                         make_binary(BinaryOp::And, rel(w, u), rel(u, v))));
          break;
        }
        case FrameCondition::Confluent: {
          TermPtr v = wvar(binds);
          TermPtr u = wvar(binds);
          std::vector<VarBinding> inner;
          TermPtr z = wvar(inner);
          body = make_binary(
              BinaryOp::Implies, make_binary(BinaryOp::And, rel(w, v), rel(w, u)),
              make_quant(Quantifier::Exists, inner,
                         make_binary(BinaryOp::And, rel(v, z), rel(u, z))));
          break;
        }
      }
      em.emit(LedgerEntry::Class::Frame,
              acc + "_" + sanitize_word(frame_condition_name(c)), axiom_role,
              make_quant(Quantifier::Forall, binds, body),
              frame_condition_name(c) + " " + acc);
    }
  }

  // Domain axioms: every sort inhabited at every world; cumulative/decreasing
  // membership carried along accessibility.
  for (const auto& [sort, guard] : ctx.guards) {
    std::vector<VarBinding> outer;
    TermPtr w = wvar(outer);
    std::string x = ctx.fresh_var("X");
    std::vector<VarBinding> inner{{x, make_sort(sort)}};
    em.emit(LedgerEntry::Class::Nonemptiness, guard + "_nonempty", axiom_role,
            make_quant(Quantifier::Forall, outer,
                       make_quant(Quantifier::Exists, inner,
                                  make_atom(guard, {w, var_term(x)}))),
            "sort " + sort);
  }
  if (logic.domains == DomainsPolicy::Cumulative ||
      logic.domains == DomainsPolicy::Decreasing) {
    bool cumulative = logic.domains == DomainsPolicy::Cumulative;
    for (const auto& [sort, guard] : ctx.guards) {
      for (const auto& [idx, acc] : ctx.acc_symbols) {
        std::vector<VarBinding> binds;
        TermPtr w = wvar(binds);
        TermPtr v = wvar(binds);
        std::string x = ctx.fresh_var("X");
        binds.push_back({x, make_sort(sort)});
        FormulaPtr from = make_atom(guard, {cumulative ? w : v, var_term(x)});
        FormulaPtr to = make_atom(guard, {cumulative ? v : w, var_term(x)});
        FormulaPtr body = make_binary(
            BinaryOp::Implies,
            make_binary(BinaryOp::And, make_atom(acc, {w, v}), from), to);
        em.emit(LedgerEntry::Class::DomainMonotonicity,
                guard + (cumulative ? "_cumulative_" : "_decreasing_") + acc,
                axiom_role, make_quant(Quantifier::Forall, binds, body),
                "sort " + sort + " along " + acc);
      }
    }
  }

  // Term locality: function values exist in the world they are evaluated at.
  if (logic.terms == TermsPolicy::Local && ctx.guarded()) {
    std::vector<std::string> function_symbols;
    for (const auto& [sym, type] : tp.signature.symbols)
      if (!is_predicate_type(type)) function_symbols.push_back(sym);
    std::sort(function_symbols.begin(), function_symbols.end());
    for (const auto& sym : function_symbols) {
      TypePtr type = tp.signature.type_of(sym);
      std::vector<std::string> arg_sorts = arg_sort_names(type);
      std::string res = result_sort_name(type);
      std::vector<VarBinding> binds;
      TermPtr w = wvar(binds);
      std::vector<TermPtr> call_args;
      if (logic.designation == DesignationPolicy::Flexible) call_args.push_back(w);
      std::vector<FormulaPtr> guards;
      for (const auto& s : arg_sorts) {
        std::string x = ctx.fresh_var("X");
        binds.push_back({x, make_sort(s)});
        call_args.push_back(var_term(x));
        guards.push_back(guard_atom(ctx, s, w, var_term(x)));
      }
      FormulaPtr value_in =
          guard_atom(ctx, res, w, make_app(sym, std::move(call_args)));
      FormulaPtr body = value_in;
      if (!guards.empty()) {
        FormulaPtr g = guards.front();
        for (std::size_t i = 1; i < guards.size(); ++i)
          g = make_binary(BinaryOp::And, g, guards[i]);
        body = make_binary(BinaryOp::Implies, g, body);
      }
      em.emit(LedgerEntry::Class::TermLocality, sanitize_word(sym) + "_local",
              axiom_role, make_quant(Quantifier::Forall, binds, body),
              "function " + sym);
    }
  }

  // The source statements: declarations lifted, the logic specification
  // dropped, formulas translated with their effective locality.
  for (const auto& st : tp.problem.statements) {
    if (std::holds_alternative<LogicSpecification>(st.body)) continue;
    if (const auto* decl = std::get_if<TypeDeclaration>(&st.body)) {
      TypePtr lifted = decl->type;
      if (!is_sort(decl->type, "$tType")) {
        bool is_pred = is_predicate_type(decl->type);
        bool flex = logic.designation == DesignationPolicy::Flexible;
        if (is_pred || flex) lifted = lift_predicate_type(decl->type, ctx.world_sort);
      }
      AnnotatedFormula copy;
      copy.language = Language::Tff;
      copy.name = st.name;
      copy.role = Role{"type", std::nullopt};
      copy.body = TypeDeclaration{decl->symbol, lifted};
      em.out.statements.push_back(std::move(copy));
      result.ledger.push_back({LedgerEntry::Class::Lifted, st.name,
                               "declaration of " + decl->symbol});
      continue;
    }
    const FormulaPtr& f = st.formula();
    AnnotatedFormula copy;
    copy.language = Language::Tff;
    copy.name = st.name;
    if (st.role.base == "conjecture") {
      copy.role = Role{"conjecture", std::nullopt};
      copy.body = embed_formula(f, make_app(ctx.local_world_symbol), ctx);
    } else if (role_is_global(st.role)) {
      copy.role = Role{role_is_assumption(st.role) ? "axiom" : st.role.base,
                       std::nullopt};
      std::vector<VarBinding> binds;
      TermPtr w = wvar(binds);
      copy.body = make_quant(Quantifier::Forall, binds,
                             embed_formula(f, w, ctx));
    } else {
      copy.role = Role{"hypothesis", std::nullopt};
      copy.body = embed_formula(f, make_app(ctx.local_world_symbol), ctx);
    }
    em.out.statements.push_back(std::move(copy));
    result.ledger.push_back({LedgerEntry::Class::Lifted, st.name,
                             st.role.str() + " " + st.name});
  }

  result.problem = std::move(em.out);
  return result;
}

}  // namespace nxkit
