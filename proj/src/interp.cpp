#include "nxkit/interp.hpp"

#include <algorithm>
#include <sstream>

#include "nxkit/printer.hpp"

namespace nxkit {

namespace {

void flatten_conjuncts(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
  if (const auto* b = std::get_if<BinaryF>(&f->node); b && b->op == BinaryOp::And) {
    flatten_conjuncts(b->lhs, out);
    flatten_conjuncts(b->rhs, out);
    return;
  }
  out.push_back(f);
}

void flatten_disjuncts(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
  if (const auto* b = std::get_if<BinaryF>(&f->node); b && b->op == BinaryOp::Or) {
    flatten_disjuncts(b->lhs, out);
    flatten_disjuncts(b->rhs, out);
    return;
  }
  out.push_back(f);
}

const FunctionApp* as_const(const TermPtr& t) {
  const auto* app = std::get_if<FunctionApp>(&t->node);
  return app && app->args.empty() ? app : nullptr;
}

struct Builder {
  Builder(const Problem& interp_, const Signature* base_)
      : interp(interp_), base(base_) {}

  const Problem& interp;
  const Signature* base;
  InterpretationResult result;

  // Declarations found in the interpretation file.
  std::map<std::string, TypePtr> local_symbols;
  std::set<std::string> local_sorts;

  // Promotion structure.
  std::map<std::string, std::string> promotion_of;     // promo symbol -> domain sort
  std::map<std::string, std::string> promoted_sort;    // domain sort -> problem sort
  std::map<std::string, std::string> sort_domain;      // problem sort -> domain sort
  // element constant -> (problem sort, element id)
  std::map<std::string, std::pair<std::string, Elem>> elements;
  std::vector<std::string> world_order;

  void note(Position pos, Severity sev, const std::string& msg) {
    result.diagnostics.push_back({sev, pos, msg});
  }

  bool known_problem_symbol(const std::string& name, TypePtr* type_out) const {
    if (base) {
      if (auto t = base->type_of(name)) {
        if (type_out) *type_out = t;
        return true;
      }
    }
    auto it = local_symbols.find(name);
    if (it != local_symbols.end() && !promotion_of.count(name) &&
        !elements.count(name) && !is_sort(it->second, "$world")) {
      if (type_out) *type_out = it->second;
      return true;
    }
    return false;
  }

  void collect_declarations() {
    for (const auto& st : interp.statements) {
      const auto* decl = std::get_if<TypeDeclaration>(&st.body);
      if (!decl) continue;
      if (is_sort(decl->type, "$tType")) {
        local_sorts.insert(decl->symbol);
        continue;
      }
      local_symbols[decl->symbol] = decl->type;
    }
    // Promotions: unary mappings out of a locally declared domain sort.
    // Problem sorts never serve as domain sorts, and a sort is no domain of
    // itself, so self-maps and mappings out of signature sorts are ordinary
    // problem symbols.
    for (const auto& [symbol, type] : local_symbols) {
      const auto* m = std::get_if<MappingType>(&type->node);
      if (!m || m->args.size() != 1) continue;
      const auto* from = std::get_if<AtomicSort>(&m->args[0]->node);
      const auto* to = std::get_if<AtomicSort>(&m->result->node);
      if (!from || !to) continue;
      if (from->name == to->name) continue;
      if (!local_sorts.count(from->name)) continue;
      if (base && base->sorts.count(from->name)) continue;
      bool to_is_problem_sort =
          (base && base->sorts.count(to->name)) ||
          (!base && (local_sorts.count(to->name) || to->name == "$i"));
      if (!to_is_problem_sort && to->name != "$i") continue;
      promotion_of[symbol] = from->name;
      promoted_sort[from->name] = to->name;
      sort_domain[to->name] = from->name;
    }
    // Elements: constants of domain sorts; worlds: constants of $world.
    for (const auto& st : interp.statements) {
      const auto* decl = std::get_if<TypeDeclaration>(&st.body);
      if (!decl || is_sort(decl->type, "$tType")) continue;
      if (is_sort(decl->type, "$world")) {
        world_order.push_back(decl->symbol);
        continue;
      }
      const auto* a = std::get_if<AtomicSort>(&decl->type->node);
      if (a && promoted_sort.count(a->name)) {
        const std::string& psort = promoted_sort[a->name];
        SortDomain& dom = result.model.domains[psort];
        elements[decl->symbol] = {psort, static_cast<Elem>(dom.element_names.size())};
        dom.element_names.push_back(decl->symbol);
      }
    }
  }

  // Resolves an element-denoting term: a bare element constant or a
  // promotion application around one.
  std::optional<std::pair<std::string, Elem>> resolve_element(const TermPtr& t) {
    const auto* app = std::get_if<FunctionApp>(&t->node);
    if (!app) return std::nullopt;
    if (app->args.empty()) {
      auto it = elements.find(app->symbol);
      if (it == elements.end()) return std::nullopt;
      return it->second;
    }
    if (app->args.size() == 1 && promotion_of.count(app->symbol))
      return resolve_element(app->args[0]);
    return std::nullopt;
  }

  // ---- worlds ---------------------------------------------------------------

  void build_worlds() {
    const AnnotatedFormula* worlds_st = nullptr;
    for (const auto& st : interp.statements)
      if (st.role.base == "interpretation" && st.role.subrole &&
          *st.role.subrole == "worlds")
        worlds_st = &st;

    FiniteKripkeModel& m = result.model;
    if (!worlds_st) {
      m.world_names = {"w"};
      m.local_world = 0;
      return;
    }
    m.world_names = world_order;
    if (m.world_names.empty()) {
      note(worlds_st->pos, Severity::Error, "no $world constants declared");
      m.world_names = {"w"};
    }
    auto& acc = m.accessibility[""];
    acc.assign(m.world_names.size(), std::vector<bool>(m.world_names.size(), false));

    bool saw_local = false;
    std::vector<FormulaPtr> parts;
    flatten_conjuncts(worlds_st->formula(), parts);
    for (const auto& part : parts) {
      if (const auto* q = std::get_if<QuantF>(&part->node)) {
        // ! [W: $world] : ( W = w1 | ... )
        std::set<std::string> listed;
        std::vector<FormulaPtr> cases;
        flatten_disjuncts(q->body, cases);
        bool ok = q->quantifier == Quantifier::Forall && q->vars.size() == 1;
        for (const auto& c : cases) {
          const auto* eq = std::get_if<EqualityF>(&c->node);
          const FunctionApp* rhs = eq && !eq->negated ? as_const(eq->rhs) : nullptr;
          if (rhs)
            listed.insert(rhs->symbol);
          else
            ok = false;
        }
        if (!ok) {
          note(part->pos, Severity::Warning, "unrecognized worlds conjunct");
          continue;
        }
        for (const auto& w : m.world_names)
          if (!listed.count(w))
            note(part->pos, Severity::Error,
                 "world enumeration omits declared world '" + w + "'");
        for (const auto& l : listed)
          if (!m.world_id(l))
            note(part->pos, Severity::Error,
                 "world enumeration mentions undeclared world '" + l + "'");
        continue;
      }
      if (const auto* eq = std::get_if<EqualityF>(&part->node); eq && !eq->negated) {
        const FunctionApp* lhs = as_const(eq->lhs);
        const FunctionApp* rhs = as_const(eq->rhs);
        if (lhs && rhs && lhs->symbol == "$local_world") {
          auto id = m.world_id(rhs->symbol);
          if (!id) {
            note(part->pos, Severity::Error,
                 "$local_world set to undeclared world '" + rhs->symbol + "'");
          } else {
            m.local_world = *id;
            saw_local = true;
          }
          continue;
        }
      }
      if (const auto* atom = std::get_if<AtomF>(&part->node);
          atom && atom->predicate == "$accessible_world" && atom->args.size() == 2) {
        const FunctionApp* from = as_const(atom->args[0]);
        const FunctionApp* to = as_const(atom->args[1]);
        auto fid = from ? m.world_id(from->symbol) : std::nullopt;
        auto tid = to ? m.world_id(to->symbol) : std::nullopt;
        if (!fid || !tid) {
          note(part->pos, Severity::Error, "accessibility fact over unknown worlds");
          continue;
        }
        acc[*fid][*tid] = true;  // repeated facts collapse
        continue;
      }
      note(part->pos, Severity::Warning, "unrecognized worlds conjunct");
    }
    if (!saw_local)
      note(worlds_st->pos, Severity::Error,
           "interpretation-worlds statement does not set $local_world");
  }

  // ---- per-world content ------------------------------------------------------

  struct WorldContent {
    std::map<std::string, std::set<std::string>> enumerated;  // problem sort -> elems
    std::vector<FormulaPtr> literals;
    bool present = false;
  };

  std::vector<WorldContent> contents;

  void split_content() {
    FiniteKripkeModel& m = result.model;
    contents.assign(m.world_count(), {});
    for (const auto& st : interp.statements) {
      if (st.role.base != "interpretation") continue;
      if (st.role.subrole && *st.role.subrole == "worlds") continue;
      if (!st.is_formula()) continue;
      std::vector<FormulaPtr> parts;
      flatten_conjuncts(st.formula(), parts);
      for (const auto& part : parts) {
        if (const auto* iw = std::get_if<InWorldF>(&part->node)) {
          const FunctionApp* w = as_const(iw->world);
          auto id = w ? (w->symbol == "$local_world"
                             ? std::make_optional(m.local_world)
                             : m.world_id(w->symbol))
                      : std::nullopt;
          if (!id) {
            note(part->pos, Severity::Error, "$in_world names an unknown world");
            continue;
          }
          contents[*id].present = true;
          std::vector<FormulaPtr> inner;
          flatten_conjuncts(iw->body, inner);
          for (const auto& lit : inner) contents[*id].literals.push_back(lit);
          continue;
        }
        contents[m.local_world].present = true;
        contents[m.local_world].literals.push_back(part);
      }
    }
  }

  // ---- literal interpretation ---------------------------------------------------

  struct Tables {
    // function symbol -> args -> value, per world handled by caller
    std::map<std::string, std::map<std::vector<Elem>, Elem>> functions;
    std::map<std::string, std::map<std::vector<Elem>, bool>> predicates;
  };

  // Recognizes the enumeration form ! [D: d_sort] : ( D = e1 | ... ).
  bool try_enumeration(const FormulaPtr& f, WorldId w) {
    const auto* q = std::get_if<QuantF>(&f->node);
    if (!q || q->quantifier != Quantifier::Forall || q->vars.size() != 1) return false;
    if (!q->vars[0].sort) return false;
    const auto* s = std::get_if<AtomicSort>(&q->vars[0].sort->node);
    if (!s || !promoted_sort.count(s->name)) return false;
    std::vector<FormulaPtr> cases;
    flatten_disjuncts(q->body, cases);
    std::set<std::string> names;
    for (const auto& c : cases) {
      const auto* eq = std::get_if<EqualityF>(&c->node);
      if (!eq || eq->negated) return false;
      const auto* lhs = std::get_if<Variable>(&eq->lhs->node);
      const FunctionApp* rhs = as_const(eq->rhs);
      if (!lhs || lhs->name != q->vars[0].name || !rhs) return false;
      names.insert(rhs->symbol);
    }
    const std::string& psort = promoted_sort[s->name];
    auto& listed = contents[w].enumerated[psort];
    for (const auto& n : names) {
      if (!elements.count(n)) {
        note(f->pos, Severity::Error, "enumeration mentions undeclared element '" + n + "'");
        continue;
      }
      listed.insert(n);
    }
    return true;
  }

  // Recognizes surjectivity (! [P: sort] : ? [D: d_sort] : P = promo(D)) and
  // injectivity (! [D1,D2] : promo(D1) = promo(D2) => D1 = D2); both carry no
  // extra information beyond validation.
  bool try_promotion_property(const FormulaPtr& f) {
    const auto* q = std::get_if<QuantF>(&f->node);
    if (!q || q->quantifier != Quantifier::Forall) return false;
    if (q->vars.size() == 1) {
      const auto* ex = std::get_if<QuantF>(&q->body->node);
      return ex && ex->quantifier == Quantifier::Exists &&
             std::get_if<EqualityF>(&ex->body->node);
    }
    if (q->vars.size() == 2) {
      const auto* imp = std::get_if<BinaryF>(&q->body->node);
      return imp && imp->op == BinaryOp::Implies &&
             std::get_if<EqualityF>(&imp->lhs->node) &&
             std::get_if<EqualityF>(&imp->rhs->node);
    }
    return false;
  }

  bool try_distinctness(const FormulaPtr& f) {
    const auto* eq = std::get_if<EqualityF>(&f->node);
    if (!eq || !eq->negated) return false;
    auto l = resolve_element(eq->lhs);
    auto r = resolve_element(eq->rhs);
    if (!l || !r) return false;
    if (*l == *r)
      note(f->pos, Severity::Error, "element declared distinct from itself");
    return true;
  }

  void apply_literal(const FormulaPtr& f, WorldId w, Tables& tables) {
    if (try_enumeration(f, w)) return;
    if (try_promotion_property(f)) return;
    if (try_distinctness(f)) return;

    bool negated = false;
    FormulaPtr lit = f;
    if (const auto* n = std::get_if<NotF>(&f->node)) {
      negated = true;
      lit = n->arg;
    }
    if (const auto* atom = std::get_if<AtomF>(&lit->node)) {
      TypePtr type;
      if (!known_problem_symbol(atom->predicate, &type)) {
        note(f->pos, Severity::Error, "unknown predicate '" + atom->predicate + "'");
        return;
      }
      std::vector<Elem> args;
      for (const auto& a : atom->args) {
        auto e = resolve_element(a);
        if (!e) {
          note(f->pos, Severity::Error,
               "predicate argument is not a domain element in '" +
                   print_formula(lit) + "'");
          return;
        }
        args.push_back(e->second);
      }
      auto& cell = tables.predicates[atom->predicate];
      auto [it, inserted] = cell.emplace(args, !negated);
      if (!inserted && it->second != !negated)
        note(f->pos, Severity::Error,
             "contradictory literals for '" + atom->predicate + "'");
      return;
    }
    if (const auto* eq = std::get_if<EqualityF>(&lit->node); eq && !negated && !eq->negated) {
      // function mapping: f(elems) = elem or c = elem (either side)
      auto try_mapping = [&](const TermPtr& fun_side, const TermPtr& val_side) -> bool {
        const auto* app = std::get_if<FunctionApp>(&fun_side->node);
        if (!app) return false;
        if (resolve_element(fun_side)) return false;  // that side is an element
        TypePtr type;
        if (!known_problem_symbol(app->symbol, &type)) return false;
        auto value = resolve_element(val_side);
        if (!value) return false;
        std::vector<Elem> args;
        for (const auto& a : app->args) {
          auto e = resolve_element(a);
          if (!e) return false;
          args.push_back(e->second);
        }
        auto& cell = tables.functions[app->symbol];
        auto [it, inserted] = cell.emplace(args, value->second);
        if (!inserted && it->second != value->second)
          note(f->pos, Severity::Error,
               "contradictory values for '" + app->symbol + "'");
        return true;
      };
      if (try_mapping(eq->lhs, eq->rhs) || try_mapping(eq->rhs, eq->lhs)) return;
    }
    note(f->pos, Severity::Warning,
         "unrecognized interpretation conjunct '" + print_formula(f) + "'");
  }

  // ---- final assembly -----------------------------------------------------------

  void assemble() {
    FiniteKripkeModel& m = result.model;
    const std::size_t n = m.world_count();
    bool single_world = !m.accessibility.count("");

    // Interpret literals per world. This also collects the per-world sort
    // enumerations, so it must run before membership is decided.
    std::vector<Tables> tables(n);
    for (WorldId w = 0; w < n; ++w) {
      if (!contents[w].present)
        note({}, Severity::Warning,
             "no content for world " + m.world_names[w] + "; using defaults");
      for (const auto& lit : contents[w].literals) apply_literal(lit, w, tables[w]);
    }

    // Membership matrices.
    for (auto& [sort, dom] : m.domains) {
      dom.member.assign(n, std::vector<bool>(dom.size(), false));
      for (WorldId w = 0; w < n; ++w) {
        const auto& listed = contents[w].enumerated[sort];
        if (single_world || listed.empty()) {
          // Without a usable enumeration every declared element is a member;
          // omissions in a single-world enumeration are tolerated.
          for (Elem e = 0; e < dom.size(); ++e) dom.member[w][e] = true;
          if (!listed.empty() && listed.size() < dom.size())
            note({}, Severity::Warning,
                 "enumeration of sort " + sort + " omits declared elements; "
                 "treating them as members");
          if (listed.empty() && contents[w].present)
            note({}, Severity::Warning,
                 "no enumeration for sort " + sort + " at world " +
                     m.world_names[w]);
        } else {
          for (const auto& name : listed) {
            auto it = elements.find(name);
            if (it != elements.end()) dom.member[w][it->second.second] = true;
          }
        }
      }
    }

    // Decide the full symbol list: everything from the base signature, plus
    // any problem symbol declared locally.
    std::map<std::string, TypePtr> symbols;
    if (base)
      for (const auto& [name, type] : base->symbols) symbols[name] = type;
    for (const auto& [name, type] : local_symbols) {
      if (promotion_of.count(name) || elements.count(name)) continue;
      if (is_sort(type, "$world")) continue;
      symbols.emplace(name, type);
    }

    for (const auto& [symbol, type] : symbols) {
      auto arg_names = arg_sort_names(type);
      std::string result_sort = result_sort_name(type);
      bool predicate = is_predicate_type(type);

      // Tuple space over union universes.
      std::vector<std::size_t> sizes;
      bool representable = true;
      for (const auto& s : arg_names) {
        auto it = m.domains.find(s);
        if (it == m.domains.end()) {
          representable = false;
          break;
        }
        sizes.push_back(it->second.size());
      }
      if (!predicate && !m.domains.count(result_sort)) representable = false;
      if (!representable) {
        note({}, Severity::Error,
             "no domain information to interpret symbol '" + symbol + "'");
        continue;
      }

      auto for_each_tuple = [&](auto&& fn) {
        std::vector<Elem> tuple(sizes.size(), 0);
        for (;;) {
          fn(tuple);
          std::size_t k = 0;
          while (k < sizes.size()) {
            if (++tuple[k] < sizes[k]) break;
            tuple[k] = 0;
            ++k;
          }
          if (k == sizes.size()) break;
          if (sizes.empty()) break;
        }
      };

      if (predicate) {
        PredicateInterp pi;
        pi.arg_sorts = arg_names;
        pi.positives.assign(n, {});
        for (WorldId w = 0; w < n; ++w) {
          auto it = tables[w].predicates.find(symbol);
          if (it == tables[w].predicates.end()) continue;
          for (const auto& [args, value] : it->second)
            if (value) pi.positives[w].insert(args);
        }
        m.predicates[symbol] = std::move(pi);
      } else {
        FunctionInterp fi;
        fi.arg_sorts = arg_names;
        fi.result_sort = result_sort;
        fi.tables.assign(n, {});
        for (WorldId w = 0; w < n; ++w) {
          const std::map<std::vector<Elem>, Elem>* given = nullptr;
          auto it = tables[w].functions.find(symbol);
          if (it != tables[w].functions.end()) given = &it->second;
          bool warned = false;
          for_each_tuple([&](const std::vector<Elem>& tuple) {
            Elem value = 0;
            if (given) {
              auto g = given->find(tuple);
              if (g != given->end()) {
                fi.tables[w][tuple] = g->second;
                return;
              }
            }
            if (!warned) {
              note({}, Severity::Warning,
                   "no value for '" + symbol + "' at world " + m.world_names[w] +
                       " for some arguments; defaulting");
              warned = true;
            }
            fi.tables[w][tuple] = value;
          });
        }
        m.functions[symbol] = std::move(fi);
      }
    }
  }

  InterpretationResult run() {
    collect_declarations();
    build_worlds();
    split_content();
    assemble();
    return std::move(result);
  }
};

}  // namespace

InterpretationResult parse_interpretation(const Problem& interp, const Signature* base) {
  Builder b{interp, base};
  return b.run();
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

std::string domain_sort_name(const std::string& sort) {
  std::string clean = sort;
  if (!clean.empty() && clean[0] == '$') clean = clean.substr(1);
  return "d_" + clean;
}

std::string promotion_name(const std::string& sort) {
  std::string clean = sort;
  if (!clean.empty() && clean[0] == '$') clean = clean.substr(1);
  return "d2" + clean;
}

// Element term: promo(elem).
std::string elem_term(const FiniteKripkeModel& m, const std::string& sort, Elem e) {
  return promotion_name(sort) + "(" + m.domains.at(sort).element_names[e] + ")";
}

std::vector<std::string> world_content_lines(const FiniteKripkeModel& m, WorldId w) {
  std::vector<std::string> lines;
  for (const auto& [sort, dom] : m.domains) {
    const std::string ds = domain_sort_name(sort);
    const std::string promo = promotion_name(sort);
    lines.push_back("! [P: " + sort + "] : ? [DP: " + ds + "] : ( P = " + promo +
                    "(DP) )");
    std::string enum_body;
    bool first = true;
    for (Elem e = 0; e < dom.size(); ++e) {
      if (!dom.member[w][e]) continue;
      if (!first) enum_body += " | ";
      enum_body += "DP = " + dom.element_names[e];
      first = false;
    }
    if (!first) lines.push_back("! [DP: " + ds + "] : ( " + enum_body + " )");
    for (Elem a = 0; a < dom.size(); ++a)
      for (Elem b = a + 1; b < dom.size(); ++b)
        lines.push_back("( " + dom.element_names[a] + " != " + dom.element_names[b] +
                        " )");
    lines.push_back("! [DP1: " + ds + ",DP2: " + ds + "] : ( ( " + promo +
                    "(DP1) = " + promo + "(DP2) ) => ( DP1 = DP2 ) )");
  }
  for (const auto& [symbol, fn] : m.functions) {
    for (const auto& [args, value] : fn.tables[w]) {
      std::string app = symbol;
      if (!args.empty()) {
        app += "(";
        for (std::size_t i = 0; i < args.size(); ++i) {
          if (i) app += ",";
          app += elem_term(m, fn.arg_sorts[i], args[i]);
        }
        app += ")";
      }
      lines.push_back("( " + app + " = " + elem_term(m, fn.result_sort, value) + " )");
    }
  }
  for (const auto& [symbol, pr] : m.predicates) {
    std::vector<std::size_t> sizes;
    for (const auto& s : pr.arg_sorts) sizes.push_back(m.domains.at(s).size());
    std::vector<Elem> tuple(sizes.size(), 0);
    for (;;) {
      std::string app = symbol;
      if (!tuple.empty()) {
        app += "(";
        for (std::size_t i = 0; i < tuple.size(); ++i) {
          if (i) app += ",";
          app += elem_term(m, pr.arg_sorts[i], tuple[i]);
        }
        app += ")";
      }
      bool value = pr.positives[w].count(tuple) > 0;
      lines.push_back(value ? app : "~ " + app);
      std::size_t k = 0;
      while (k < sizes.size()) {
        if (++tuple[k] < sizes[k]) break;
        tuple[k] = 0;
        ++k;
      }
      if (k == sizes.size() || sizes.empty()) break;
    }
  }
  return lines;
}

std::string join_conjuncts(const std::vector<std::string>& lines,
                           const std::string& indent) {
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i) out += "\n" + indent + "& ";
    out += lines[i];
  }
  return out;
}

}  // namespace

std::string print_model(const FiniteKripkeModel& model, const Signature& signature) {
  for (const auto& [index, acc] : model.accessibility)
    if (!index.empty())
      throw SemanticError("printing indexed accessibility relations is not supported");

  std::ostringstream os;
  // Problem signature declarations.
  for (const auto& sort : signature.sorts)
    os << "tff(" << sort << "_type,type, " << sort << ": $tType ).\n";
  for (const auto& [symbol, type] : signature.symbols)
    os << "tff(" << symbol << "_decl,type, " << symbol << ": " << print_type(type)
       << " ).\n";
  os << "\n";
  // Domain declarations.
  for (const auto& [sort, dom] : model.domains) {
    os << "tff(" << domain_sort_name(sort) << "_type,type, " << domain_sort_name(sort)
       << ": $tType ).\n";
    for (const auto& e : dom.element_names)
      os << "tff(" << e << "_decl,type, " << e << ": " << domain_sort_name(sort)
         << " ).\n";
    os << "tff(" << promotion_name(sort) << "_decl,type, " << promotion_name(sort)
       << ": " << domain_sort_name(sort) << " > " << sort << " ).\n";
  }
  os << "\n";

  bool kripke = model.accessibility.count("") > 0;
  if (kripke) {
    for (const auto& w : model.world_names)
      os << "tff(" << w << "_decl,type, " << w << ": $world ).\n";
    os << "\ntff(worlds,interpretation-worlds,\n    ( ! [W: $world] : ( ";
    for (std::size_t i = 0; i < model.world_names.size(); ++i)
      os << (i ? " | " : "") << "W = " << model.world_names[i];
    os << " )\n    & $local_world = " << model.world_names[model.local_world] << "\n";
    const auto& acc = model.accessibility.at("");
    for (std::size_t w = 0; w < model.world_count(); ++w)
      for (std::size_t v = 0; v < model.world_count(); ++v)
        if (acc[w][v])
          os << "    & $accessible_world(" << model.world_names[w] << ","
             << model.world_names[v] << ")\n";
    os << "    ) ).\n\n";
    os << "tff(content,interpretation,\n    ( ";
    for (std::size_t w = 0; w < model.world_count(); ++w) {
      if (w) os << "\n    & ";
      os << "$in_world(" << model.world_names[w] << ",\n        ( "
         << join_conjuncts(world_content_lines(model, static_cast<WorldId>(w)),
                           "        ")
         << " ) )";
    }
    os << " ) ).\n";
  } else {
    os << "tff(domains,interpretation-domain,\n    ( "
       << join_conjuncts(world_content_lines(model, model.local_world), "    ")
       << " ) ).\n";
  }
  return os.str();
}

}  // namespace nxkit
