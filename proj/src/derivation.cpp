#include "nxkit/derivation.hpp"

#include <algorithm>
#include <functional>

namespace nxkit {

namespace {

bool is_name_term(const GeneralTerm& t) {
  return (t.kind == GeneralTerm::Kind::Atom && t.args.empty()) ||
         t.kind == GeneralTerm::Kind::Int;
}

// File paths are quoted atoms; the surrounding quotes are not part of the name.
std::string strip_quotes(const std::string& s) {
  if (s.size() >= 2 && s.front() == '\'' && s.back() == '\'')
    return s.substr(1, s.size() - 2);
  return s;
}

struct DagBuilder {
  DerivationDag dag;
  int synthetic = 0;

  void add_node(DerivationNode node) {
    auto [it, fresh] = dag.by_name.emplace(node.name, dag.nodes.size());
    if (!fresh) {
      dag.diagnostics.push_back(
          {Severity::Error, Position{},
           "duplicate derivation node '" + node.name + "'"});
      return;
    }
    (void)it;
    dag.nodes.push_back(std::move(node));
  }

  std::string lift(const GeneralTermPtr& source, const std::string& host) {
    DerivationNode node;
    node.name = host + "_step" + std::to_string(++synthetic);
    fill_source(node, source);
    std::string name = node.name;
    add_node(std::move(node));
    return name;
  }

  void parse_parents(DerivationNode& node, const GeneralTermPtr& list) {
    if (!list) return;
    if (list->kind == GeneralTerm::Kind::List) {
      for (const auto& e : list->args) parse_parents(node, e);
      return;
    }
    if (is_name_term(*list)) {
      node.parents.push_back(list->name);
      return;
    }
    if (list->kind == GeneralTerm::Kind::Atom &&
        (list->name == "inference" || list->name == "file")) {
      node.parents.push_back(
          lift(list, node.name.empty() ? "anon" : node.name));
      return;
    }
    // theory(equality), bind(X, ...) and the like justify a step without
    // being a node of their own.
    dag.diagnostics.push_back(
        {Severity::Note, Position{},
         "ignoring non-node parent '" + list->name + "' of '" + node.name + "'"});
  }

  void fill_source(DerivationNode& node, const GeneralTermPtr& source) {
    if (!source) {
      node.kind = DerivationNode::SourceKind::None;
      return;
    }
    if (is_name_term(*source)) {
      node.kind = DerivationNode::SourceKind::NameRef;
      node.parents.push_back(source->name);
      return;
    }
    if (source->kind == GeneralTerm::Kind::Atom && source->name == "file") {
      node.kind = DerivationNode::SourceKind::File;
      if (!source->args.empty()) node.file_name = strip_quotes(source->args[0]->name);
      if (source->args.size() > 1 && is_name_term(*source->args[1]))
        node.original_name = source->args[1]->name;
      return;
    }
    if (source->kind == GeneralTerm::Kind::Atom && source->name == "inference") {
      node.kind = DerivationNode::SourceKind::Inference;
      if (!source->args.empty()) node.rule = source->args[0]->name;
      if (source->args.size() >= 3) {
        parse_parents(node, source->args[2]);
      } else if (source->args.size() == 2) {
        parse_parents(node, source->args[1]);
      }
      return;
    }
    node.kind = DerivationNode::SourceKind::Other;
    node.rule = source->name;
  }
};

bool is_false_body(const AnnotatedFormula& st) {
  if (st.is_formula())
    return std::holds_alternative<FalseF>(st.formula()->node);
  if (const auto* raw = std::get_if<RawFormula>(&st.body))
    return raw->tokens.size() == 1 && raw->tokens[0].lexeme == "$false";
  return false;
}

// ---------------------------------------------------------------------------
// Alpha-insensitive comparison
// ---------------------------------------------------------------------------

struct VarBijection {
  std::map<std::string, std::string> fwd;
  std::map<std::string, std::string> rev;

  bool match(const std::string& a, const std::string& b) {
    auto fa = fwd.find(a);
    auto rb = rev.find(b);
    if (fa == fwd.end() && rb == rev.end()) {
      // Free on both sides: names must agree literally and stay unmapped.
      return a == b;
    }
    return fa != fwd.end() && rb != rev.end() && fa->second == b &&
           rb->second == a;
  }

  void bind(const std::string& a, const std::string& b) {
    fwd[a] = b;
    rev[b] = a;
  }
};

bool alpha_terms(const TermPtr& a, const TermPtr& b, VarBijection& vars);

bool alpha_term_lists(const std::vector<TermPtr>& a, const std::vector<TermPtr>& b,
                      VarBijection& vars) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!alpha_terms(a[i], b[i], vars)) return false;
  return true;
}

bool alpha_terms(const TermPtr& a, const TermPtr& b, VarBijection& vars) {
  if (a->node.index() != b->node.index()) return false;
  if (const auto* va = std::get_if<Variable>(&a->node))
    return vars.match(va->name, std::get<Variable>(b->node).name);
  if (const auto* fa = std::get_if<FunctionApp>(&a->node)) {
    const auto& fb = std::get<FunctionApp>(b->node);
    return fa->symbol == fb.symbol && alpha_term_lists(fa->args, fb.args, vars);
  }
  return std::get<IntegerTerm>(a->node).digits ==
         std::get<IntegerTerm>(b->node).digits;
}

bool alpha_formulas(const FormulaPtr& a, const FormulaPtr& b, VarBijection& vars);

bool alpha_params(const ParamValue& a, const ParamValue& b, VarBijection& vars) {
  if (a.value.index() != b.value.index()) return false;
  if (const auto* ta = std::get_if<TermPtr>(&a.value))
    return alpha_terms(*ta, std::get<TermPtr>(b.value), vars);
  if (const auto* fa = std::get_if<FormulaPtr>(&a.value))
    return alpha_formulas(*fa, std::get<FormulaPtr>(b.value), vars);
  const auto& la = std::get<ParamValues>(a.value);
  const auto& lb = std::get<ParamValues>(b.value);
  if (la.size() != lb.size()) return false;
  for (std::size_t i = 0; i < la.size(); ++i)
    if (!alpha_params(la[i], lb[i], vars)) return false;
  return true;
}

bool alpha_connectives(const NCConnective& a, const NCConnective& b,
                       VarBijection& vars) {
  if (a.name != b.name || a.index != b.index ||
      a.params.size() != b.params.size())
    return false;
  for (std::size_t i = 0; i < a.params.size(); ++i) {
    if (a.params[i].first != b.params[i].first) return false;
    if (!alpha_params(a.params[i].second, b.params[i].second, vars)) return false;
  }
  return true;
}

bool alpha_formulas(const FormulaPtr& a, const FormulaPtr& b, VarBijection& vars) {
  if (a->node.index() != b->node.index()) return false;
  if (const auto* aa = std::get_if<AtomF>(&a->node)) {
    const auto& ab = std::get<AtomF>(b->node);
    return aa->predicate == ab.predicate &&
           alpha_term_lists(aa->args, ab.args, vars);
  }
  if (const auto* ea = std::get_if<EqualityF>(&a->node)) {
    const auto& eb = std::get<EqualityF>(b->node);
    return ea->negated == eb.negated && alpha_terms(ea->lhs, eb.lhs, vars) &&
           alpha_terms(ea->rhs, eb.rhs, vars);
  }
  if (std::get_if<TrueF>(&a->node) || std::get_if<FalseF>(&a->node)) return true;
  if (const auto* na = std::get_if<NotF>(&a->node))
    return alpha_formulas(na->arg, std::get<NotF>(b->node).arg, vars);
  if (const auto* ba = std::get_if<BinaryF>(&a->node)) {
    const auto& bb = std::get<BinaryF>(b->node);
    return ba->op == bb.op && alpha_formulas(ba->lhs, bb.lhs, vars) &&
           alpha_formulas(ba->rhs, bb.rhs, vars);
  }
  if (const auto* qa = std::get_if<QuantF>(&a->node)) {
    const auto& qb = std::get<QuantF>(b->node);
    if (qa->quantifier != qb.quantifier || qa->vars.size() != qb.vars.size())
      return false;
    auto fwd_before = vars.fwd;
    auto rev_before = vars.rev;
    bool ok = true;
    for (std::size_t i = 0; i < qa->vars.size() && ok; ++i) {
      const TypePtr& sa = qa->vars[i].sort;
      const TypePtr& sb = qb.vars[i].sort;
      bool sorts_match = (!sa && !sb) || (sa && sb && equal(sa, sb)) ||
                         (!sa && sb && is_sort(sb, "$i")) ||
                         (sa && !sb && is_sort(sa, "$i"));
      if (!sorts_match)
        ok = false;
      else
        vars.bind(qa->vars[i].name, qb.vars[i].name);
    }
    if (ok) ok = alpha_formulas(qa->body, qb.body, vars);
    vars.fwd = std::move(fwd_before);
    vars.rev = std::move(rev_before);
    return ok;
  }
  if (const auto* nca = std::get_if<NCAppF>(&a->node)) {
    const auto& ncb = std::get<NCAppF>(b->node);
    if (!alpha_connectives(nca->connective, ncb.connective, vars)) return false;
    if (nca->args.size() != ncb.args.size()) return false;
    for (std::size_t i = 0; i < nca->args.size(); ++i)
      if (!alpha_formulas(nca->args[i], ncb.args[i], vars)) return false;
    return true;
  }
  const auto& ia = std::get<InWorldF>(a->node);
  const auto& ib = std::get<InWorldF>(b->node);
  return alpha_terms(ia.world, ib.world, vars) &&
         alpha_formulas(ia.body, ib.body, vars);
}

// Compares a derivation statement against its origin, tolerating one added
// top-level negation when the derivation node is a negated conjecture.
bool origin_matches(const AnnotatedFormula& node, const AnnotatedFormula& orig) {
  bool negatable =
      node.role.base == "negated_conjecture" && orig.role.base == "conjecture";
  if (node.is_formula() && orig.is_formula()) {
    if (alpha_equal(node.formula(), orig.formula())) return true;
    if (negatable) {
      if (const auto* n = std::get_if<NotF>(&node.formula()->node))
        return alpha_equal(n->arg, orig.formula());
    }
    return false;
  }
  const auto* raw_node = std::get_if<RawFormula>(&node.body);
  const auto* raw_orig = std::get_if<RawFormula>(&orig.body);
  if (raw_node && raw_orig) {
    if (alpha_equal_tokens(raw_node->tokens, raw_orig->tokens)) return true;
    if (negatable && !raw_node->tokens.empty() &&
        raw_node->tokens.front().lexeme == "~") {
      std::vector<Token> stripped(raw_node->tokens.begin() + 1,
                                  raw_node->tokens.end());
      if (alpha_equal_tokens(stripped, raw_orig->tokens)) return true;
      if (stripped.size() >= 2 && stripped.front().lexeme == "(" &&
          stripped.back().lexeme == ")") {
        stripped.erase(stripped.begin());
        stripped.pop_back();
        return alpha_equal_tokens(stripped, raw_orig->tokens);
      }
    }
    return false;
  }
  const auto* decl_node = std::get_if<TypeDeclaration>(&node.body);
  const auto* decl_orig = std::get_if<TypeDeclaration>(&orig.body);
  if (decl_node && decl_orig)
    return decl_node->symbol == decl_orig->symbol &&
           equal(decl_node->type, decl_orig->type);
  return false;
}

}  // namespace

bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (!a || !b) return a == b;
  VarBijection vars;
  return alpha_formulas(a, b, vars);
}

bool alpha_equal_tokens(const std::vector<Token>& a, const std::vector<Token>& b) {
  if (a.size() != b.size()) return false;
  VarBijection vars;
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool ua = a[i].kind == TokenKind::UpperWord;
    bool ub = b[i].kind == TokenKind::UpperWord;
    if (ua != ub) return false;
    if (ua) {
      if (vars.fwd.count(a[i].lexeme) || vars.rev.count(b[i].lexeme)) {
        if (!vars.match(a[i].lexeme, b[i].lexeme)) return false;
      } else {
        vars.bind(a[i].lexeme, b[i].lexeme);
      }
    } else if (a[i].lexeme != b[i].lexeme) {
      return false;
    }
  }
  return true;
}

DerivationDag build_dag(const Problem& problem) {
  DagBuilder builder;
  for (const auto& st : problem.statements) {
    DerivationNode node;
    node.name = st.name;
    node.statement = &st;
    builder.fill_source(node, st.source);
    if (node.kind == DerivationNode::SourceKind::None && st.is_formula())
      builder.dag.diagnostics.push_back(
          {Severity::Note, st.pos,
           "derivation node '" + st.name + "' has no source"});
    builder.add_node(std::move(node));
  }
  for (const auto& node : builder.dag.nodes)
    for (const auto& parent : node.parents)
      if (!builder.dag.by_name.count(parent))
        builder.dag.diagnostics.push_back(
            {Severity::Error, Position{},
             "node '" + node.name + "' references undefined parent '" +
                 parent + "'"});
  return builder.dag;
}

StructureReport verify_structure(const DerivationDag& dag,
                                 const Problem* original) {
  StructureReport report;

  // Acyclicity: depth-first search with three colors.
  enum : char { White, Grey, Black };
  std::vector<char> color(dag.nodes.size(), White);
  std::string cycle_at;
  std::function<bool(std::size_t)> visit = [&](std::size_t i) {
    color[i] = Grey;
    for (const auto& p : dag.nodes[i].parents) {
      auto it = dag.by_name.find(p);
      if (it == dag.by_name.end()) continue;  // reported by build_dag
      if (color[it->second] == Grey) {
        cycle_at = dag.nodes[it->second].name;
        return false;
      }
      if (color[it->second] == White && !visit(it->second)) return false;
    }
    color[i] = Black;
    return true;
  };
  report.acyclic = true;
  for (std::size_t i = 0; i < dag.nodes.size() && report.acyclic; ++i)
    if (color[i] == White && !visit(i)) report.acyclic = false;
  report.checks.push_back({"acyclic", report.acyclic,
                           report.acyclic ? "no cycles in the parent links"
                                          : "cycle through '" + cycle_at + "'"});

  // Origin fidelity of file-sourced leaves.
  report.origins_ok = true;
  if (original) {
    for (const auto& node : dag.nodes) {
      if (node.kind != DerivationNode::SourceKind::File) continue;
      if (node.original_name.empty() || !node.statement) continue;
      const AnnotatedFormula* orig = original->find(node.original_name);
      bool pass = false;
      std::string detail;
      if (!orig) {
        detail = "'" + node.original_name + "' is not in the original problem";
      } else if (origin_matches(*node.statement, *orig)) {
        pass = true;
        detail = "matches '" + node.original_name + "'";
      } else {
        detail = "differs from '" + node.original_name + "'";
      }
      if (!pass) report.origins_ok = false;
      report.checks.push_back({"origin " + node.name, pass, detail});
    }
  }

  // Completeness of a refutation: some node derives $false.
  std::string false_node;
  for (const auto& node : dag.nodes)
    if (node.statement && is_false_body(*node.statement)) {
      false_node = node.name;
      break;
    }
  report.refutation_found = !false_node.empty();
  report.checks.push_back(
      {"refutation", report.refutation_found,
       report.refutation_found ? "$false derived at '" + false_node + "'"
                               : "no node derives $false"});

  report.ok = report.acyclic && report.origins_ok && report.refutation_found &&
              dag.ok();
  return report;
}

}  // namespace nxkit
