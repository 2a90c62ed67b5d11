#include "nxkit/printer.hpp"

#include <sstream>

namespace nxkit {

namespace {

std::string print_param_value(const ParamValue& pv);

// True for operands that carry their own delimiters or are single tokens.
bool self_delimited(const FormulaPtr& f) {
  return std::holds_alternative<AtomF>(f->node) ||
         std::holds_alternative<EqualityF>(f->node) ||
         std::holds_alternative<TrueF>(f->node) ||
         std::holds_alternative<FalseF>(f->node) ||
         std::holds_alternative<NCAppF>(f->node) ||
         std::holds_alternative<InWorldF>(f->node);
}

const char* op_text(BinaryOp op) {
  switch (op) {
    case BinaryOp::And: return "&";
    case BinaryOp::Or: return "|";
    case BinaryOp::Implies: return "=>";
    case BinaryOp::ReverseImplies: return "<=";
    case BinaryOp::Iff: return "<=>";
    case BinaryOp::Xor: return "<~>";
  }
  return "?";
}

void print_formula_rec(std::ostream& os, const FormulaPtr& f, bool parenthesize);

// Prints an operand of a binary chain; `flatten_op` allows an unparenthesized
// same-operator chain on the left spine of & and |.
void print_operand(std::ostream& os, const FormulaPtr& f,
                   const BinaryOp* flatten_op) {
  if (const auto* b = std::get_if<BinaryF>(&f->node)) {
    if (flatten_op && b->op == *flatten_op &&
        (b->op == BinaryOp::And || b->op == BinaryOp::Or)) {
      print_operand(os, b->lhs, flatten_op);
      os << ' ' << op_text(b->op) << ' ';
      print_operand(os, b->rhs, nullptr);
      return;
    }
    print_formula_rec(os, f, true);
    return;
  }
  if (self_delimited(f)) {
    print_formula_rec(os, f, false);
    return;
  }
  print_formula_rec(os, f, true);
}

void print_formula_rec(std::ostream& os, const FormulaPtr& f, bool parenthesize) {
  if (const auto* atom = std::get_if<AtomF>(&f->node)) {
    os << atom->predicate;
    if (!atom->args.empty()) {
      os << '(';
      for (std::size_t i = 0; i < atom->args.size(); ++i) {
        if (i) os << ',';
        os << print_term(atom->args[i]);
      }
      os << ')';
    }
    return;
  }
  if (const auto* eq = std::get_if<EqualityF>(&f->node)) {
    os << print_term(eq->lhs) << (eq->negated ? " != " : " = ") << print_term(eq->rhs);
    return;
  }
  if (std::get_if<TrueF>(&f->node)) {
    os << "$true";
    return;
  }
  if (std::get_if<FalseF>(&f->node)) {
    os << "$false";
    return;
  }
  if (const auto* n = std::get_if<NotF>(&f->node)) {
    os << "~ ";
    if (self_delimited(n->arg))
      print_formula_rec(os, n->arg, false);
    else
      print_formula_rec(os, n->arg, true);
    return;
  }
  if (const auto* b = std::get_if<BinaryF>(&f->node)) {
    if (parenthesize) os << "( ";
    print_operand(os, b->lhs, &b->op);
    os << ' ' << op_text(b->op) << ' ';
    print_operand(os, b->rhs, nullptr);
    if (parenthesize) os << " )";
    return;
  }
  if (const auto* q = std::get_if<QuantF>(&f->node)) {
    if (parenthesize) os << "( ";
    os << (q->quantifier == Quantifier::Forall ? "!" : "?") << " [";
    for (std::size_t i = 0; i < q->vars.size(); ++i) {
      if (i) os << ',';
      os << q->vars[i].name;
      if (q->vars[i].sort) os << ": " << print_type(q->vars[i].sort);
    }
    os << "] : ";
    if (self_delimited(q->body))
      print_formula_rec(os, q->body, false);
    else
      print_formula_rec(os, q->body, true);
    if (parenthesize) os << " )";
    return;
  }
  if (const auto* nc = std::get_if<NCAppF>(&f->node)) {
    os << print_nc_connective(nc->connective) << " @ ( ";
    for (std::size_t i = 0; i < nc->args.size(); ++i) {
      if (i) os << " , ";
      print_formula_rec(os, nc->args[i], false);
    }
    os << " )";
    return;
  }
  const auto& w = std::get<InWorldF>(f->node);
  os << "$in_world(" << print_term(w.world) << ",";
  print_formula_rec(os, w.body, true);
  os << ")";
}

std::string print_param_value(const ParamValue& pv) {
  if (const auto* t = std::get_if<TermPtr>(&pv.value)) return print_term(*t);
  if (const auto* f = std::get_if<FormulaPtr>(&pv.value))
    return "( " + print_formula(*f) + " )";
  const auto& list = std::get<ParamValues>(pv.value);
  std::string out = "[";
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out += ",";
    out += print_param_value(list[i]);
  }
  return out + "]";
}

void print_logic_entry(std::ostream& os, const LogicEntry& entry) {
  if (entry.key_kind == LogicEntry::KeyKind::Word)
    os << entry.word_key << " == ";
  else if (entry.key_kind == LogicEntry::KeyKind::Connective)
    os << print_nc_connective(*entry.conn_key) << " == ";
  if (const auto* t = std::get_if<TermPtr>(&entry.value)) {
    os << print_term(*t);
    return;
  }
  const auto& list = std::get<std::vector<LogicEntry>>(entry.value);
  os << "[ ";
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) os << ", ";
    print_logic_entry(os, list[i]);
  }
  os << " ]";
}

std::string print_raw(const RawFormula& raw) {
  std::string out;
  for (std::size_t i = 0; i < raw.tokens.size(); ++i) {
    if (i) out += ' ';
    out += raw.tokens[i].lexeme;
  }
  return out;
}

}  // namespace

std::string print_nc_connective(const NCConnective& conn) {
  std::string out = "{" + conn.name;
  if (conn.index || !conn.params.empty()) {
    out += "(";
    bool first = true;
    if (conn.index) {
      out += "#" + *conn.index;
      first = false;
    }
    for (const auto& [key, value] : conn.params) {
      if (!first) out += ",";
      out += key + ":=" + print_param_value(value);
      first = false;
    }
    out += ")";
  }
  return out + "}";
}

std::string print_term(const TermPtr& t) {
  if (const auto* v = std::get_if<Variable>(&t->node)) return v->name;
  if (const auto* i = std::get_if<IntegerTerm>(&t->node)) return i->digits;
  const auto& app = std::get<FunctionApp>(t->node);
  std::string out = app.symbol;
  if (!app.args.empty()) {
    out += "(";
    for (std::size_t i = 0; i < app.args.size(); ++i) {
      if (i) out += ",";
      out += print_term(app.args[i]);
    }
    out += ")";
  }
  return out;
}

std::string print_type(const TypePtr& t) {
  if (const auto* s = std::get_if<AtomicSort>(&t->node)) return s->name;
  const auto& m = std::get<MappingType>(t->node);
  std::string out;
  if (m.args.size() == 1) {
    out = print_type(m.args[0]);
  } else {
    out = "( ";
    for (std::size_t i = 0; i < m.args.size(); ++i) {
      if (i) out += " * ";
      out += print_type(m.args[i]);
    }
    out += " )";
  }
  return out + " > " + print_type(m.result);
}

std::string print_formula(const FormulaPtr& f) {
  std::ostringstream os;
  print_formula_rec(os, f, false);
  return os.str();
}

std::string print_logic_specification(const LogicSpecification& spec) {
  std::ostringstream os;
  os << spec.name << " ==\n      [ ";
  for (std::size_t i = 0; i < spec.entries.size(); ++i) {
    if (i) os << ",\n        ";
    print_logic_entry(os, spec.entries[i]);
  }
  os << " ]";
  return os.str();
}

std::string print_general_term(const GeneralTermPtr& g) {
  if (g->kind == GeneralTerm::Kind::List) {
    std::string out = "[";
    for (std::size_t i = 0; i < g->args.size(); ++i) {
      if (i) out += ",";
      out += print_general_term(g->args[i]);
    }
    return out + "]";
  }
  std::string out = g->name;
  if (g->kind == GeneralTerm::Kind::Atom && !g->args.empty()) {
    out += "(";
    for (std::size_t i = 0; i < g->args.size(); ++i) {
      if (i) out += ",";
      out += print_general_term(g->args[i]);
    }
    out += ")";
  }
  return out;
}

std::string print_statement(const AnnotatedFormula& st) {
  std::ostringstream os;
  os << (st.language == Language::Thf ? "thf(" : "tff(") << st.name << ','
     << st.role.str() << ',';
  if (const auto* f = std::get_if<FormulaPtr>(&st.body)) {
    std::string body = print_formula(*f);
    os << "\n    ";
    if (std::holds_alternative<BinaryF>((*f)->node))
      os << "( " << body << " )";
    else
      os << body;
  } else if (const auto* decl = std::get_if<TypeDeclaration>(&st.body)) {
    os << "\n    " << decl->symbol << ": " << print_type(decl->type);
  } else if (const auto* spec = std::get_if<LogicSpecification>(&st.body)) {
    os << "\n    " << print_logic_specification(*spec);
  } else {
    os << "\n    " << print_raw(std::get<RawFormula>(st.body));
  }
  if (st.source) {
    os << ",\n    " << print_general_term(st.source);
    if (st.has_useful_info) {
      os << ",\n    [";
      for (std::size_t i = 0; i < st.useful_info.size(); ++i) {
        if (i) os << ",";
        os << print_general_term(st.useful_info[i]);
      }
      os << "]";
    }
  }
  os << " ).\n";
  return os.str();
}

std::string print_problem(const Problem& problem) {
  std::string out;
  for (const auto& inc : problem.includes) {
    out += "include('" + inc.file + "'";
    if (!inc.selection.empty()) {
      out += ",[";
      for (std::size_t i = 0; i < inc.selection.size(); ++i) {
        if (i) out += ",";
        out += inc.selection[i];
      }
      out += "]";
    }
    out += ").\n";
  }
  for (const auto& st : problem.statements) out += print_statement(st);
  return out;
}

}  // namespace nxkit
