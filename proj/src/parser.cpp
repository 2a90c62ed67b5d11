#include "nxkit/parser.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace nxkit {

namespace {

const std::set<std::string> kRoleBases = {
    "axiom",          "hypothesis",     "definition",   "assumption",
    "lemma",          "theorem",        "corollary",    "conjecture",
    "negated_conjecture", "plain",      "type",         "logic",
    "interpretation", "fi_domain",      "fi_functors",  "fi_predicates",
    "unknown"};

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (auto& t : tokenize(text))
      if (t.kind != TokenKind::Comment) tokens_.push_back(std::move(t));
  }

  ParseResult run() {
    ParseResult result;
    while (!peek().is(TokenKind::End)) {
      if (peek().is(TokenKind::LowerWord, "include")) {
        result.problem.includes.push_back(parse_include());
        continue;
      }
      result.problem.statements.push_back(parse_annotated());
    }
    post_checks(result);
    result.diagnostics = std::move(diags_);
    return result;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t i_ = 0;
  std::vector<Diagnostic> diags_;
  bool saw_nc_connective_ = false;

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t j = std::min(i_ + ahead, tokens_.size() - 1);
    return tokens_[j];
  }
  const Token& advance() { return tokens_[std::min(i_++, tokens_.size() - 1)]; }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(peek().position, msg + " (got " +
                         std::string(token_kind_name(peek().kind)) +
                         (peek().lexeme.empty() ? "" : " '" + peek().lexeme + "'") + ")");
  }

  void expect_punct(const char* lex) {
    if (!peek().punct(lex)) fail(std::string("expected '") + lex + "'");
    advance();
  }

  void warn(Position pos, const std::string& msg) {
    diags_.push_back({Severity::Warning, pos, msg});
  }
  void error(Position pos, const std::string& msg) {
    diags_.push_back({Severity::Error, pos, msg});
  }

  // ---- statements ----------------------------------------------------------

  IncludeDirective parse_include() {
    IncludeDirective inc;
    inc.pos = peek().position;
    advance();  // include
    expect_punct("(");
    if (!peek().is(TokenKind::SingleQuoted)) fail("expected quoted file name in include");
    const std::string& lex = advance().lexeme;
    inc.file = lex.substr(1, lex.size() - 2);
    if (peek().punct(",")) {
      advance();
      expect_punct("[");
      while (!peek().punct("]")) {
        inc.selection.push_back(advance().lexeme);
        if (peek().punct(",")) advance();
      }
      expect_punct("]");
    }
    expect_punct(")");
    expect_punct(".");
    return inc;
  }

  AnnotatedFormula parse_annotated() {
    AnnotatedFormula st;
    st.pos = peek().position;
    if (peek().is(TokenKind::LowerWord, "tff")) {
      st.language = Language::Tff;
    } else if (peek().is(TokenKind::LowerWord, "thf")) {
      st.language = Language::Thf;
    } else if (peek().is(TokenKind::LowerWord, "fof") ||
               peek().is(TokenKind::LowerWord, "cnf")) {
      throw ParseError(peek().position,
                       "unsupported dialect '" + peek().lexeme + "'");
    } else {
      fail("expected statement keyword (tff or thf)");
    }
    advance();
    expect_punct("(");
    st.name = parse_statement_name();
    expect_punct(",");
    st.role = parse_role();
    expect_punct(",");
    if (st.language == Language::Thf) {
      st.body = capture_raw_body();
    } else {
      st.body = parse_body(st.role);
    }
    if (peek().punct(",")) {
      advance();
      st.source = parse_general_term();
      if (peek().punct(",")) {
        advance();
        st.has_useful_info = true;
        expect_punct("[");
        while (!peek().punct("]")) {
          st.useful_info.push_back(parse_general_term());
          if (peek().punct(",")) advance();
        }
        expect_punct("]");
      }
    }
    expect_punct(")");
    expect_punct(".");
    return st;
  }

  std::string parse_statement_name() {
    if (peek().is(TokenKind::LowerWord) || peek().is(TokenKind::Integer) ||
        peek().is(TokenKind::SingleQuoted))
      return advance().lexeme;
    fail("expected statement name");
  }

  Role parse_role() {
    if (!peek().is(TokenKind::LowerWord)) fail("expected role");
    Role role;
    const Token& base = advance();
    role.base = base.lexeme;
    if (!kRoleBases.count(role.base))
      error(base.position, "unknown role '" + role.base + "'");
    // A subrole is written role-sub with no intervening space.
    if (peek().punct("-") &&
        peek().position.offset == base.position.offset + base.lexeme.size()) {
      const Token& dash = peek();
      if (peek(1).is(TokenKind::LowerWord) &&
          peek(1).position.offset == dash.position.offset + 1) {
        advance();
        role.subrole = advance().lexeme;
      }
    }
    return role;
  }

  std::variant<FormulaPtr, TypeDeclaration, LogicSpecification, RawFormula>
  parse_body(const Role& role) {
    if (role.base == "type") return parse_type_declaration();
    if (role.base == "logic") return parse_logic_specification();
    return parse_formula();
  }

  // ---- raw capture for higher-order bodies ---------------------------------

  RawFormula capture_raw_body() {
    RawFormula raw;
    int depth = 0;
    for (;;) {
      const Token& t = peek();
      if (t.is(TokenKind::End)) fail("unterminated statement body");
      if (depth == 0 && (t.punct(",") || t.punct(")"))) break;
      if (t.punct("(") || t.punct("[") || t.punct("{")) ++depth;
      if (t.punct(")") || t.punct("]") || t.punct("}")) --depth;
      raw.tokens.push_back(t);
      advance();
    }
    if (raw.tokens.empty()) fail("empty statement body");
    return raw;
  }

  // ---- types ----------------------------------------------------------------

  TypeDeclaration parse_type_declaration() {
    bool wrapped = false;
    if (peek().punct("(")) {
      wrapped = true;
      advance();
    }
    TypeDeclaration decl;
    if (peek().is(TokenKind::LowerWord) || peek().is(TokenKind::SingleQuoted) ||
        peek().is(TokenKind::DefinedWord) || peek().is(TokenKind::SystemWord)) {
      decl.symbol = advance().lexeme;
    } else {
      fail("expected declared symbol");
    }
    expect_punct(":");
    decl.type = parse_type();
    if (wrapped) expect_punct(")");
    return decl;
  }

  TypePtr parse_type() {
    Position pos = peek().position;
    std::vector<TypePtr> args;
    if (peek().punct("(")) {
      advance();
      args.push_back(parse_simple_type());
      while (peek().punct("*")) {
        advance();
        args.push_back(parse_simple_type());
      }
      expect_punct(")");
    } else {
      args.push_back(parse_simple_type());
    }
    if (peek().punct(">")) {
      advance();
      TypePtr result = parse_simple_type();
      if (peek().punct(">"))
        fail("curried types are not first-order");
      auto t = std::make_shared<Type>(Type{MappingType{std::move(args), std::move(result)}, pos});
      return t;
    }
    if (args.size() != 1) fail("expected '>' after product type");
    return args.front();
  }

  TypePtr parse_simple_type() {
    Position pos = peek().position;
    if (peek().is(TokenKind::DefinedWord) || peek().is(TokenKind::LowerWord) ||
        peek().is(TokenKind::SingleQuoted)) {
      auto t = std::make_shared<Type>(Type{AtomicSort{advance().lexeme}, pos});
      return t;
    }
    fail("expected sort name");
  }

  // ---- logic specifications -------------------------------------------------

  LogicSpecification parse_logic_specification() {
    LogicSpecification spec;
    spec.pos = peek().position;
    if (!peek().is(TokenKind::DefinedWord) && !peek().is(TokenKind::SystemWord))
      fail("expected logic name");
    spec.name = advance().lexeme;
    expect_punct("==");
    LogicEntry top = parse_logic_value();
    if (auto* list = std::get_if<std::vector<LogicEntry>>(&top.value)) {
      spec.entries = std::move(*list);
    } else {
      spec.entries.push_back(std::move(top));
    }
    return spec;
  }

  // Parses `value`, `key == value`, or `{conn} == value`.
  LogicEntry parse_logic_entry() {
    LogicEntry entry;
    if (peek().punct("{")) {
      entry.key_kind = LogicEntry::KeyKind::Connective;
      entry.conn_key = parse_nc_connective();
      expect_punct("==");
      LogicEntry val = parse_logic_value();
      entry.value = std::move(val.value);
      return entry;
    }
    LogicEntry val = parse_logic_value();
    if (peek().punct("==")) {
      const auto* term = std::get_if<TermPtr>(&val.value);
      const FunctionApp* app = term && *term ? std::get_if<FunctionApp>(&(**term).node) : nullptr;
      if (!app || !app->args.empty()) fail("invalid property key");
      advance();
      entry.key_kind = LogicEntry::KeyKind::Word;
      entry.word_key = app->symbol;
      LogicEntry rhs = parse_logic_value();
      entry.value = std::move(rhs.value);
      return entry;
    }
    entry.value = std::move(val.value);
    return entry;
  }

  // A value: a list in brackets or a term.
  LogicEntry parse_logic_value() {
    LogicEntry entry;
    if (peek().punct("[")) {
      advance();
      std::vector<LogicEntry> list;
      while (!peek().punct("]")) {
        list.push_back(parse_logic_entry());
        if (peek().punct(",")) advance();
        else break;
      }
      expect_punct("]");
      entry.value = std::move(list);
      return entry;
    }
    entry.value = parse_term();
    return entry;
  }

  // ---- formulas ---------------------------------------------------------------

  FormulaPtr parse_formula() {
    FormulaPtr lhs = parse_unitary();
    const Token& t = peek();
    if (t.conn("&") || t.conn("|")) {
      std::string op = t.lexeme;
      BinaryOp bop = op == "&" ? BinaryOp::And : BinaryOp::Or;
      FormulaPtr acc = lhs;
      while (peek().conn(op.c_str())) {
        advance();
        acc = make_binary(bop, acc, parse_unitary());
      }
      if (peek().conn("&") || peek().conn("|") || is_nonassoc_connective(peek()))
        fail("mixed binary connectives need parentheses");
      return acc;
    }
    if (is_nonassoc_connective(t)) {
      BinaryOp op = binary_op(t.lexeme);
      advance();
      FormulaPtr rhs = parse_unitary();
      if (peek().conn("&") || peek().conn("|") || is_nonassoc_connective(peek()))
        fail("mixed binary connectives need parentheses");
      return make_binary(op, lhs, rhs);
    }
    return lhs;
  }

  static bool is_nonassoc_connective(const Token& t) {
    return t.conn("=>") || t.conn("<=") || t.conn("<=>") || t.conn("<~>");
  }

  static BinaryOp binary_op(const std::string& lex) {
    if (lex == "=>") return BinaryOp::Implies;
    if (lex == "<=") return BinaryOp::ReverseImplies;
    if (lex == "<=>") return BinaryOp::Iff;
    return BinaryOp::Xor;
  }

  FormulaPtr parse_unitary() {
    const Token& t = peek();
    Position pos = t.position;

    if (t.punct("(")) {
      advance();
      FormulaPtr f = parse_formula();
      expect_punct(")");
      return maybe_equality_tail(f, pos);
    }
    if (t.conn("~")) {
      advance();
      return make_not(parse_unitary());
    }
    if (t.conn("!") || t.conn("?")) return parse_quantified();
    if (t.punct("{")) return parse_nc_application();
    if (t.conn("[.]") || t.conn("<.>")) {
      NCConnective conn;
      conn.name = t.conn("[.]") ? "$box" : "$dia";
      advance();
      saw_nc_connective_ = true;
      return make_nc_app(std::move(conn), {parse_unitary()});
    }
    if ((t.punct("[") || t.punct("<")) && peek(1).is(TokenKind::HashWord)) {
      bool box = t.punct("[");
      advance();
      NCConnective conn;
      conn.name = box ? "$box" : "$dia";
      conn.index = advance().lexeme.substr(1);
      expect_punct(box ? "]" : ">");
      saw_nc_connective_ = true;
      return make_nc_app(std::move(conn), {parse_unitary()});
    }
    if (t.is(TokenKind::DefinedWord, "$true")) {
      advance();
      return make_true();
    }
    if (t.is(TokenKind::DefinedWord, "$false")) {
      advance();
      return make_false();
    }
    if (t.is(TokenKind::DefinedWord, "$in_world")) {
      advance();
      expect_punct("(");
      TermPtr world = parse_term();
      expect_punct(",");
      FormulaPtr body = parse_formula();
      expect_punct(")");
      return make_in_world(std::move(world), std::move(body));
    }
    return parse_atomic();
  }

  FormulaPtr parse_quantified() {
    Quantifier q = peek().conn("!") ? Quantifier::Forall : Quantifier::Exists;
    advance();
    expect_punct("[");
    std::vector<VarBinding> vars;
    for (;;) {
      if (!peek().is(TokenKind::UpperWord)) fail("expected bound variable");
      VarBinding vb;
      vb.name = advance().lexeme;
      if (peek().punct(":")) {
        advance();
        vb.sort = parse_simple_type();
      }
      vars.push_back(std::move(vb));
      if (peek().punct(",")) {
        advance();
        continue;
      }
      break;
    }
    expect_punct("]");
    // The ':' before the body is occasionally omitted when the body is
    // parenthesized; tolerate that form.
    if (peek().punct(":"))
      advance();
    else if (!peek().punct("("))
      fail("expected ':' after quantifier binder");
    FormulaPtr body = parse_unitary();
    return make_quant(q, std::move(vars), std::move(body));
  }

  FormulaPtr parse_nc_application() {
    NCConnective conn = parse_nc_connective();
    saw_nc_connective_ = true;
    if (!peek().punct("@")) fail("expected '@' after non-classical connective");
    advance();
    std::vector<FormulaPtr> args;
    if (peek().punct("(")) {
      advance();
      args.push_back(parse_formula());
      while (peek().punct(",")) {
        advance();
        args.push_back(parse_formula());
      }
      expect_punct(")");
    } else {
      // Unparenthesized unary application.
      args.push_back(parse_unitary());
    }
    return make_nc_app(std::move(conn), std::move(args));
  }

  NCConnective parse_nc_connective() {
    expect_punct("{");
    NCConnective conn;
    if (!peek().is(TokenKind::DefinedWord) && !peek().is(TokenKind::SystemWord))
      fail("expected connective name");
    conn.name = advance().lexeme;
    if (peek().punct("(")) {
      advance();
      bool first = true;
      for (;;) {
        if (first && peek().is(TokenKind::HashWord)) {
          conn.index = peek().lexeme.substr(1);
          advance();
        } else {
          if (!peek().is(TokenKind::LowerWord)) fail("expected parameter key");
          std::string key = advance().lexeme;
          expect_punct(":=");
          conn.params.emplace_back(std::move(key), parse_param_value());
        }
        first = false;
        if (peek().punct(",")) {
          advance();
          continue;
        }
        break;
      }
      expect_punct(")");
    }
    expect_punct("}");
    return conn;
  }

  ParamValue parse_param_value() {
    ParamValue pv;
    if (peek().punct("[")) {
      advance();
      ParamValues list;
      while (!peek().punct("]")) {
        list.push_back(parse_param_value());
        if (peek().punct(",")) advance();
        else break;
      }
      expect_punct("]");
      pv.value = std::move(list);
      return pv;
    }
    if (peek().punct("(")) {
      advance();
      FormulaPtr f = parse_formula();
      expect_punct(")");
      pv.value = std::move(f);
      return pv;
    }
    pv.value = parse_term();
    return pv;
  }

  // An atomic formula: a (possibly defined) predicate application or an
  // equality between terms.
  FormulaPtr parse_atomic() {
    Position pos = peek().position;
    TermPtr term = parse_term();
    if (peek().conn("=") || peek().conn("!=")) {
      bool negated = peek().conn("!=");
      advance();
      TermPtr rhs = parse_term();
      auto f = make_equality(std::move(term), std::move(rhs), negated);
      return f;
    }
    // Not an equality: the term must be a predicate application.
    if (const auto* app = std::get_if<FunctionApp>(&term->node)) {
      auto f = make_atom(app->symbol, app->args);
      return f;
    }
    throw ParseError(pos, "expected a formula");
  }

  // After a parenthesized formula, `= term` turns a parenthesized term-like
  // atom back into an equality operand. This only applies when the inner
  // formula is itself an atom (e.g. `( f(X) ) = y` is rare but legal).
  FormulaPtr maybe_equality_tail(FormulaPtr f, Position pos) {
    if (!peek().conn("=") && !peek().conn("!=")) return f;
    const auto* atom = std::get_if<AtomF>(&f->node);
    if (!atom) fail("'=' cannot apply to a formula");
    bool negated = peek().conn("!=");
    advance();
    TermPtr lhs = make_app(atom->predicate, atom->args);
    TermPtr rhs = parse_term();
    (void)pos;
    return make_equality(std::move(lhs), std::move(rhs), negated);
  }

  TermPtr parse_term() {
    const Token& t = peek();
    Position pos = t.position;
    if (t.is(TokenKind::UpperWord)) {
      advance();
      auto term = std::make_shared<Term>(Term{Variable{t.lexeme}, pos});
      return term;
    }
    if (t.is(TokenKind::Integer)) {
      advance();
      auto term = std::make_shared<Term>(Term{IntegerTerm{t.lexeme}, pos});
      return term;
    }
    if (t.is(TokenKind::LowerWord) || t.is(TokenKind::SingleQuoted) ||
        t.is(TokenKind::DefinedWord) || t.is(TokenKind::SystemWord)) {
      std::string symbol = advance().lexeme;
      std::vector<TermPtr> args;
      if (peek().punct("(")) {
        advance();
        args.push_back(parse_term());
        while (peek().punct(",")) {
          advance();
          args.push_back(parse_term());
        }
        expect_punct(")");
      }
      auto term = std::make_shared<Term>(Term{FunctionApp{std::move(symbol), std::move(args)}, pos});
      return term;
    }
    fail("expected term");
  }

  // ---- annotation terms -------------------------------------------------------

  GeneralTermPtr parse_general_term() {
    const Token& t = peek();
    if (t.punct("[")) {
      advance();
      std::vector<GeneralTermPtr> elems;
      while (!peek().punct("]")) {
        elems.push_back(parse_general_term());
        if (peek().punct(",")) advance();
        else break;
      }
      expect_punct("]");
      return make_general_list(std::move(elems));
    }
    if (t.is(TokenKind::UpperWord)) {
      advance();
      auto g = std::make_shared<GeneralTerm>();
      g->kind = GeneralTerm::Kind::Variable;
      g->name = t.lexeme;
      return g;
    }
    if (t.is(TokenKind::Integer)) {
      advance();
      auto g = std::make_shared<GeneralTerm>();
      g->kind = GeneralTerm::Kind::Int;
      g->name = t.lexeme;
      return g;
    }
    if (t.is(TokenKind::LowerWord) || t.is(TokenKind::SingleQuoted) ||
        t.is(TokenKind::DefinedWord) || t.is(TokenKind::SystemWord)) {
      std::string name = advance().lexeme;
      std::vector<GeneralTermPtr> args;
      if (peek().punct("(")) {
        advance();
        while (!peek().punct(")")) {
          args.push_back(parse_general_term());
          if (peek().punct(",")) advance();
          else break;
        }
        expect_punct(")");
      }
      return make_general_atom(std::move(name), std::move(args));
    }
    fail("expected annotation term");
  }

  // ---- whole-problem checks ----------------------------------------------------

  void post_checks(ParseResult& result) {
    std::set<std::pair<std::string, std::string>> seen;
    bool logic_seen = false;
    bool nc_before_logic = false;
    for (const auto& st : result.problem.statements) {
      auto key = std::make_pair(st.name, st.role.str());
      if (!seen.insert(key).second)
        warn(st.pos, "duplicate statement name '" + st.name + "' with role '" +
                         st.role.str() + "'");
      if (st.role.base == "logic") {
        if (logic_seen)
          error(st.pos, "multiple logic specifications");
        logic_seen = true;
        if (nc_before_logic)
          warn(st.pos,
               "logic specification appears after non-classical connectives "
               "were used");
      }
      if (st.is_formula() && contains_nc(st.formula())) nc_before_logic = true;
    }
  }

  static bool contains_nc(const FormulaPtr& f) {
    if (!f) return false;
    if (std::holds_alternative<NCAppF>(f->node)) return true;
    if (const auto* n = std::get_if<NotF>(&f->node)) return contains_nc(n->arg);
    if (const auto* b = std::get_if<BinaryF>(&f->node))
      return contains_nc(b->lhs) || contains_nc(b->rhs);
    if (const auto* q = std::get_if<QuantF>(&f->node)) return contains_nc(q->body);
    if (const auto* w = std::get_if<InWorldF>(&f->node)) return contains_nc(w->body);
    return false;
  }
};

}  // namespace

ParseResult parse_problem(std::string_view text) { return Parser(text).run(); }

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SemanticError("cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path locate_include(
    const std::filesystem::path& from_dir, const std::string& name,
    const std::vector<std::filesystem::path>& include_dirs) {
  std::filesystem::path direct = from_dir / name;
  if (std::filesystem::exists(direct)) return direct;
  for (const auto& dir : include_dirs) {
    std::filesystem::path candidate = dir / name;
    if (std::filesystem::exists(candidate)) return candidate;
  }
  throw SemanticError("cannot resolve include '" + name + "'");
}

void splice_file(const std::filesystem::path& path,
                 const std::vector<std::filesystem::path>& include_dirs,
                 std::set<std::string>& visiting, ParseResult& out,
                 const std::vector<std::string>* selection) {
  std::string canonical = std::filesystem::weakly_canonical(path).string();
  if (!visiting.insert(canonical).second)
    throw SemanticError("circular include of '" + path.string() + "'");
  ParseResult local = parse_problem(read_file(path));
  for (auto& d : local.diagnostics) out.diagnostics.push_back(std::move(d));
  for (const auto& inc : local.problem.includes) {
    std::filesystem::path target =
        locate_include(path.parent_path(), inc.file, include_dirs);
    splice_file(target, include_dirs, visiting, out,
                inc.selection.empty() ? nullptr : &inc.selection);
  }
  for (auto& st : local.problem.statements) {
    if (selection &&
        std::find(selection->begin(), selection->end(), st.name) == selection->end())
      continue;
    out.problem.statements.push_back(std::move(st));
  }
  visiting.erase(canonical);
}

}  // namespace

ParseResult parse_file(const std::filesystem::path& path,
                       const std::vector<std::filesystem::path>& include_dirs) {
  ParseResult result;
  std::set<std::string> visiting;
  splice_file(path, include_dirs, visiting, result, nullptr);
  return result;
}

}  // namespace nxkit
