#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>

#include "nxkit/derivation.hpp"
#include "nxkit/parser.hpp"
#include "support/util.hpp"

using namespace nxkit;
using namespace nxkit::testgen;

namespace {

Problem parse_ok(const std::string& text) {
  auto r = parse_problem(text);
  REQUIRE_FALSE(has_errors(r.diagnostics));
  return std::move(r.problem);
}

FormulaPtr parse_formula_text(const std::string& text) {
  auto r = parse_problem("tff(x,plain, " + text + " ).");
  return r.problem.statements.at(0).formula();
}

const StructureCheck* find_check(const StructureReport& report,
                                 const std::string& label) {
  for (const auto& c : report.checks)
    if (c.label == label) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("a complete refutation verifies against its problem") {
  Problem proof = parse_ok(read_fixture("cantor_proof.s"));
  Problem original = parse_ok(read_fixture("cantor.p"));

  DerivationDag dag = build_dag(proof);
  CHECK(dag.ok());
  CHECK(dag.nodes.size() == 8);
  REQUIRE(dag.find("381") != nullptr);
  CHECK(dag.find("381")->kind == DerivationNode::SourceKind::Inference);
  CHECK(dag.find("381")->rule == "rewrite");
  CHECK(dag.find("381")->parents == std::vector<std::string>{"272", "32"});
  REQUIRE(dag.find("1") != nullptr);
  CHECK(dag.find("1")->kind == DerivationNode::SourceKind::File);
  CHECK(dag.find("1")->file_name == "SET557^1.p");
  CHECK(dag.find("1")->original_name == "surjectiveCantorThm");
  REQUIRE(dag.find("2") != nullptr);
  CHECK(dag.find("2")->rule == "neg_conjecture");
  CHECK(dag.find("2")->parents == std::vector<std::string>{"1"});

  StructureReport report = verify_structure(dag, &original);
  CHECK(report.acyclic);
  CHECK(report.origins_ok);
  CHECK(report.refutation_found);
  CHECK(report.ok);

  // The conjecture was renamed apart but matches up to variable renaming.
  const StructureCheck* origin = find_check(report, "origin 1");
  REQUIRE(origin != nullptr);
  CHECK(origin->pass);
  CHECK(origin->detail == "matches 'surjectiveCantorThm'");

  const StructureCheck* refutation = find_check(report, "refutation");
  REQUIRE(refutation != nullptr);
  CHECK(refutation->detail == "$false derived at '381'");

  // Without the original, origin checks are skipped but the rest stands.
  StructureReport bare = verify_structure(dag, nullptr);
  CHECK(bare.ok);
  CHECK(find_check(bare, "origin 1") == nullptr);
}

TEST_CASE("losing the empty-clause node breaks the refutation") {
  Problem proof = parse_ok(read_fixture("cantor_proof.s"));
  proof.statements.erase(
      std::remove_if(proof.statements.begin(), proof.statements.end(),
                     [](const AnnotatedFormula& st) { return st.name == "381"; }),
      proof.statements.end());
  DerivationDag dag = build_dag(proof);
  CHECK(dag.ok());
  StructureReport report = verify_structure(dag, nullptr);
  CHECK(report.acyclic);
  CHECK_FALSE(report.refutation_found);
  CHECK_FALSE(report.ok);
}

TEST_CASE("an embedded-level trace verifies only without origin comparison") {
  Problem proof = parse_ok(read_fixture("leo_workers_proof.s"));
  Problem original = parse_ok(read_fixture("leo_workers.p"));

  DerivationDag dag = build_dag(proof);
  CHECK(dag.ok());
  REQUIRE(dag.find("772") != nullptr);

  StructureReport bare = verify_structure(dag, nullptr);
  CHECK(bare.acyclic);
  CHECK(bare.refutation_found);
  CHECK(bare.ok);

  // The trace's leaves live at the embedded level (and one frame axiom has
  // no counterpart at all), so they cannot match the source problem.
  StructureReport against = verify_structure(dag, &original);
  CHECK(against.acyclic);
  CHECK_FALSE(against.origins_ok);
  CHECK_FALSE(against.ok);
  const StructureCheck* frame = find_check(against, "origin m_reflexive");
  REQUIRE(frame != nullptr);
  CHECK_FALSE(frame->pass);
  CHECK(frame->detail ==
        "'mrel_reflexive' is not in the original problem");
}

TEST_CASE("self-referential steps are cyclic") {
  Problem proof = parse_ok(
      "tff(r, plain, p, inference(spin,[status(thm)],[r])).\n"
      "tff(f, plain, $false, inference(done,[status(thm)],[r])).\n");
  DerivationDag dag = build_dag(proof);
  CHECK(dag.ok());
  StructureReport report = verify_structure(dag, nullptr);
  CHECK_FALSE(report.acyclic);
  CHECK_FALSE(report.ok);
  const StructureCheck* acyclic = find_check(report, "acyclic");
  REQUIRE(acyclic != nullptr);
  CHECK(acyclic->detail == "cycle through 'r'");
}

TEST_CASE("mutual references are cyclic") {
  Problem proof = parse_ok(
      "tff(a, plain, p, inference(r1,[status(thm)],[b])).\n"
      "tff(b, plain, q, inference(r2,[status(thm)],[a])).\n"
      "tff(f, plain, $false, inference(done,[status(thm)],[a,b])).\n");
  StructureReport report = verify_structure(build_dag(proof), nullptr);
  CHECK_FALSE(report.acyclic);
}

TEST_CASE("dangling parents are reported as errors") {
  Problem proof = parse_ok(
      "tff(a, plain, $false, inference(r1,[status(thm)],[ghost])).\n");
  DerivationDag dag = build_dag(proof);
  CHECK_FALSE(dag.ok());
  bool saw = false;
  for (const auto& d : dag.diagnostics)
    if (d.severity == Severity::Error &&
        d.message.find("undefined parent 'ghost'") != std::string::npos)
      saw = true;
  CHECK(saw);
  StructureReport report = verify_structure(dag, nullptr);
  CHECK(report.acyclic);            // the missing node is skipped
  CHECK(report.refutation_found);
  CHECK_FALSE(report.ok);           // but the dag errors still fail it
}

TEST_CASE("duplicate node names are reported as errors") {
  Problem proof;
  {
    auto r = parse_problem(
        "tff(a, plain, p, inference(r1,[status(thm)],[])).\n"
        "tff(a, plain, q, inference(r2,[status(thm)],[])).\n");
    proof = std::move(r.problem);  // the parser itself warns, not errors
  }
  DerivationDag dag = build_dag(proof);
  CHECK_FALSE(dag.ok());
  CHECK(dag.nodes.size() == 1);
}

TEST_CASE("formulas without sources are noted") {
  Problem proof = parse_ok("tff(a, plain, $false).\n");
  DerivationDag dag = build_dag(proof);
  CHECK(dag.ok());  // a note, not an error
  bool saw = false;
  for (const auto& d : dag.diagnostics)
    if (d.severity == Severity::Note &&
        d.message.find("has no source") != std::string::npos)
      saw = true;
  CHECK(saw);
  REQUIRE(dag.find("a") != nullptr);
  CHECK(dag.find("a")->kind == DerivationNode::SourceKind::None);
}

TEST_CASE("nested inference parents become synthetic nodes") {
  Problem proof = parse_ok(
      "tff(a, axiom, p, file('in.p',a)).\n"
      "tff(b, axiom, q, file('in.p',b)).\n"
      "tff(c, plain, $false,"
      " inference(outer,[status(thm)],"
      "   [inference(inner,[status(esa)],[a]), b])).\n");
  DerivationDag dag = build_dag(proof);
  CHECK(dag.ok());
  CHECK(dag.nodes.size() == 4);
  const DerivationNode* c = dag.find("c");
  REQUIRE(c != nullptr);
  REQUIRE(c->parents.size() == 2);
  CHECK(c->parents[1] == "b");
  const DerivationNode* step = dag.find(c->parents[0]);
  REQUIRE(step != nullptr);
  CHECK(step->name == "c_step1");
  CHECK(step->kind == DerivationNode::SourceKind::Inference);
  CHECK(step->rule == "inner");
  CHECK(step->parents == std::vector<std::string>{"a"});
  CHECK(step->statement == nullptr);
  CHECK(verify_structure(dag, nullptr).ok);
}

TEST_CASE("bare names copy another node") {
  Problem proof = parse_ok(
      "tff(a, axiom, p, file('in.p',a)).\n"
      "tff(b, plain, p, a).\n"
      "tff(f, plain, $false, inference(done,[status(thm)],[b])).\n");
  DerivationDag dag = build_dag(proof);
  REQUIRE(dag.find("b") != nullptr);
  CHECK(dag.find("b")->kind == DerivationNode::SourceKind::NameRef);
  CHECK(dag.find("b")->parents == std::vector<std::string>{"a"});
  CHECK(verify_structure(dag, nullptr).ok);
}

TEST_CASE("negated conjectures may add one top-level negation") {
  Problem original = parse_ok("tff(goal, conjecture, p => q).\n");
  Problem proof = parse_ok(
      "tff(neg, negated_conjecture, ~ ( p => q ), file('orig.p',goal)).\n"
      "tff(f, plain, $false, inference(done,[status(thm)],[neg])).\n");
  StructureReport report = verify_structure(build_dag(proof), &original);
  CHECK(report.origins_ok);
  CHECK(report.ok);

  // Only a negated conjecture gets that tolerance.
  Problem wrong_role = parse_ok(
      "tff(neg, plain, ~ ( p => q ), file('orig.p',goal)).\n"
      "tff(f, plain, $false, inference(done,[status(thm)],[neg])).\n");
  CHECK_FALSE(verify_structure(build_dag(wrong_role), &original).origins_ok);

  // And the negated body must still match.
  Problem mismatch = parse_ok(
      "tff(neg, negated_conjecture, ~ ( q => p ), file('orig.p',goal)).\n"
      "tff(f, plain, $false, inference(done,[status(thm)],[neg])).\n");
  CHECK_FALSE(verify_structure(build_dag(mismatch), &original).origins_ok);
}

TEST_CASE("higher-order origins compare token streams up to renaming") {
  Problem original = parse_ok("thf(goal, conjecture, ! [X: $i] : ( f @ X )).\n");
  Problem proof = parse_ok(
      "thf(neg, negated_conjecture, ~ ( ! [Y: $i] : ( f @ Y ) ),"
      " file('orig.p',goal)).\n"
      "thf(f2, plain, $false, inference(done,[status(thm)],[neg])).\n");
  StructureReport report = verify_structure(build_dag(proof), &original);
  CHECK(report.origins_ok);
}

TEST_CASE("renaming-insensitive formula comparison") {
  CHECK(alpha_equal(parse_formula_text("! [X: s] : p(X)"),
                    parse_formula_text("! [Y: s] : p(Y)")));
  CHECK_FALSE(alpha_equal(parse_formula_text("! [X: s] : p(X)"),
                          parse_formula_text("! [Y: t] : p(Y)")));
  // A missing binder sort reads as $i.
  CHECK(alpha_equal(parse_formula_text("! [X] : p(X)"),
                    parse_formula_text("! [Y: $i] : p(Y)")));
  // Free variables must agree literally.
  CHECK(alpha_equal(parse_formula_text("p(X)"), parse_formula_text("p(X)")));
  CHECK_FALSE(alpha_equal(parse_formula_text("p(X)"), parse_formula_text("p(Y)")));
  // Bound renamings may swap names as long as they stay bijective.
  CHECK(alpha_equal(parse_formula_text("! [X: s, Y: s] : r(X,Y)"),
                    parse_formula_text("! [Y: s, X: s] : r(Y,X)")));
  CHECK_FALSE(alpha_equal(parse_formula_text("! [X: s, Y: s] : r(X,Y)"),
                          parse_formula_text("! [X: s, Y: s] : r(Y,X)")));
  CHECK_FALSE(alpha_equal(parse_formula_text("! [X: s, Y: s] : r(X,Y)"),
                          parse_formula_text("! [X: s, X: s] : r(X,X)")));
  // Bindings are scoped: outside the quantifier the old meaning returns.
  CHECK(alpha_equal(
      parse_formula_text("( ! [X: s] : p(X) ) & q(Z)"),
      parse_formula_text("( ! [Y: s] : p(Y) ) & q(Z)")));
  CHECK_FALSE(alpha_equal(
      parse_formula_text("( ! [X: s] : p(X) ) & q(Z)"),
      parse_formula_text("( ! [Y: s] : p(Y) ) & q(W)")));
}

TEST_CASE("renaming-insensitive token comparison") {
  CHECK(alpha_equal_tokens(tokenize("p(X,Y)"), tokenize("p(A,B)")));
  CHECK_FALSE(alpha_equal_tokens(tokenize("p(X,Y)"), tokenize("p(A,A)")));
  CHECK_FALSE(alpha_equal_tokens(tokenize("p(X,X)"), tokenize("p(A,B)")));
  CHECK(alpha_equal_tokens(tokenize("f(X) = X"), tokenize("f(Y) = Y")));
  CHECK_FALSE(alpha_equal_tokens(tokenize("f(X) = X"), tokenize("f(Y) = Z")));
  CHECK_FALSE(alpha_equal_tokens(tokenize("p(X)"), tokenize("q(X)")));
  CHECK_FALSE(alpha_equal_tokens(tokenize("p(X)"), tokenize("p(X,Y)")));
  // A variable can never match a fixed word.
  CHECK_FALSE(alpha_equal_tokens(tokenize("p(X)"), tokenize("p(c)")));
}
