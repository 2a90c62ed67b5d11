#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "nxkit/parser.hpp"
#include "nxkit/search.hpp"
#include "support/util.hpp"

using namespace nxkit;
using namespace nxkit::testgen;

namespace {

struct Loaded {
  TypedProblem tp;
  NormalizedModalLogic logic;
};

Loaded load_typed(const std::string& text) {
  auto parsed = parse_problem(text);
  REQUIRE_FALSE(has_errors(parsed.diagnostics));
  Loaded out;
  out.tp = resolve_defaults(parsed.problem);
  REQUIRE_FALSE(has_errors(out.tp.diagnostics));
  const LogicSpecification* spec = nullptr;
  for (const auto& st : out.tp.problem.statements)
    if (const auto* ls = std::get_if<LogicSpecification>(&st.body)) spec = ls;
  REQUIRE(spec != nullptr);
  out.logic = normalize_spec(*spec);
  return out;
}

std::string spec_line(const std::string& domains, const std::string& system) {
  return "tff(semantics, logic, $modal == [ $domains == " + domains +
         ", $designation == $rigid, $terms == $global, $modalities == " +
         system + " ]).\n";
}

SearchOutcome run(const std::string& text, const SearchBounds& bounds = {}) {
  Loaded in = load_typed(text);
  return find_countermodel(in.tp, in.logic, bounds);
}

}  // namespace

TEST_CASE("necessitation of a contingent truth has a two-world countermodel") {
  std::string text = spec_line("$constant", "$modal_system_K") +
                     "tff(goal, conjecture, p => ( {$box} @ ( p ) )).\n";
  SearchOutcome out = run(text);
  REQUIRE(out.status == SearchStatus::Found);
  REQUIRE(out.model.has_value());
  REQUIRE(out.report.has_value());
  CHECK(out.report->classification == ModelClassification::CounterSatisfiable);
  CHECK(out.report->all_pass());
  CHECK(out.report->conjecture_value == std::optional<bool>{false});
  // Sizes are tried in increasing order, and one world cannot refute this.
  CHECK(out.model->world_names.size() == 2);
  CHECK(out.evaluations > 0);

  // The found model independently re-checks to the same verdict.
  Loaded in = load_typed(text);
  ModelCheckReport again = check_model(*out.model, in.tp, in.logic);
  CHECK(again.classification == ModelClassification::CounterSatisfiable);
  CHECK(szs_status(again.classification) == "CounterSatisfiable");
}

TEST_CASE("reflexivity validates the truth axiom") {
  std::string text = spec_line("$constant", "$modal_system_M") +
                     "tff(goal, conjecture, ( {$box} @ ( p ) ) => p).\n";
  SearchOutcome out = run(text);
  CHECK(out.status == SearchStatus::NotFound);
  CHECK_FALSE(out.model.has_value());
}

TEST_CASE("seriality decides whether box implies dia") {
  std::string text_d =
      spec_line("$constant", "$modal_system_D") +
      "tff(goal, conjecture, ( {$box} @ ( p ) ) => ( {$dia} @ ( p ) )).\n";
  CHECK(run(text_d).status == SearchStatus::NotFound);

  std::string text_k =
      spec_line("$constant", "$modal_system_K") +
      "tff(goal, conjecture, ( {$box} @ ( p ) ) => ( {$dia} @ ( p ) )).\n";
  SearchOutcome out = run(text_k);
  REQUIRE(out.status == SearchStatus::Found);
  // The dead end: a world with no successors.
  CHECK(out.model->world_names.size() == 1);
  CHECK(out.report->classification == ModelClassification::CounterSatisfiable);
}

TEST_CASE("a one-evaluation budget is exhausted immediately") {
  std::string text = spec_line("$constant", "$modal_system_M") +
                     "tff(goal, conjecture, ( {$box} @ ( p ) ) => p).\n";
  SearchBounds bounds;
  bounds.budget = 1;
  SearchOutcome out = run(text, bounds);
  CHECK(out.status == SearchStatus::BudgetExhausted);
  CHECK_FALSE(out.model.has_value());
}

TEST_CASE("quantified conjectures get element countermodels") {
  std::string text = spec_line("$constant", "$modal_system_K") +
                     "tff(s_type, type, s: $tType).\n"
                     "tff(p_decl, type, p: s > $o).\n"
                     "tff(goal, conjecture, ! [X: s] : p(X)).\n";
  SearchOutcome out = run(text);
  REQUIRE(out.status == SearchStatus::Found);
  CHECK(out.model->world_names.size() == 1);
  REQUIRE(out.model->domains.count("s"));
  CHECK(out.report->classification == ModelClassification::CounterSatisfiable);
}

TEST_CASE("growing domains refute the universal-box exchange") {
  std::string text =
      spec_line("$cumulative", "$modal_system_K") +
      "tff(s_type, type, s: $tType).\n"
      "tff(p_decl, type, p: s > $o).\n"
      "tff(goal, conjecture,"
      " ( ! [X: s] : ( {$box} @ ( p(X) ) ) )"
      " => ( {$box} @ ( ! [X: s] : p(X) ) )).\n";
  SearchOutcome out = run(text);
  REQUIRE(out.status == SearchStatus::Found);
  CHECK(out.report->classification == ModelClassification::CounterSatisfiable);
  CHECK(out.model->world_names.size() == 2);
  // The refutation needs an element that exists only away from the local
  // world, so membership rows differ.
  const SortDomain& dom = out.model->domains.at("s");
  CHECK(dom.member.at(0) != dom.member.at(1));

  // The converse direction holds when domains only grow.
  std::string converse =
      spec_line("$cumulative", "$modal_system_K") +
      "tff(s_type, type, s: $tType).\n"
      "tff(p_decl, type, p: s > $o).\n"
      "tff(goal, conjecture,"
      " ( {$box} @ ( ! [X: s] : p(X) ) )"
      " => ( ! [X: s] : ( {$box} @ ( p(X) ) ) )).\n";
  SearchBounds small;
  small.max_worlds = 2;
  small.max_elements = 2;
  CHECK(run(converse, small).status == SearchStatus::NotFound);

  // With shrinking domains the converse fails instead.
  std::string shrinking =
      spec_line("$decreasing", "$modal_system_K") +
      "tff(s_type, type, s: $tType).\n"
      "tff(p_decl, type, p: s > $o).\n"
      "tff(goal, conjecture,"
      " ( {$box} @ ( ! [X: s] : p(X) ) )"
      " => ( ! [X: s] : ( {$box} @ ( p(X) ) ) )).\n";
  SearchOutcome flipped = run(shrinking);
  REQUIRE(flipped.status == SearchStatus::Found);
  CHECK(flipped.report->classification ==
        ModelClassification::CounterSatisfiable);
}

TEST_CASE("without a conjecture the search looks for a satisfying model") {
  // Locally p holds, yet some reachable world refutes it; a global reading
  // of the pair would be contradictory.
  std::string text = spec_line("$constant", "$modal_system_K") +
                     "tff(hyp1, hypothesis, p).\n"
                     "tff(hyp2, hypothesis, {$dia} @ ( ~ p )).\n";
  SearchOutcome out = run(text);
  REQUIRE(out.status == SearchStatus::Found);
  CHECK(out.report->classification == ModelClassification::Satisfiable);
  CHECK(szs_status(out.report->classification) == "Satisfiable");
  CHECK(out.model->world_names.size() == 2);

  std::string contradictory = spec_line("$constant", "$modal_system_K") +
                              "tff(ax1, axiom, p).\n"
                              "tff(ax2, axiom, ~ p).\n";
  CHECK(run(contradictory).status == SearchStatus::NotFound);
}

TEST_CASE("assumptions constrain the found countermodel") {
  // A local box p does not reach two steps out without transitivity.
  std::string text = spec_line("$constant", "$modal_system_K") +
                     "tff(hyp, hypothesis, {$box} @ ( p )).\n"
                     "tff(goal, conjecture, {$box} @ ( {$box} @ ( p ) )).\n";
  SearchOutcome out = run(text);
  REQUIRE(out.status == SearchStatus::Found);
  CHECK(out.report->all_pass());
  CHECK(out.report->classification == ModelClassification::CounterSatisfiable);

  // Under transitivity the same conjecture follows from the hypothesis.
  std::string four = spec_line("$constant", "$modal_system_K4") +
                     "tff(hyp, hypothesis, {$box} @ ( p )).\n"
                     "tff(goal, conjecture, {$box} @ ( {$box} @ ( p ) )).\n";
  CHECK(run(four).status == SearchStatus::NotFound);
}

TEST_CASE("per-sort caps bound the element countermodels") {
  std::string text = spec_line("$constant", "$modal_system_K") +
                     "tff(s_type, type, s: $tType).\n"
                     "tff(goal, conjecture, ! [X: s, Y: s] : X = Y).\n";
  SearchBounds capped;
  capped.sort_caps["s"] = 1;
  CHECK(run(text, capped).status == SearchStatus::NotFound);
  CHECK(capped.cap_for("s") == 1);
  CHECK(capped.cap_for("t") == 3);

  SearchOutcome out = run(text);
  REQUIRE(out.status == SearchStatus::Found);
  CHECK(out.model->domains.at("s").element_names.size() == 2);
}

TEST_CASE("local and global assumptions differ in strength") {
  // A local hypothesis ~p constrains only the evaluation world, so a
  // countermodel to box p can keep p true elsewhere.
  std::string local = spec_line("$constant", "$modal_system_K") +
                      "tff(hyp, hypothesis, ~ p).\n"
                      "tff(goal, conjecture, {$dia} @ ( p )).\n";
  SearchOutcome out = run(local);
  REQUIRE(out.status == SearchStatus::Found);
  CHECK(out.model->world_names.size() == 1);

  // Promoted to a global axiom, ~p forces dia p to stay refuted but also
  // makes p unsatisfiable everywhere, so "dia p" conjoined as an axiom has
  // no model at all.
  std::string contradictory = spec_line("$constant", "$modal_system_K") +
                              "tff(ax1, axiom-global, ~ p).\n"
                              "tff(ax2, axiom, {$dia} @ ( p )).\n";
  CHECK(run(contradictory).status == SearchStatus::NotFound);
}

TEST_CASE("indexed connectives search over separate relations") {
  std::string text =
      "tff(semantics, logic, $modal == [ $domains == $constant,"
      " $designation == $rigid, $terms == $global,"
      " $modalities == [ $modal_system_K,"
      " {$box(#1)} == $modal_system_M ] ]).\n"
      "tff(goal, conjecture, ( {$box(#1)} @ ( p ) ) => p).\n";
  // Reflexivity of relation 1 validates the instance.
  CHECK(run(text).status == SearchStatus::NotFound);

  std::string other =
      "tff(semantics, logic, $modal == [ $domains == $constant,"
      " $designation == $rigid, $terms == $global,"
      " $modalities == [ $modal_system_K,"
      " {$box(#1)} == $modal_system_M ] ]).\n"
      "tff(goal, conjecture, ( {$box(#2)} @ ( p ) ) => p).\n";
  // Index 2 falls back to the default system K, which does not validate it.
  SearchOutcome out = run(other);
  REQUIRE(out.status == SearchStatus::Found);
  CHECK(out.report->classification == ModelClassification::CounterSatisfiable);
}
