// Acceptance gate: end-to-end checks over the toolkit, one verdict line per
// criterion. Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nxkit/census.hpp"
#include "nxkit/derivation.hpp"
#include "nxkit/diagnostics.hpp"
#include "nxkit/embed.hpp"
#include "nxkit/kripke.hpp"
#include "nxkit/logic.hpp"
#include "nxkit/parser.hpp"
#include "nxkit/printer.hpp"
#include "nxkit/search.hpp"
#include "nxkit/typing.hpp"
#include "support/gen.hpp"
#include "support/induced.hpp"
#include "support/util.hpp"

using namespace nxkit;
using namespace nxkit::testgen;

namespace {

using Failures = std::vector<std::string>;

void expect(Failures& f, bool cond, const std::string& msg) {
  if (!cond) f.push_back(msg);
}

Problem parse_ok(Failures& f, const std::string& text, const std::string& what) {
  auto r = parse_problem(text);
  if (has_errors(r.diagnostics)) {
    std::string msg = what + ": parse errors:";
    for (const auto& d : r.diagnostics) msg += " " + d.str();
    f.push_back(msg);
  }
  return std::move(r.problem);
}

struct Analyzed {
  TypedProblem tp;
  NormalizedModalLogic logic;
  bool ok = false;
};

Analyzed analyze(Failures& f, const std::string& text, const std::string& what) {
  Analyzed out;
  Problem problem = parse_ok(f, text, what);
  out.tp = resolve_defaults(problem);
  if (has_errors(out.tp.diagnostics)) {
    f.push_back(what + ": type resolution failed");
    return out;
  }
  const LogicSpecification* spec = nullptr;
  for (const auto& st : out.tp.problem.statements)
    if (const auto* ls = std::get_if<LogicSpecification>(&st.body)) spec = ls;
  if (!spec) {
    f.push_back(what + ": no logic specification");
    return out;
  }
  out.logic = normalize_spec(*spec);
  out.ok = true;
  return out;
}

std::string replace_all(std::string text, const std::string& from,
                        const std::string& to) {
  for (std::size_t at = text.find(from); at != std::string::npos;
       at = text.find(from, at + to.size()))
    text.replace(at, from.size(), to);
  return text;
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "birds_fly.p",           "leo_workers.p",      "multimodal_spec.p",
      "cantor.p",              "leo_workers_interp.s",
      "leo_workers_kripke.s",  "leo_workers_proof.s", "cantor_proof.s"};
  return names;
}

// --------------------------------------------------------------------------
// 1. Reading the dialect: fixtures parse and the census sees what is there.
// --------------------------------------------------------------------------
void criterion_parse_census(Failures& f) {
  for (const auto& name : fixture_names())
    parse_ok(f, read_fixture(name), name);

  SyntaxStatistics leo = census(parse_ok(f, read_fixture("leo_workers.p"), "leo"));
  expect(f, leo.statements == 15, "leo: expected 15 statements");
  expect(f, leo.by_role["axiom"] == 4, "leo: expected 4 axioms");
  expect(f, leo.by_role["hypothesis"] == 2, "leo: expected 2 hypotheses");
  expect(f, leo.by_role["conjecture"] == 1, "leo: expected 1 conjecture");
  expect(f, leo.type_declarations == 7, "leo: expected 7 type declarations");
  expect(f, leo.user_sorts == 2, "leo: expected 2 user sorts");
  expect(f, leo.logic_specifications == 1, "leo: expected 1 logic specification");
  expect(f, leo.nc_plain == 4, "leo: expected 4 plain connective occurrences");
  expect(f, leo.nc_indexed == 0, "leo: expected no indexed occurrences");
  expect(f, leo.equalities == 2, "leo: expected 2 equalities");

  SyntaxStatistics birds =
      census(parse_ok(f, read_fixture("birds_fly.p"), "birds"));
  expect(f, birds.statements == 3, "birds: expected 3 statements");
  expect(f, birds.nc_plain == 2, "birds: expected 2 plain occurrences");
  expect(f, birds.nc_indexed == 1, "birds: expected 1 indexed occurrence");
  expect(f, birds.nc_indices == std::set<std::string>{"alex"},
         "birds: expected index set {alex}");
  expect(f, birds.nc_by_name["$believes"] == 1,
         "birds: expected one $believes occurrence");
}

// --------------------------------------------------------------------------
// 2. Printing is faithful: fixtures and generated problems survive the
//    print/parse cycle unchanged.
// --------------------------------------------------------------------------
void criterion_roundtrip(Failures& f) {
  for (const auto& name : fixture_names()) {
    Problem first = parse_ok(f, read_fixture(name), name);
    std::string printed = print_problem(first);
    Problem second = parse_ok(f, printed, name + " (reprint)");
    if (print_problem(second) != printed)
      f.push_back(name + ": reprint is not stable");
  }

  int bad = 0;
  for (unsigned seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    Problem problem = fuzz_problem(rng);
    std::string printed = print_problem(problem);
    ParseResult re = parse_problem(printed);
    if (has_errors(re.diagnostics)) {
      ++bad;
      if (bad == 1) f.push_back("seed " + std::to_string(seed) +
                                ": reprint does not parse");
      continue;
    }
    bool same = re.problem.statements.size() == problem.statements.size();
    for (std::size_t i = 0; same && i < problem.statements.size(); ++i) {
      const auto& a = problem.statements[i];
      const auto& b = re.problem.statements[i];
      same = a.name == b.name && a.role.str() == b.role.str() &&
             a.body.index() == b.body.index() && equal(a.source, b.source);
      if (same && a.is_formula()) same = equal(a.formula(), b.formula());
    }
    if (!same || print_problem(re.problem) != printed) {
      ++bad;
      if (bad == 1)
        f.push_back("seed " + std::to_string(seed) + ": round-trip mismatch");
    }
  }
  expect(f, bad == 0,
         std::to_string(bad) + " of 200 generated problems failed the cycle");
}

// --------------------------------------------------------------------------
// 3. Logic specifications: the named systems resolve to their exact axiom
//    sets, and multi-modal specifications normalize per index.
// --------------------------------------------------------------------------
void criterion_normalization(Failures& f) {
  using A = ModalAxiom;
  const std::vector<std::pair<std::string, AxiomSet>> table = {
      {"K", {A::K}},
      {"KB", {A::K, A::B}},
      {"K4", {A::K, A::Four}},
      {"K5", {A::K, A::Five}},
      {"K45", {A::K, A::Four, A::Five}},
      {"KB5", {A::K, A::B, A::Five}},
      {"D", {A::K, A::D}},
      {"DB", {A::K, A::D, A::B}},
      {"D4", {A::K, A::D, A::Four}},
      {"D5", {A::K, A::D, A::Five}},
      {"D45", {A::K, A::D, A::Four, A::Five}},
      {"M", {A::K, A::M}},
      {"B", {A::K, A::B}},
      {"S4", {A::K, A::M, A::Four}},
      {"S5", {A::K, A::M, A::B, A::Five}},
  };
  expect(f, modal_systems().size() == 15, "expected 15 named systems");
  for (const auto& [name, axioms] : table) {
    auto got = system_axioms("$modal_system_" + name);
    if (!got)
      f.push_back("system " + name + " not recognized");
    else if (*got != axioms)
      f.push_back("system " + name + " has the wrong axiom set");
  }

  Analyzed multi = analyze(f, read_fixture("multimodal_spec.p"), "multimodal");
  if (multi.ok) {
    expect(f, multi.logic.family == ModalFamily::Modal, "multimodal: family");
    expect(f, multi.logic.domains == DomainsPolicy::Cumulative,
           "multimodal: domains");
    expect(f, multi.logic.designation == DesignationPolicy::Flexible,
           "multimodal: designation");
    expect(f, multi.logic.terms == TermsPolicy::Local, "multimodal: terms");
    expect(f, multi.logic.default_modality == AxiomSet{A::K},
           "multimodal: default modality");
    expect(f,
           multi.logic.indexed_modalities.at("1") ==
               AxiomSet{A::K, A::M, A::B, A::Five},
           "multimodal: index 1");
    expect(f,
           multi.logic.indexed_modalities.at("2") == AxiomSet{A::K, A::D, A::C4},
           "multimodal: index 2");
  }

  // Every semantic property is mandatory.
  const std::vector<std::pair<std::string, std::string>> entries = {
      {"$domains", "$constant"},
      {"$designation", "$rigid"},
      {"$terms", "$global"},
      {"$modalities", "$modal_system_K"},
  };
  for (const auto& [key, _] : entries) {
    std::string list;
    for (const auto& [k, v] : entries) {
      if (k == key) continue;
      if (!list.empty()) list += ", ";
      list += k + " == " + v;
    }
    std::string text = "tff(semantics, logic, $modal == [ " + list + " ]).";
    Problem p = parse_ok(f, text, "spec without " + key);
    const LogicSpecification* spec = nullptr;
    for (const auto& st : p.statements)
      if (const auto* ls = std::get_if<LogicSpecification>(&st.body)) spec = ls;
    if (!spec) {
      f.push_back("spec without " + key + ": no specification parsed");
      continue;
    }
    try {
      normalize_spec(*spec);
      f.push_back("spec without " + key + " was accepted");
    } catch (const SpecError&) {
    }
  }
}

// --------------------------------------------------------------------------
// 4. Frame correspondence: over every frame with up to three worlds, an
//    axiom's scheme instance is valid exactly when the matching relation
//    condition holds.
// --------------------------------------------------------------------------
void criterion_frame_correspondence(Failures& f) {
  const std::vector<std::pair<ModalAxiom, FrameCondition>> pairs = {
      {ModalAxiom::M, FrameCondition::Reflexive},
      {ModalAxiom::B, FrameCondition::Symmetric},
      {ModalAxiom::D, FrameCondition::Serial},
      {ModalAxiom::Four, FrameCondition::Transitive},
      {ModalAxiom::Five, FrameCondition::Euclidean},
      {ModalAxiom::CD, FrameCondition::AtMostOneSuccessor},
      {ModalAxiom::BoxM, FrameCondition::ShiftReflexive},
      {ModalAxiom::C4, FrameCondition::Dense},
      {ModalAxiom::C, FrameCondition::Confluent},
  };
  for (const auto& [axiom, condition] : pairs) {
    auto mapped = frame_condition_of(axiom);
    if (!mapped || *mapped != condition) {
      f.push_back("axiom " + axiom_name(axiom) + " maps to the wrong condition");
      return;
    }
  }

  NormalizedModalLogic logic;
  logic.family = ModalFamily::Modal;
  logic.default_modality = AxiomSet{ModalAxiom::K};

  long long frames = 0, mismatches = 0;
  for (int n = 1; n <= 3; ++n) {
    std::size_t nw = static_cast<std::size_t>(n);
    int bits = n * n;
    for (long long mask = 0; mask < (1LL << bits); ++mask) {
      std::vector<std::vector<bool>> acc(nw, std::vector<bool>(nw, false));
      for (int b = 0; b < bits; ++b)
        if (mask & (1LL << b)) acc[static_cast<std::size_t>(b / n)]
                                  [static_cast<std::size_t>(b % n)] = true;
      ++frames;

      FiniteKripkeModel m;
      for (int w = 0; w < n; ++w) m.world_names.push_back("w" + std::to_string(w));
      m.accessibility[""] = acc;
      PredicateInterp p;
      p.positives.resize(nw);
      m.predicates["p"] = p;

      for (const auto& [axiom, condition] : pairs) {
        FormulaPtr scheme =
            axiom_scheme_instance(axiom, ModalFamily::Modal, std::nullopt, "p");
        bool valid = true;
        // All valuations of the proposition, all evaluation worlds.
        for (long long val = 0; val < (1LL << n) && valid; ++val) {
          for (WorldId w = 0; w < nw; ++w)
            if (val & (1LL << w))
              m.predicates["p"].positives[w] = {{}};
            else
              m.predicates["p"].positives[w].clear();
          for (WorldId w = 0; w < nw && valid; ++w) {
            Assignment a;
            valid = eval_formula(m, w, scheme, &logic, a);
          }
        }
        if (valid != frame_condition_holds(condition, acc)) {
          ++mismatches;
          if (mismatches == 1)
            f.push_back("axiom " + axiom_name(axiom) +
                        " disagrees with its condition on a " +
                        std::to_string(n) + "-world frame");
        }
      }
    }
  }
  expect(f, frames == 2 + 16 + 512, "expected to enumerate 530 frames");
  expect(f, mismatches == 0,
         std::to_string(mismatches) + " axiom/condition disagreements");
}

// --------------------------------------------------------------------------
// 5. Embedding fidelity: on randomly generated problems and models, the
//    classical reading of every statement agrees with direct evaluation,
//    and the embedding's own axioms hold in the induced structure.
// --------------------------------------------------------------------------
void criterion_embedding_fidelity(Failures& f) {
  long long statements = 0, machinery = 0, mismatches = 0;
  for (unsigned seed = 0; seed < 500; ++seed) {
    Rng rng(seed);
    SemanticCase sc = random_semantic_case(rng);
    EmbeddingOutput emb = embed(sc.tp, sc.logic);
    FiniteKripkeModel ind = induced_structure(sc.model, emb);

    for (const auto& st : emb.problem.statements) {
      if (!st.is_formula()) continue;
      bool classical = eval_classical(ind, st.formula());
      const AnnotatedFormula* src = sc.tp.problem.find(st.name);
      if (!src || !src->is_formula()) {
        // Frame, nonemptiness, monotonicity, and locality axioms must hold
        // in the structure induced by a well-formed model.
        ++machinery;
        if (!classical) {
          ++mismatches;
          if (mismatches == 1)
            f.push_back("seed " + std::to_string(seed) + ": machinery axiom '" +
                        st.name + "' fails classically");
        }
        continue;
      }
      bool modal;
      if (src->role.base == "conjecture" || !role_is_global(src->role)) {
        Assignment a;
        modal = eval_formula(sc.model, sc.model.local_world, src->formula(),
                             &sc.logic, a);
      } else {
        modal = true;
        for (WorldId w = 0; w < sc.model.world_count() && modal; ++w) {
          Assignment a;
          modal = eval_formula(sc.model, w, src->formula(), &sc.logic, a);
        }
      }
      ++statements;
      if (modal != classical) {
        ++mismatches;
        if (mismatches == 1)
          f.push_back("seed " + std::to_string(seed) + ": statement '" +
                      st.name + "' evaluates modally " +
                      (modal ? "true" : "false") + " but classically " +
                      (classical ? "true" : "false"));
      }
    }
  }
  expect(f, statements >= 1000,
         "expected at least 1000 translated statements, saw " +
             std::to_string(statements));
  expect(f, machinery >= 300,
         "expected at least 300 machinery axioms, saw " +
             std::to_string(machinery));
  expect(f, mismatches == 0,
         std::to_string(mismatches) + " evaluation disagreements");
}

// --------------------------------------------------------------------------
// 6. Countermodel search: weakening the flagship problem's logic or domain
//    policy admits finite countermodels; the original stays unrefuted.
// --------------------------------------------------------------------------
void criterion_search(Failures& f) {
  std::string original = read_fixture("leo_workers.p");
  SearchBounds bounds;
  bounds.sort_caps["product"] = 1;

  {
    std::string weakened =
        replace_all(original, "$modal_system_M", "$modal_system_K");
    Analyzed in = analyze(f, weakened, "system-K variant");
    if (!in.ok) return;
    SearchOutcome out = find_countermodel(in.tp, in.logic, bounds);
    expect(f, out.status == SearchStatus::Found,
           "system-K variant: no countermodel found");
    if (out.status == SearchStatus::Found) {
      expect(f,
             out.report->classification == ModelClassification::CounterSatisfiable,
             "system-K variant: report is not CounterSatisfiable");
      ModelCheckReport again = check_model(*out.model, in.tp, in.logic);
      expect(f,
             again.classification == ModelClassification::CounterSatisfiable,
             "system-K variant: independent re-check disagrees");
      expect(f, out.model->world_names.size() <= 3,
             "system-K variant: model exceeds world bound");
      expect(f, out.model->domains.at("product").size() <= 1,
             "system-K variant: model exceeds product cap");
    }
  }

  {
    std::string weakened = replace_all(original, "$constant", "$varying");
    Analyzed in = analyze(f, weakened, "varying-domain variant");
    if (!in.ok) return;
    SearchOutcome out = find_countermodel(in.tp, in.logic, bounds);
    expect(f, out.status == SearchStatus::Found,
           "varying-domain variant: no countermodel found");
    if (out.status == SearchStatus::Found) {
      ModelCheckReport again = check_model(*out.model, in.tp, in.logic);
      expect(f,
             again.classification == ModelClassification::CounterSatisfiable,
             "varying-domain variant: independent re-check disagrees");
    }
  }

  {
    Analyzed in = analyze(f, original, "original problem");
    if (!in.ok) return;
    SearchOutcome out = find_countermodel(in.tp, in.logic, bounds);
    expect(f, out.status == SearchStatus::NotFound,
           "original problem: expected no countermodel within bounds");
  }
}

// --------------------------------------------------------------------------
// 7. Embedding output shape: machinery statements carry the advertised
//    names, formulas, and ledger classes.
// --------------------------------------------------------------------------
void criterion_embedding_shape(Failures& f) {
  Analyzed in = analyze(f, read_fixture("leo_workers.p"), "leo");
  if (!in.ok) return;
  EmbeddingOutput emb = embed(in.tp, in.logic);

  expect(f, emb.context.world_sort == "world", "world sort name");
  expect(f, emb.context.acc_symbols.at("") == "acc", "relation name");
  expect(f, emb.context.local_world_symbol == "local_world",
         "evaluation world name");

  const AnnotatedFormula* refl = emb.problem.find("acc_reflexive");
  if (!refl) {
    f.push_back("no reflexivity axiom in the output");
  } else {
    auto r = parse_problem("tff(x,plain, ! [W: world] : acc(W,W) ).");
    expect(f, equal(refl->formula(), r.problem.statements.at(0).formula()),
           "reflexivity axiom has the wrong formula");
  }

  const AnnotatedFormula* work = emb.problem.find("work_hard_to_get_rich");
  bool dia_shape = false;
  if (work)
    dia_shape = formula_contains(work->formula(), [](const Formula& node) {
      const auto* q = std::get_if<QuantF>(&node.node);
      if (!q || q->quantifier != Quantifier::Exists) return false;
      const auto* b = std::get_if<BinaryF>(&q->body->node);
      if (!b || b->op != BinaryOp::And) return false;
      const auto* a = std::get_if<AtomF>(&b->lhs->node);
      return a && a->predicate == "acc";
    });
  expect(f, dia_shape, "no witnessed-successor reading of the dia axiom");

  const AnnotatedFormula* conj = emb.problem.find("someone_gets_rich_but_not_advisor");
  bool at_local = false;
  if (conj)
    at_local = formula_contains(conj->formula(), [](const Formula& node) {
      const auto* a = std::get_if<AtomF>(&node.node);
      if (!a || a->predicate != "acc" || a->args.empty()) return false;
      const auto* app = std::get_if<FunctionApp>(&a->args[0]->node);
      return app && app->symbol == "local_world";
    });
  expect(f, at_local, "conjecture is not read at the evaluation world");
  expect(f, conj && conj->role.base == "conjecture",
         "conjecture lost its role");

  NormalizedModalLogic cumulative = in.logic;
  cumulative.domains = DomainsPolicy::Cumulative;
  EmbeddingOutput emb2 = embed(in.tp, cumulative);
  int nonempty = 0, growth = 0;
  for (const auto& e : emb2.ledger) {
    if (e.cls == LedgerEntry::Class::Nonemptiness) ++nonempty;
    if (e.cls == LedgerEntry::Class::DomainMonotonicity) ++growth;
  }
  expect(f, nonempty == 2, "expected one nonemptiness axiom per sort");
  expect(f, growth == 2, "expected one growth axiom per sort and relation");
  expect(f, emb2.problem.find("eiw_person_cumulative_acc") != nullptr,
         "growth axiom name");

  // The output stands on its own as a classical problem.
  TypedProblem re = resolve_defaults(emb.problem);
  expect(f, !has_errors(re.diagnostics) && check_types(re).empty(),
         "embedded output does not type-check");
  expect(f, census(emb.problem).nc_plain == 0 &&
             census(emb.problem).nc_indexed == 0,
         "embedded output still contains modal connectives");
}

// --------------------------------------------------------------------------
// 8. Derivation verification: a real refutation passes; removing the empty
//    clause or introducing a cycle is caught.
// --------------------------------------------------------------------------
void criterion_derivation(Failures& f) {
  Problem proof = parse_ok(f, read_fixture("cantor_proof.s"), "refutation");
  Problem original = parse_ok(f, read_fixture("cantor.p"), "problem");

  DerivationDag dag = build_dag(proof);
  StructureReport ok = verify_structure(dag, &original);
  expect(f, ok.ok, "the full refutation should verify");
  expect(f, ok.origins_ok, "origins should match up to renaming");

  Problem pruned = proof;
  pruned.statements.erase(
      std::remove_if(pruned.statements.begin(), pruned.statements.end(),
                     [](const AnnotatedFormula& st) { return st.name == "381"; }),
      pruned.statements.end());
  StructureReport no_false = verify_structure(build_dag(pruned), &original);
  expect(f, !no_false.refutation_found && !no_false.ok,
         "dropping the empty clause should fail verification");

  Problem cyclic = parse_ok(
      f,
      "tff(a, plain, p, inference(r1,[status(thm)],[b])).\n"
      "tff(b, plain, q, inference(r2,[status(thm)],[a])).\n"
      "tff(f, plain, $false, inference(done,[status(thm)],[a,b])).\n",
      "cyclic trace");
  StructureReport cycle = verify_structure(build_dag(cyclic), nullptr);
  expect(f, !cycle.acyclic && !cycle.ok,
         "circular justification should fail verification");

  // A trace written at the embedded level: structurally fine on its own,
  // but its leaves cannot be traced back to the surface problem.
  Problem leo_proof = parse_ok(f, read_fixture("leo_workers_proof.s"), "trace");
  Problem leo = parse_ok(f, read_fixture("leo_workers.p"), "flagship");
  DerivationDag leo_dag = build_dag(leo_proof);
  expect(f, verify_structure(leo_dag, nullptr).ok,
         "embedded-level trace should verify without an original");
  expect(f, !verify_structure(leo_dag, &leo).origins_ok,
         "embedded-level trace should not match surface origins");
}

// --------------------------------------------------------------------------
// 9. Duality: dia is not-box-not and exists is not-forall-not, at every
//    world of randomly generated models.
// --------------------------------------------------------------------------
void criterion_duality(Failures& f) {
  long long samples = 0, mismatches = 0;
  for (unsigned seed = 1000; seed < 1250; ++seed) {
    Rng rng(seed);
    SemanticCase sc = random_semantic_case(rng);
    const FamilyInfo& family = family_info(sc.logic.family);

    for (int k = 0; k < 2; ++k) {
      FormulaPtr phi = random_case_formula(sc, rng, 3);
      const std::optional<std::string>& idx =
          sc.indices[static_cast<std::size_t>(
              rng.below(static_cast<int>(sc.indices.size())))];

      NCConnective dia;
      dia.name = family.dia_name;
      dia.index = idx;
      NCConnective box;
      box.name = family.box_name;
      box.index = idx;
      FormulaPtr lhs = make_nc_app(dia, {phi});
      FormulaPtr rhs = make_not(make_nc_app(box, {make_not(phi)}));

      const std::string& sort = sc.sorts[static_cast<std::size_t>(
          rng.below(static_cast<int>(sc.sorts.size())))];
      FormulaPtr psi = random_case_formula(sc, rng, 2);
      FormulaPtr ex = make_quant(Quantifier::Exists, {{"XQ", make_sort(sort)}},
                                 psi);
      FormulaPtr not_all = make_not(make_quant(
          Quantifier::Forall, {{"XQ", make_sort(sort)}}, make_not(psi)));

      for (WorldId w = 0; w < sc.model.world_count(); ++w) {
        Assignment a1, a2, a3, a4;
        bool dv = eval_formula(sc.model, w, lhs, &sc.logic, a1);
        bool bv = eval_formula(sc.model, w, rhs, &sc.logic, a2);
        bool ev = eval_formula(sc.model, w, ex, &sc.logic, a3);
        bool av = eval_formula(sc.model, w, not_all, &sc.logic, a4);
        samples += 2;
        if (dv != bv) {
          ++mismatches;
          if (mismatches == 1)
            f.push_back("seed " + std::to_string(seed) +
                        ": dia/box duality broken at world " +
                        std::to_string(w));
        }
        if (ev != av) {
          ++mismatches;
          if (mismatches == 1)
            f.push_back("seed " + std::to_string(seed) +
                        ": exists/forall duality broken at world " +
                        std::to_string(w));
        }
      }
    }
  }
  expect(f, samples >= 1000,
         "expected at least 1000 samples, saw " + std::to_string(samples));
  expect(f, mismatches == 0,
         std::to_string(mismatches) + " duality violations");
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* label;
    std::function<void(Failures&)> body;
  };
  const std::vector<Entry> criteria = {
      {1, "fixtures parse and the census counts match", criterion_parse_census},
      {2, "printing round-trips fixtures and 200 generated problems",
       criterion_roundtrip},
      {3, "named systems and logic specifications normalize exactly",
       criterion_normalization},
      {4, "axiom schemes match their frame conditions on all small frames",
       criterion_frame_correspondence},
      {5, "embedding preserves truth on 500 generated models",
       criterion_embedding_fidelity},
      {6, "countermodel search separates the flagship problem's variants",
       criterion_search},
      {7, "embedding output carries the advertised shape and ledger",
       criterion_embedding_shape},
      {8, "derivation verification accepts a refutation and rejects damage",
       criterion_derivation},
      {9, "dia/box and exists/forall duality hold on generated models",
       criterion_duality},
  };

  int failed = 0;
  for (const auto& entry : criteria) {
    auto start = std::chrono::steady_clock::now();
    Failures failures;
    try {
      entry.body(failures);
    } catch (const std::exception& e) {
      failures.push_back(std::string("exception: ") + e.what());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << (failures.empty() ? "[PASS]" : "[FAIL]") << " criterion "
              << entry.id << ": " << entry.label << " (" << ms << " ms)\n";
    for (std::size_t i = 0; i < failures.size() && i < 5; ++i)
      std::cout << "    - " << failures[i] << "\n";
    if (failures.size() > 5)
      std::cout << "    - ... and " << failures.size() - 5 << " more\n";
    if (!failures.empty()) ++failed;
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/"
            << criteria.size() << " criteria passed\n";
  return failed;
}
