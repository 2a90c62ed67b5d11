#pragma once

// Builds the classical single-world structure that corresponds to a modal
// model under a given embedding: worlds become elements of the world sort,
// accessibility relations and membership guards become ordinary predicates,
// flexible functions gain the world as first argument, and every predicate is
// lifted world-first. Evaluating an embedded statement in this structure must
// agree with evaluating the original statement in the modal model.

#include <string>
#include <vector>

#include "nxkit/embed.hpp"
#include "nxkit/kripke.hpp"

namespace nxkit::testgen {

inline FiniteKripkeModel induced_structure(const FiniteKripkeModel& modal,
                                           const EmbeddingOutput& emb) {
  const EmbeddingContext& ctx = emb.context;
  FiniteKripkeModel out;
  out.world_names = {"only"};
  out.local_world = 0;

  std::size_t n_worlds = modal.world_count();

  // The world sort's elements are the modal worlds, all present.
  {
    SortDomain dom;
    dom.element_names = modal.world_names;
    dom.member.assign(1, std::vector<bool>(n_worlds, true));
    out.domains[ctx.world_sort] = std::move(dom);
  }
  // User sorts keep their union universes; classically everything exists.
  for (const auto& [sort, dom] : modal.domains) {
    SortDomain flat;
    flat.element_names = dom.element_names;
    flat.member.assign(1, std::vector<bool>(dom.size(), true));
    out.domains[sort] = std::move(flat);
  }

  // The distinguished world constant.
  {
    FunctionInterp fn;
    fn.result_sort = ctx.world_sort;
    fn.tables.resize(1);
    fn.tables[0][{}] = modal.local_world;
    out.functions[ctx.local_world_symbol] = std::move(fn);
  }

  // Accessibility matrices become binary predicates over the world sort.
  for (const auto& [index, name] : ctx.acc_symbols) {
    const auto& acc = modal.accessibility.at(index);
    PredicateInterp pr;
    pr.arg_sorts = {ctx.world_sort, ctx.world_sort};
    pr.positives.resize(1);
    for (Elem a = 0; a < n_worlds; ++a)
      for (Elem b = 0; b < n_worlds; ++b)
        if (acc[a][b]) pr.positives[0].insert({a, b});
    out.predicates[name] = std::move(pr);
  }

  // Membership guards reflect the modal membership matrices.
  for (const auto& [sort, guard] : ctx.guards) {
    const SortDomain& dom = modal.domains.at(sort);
    PredicateInterp pr;
    pr.arg_sorts = {ctx.world_sort, sort};
    pr.positives.resize(1);
    for (Elem w = 0; w < n_worlds; ++w)
      for (Elem e = 0; e < dom.size(); ++e)
        if (dom.member[w][e]) pr.positives[0].insert({w, e});
    out.predicates[guard] = std::move(pr);
  }

  bool flexible = ctx.logic->designation == DesignationPolicy::Flexible;

  for (const auto& [name, fn] : modal.functions) {
    FunctionInterp lifted;
    lifted.result_sort = fn.result_sort;
    lifted.tables.resize(1);
    if (flexible) {
      lifted.arg_sorts.push_back(ctx.world_sort);
      for (const auto& s : fn.arg_sorts) lifted.arg_sorts.push_back(s);
      for (std::size_t w = 0; w < n_worlds; ++w)
        for (const auto& [args, value] : fn.tables[w]) {
          std::vector<Elem> key{static_cast<Elem>(w)};
          key.insert(key.end(), args.begin(), args.end());
          lifted.tables[0][key] = value;
        }
    } else {
      lifted.arg_sorts = fn.arg_sorts;
      lifted.tables[0] = fn.tables[0];
    }
    out.functions[name] = std::move(lifted);
  }

  for (const auto& [name, pr] : modal.predicates) {
    PredicateInterp lifted;
    lifted.arg_sorts.push_back(ctx.world_sort);
    for (const auto& s : pr.arg_sorts) lifted.arg_sorts.push_back(s);
    lifted.positives.resize(1);
    for (std::size_t w = 0; w < n_worlds; ++w)
      for (const auto& tuple : pr.positives[w]) {
        std::vector<Elem> key{static_cast<Elem>(w)};
        key.insert(key.end(), tuple.begin(), tuple.end());
        lifted.positives[0].insert(key);
      }
    out.predicates[name] = std::move(lifted);
  }

  return out;
}

// Classical evaluation of an embedded statement body in the induced structure.
inline bool eval_classical(const FiniteKripkeModel& structure,
                           const FormulaPtr& formula) {
  Assignment assignment;
  return eval_formula(structure, 0, formula, nullptr, assignment);
}

}  // namespace nxkit::testgen
