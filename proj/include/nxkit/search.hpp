#pragma once

#include "nxkit/kripke.hpp"

namespace nxkit {

// Bounds for the exhaustive model search. `max_elements` caps every sort's
// union universe; `sort_caps` overrides the cap per sort. `budget` limits the
// number of atomic evaluations across the whole search.
struct SearchBounds {
  int max_worlds = 3;
  int max_elements = 3;
  std::map<std::string, int> sort_caps;
  long long budget = 50'000'000;

  int cap_for(const std::string& sort) const {
    auto it = sort_caps.find(sort);
    return it == sort_caps.end() ? max_elements : it->second;
  }
};

enum class SearchStatus { Found, NotFound, BudgetExhausted };

struct SearchOutcome {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<FiniteKripkeModel> model;   // present iff status == Found
  std::optional<ModelCheckReport> report;   // validation of the found model
  long long evaluations = 0;                // atomic evaluations spent
};

// Enumerates finite candidate structures within the bounds — worlds with a
// fixed evaluation world, accessibility relations already satisfying the frame
// conditions of every connective index in use, domain sizes ordered by total
// size, per-world memberships respecting the domain regime — and fills
// function tables and predicate extensions by backtracking under three-valued
// evaluation. With a conjecture present it searches for a structure making
// every assumption true and the conjecture false at the evaluation world;
// without one it searches for a structure satisfying all assumptions. Every
// returned model is re-validated by the independent model checker.
SearchOutcome find_countermodel(const TypedProblem& tp,
                                const NormalizedModalLogic& logic,
                                const SearchBounds& bounds = {});

}  // namespace nxkit
