#pragma once

#include "nxkit/kripke.hpp"
#include "nxkit/parser.hpp"

namespace nxkit {

struct InterpretationResult {
  FiniteKripkeModel model;
  std::vector<Diagnostic> diagnostics;
};

// Builds a finite Kripke model from an interpretation file: type-promotion
// declarations identify domain sorts and their elements, an
// interpretation-worlds statement (if any) gives worlds, the local world and
// accessibility facts (duplicates collapse), and domain/mapping content —
// either world-scoped through $in_world or global for single-world
// interpretations — populates per-world domains and symbol tables.
//
// `base` supplies the interpreted problem's signature; without it only the
// symbols declared in the interpretation file itself are known. Missing
// function table entries are filled with the first domain element and
// reported as warnings; contradictory literals and unknown symbols are
// errors.
InterpretationResult parse_interpretation(const Problem& interp,
                                          const Signature* base);

// Renders a model in the interpretation format, self-contained: problem
// signature declarations, domain sort/element/promotion declarations, worlds
// and accessibility, and per-world content. Parsing the output again yields
// an equivalent model. Only models with a single (un-indexed) accessibility
// relation can be printed.
std::string print_model(const FiniteKripkeModel& model, const Signature& signature);

}  // namespace nxkit
