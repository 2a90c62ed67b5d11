#pragma once

#include <string>

#include "nxkit/ast.hpp"

namespace nxkit {

// Canonical text form. Parsing the result of print_problem yields a
// structurally equal problem (positions aside); printing is deterministic.
std::string print_problem(const Problem& problem);
std::string print_statement(const AnnotatedFormula& st);
std::string print_formula(const FormulaPtr& f);
std::string print_term(const TermPtr& t);
std::string print_type(const TypePtr& t);
std::string print_logic_specification(const LogicSpecification& spec);
std::string print_general_term(const GeneralTermPtr& g);
std::string print_nc_connective(const NCConnective& conn);

}  // namespace nxkit
