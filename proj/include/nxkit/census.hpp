#pragma once

#include <map>
#include <set>
#include <string>

#include "nxkit/ast.hpp"

namespace nxkit {

// Syntactic counts over a problem. Non-classical connective occurrences are
// counted over formula trees only (keys inside logic specifications are not
// occurrences); an occurrence is indexed iff the connective carries #index.
struct SyntaxStatistics {
  int statements = 0;
  std::map<std::string, int> by_role;  // full role string, subrole included
  int type_declarations = 0;
  int user_sorts = 0;
  int logic_specifications = 0;
  int nc_plain = 0;    // occurrences without an index
  int nc_indexed = 0;  // occurrences with an index
  std::map<std::string, int> nc_by_name;
  std::set<std::string> nc_indices;
  int equalities = 0;   // = and !=
  int quantifiers = 0;  // ! and ?
};

SyntaxStatistics census(const Problem& problem);

// One "label: value" line per count, fixed order; connective occurrences are
// printed as "nonclassical: <plain> {.}; <indexed> {#}".
std::string format_census(const SyntaxStatistics& stats);

}  // namespace nxkit
