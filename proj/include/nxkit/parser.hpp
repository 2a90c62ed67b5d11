#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "nxkit/ast.hpp"

namespace nxkit {

struct ParseResult {
  Problem problem;
  std::vector<Diagnostic> diagnostics;
};

// Parses a whole problem or solution file. First-order statements (tff) are
// parsed to trees; higher-order statements (thf) keep their bodies as raw
// token sequences; fof/cnf raise "unsupported dialect". Recoverable oddities
// (duplicate statement names, a logic specification appearing after
// non-classical connectives were already used, ...) are reported as
// diagnostics rather than thrown. Throws ParseError on malformed input.
ParseResult parse_problem(std::string_view text);

// Reads `path`, parses it, and splices the statements of include directives.
// Include files are located relative to the including file's directory first,
// then through `include_dirs`.
ParseResult parse_file(const std::filesystem::path& path,
                       const std::vector<std::filesystem::path>& include_dirs = {});

}  // namespace nxkit
