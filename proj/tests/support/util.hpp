#pragma once

#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "nxkit/ast.hpp"

namespace nxkit::testgen {

inline std::string fixture_path(const std::string& name) {
  return std::string(NXKIT_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string read_fixture(const std::string& name) {
  return read_file(fixture_path(name));
}

// Depth-first search over a formula tree; `pred` is tried on every node.
inline bool formula_contains(const FormulaPtr& f,
                             const std::function<bool(const Formula&)>& pred) {
  if (!f) return false;
  if (pred(*f)) return true;
  bool found = false;
  auto visit = [&](const FormulaPtr& sub) {
    if (!found && formula_contains(sub, pred)) found = true;
  };
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, NotF>) {
          visit(node.arg);
        } else if constexpr (std::is_same_v<T, BinaryF>) {
          visit(node.lhs);
          visit(node.rhs);
        } else if constexpr (std::is_same_v<T, QuantF>) {
          visit(node.body);
        } else if constexpr (std::is_same_v<T, NCAppF>) {
          for (const auto& a : node.args) visit(a);
        } else if constexpr (std::is_same_v<T, InWorldF>) {
          visit(node.body);
        }
      },
      f->node);
  return found;
}

}  // namespace nxkit::testgen
