#pragma once

#include <map>
#include <string>
#include <vector>

#include "nxkit/ast.hpp"

namespace nxkit {

// One node of a derivation: a statement plus the parent links recovered from
// its source annotation. Synthetic nodes are created for inference terms
// nested inside parent lists; they carry no statement.
struct DerivationNode {
  enum class SourceKind {
    None,       // no source annotation
    File,       // file('name') or file('name', original)
    Inference,  // inference(rule, info, [parents])
    NameRef,    // a bare name: copy of another node
    Other       // theory(...), introduced(...), creator(...), ...
  };

  std::string name;
  SourceKind kind = SourceKind::None;
  std::string file_name;             // File: the quoted file argument
  std::string original_name;         // File: the original statement, if named
  std::string rule;                  // Inference: the rule name
  std::vector<std::string> parents;  // names of parent nodes
  const AnnotatedFormula* statement = nullptr;  // null for synthetic nodes
};

// Parent links resolved over a whole derivation output. `statement` pointers
// alias the problem the dag was built from, which must outlive the dag.
struct DerivationDag {
  std::vector<DerivationNode> nodes;
  std::map<std::string, std::size_t> by_name;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return !has_errors(diagnostics); }
  const DerivationNode* find(const std::string& name) const {
    auto it = by_name.find(name);
    return it == by_name.end() ? nullptr : &nodes[it->second];
  }
};

// Builds the derivation graph of a parsed derivation file. Duplicate node
// names and parent references to undefined names are reported as errors;
// formula statements without any source are noted.
DerivationDag build_dag(const Problem& problem);

struct StructureCheck {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct StructureReport {
  std::vector<StructureCheck> checks;
  bool acyclic = false;
  bool origins_ok = false;
  bool refutation_found = false;
  bool ok = false;  // all of the above
};

// Structural verification of a derivation: parent links must form a DAG;
// every file-sourced leaf naming its origin must match that statement of the
// original problem up to variable renaming (a negated conjecture may add one
// top-level negation); and a refutation must end in $false. Pass null to skip
// the origin comparison.
StructureReport verify_structure(const DerivationDag& dag, const Problem* original);

// Equality up to a bijective renaming of variables.
bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b);
bool alpha_equal_tokens(const std::vector<Token>& a, const std::vector<Token>& b);

}  // namespace nxkit
