#include "nxkit/census.hpp"

#include <sstream>

namespace nxkit {

namespace {

void walk(const FormulaPtr& f, SyntaxStatistics& stats) {
  if (!f) return;
  if (std::get_if<AtomF>(&f->node) || std::get_if<TrueF>(&f->node) ||
      std::get_if<FalseF>(&f->node))
    return;
  if (std::get_if<EqualityF>(&f->node)) {
    ++stats.equalities;
    return;
  }
  if (const auto* n = std::get_if<NotF>(&f->node)) return walk(n->arg, stats);
  if (const auto* b = std::get_if<BinaryF>(&f->node)) {
    walk(b->lhs, stats);
    walk(b->rhs, stats);
    return;
  }
  if (const auto* q = std::get_if<QuantF>(&f->node)) {
    ++stats.quantifiers;
    walk(q->body, stats);
    return;
  }
  if (const auto* nc = std::get_if<NCAppF>(&f->node)) {
    if (nc->connective.index)
      ++stats.nc_indexed;
    else
      ++stats.nc_plain;
    ++stats.nc_by_name[nc->connective.name];
    if (nc->connective.index) stats.nc_indices.insert(*nc->connective.index);
    for (const auto& arg : nc->args) walk(arg, stats);
    return;
  }
  if (const auto* w = std::get_if<InWorldF>(&f->node)) return walk(w->body, stats);
}

}  // namespace

SyntaxStatistics census(const Problem& problem) {
  SyntaxStatistics stats;
  for (const auto& st : problem.statements) {
    ++stats.statements;
    ++stats.by_role[st.role.str()];
    if (std::holds_alternative<TypeDeclaration>(st.body)) {
      ++stats.type_declarations;
      if (is_sort(std::get<TypeDeclaration>(st.body).type, "$tType"))
        ++stats.user_sorts;
    }
    if (std::holds_alternative<LogicSpecification>(st.body))
      ++stats.logic_specifications;
    if (st.is_formula()) walk(st.formula(), stats);
  }
  return stats;
}

std::string format_census(const SyntaxStatistics& stats) {
  std::ostringstream os;
  os << "statements: " << stats.statements << "\n";
  for (const auto& [role, count] : stats.by_role)
    os << "role " << role << ": " << count << "\n";
  os << "type declarations: " << stats.type_declarations << "\n";
  os << "user sorts: " << stats.user_sorts << "\n";
  os << "logic specifications: " << stats.logic_specifications << "\n";
  os << "nonclassical: " << stats.nc_plain << " {.}; " << stats.nc_indexed
     << " {#}\n";
  for (const auto& [name, count] : stats.nc_by_name)
    os << "connective " << name << ": " << count << "\n";
  os << "equalities: " << stats.equalities << "\n";
  os << "quantifiers: " << stats.quantifiers << "\n";
  return os.str();
}

}  // namespace nxkit
