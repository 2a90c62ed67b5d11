#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nxkit/ast.hpp"

namespace nxkit {

// The recognized connective families. Each family has exactly one box-like
// and one dia-like connective name.
enum class ModalFamily { Modal, Alethic, Deontic, Epistemic, Doxastic };

struct FamilyInfo {
  ModalFamily family;
  std::string logic_name;  // "$modal", ...
  std::string box_name;    // "$box", "$necessary", ...
  std::string dia_name;    // "$dia", "$possible", ...
};

const std::vector<FamilyInfo>& modal_families();
std::optional<ModalFamily> family_by_logic_name(const std::string& name);
const FamilyInfo& family_info(ModalFamily family);

// Axiom schemes. `Four`/`Five` are the schemes usually written 4 and 5.
enum class ModalAxiom { K, M, B, D, Four, Five, CD, BoxM, C4, C };

using AxiomSet = std::set<ModalAxiom>;

std::string axiom_name(ModalAxiom axiom);                  // "K", "4", "C4", ...
std::string axiom_tptp_name(ModalAxiom axiom);             // "$modal_axiom_K", ...
std::optional<ModalAxiom> axiom_by_tptp_name(const std::string& name);

// Named systems and their axiom sets.
struct ModalSystem {
  std::string name;       // "K", "S5", ...
  std::string tptp_name;  // "$modal_system_K", ...
  AxiomSet axioms;
};

const std::vector<ModalSystem>& modal_systems();
std::optional<AxiomSet> system_axioms(const std::string& tptp_name);

// Accessibility-relation conditions induced by the axiom schemes.
enum class FrameCondition {
  Reflexive,
  Symmetric,
  Serial,
  Transitive,
  Euclidean,
  AtMostOneSuccessor,
  ShiftReflexive,
  Dense,
  Confluent
};

std::string frame_condition_name(FrameCondition c);

// The frame conditions for an axiom set. K itself contributes none.
std::vector<FrameCondition> frame_conditions(const AxiomSet& axioms);
std::optional<FrameCondition> frame_condition_of(ModalAxiom axiom);

// The scheme instance for a single axiom over a propositional atom, built
// from the family's box/dia connectives with the given index. Used both for
// documentation and as an oracle when validating frame correspondences.
FormulaPtr axiom_scheme_instance(ModalAxiom axiom, ModalFamily family,
                                 const std::optional<std::string>& index,
                                 const std::string& atom_name);

enum class DomainsPolicy { Constant, Cumulative, Decreasing, Varying };
enum class DesignationPolicy { Rigid, Flexible };
enum class TermsPolicy { Global, Local };

std::string to_string(DomainsPolicy p);
std::string to_string(DesignationPolicy p);
std::string to_string(TermsPolicy p);

// A fully resolved logic specification: family, the three semantic
// properties, and modality axiom sets (a default set and/or per-index sets).
struct NormalizedModalLogic {
  ModalFamily family = ModalFamily::Modal;
  DomainsPolicy domains = DomainsPolicy::Constant;
  DesignationPolicy designation = DesignationPolicy::Rigid;
  TermsPolicy terms = TermsPolicy::Global;
  std::optional<AxiomSet> default_modality;
  std::map<std::string, AxiomSet> indexed_modalities;

  // The axiom set governing a connective occurrence with the given index
  // (nullopt = un-indexed). Throws SpecError when unspecified.
  const AxiomSet& modality_for(const std::optional<std::string>& index) const;
};

// Resolves a parsed logic specification. All of $domains, $designation,
// $terms, and $modalities must be present (there are no property defaults);
// unknown logic names, properties, values, systems, or axioms raise
// SpecError. Every resulting axiom set contains K.
NormalizedModalLogic normalize_spec(const LogicSpecification& spec);

enum class ConnectiveKind { Box, Dia, Foreign };

// How a connective occurrence reads under a logic: the family's box/dia name
// maps to Box/Dia; anything else is Foreign.
ConnectiveKind connective_kind(const NCConnective& conn,
                               const NormalizedModalLogic& logic);

}  // namespace nxkit
