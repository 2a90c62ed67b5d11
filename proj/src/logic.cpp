#include "nxkit/logic.hpp"

#include <algorithm>

#include "nxkit/printer.hpp"

namespace nxkit {

const std::vector<FamilyInfo>& modal_families() {
  static const std::vector<FamilyInfo> families = {
      {ModalFamily::Modal, "$modal", "$box", "$dia"},
      {ModalFamily::Alethic, "$alethic_modal", "$necessary", "$possible"},
      {ModalFamily::Deontic, "$deontic_modal", "$obligatory", "$permissible"},
      {ModalFamily::Epistemic, "$epistemic_modal", "$knows", "$canKnow"},
      {ModalFamily::Doxastic, "$doxastic_modal", "$believes", "$canBelieve"},
  };
  return families;
}

std::optional<ModalFamily> family_by_logic_name(const std::string& name) {
  for (const auto& f : modal_families())
    if (f.logic_name == name) return f.family;
  return std::nullopt;
}

const FamilyInfo& family_info(ModalFamily family) {
  for (const auto& f : modal_families())
    if (f.family == family) return f;
  throw SpecError("unknown modal family");
}

std::string axiom_name(ModalAxiom axiom) {
  switch (axiom) {
    case ModalAxiom::K: return "K";
    case ModalAxiom::M: return "M";
    case ModalAxiom::B: return "B";
    case ModalAxiom::D: return "D";
    case ModalAxiom::Four: return "4";
    case ModalAxiom::Five: return "5";
    case ModalAxiom::CD: return "CD";
    case ModalAxiom::BoxM: return "BoxM";
    case ModalAxiom::C4: return "C4";
    case ModalAxiom::C: return "C";
  }
  return "?";
}

std::string axiom_tptp_name(ModalAxiom axiom) {
  return "$modal_axiom_" + axiom_name(axiom);
}

std::optional<ModalAxiom> axiom_by_tptp_name(const std::string& name) {
  static const std::vector<ModalAxiom> all = {
      ModalAxiom::K,  ModalAxiom::M,    ModalAxiom::B,  ModalAxiom::D,
      ModalAxiom::Four, ModalAxiom::Five, ModalAxiom::CD, ModalAxiom::BoxM,
      ModalAxiom::C4, ModalAxiom::C};
  for (ModalAxiom a : all)
    if (axiom_tptp_name(a) == name) return a;
  return std::nullopt;
}

const std::vector<ModalSystem>& modal_systems() {
  using A = ModalAxiom;
  static const std::vector<ModalSystem> systems = {
      {"K", "$modal_system_K", {A::K}},
      {"KB", "$modal_system_KB", {A::K, A::B}},
      {"K4", "$modal_system_K4", {A::K, A::Four}},
      {"K5", "$modal_system_K5", {A::K, A::Five}},
      {"K45", "$modal_system_K45", {A::K, A::Four, A::Five}},
      {"KB5", "$modal_system_KB5", {A::K, A::B, A::Five}},
      {"D", "$modal_system_D", {A::K, A::D}},
      {"DB", "$modal_system_DB", {A::K, A::D, A::B}},
      {"D4", "$modal_system_D4", {A::K, A::D, A::Four}},
      {"D5", "$modal_system_D5", {A::K, A::D, A::Five}},
      {"D45", "$modal_system_D45", {A::K, A::D, A::Four, A::Five}},
      {"M", "$modal_system_M", {A::K, A::M}},
      {"B", "$modal_system_B", {A::K, A::B}},
      {"S4", "$modal_system_S4", {A::K, A::M, A::Four}},
      {"S5", "$modal_system_S5", {A::K, A::M, A::B, A::Five}},
  };
  return systems;
}

std::optional<AxiomSet> system_axioms(const std::string& tptp_name) {
  for (const auto& s : modal_systems())
    if (s.tptp_name == tptp_name) return s.axioms;
  return std::nullopt;
}

std::string frame_condition_name(FrameCondition c) {
  switch (c) {
    case FrameCondition::Reflexive: return "reflexive";
    case FrameCondition::Symmetric: return "symmetric";
    case FrameCondition::Serial: return "serial";
    case FrameCondition::Transitive: return "transitive";
    case FrameCondition::Euclidean: return "euclidean";
    case FrameCondition::AtMostOneSuccessor: return "at-most-one-successor";
    case FrameCondition::ShiftReflexive: return "shift-reflexive";
    case FrameCondition::Dense: return "dense";
    case FrameCondition::Confluent: return "confluent";
  }
  return "?";
}

std::optional<FrameCondition> frame_condition_of(ModalAxiom axiom) {
  switch (axiom) {
    case ModalAxiom::K: return std::nullopt;
    case ModalAxiom::M: return FrameCondition::Reflexive;
    case ModalAxiom::B: return FrameCondition::Symmetric;
    case ModalAxiom::D: return FrameCondition::Serial;
    case ModalAxiom::Four: return FrameCondition::Transitive;
    case ModalAxiom::Five: return FrameCondition::Euclidean;
    case ModalAxiom::CD: return FrameCondition::AtMostOneSuccessor;
    case ModalAxiom::BoxM: return FrameCondition::ShiftReflexive;
    case ModalAxiom::C4: return FrameCondition::Dense;
    case ModalAxiom::C: return FrameCondition::Confluent;
  }
  return std::nullopt;
}

std::vector<FrameCondition> frame_conditions(const AxiomSet& axioms) {
  std::vector<FrameCondition> out;
  for (ModalAxiom a : axioms)
    if (auto c = frame_condition_of(a)) out.push_back(*c);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

FormulaPtr boxf(ModalFamily family, const std::optional<std::string>& index,
                FormulaPtr arg) {
  NCConnective conn;
  conn.name = family_info(family).box_name;
  conn.index = index;
  return make_nc_app(std::move(conn), {std::move(arg)});
}

FormulaPtr diaf(ModalFamily family, const std::optional<std::string>& index,
                FormulaPtr arg) {
  NCConnective conn;
  conn.name = family_info(family).dia_name;
  conn.index = index;
  return make_nc_app(std::move(conn), {std::move(arg)});
}

}  // namespace

FormulaPtr axiom_scheme_instance(ModalAxiom axiom, ModalFamily family,
                                 const std::optional<std::string>& index,
                                 const std::string& atom_name) {
  auto p = [&] { return make_atom(atom_name); };
  auto q = [&] { return make_atom(atom_name + "_q"); };
  auto box = [&](FormulaPtr f) { return boxf(family, index, std::move(f)); };
  auto dia = [&](FormulaPtr f) { return diaf(family, index, std::move(f)); };
  auto imp = [](FormulaPtr a, FormulaPtr b) {
    return make_binary(BinaryOp::Implies, std::move(a), std::move(b));
  };
  switch (axiom) {
    case ModalAxiom::K:
      // box(p => q) => (box p => box q)
      return imp(box(imp(p(), q())), imp(box(p()), box(q())));
    case ModalAxiom::M:
      return imp(box(p()), p());
    case ModalAxiom::B:
      return imp(p(), box(dia(p())));
    case ModalAxiom::D:
      return imp(box(p()), dia(p()));
    case ModalAxiom::Four:
      return imp(box(p()), box(box(p())));
    case ModalAxiom::Five:
      return imp(dia(p()), box(dia(p())));
    case ModalAxiom::CD:
      return imp(dia(p()), box(p()));
    case ModalAxiom::BoxM:
      return box(imp(box(p()), p()));
    case ModalAxiom::C4:
      return imp(box(box(p())), box(p()));
    case ModalAxiom::C:
      return imp(dia(box(p())), box(dia(p())));
  }
  throw SpecError("unknown axiom scheme");
}

std::string to_string(DomainsPolicy p) {
  switch (p) {
    case DomainsPolicy::Constant: return "$constant";
    case DomainsPolicy::Cumulative: return "$cumulative";
    case DomainsPolicy::Decreasing: return "$decreasing";
    case DomainsPolicy::Varying: return "$varying";
  }
  return "?";
}

std::string to_string(DesignationPolicy p) {
  return p == DesignationPolicy::Rigid ? "$rigid" : "$flexible";
}

std::string to_string(TermsPolicy p) {
  return p == TermsPolicy::Global ? "$global" : "$local";
}

const AxiomSet& NormalizedModalLogic::modality_for(
    const std::optional<std::string>& index) const {
  if (index) {
    auto it = indexed_modalities.find(*index);
    if (it != indexed_modalities.end()) return it->second;
  }
  if (default_modality) return *default_modality;
  throw SpecError(index ? "no modality specified for index #" + *index
                        : "no default modality specified");
}

namespace {

std::string term_word(const LogicEntry& entry) {
  const auto* t = std::get_if<TermPtr>(&entry.value);
  if (!t || !*t) return "";
  const auto* app = std::get_if<FunctionApp>(&(**t).node);
  if (!app || !app->args.empty()) return "";
  return app->symbol;
}

// Reads one modality value: a system name or a list of axiom names.
AxiomSet read_axiom_set(const LogicEntry& value_holder) {
  if (const auto* t = std::get_if<TermPtr>(&value_holder.value)) {
    (void)t;
    std::string word = term_word(value_holder);
    if (auto set = system_axioms(word)) return *set;
    throw SpecError("unknown modal system '" + word + "'");
  }
  const auto& list = std::get<std::vector<LogicEntry>>(value_holder.value);
  AxiomSet set;
  for (const auto& item : list) {
    if (item.key_kind != LogicEntry::KeyKind::None)
      throw SpecError("unexpected key inside an axiom list");
    std::string word = term_word(item);
    auto axiom = axiom_by_tptp_name(word);
    if (!axiom) throw SpecError("unknown modal axiom '" + word + "'");
    set.insert(*axiom);
  }
  // A normal modal logic always includes the distribution scheme.
  set.insert(ModalAxiom::K);
  return set;
}

}  // namespace

NormalizedModalLogic normalize_spec(const LogicSpecification& spec) {
  NormalizedModalLogic logic;
  auto family = family_by_logic_name(spec.name);
  if (!family) throw SpecError("unsupported logic '" + spec.name + "'");
  logic.family = *family;
  const FamilyInfo& info = family_info(*family);

  bool saw_domains = false, saw_designation = false, saw_terms = false,
       saw_modalities = false;

  for (const auto& entry : spec.entries) {
    if (entry.key_kind != LogicEntry::KeyKind::Word)
      throw SpecError("logic properties must be given as key == value pairs");
    const std::string& key = entry.word_key;
    if (key == "$domains") {
      if (saw_domains) throw SpecError("duplicate $domains property");
      saw_domains = true;
      std::string v = term_word(entry);
      if (v == "$constant") logic.domains = DomainsPolicy::Constant;
      else if (v == "$cumulative") logic.domains = DomainsPolicy::Cumulative;
      else if (v == "$decreasing") logic.domains = DomainsPolicy::Decreasing;
      else if (v == "$varying") logic.domains = DomainsPolicy::Varying;
      else throw SpecError("unknown $domains value '" + v + "'");
    } else if (key == "$designation") {
      if (saw_designation) throw SpecError("duplicate $designation property");
      saw_designation = true;
      std::string v = term_word(entry);
      if (v == "$rigid") logic.designation = DesignationPolicy::Rigid;
      else if (v == "$flexible") logic.designation = DesignationPolicy::Flexible;
      else throw SpecError("unknown $designation value '" + v + "'");
    } else if (key == "$terms") {
      if (saw_terms) throw SpecError("duplicate $terms property");
      saw_terms = true;
      std::string v = term_word(entry);
      if (v == "$global") logic.terms = TermsPolicy::Global;
      else if (v == "$local") logic.terms = TermsPolicy::Local;
      else throw SpecError("unknown $terms value '" + v + "'");
    } else if (key == "$modalities") {
      if (saw_modalities) throw SpecError("duplicate $modalities property");
      saw_modalities = true;
      if (std::get_if<TermPtr>(&entry.value)) {
        logic.default_modality = read_axiom_set(entry);
        continue;
      }
      const auto& list = std::get<std::vector<LogicEntry>>(entry.value);
      // Either a plain axiom list (all bare axiom names), or a mixed list of
      // a bare default followed by {connective} == value entries.
      bool all_bare_axioms = !list.empty();
      for (const auto& item : list)
        if (item.key_kind != LogicEntry::KeyKind::None ||
            !axiom_by_tptp_name(term_word(item)))
          all_bare_axioms = false;
      if (all_bare_axioms) {
        logic.default_modality = read_axiom_set(entry);
        continue;
      }
      for (const auto& item : list) {
        if (item.key_kind == LogicEntry::KeyKind::None) {
          if (logic.default_modality)
            throw SpecError("multiple default modalities");
          logic.default_modality = read_axiom_set(item);
        } else if (item.key_kind == LogicEntry::KeyKind::Connective) {
          const NCConnective& conn = *item.conn_key;
          if (conn.name != info.box_name && conn.name != info.dia_name)
            throw SpecError("modality key '" + conn.name +
                            "' does not belong to logic '" + spec.name + "'");
          AxiomSet set = read_axiom_set(item);
          if (conn.index) {
            auto [it, inserted] = logic.indexed_modalities.emplace(*conn.index, set);
            if (!inserted && it->second != set)
              throw SpecError("conflicting modalities for index #" + *conn.index);
          } else {
            if (logic.default_modality && *logic.default_modality != set)
              throw SpecError("multiple default modalities");
            logic.default_modality = set;
          }
        } else {
          throw SpecError("unexpected entry in $modalities list");
        }
      }
    } else {
      throw SpecError("unknown logic property '" + key + "'");
    }
  }

  if (!saw_domains) throw SpecError("missing $domains property");
  if (!saw_designation) throw SpecError("missing $designation property");
  if (!saw_terms) throw SpecError("missing $terms property");
  if (!saw_modalities) throw SpecError("missing $modalities property");
  if (!logic.default_modality && logic.indexed_modalities.empty())
    throw SpecError("empty $modalities property");
  return logic;
}

ConnectiveKind connective_kind(const NCConnective& conn,
                               const NormalizedModalLogic& logic) {
  const FamilyInfo& info = family_info(logic.family);
  if (conn.name == info.box_name) return ConnectiveKind::Box;
  if (conn.name == info.dia_name) return ConnectiveKind::Dia;
  return ConnectiveKind::Foreign;
}

}  // namespace nxkit
