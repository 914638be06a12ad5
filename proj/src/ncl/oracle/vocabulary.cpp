#include "ncl/oracle/vocabulary.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "ncl/error.hpp"
#include "ncl/syntax/signature.hpp"

namespace ncl::oracle {

using syntax::Formula;
using syntax::FormulaKind;

OracleLogic oracle_logic(const logic::LogicSpec& spec) {
  OracleLogic out;
  if (spec.logic_name == "$modal" || spec.logic_name == "$$hybrid") {
    out.family = spec.logic_name == "$modal" ? Family::Modal : Family::Hybrid;
    out.modal = logic::validate_modal_config(spec);
  } else if (spec.logic_name == "$$pal") {
    out.family = Family::Pal;
    logic::validate_pal_config(spec);
  } else if (spec.logic_name == "$$ddl") {
    out.family = Family::Ddl;
    out.ddl = logic::validate_ddl_config(spec);
  } else {
    throw Error(ErrorCode::UnsupportedLogic,
                "logic '" + spec.logic_name + "' is outside the oracle fragment");
  }
  return out;
}

namespace {

template <class T, class Key>
int find_id(const std::vector<T>& items, const std::string& name, Key key) {
  for (std::size_t i = 0; i < items.size(); ++i)
    if (key(items[i]) == name) return static_cast<int>(i);
  return -1;
}

void walk(const syntax::FormulaPtr& f, const std::function<void(const Formula&)>& visit) {
  if (!f) return;
  visit(*f);
  for (const auto& a : f->args) walk(a, visit);
  for (const auto& p : f->params) walk(p.value, visit);
}

void add_unique(std::vector<std::string>& out, const std::string& s) {
  if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
}

}  // namespace

int Vocabulary::sort_id(const std::string& name) const {
  return find_id(sorts, name, [](const Sort& s) { return s.name; });
}
int Vocabulary::predicate_id(const std::string& name) const {
  return find_id(predicates, name, [](const Symbol& s) { return s.name; });
}
int Vocabulary::function_id(const std::string& name) const {
  return find_id(functions, name, [](const Symbol& s) { return s.name; });
}
int Vocabulary::nominal_id(const std::string& name) const {
  return find_id(nominals, name, [](const std::string& s) { return s; });
}
int Vocabulary::relation_id(const std::string& index) const {
  return find_id(relations, index, [](const Relation& r) { return r.index; });
}

Vocabulary build_vocabulary(const syntax::Problem& problem, const OracleLogic& logic) {
  Vocabulary v;
  v.logic = logic;
  syntax::Signature sig = syntax::infer_signature(problem);

  std::vector<std::string> sort_names;
  auto note = [&](const syntax::TypePtr& t) {
    if (t->name != syntax::kBoolean) add_unique(sort_names, t->name);
  };
  for (const auto& [name, type] : sig.symbols) {
    if (name[0] == '"' || std::isdigit(static_cast<unsigned char>(name[0])))
      throw Error(ErrorCode::TypeError,
                  "the oracle does not interpret numbers or distinct objects such as " + name);
    if (!type->is_mapping()) {
      note(type);
      continue;
    }
    for (const auto& a : type->args) note(a);
    note(type->result);
  }
  for (const auto& t : sig.quantified_types) add_unique(sort_names, t);
  for (const auto& t : sig.type_names) add_unique(sort_names, t);
  std::stable_sort(sort_names.begin(), sort_names.end(), [](const auto& a, const auto& b) {
    return a == syntax::kIndividual && b != syntax::kIndividual;
  });
  for (const auto& s : sort_names) {
    Sort sort;
    sort.name = s;
    if (logic.family == Family::Modal || logic.family == Family::Hybrid)
      sort.quantification = logic.modal.quantification_for(s);
    v.sorts.push_back(sort);
  }

  for (const auto& [name, type] : sig.symbols) {
    Symbol sym;
    sym.name = name;
    syntax::TypePtr result = type;
    if (type->is_mapping()) {
      for (const auto& a : type->args) sym.args.push_back(v.sort_id(a->name));
      result = type->result;
    }
    if (result->name == syntax::kBoolean) {
      v.predicates.push_back(sym);
    } else {
      sym.result = v.sort_id(result->name);
      v.functions.push_back(sym);
    }
  }
  v.nominals = sig.nominals;

  std::vector<std::string> indices;
  for (const auto& af : problem.formulas) {
    if (!af.formula()) continue;
    walk(std::get<syntax::FormulaPtr>(af.content), [&](const Formula& f) {
      if (f.kind != FormulaKind::NonClassical) return;
      if (f.name == "$box" || f.name == "$dia") {
        auto idx = f.indices();
        add_unique(indices, idx.empty() ? "" : idx[0]);
      } else if (f.name == "$$knows") {
        for (const auto& i : f.indices()) add_unique(indices, i);
      } else if (f.name == "$$common") {
        if (auto group = f.param("$$group"))
          for (const auto& a : group->args)
            add_unique(indices, a->kind == FormulaKind::Index ? a->name : "#" + a->name);
      }
    });
  }
  if (logic.family == Family::Modal || logic.family == Family::Hybrid) {
    for (const auto& [index, schemes] : logic.modal.modalities) add_unique(indices, index);
    if (indices.empty()) indices.push_back("");
    for (const auto& i : indices) v.relations.push_back({i, logic.modal.schemes_for(i)});
  } else if (logic.family == Family::Pal) {
    for (const auto& i : indices)
      v.relations.push_back({i, {logic::Scheme::K, logic::Scheme::T, logic::Scheme::B, logic::Scheme::Four}});
  }
  return v;
}

}  // namespace ncl::oracle
