#include "ncl/logicspec/logic_spec.hpp"

#include "ncl/error.hpp"
#include "ncl/syntax/printer.hpp"

namespace ncl::logic {

using namespace ncl::syntax;

std::string Property::key_text() const { return print_formula(*key); }

const Property* LogicSpec::find(std::string_view key) const {
  for (const auto& p : properties)
    if (p.key_text() == key) return &p;
  return nullptr;
}

std::optional<std::string> token_text(const FormulaPtr& value) {
  if (value->kind == FormulaKind::Apply && value->args.empty()) return value->name;
  return std::nullopt;
}

LogicSpec read_logic_spec(const AnnotatedFormula& af) {
  const LogicSpecBody* body = af.logic_spec();
  if (!body) throw Error(ErrorCode::InternalError, "'" + af.name + "' is not a logic formula");
  LogicSpec spec;
  spec.source_name = af.name;
  spec.logic_name = body->definition->args[0]->name;
  const FormulaPtr& rhs = body->definition->args[1];
  if (rhs->kind != FormulaKind::List)
    throw Error(ErrorCode::ParseError, "properties of logic '" + spec.logic_name +
                                           "' must be a list of 'key == value' entries");
  for (const auto& entry : rhs->args) {
    if (entry->kind != FormulaKind::Assign)
      throw Error(ErrorCode::UnknownParameter,
                  "logic property '" + print_formula(*entry) + "' is not of the form key == value");
    spec.properties.push_back({entry->args[0], entry->args[1]});
  }
  return spec;
}

std::pair<std::optional<LogicSpec>, Problem> extract_logic_spec(const Problem& problem) {
  std::optional<LogicSpec> spec;
  std::size_t spec_index = 0;
  Problem rest;
  rest.includes = problem.includes;
  for (std::size_t i = 0; i < problem.formulas.size(); ++i) {
    const auto& af = problem.formulas[i];
    if (af.role != Role::Logic) {
      rest.formulas.push_back(af);
      continue;
    }
    if (spec)
      throw Error(ErrorCode::AmbiguousLogicSpec, "two logic specifications: '" +
                                                     spec->source_name + "' and '" + af.name + "'");
    spec = read_logic_spec(af);
    spec_index = i;
  }
  if (spec) {
    for (auto& inc : rest.includes)
      if (inc.position > spec_index) --inc.position;
  }
  return {std::move(spec), std::move(rest)};
}

AnnotatedFormula to_annotated(const LogicSpec& spec, const std::string& name) {
  std::vector<FormulaPtr> entries;
  for (const auto& p : spec.properties) entries.push_back(assign(p.key, p.value));
  AnnotatedFormula af;
  af.name = name;
  af.role = Role::Logic;
  af.content = LogicSpecBody{assign(apply(spec.logic_name), list(std::move(entries)))};
  return af;
}

}  // namespace ncl::logic
