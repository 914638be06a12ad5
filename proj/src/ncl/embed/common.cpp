#include "ncl/embed/common.hpp"

#include <cctype>

#include "ncl/error.hpp"
#include "ncl/syntax/printer.hpp"

namespace ncl::embed {

using namespace ncl::syntax;
using namespace ncl::hol;

HolTypePtr world() {
  static const HolTypePtr w = base(kWorld);
  return w;
}

HolTypePtr prop() {
  static const HolTypePtr p = arrow(world(), bool_type());
  return p;
}

std::string index_suffix(const std::string& index) {
  return !index.empty() && index[0] == '#' ? index.substr(1) : index;
}

namespace {
std::string indexed(const std::string& base, const std::string& index) {
  return index.empty() ? base : base + "_" + index_suffix(index);
}
}  // namespace

std::string relation_name(const std::string& index) { return indexed("mrel", index); }
std::string box_name(const std::string& index) { return indexed("mbox", index); }
std::string dia_name(const std::string& index) { return indexed("mdia", index); }

std::string type_suffix(const std::string& type) {
  std::string out;
  for (char c : type) {
    if (c == '$') continue;
    out += std::isalnum(static_cast<unsigned char>(c)) || c == '_' ? c : '_';
  }
  return out;
}

std::string eiw_name(const std::string& type) { return "meiw_" + type_suffix(type); }
std::string forall_name(const std::string& type) { return "mforall_" + type_suffix(type); }
std::string exists_name(const std::string& type) { return "mexists_" + type_suffix(type); }
std::string knows_name(const std::string& agent) { return "mknows_" + index_suffix(agent); }

HolTypePtr hol_type(const TypePtr& type) {
  if (!type->is_mapping()) {
    bool user = type->name != kIndividual && type->name != kBoolean;
    return type->name == kBoolean ? bool_type() : base(type->name, user);
  }
  std::vector<HolTypePtr> args;
  for (const auto& a : type->args) args.push_back(hol_type(a));
  return arrows(args, hol_type(type->result));
}

HolTypePtr lifted_type(const TypePtr& type) {
  TypePtr result = result_type(type);
  if (result->is_mapping() || result->name != kBoolean) return hol_type(type);
  std::vector<HolTypePtr> args;
  if (type->is_mapping())
    for (const auto& a : type->args) args.push_back(hol_type(a));
  return arrows(args, prop());
}

namespace {

void collect_variables(const FormulaPtr& f, std::set<std::string>& out) {
  if (!f) return;
  if (f->kind == FormulaKind::Variable) out.insert(f->name);
  for (const auto& v : f->variables) out.insert(v.name);
  for (const auto& idx : f->indices()) out.insert(idx.substr(1));
  for (const auto& p : f->params) collect_variables(p.value, out);
  for (const auto& a : f->args) collect_variables(a, out);
}

}  // namespace

std::set<std::string> variable_names(const Problem& problem) {
  std::set<std::string> out;
  for (const auto& af : problem.formulas)
    if (af.formula()) collect_variables(std::get<FormulaPtr>(af.content), out);
  return out;
}

void collect_connectives(const FormulaPtr& f, std::vector<const Formula*>& out) {
  if (!f) return;
  if (f->kind == FormulaKind::NonClassical) out.push_back(f.get());
  for (const auto& p : f->params) collect_connectives(p.value, out);
  for (const auto& a : f->args) collect_connectives(a, out);
}

void require_connectives(const Problem& problem, const std::set<std::string>& allowed,
                         const std::string& logic) {
  for (const auto& af : problem.formulas) {
    if (!af.formula()) continue;
    std::vector<const Formula*> found;
    collect_connectives(std::get<FormulaPtr>(af.content), found);
    for (const Formula* c : found)
      if (!allowed.count(c->name))
        throw Error(ErrorCode::UnsupportedConnective, "connective {" + c->name +
                                                          "} is not supported by logic " + logic +
                                                          " (in '" + af.name + "')");
  }
}

namespace {

[[noreturn]] void not_propositional(const std::string& logic, const std::string& what,
                                    const std::string& where) {
  throw Error(ErrorCode::NotPropositional,
              "logic " + logic + " is propositional: " + what + " in '" + where + "'");
}

void check_propositional(const Formula& f, const std::string& where, const std::string& logic) {
  auto fail = [&](const std::string& what) { not_propositional(logic, what, where); };
  switch (f.kind) {
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      not_propositional(logic, "quantifier", where);
    case FormulaKind::Equal:
    case FormulaKind::NotEqual:
      not_propositional(logic, "equality", where);
    case FormulaKind::Variable:
      not_propositional(logic, "variable " + f.name, where);
    case FormulaKind::Apply:
      if (!f.args.empty()) fail("non-nullary atom " + f.name);
      break;
    default:
      break;
  }
  for (const auto& p : f.params)
    if (p.key && *p.key == "$$formula") check_propositional(*p.value, where, logic);
  for (const auto& a : f.args) check_propositional(*a, where, logic);
}

}  // namespace

void require_propositional(const Problem& problem, const Signature& sig, const std::string& logic) {
  if (!sig.type_names.empty())
    throw Error(ErrorCode::NotPropositional,
                "logic " + logic + " is propositional: user type '" + sig.type_names[0] + "'");
  for (const auto& [name, type] : sig.symbols)
    if (type->is_mapping() || type->name != kBoolean)
      throw Error(ErrorCode::NotPropositional, "logic " + logic +
                                                   " is propositional: symbol '" + name +
                                                   "' has type " + to_string(*type));
  for (const auto& af : problem.formulas)
    if (auto* f = af.formula()) check_propositional(*f, af.name, logic);
}

std::vector<HolEntry> user_declarations(const Signature& sig, bool lift) {
  std::vector<HolEntry> out;
  for (const auto& t : sig.type_names) out.push_back(type_declaration(t, true));
  for (const auto& [name, type] : sig.symbols) {
    // Distinct objects are built-in individuals in THF; integers would need $int.
    if (name[0] == '"') continue;
    if (std::isdigit(static_cast<unsigned char>(name[0])))
      throw Error(ErrorCode::TypeError, "numbers are not supported: " + name);
    out.push_back(constant_declaration(name, lift ? lifted_type(type) : hol_type(type), true));
  }
  return out;
}

std::string output_role(Role role) {
  return role == Role::Definition ? "axiom" : std::string(role_name(role));
}

HolEntry user_formula(const AnnotatedFormula& af, HolTermPtr lifted, HolTermPtr wrapped) {
  HolEntry e;
  e.segment = Segment::UserFormula;
  e.name = af.name;
  e.role = output_role(af.role);
  e.formula = std::move(wrapped);
  e.lifted = std::move(lifted);
  e.source_name = af.name;
  e.user = true;
  return e;
}

HolTermPtr lifted_connective(Connective c, const HolTermPtr& l, const HolTermPtr& r) {
  auto bin = [](const char* name, const HolTermPtr& a, const HolTermPtr& b) {
    return app(cnst(name), {a, b});
  };
  auto neg = [](const HolTermPtr& a) { return app(cnst("mnot"), a); };
  switch (c) {
    case Connective::Not: return neg(l);
    case Connective::And: return bin("mand", l, r);
    case Connective::Or: return bin("mor", l, r);
    case Connective::Implies: return bin("mimpl", l, r);
    case Connective::ReverseImplies: return bin("mimpl", r, l);
    case Connective::Iff: return bin("mequiv", l, r);
    case Connective::Xor: return neg(bin("mequiv", l, r));
    case Connective::Nor: return neg(bin("mor", l, r));
    case Connective::Nand: return neg(bin("mand", l, r));
  }
  throw Error(ErrorCode::InternalError, "unknown connective");
}

}  // namespace ncl::embed
