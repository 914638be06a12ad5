#include "ncl/syntax/ast.hpp"

#include "ncl/error.hpp"

namespace ncl::syntax {

TypePtr base_type(std::string name) {
  auto t = std::make_shared<TptpType>();
  t->name = std::move(name);
  return t;
}

TypePtr mapping_type(std::vector<TypePtr> args, TypePtr result) {
  if (args.empty()) throw Error(ErrorCode::TypeError, "mapping type without argument types");
  if (!result->is_mapping() && result->name == kTypeOfTypes)
    throw Error(ErrorCode::TypeError, "mapping type with result $tType");
  auto t = std::make_shared<TptpType>();
  t->args = std::move(args);
  t->result = std::move(result);
  return t;
}

bool operator==(const TptpType& a, const TptpType& b) {
  if (a.is_mapping() != b.is_mapping()) return false;
  if (!a.is_mapping()) return a.name == b.name;
  if (a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!same_type(a.args[i], b.args[i])) return false;
  return same_type(a.result, b.result);
}

bool same_type(const TypePtr& a, const TypePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

std::string to_string(const TptpType& type, Language lang) {
  if (!type.is_mapping()) return type.name;
  auto unit = [&](const TypePtr& t) {
    std::string s = to_string(*t, lang);
    return t->is_mapping() ? "(" + s + ")" : s;
  };
  std::string out;
  if (lang == Language::Thf || type.args.size() == 1) {
    for (const auto& a : type.args) out += unit(a) + " > ";
  } else {
    out = "(";
    for (std::size_t i = 0; i < type.args.size(); ++i) {
      if (i) out += " * ";
      out += unit(type.args[i]);
    }
    out += ") > ";
  }
  return out + unit(type.result);
}

std::string_view connective_token(Connective c) {
  switch (c) {
    case Connective::Not: return "~";
    case Connective::And: return "&";
    case Connective::Or: return "|";
    case Connective::Implies: return "=>";
    case Connective::ReverseImplies: return "<=";
    case Connective::Iff: return "<=>";
    case Connective::Xor: return "<~>";
    case Connective::Nor: return "~|";
    case Connective::Nand: return "~&";
  }
  return "?";
}

bool Formula::is_atomic() const {
  switch (kind) {
    case FormulaKind::Variable:
    case FormulaKind::Apply:
    case FormulaKind::True:
    case FormulaKind::False:
    case FormulaKind::List:
    case FormulaKind::Index:
      return true;
    case FormulaKind::NonClassical:
      return args.empty();
    default:
      return false;
  }
}

std::vector<std::string> Formula::indices() const {
  std::vector<std::string> out;
  for (const auto& p : params)
    if (!p.key && p.value->kind == FormulaKind::Index) out.push_back(p.value->name);
  return out;
}

FormulaPtr Formula::param(std::string_view key) const {
  for (const auto& p : params)
    if (p.key && *p.key == key) return p.value;
  return nullptr;
}

namespace {

std::shared_ptr<Formula> node(FormulaKind kind) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  return f;
}

}  // namespace

FormulaPtr variable(std::string name) {
  auto f = node(FormulaKind::Variable);
  f->name = std::move(name);
  return f;
}

FormulaPtr apply(std::string name, std::vector<FormulaPtr> args) {
  auto f = node(FormulaKind::Apply);
  f->name = std::move(name);
  f->args = std::move(args);
  return f;
}

FormulaPtr equal(FormulaPtr lhs, FormulaPtr rhs) {
  auto f = node(FormulaKind::Equal);
  f->args = {std::move(lhs), std::move(rhs)};
  return f;
}

FormulaPtr not_equal(FormulaPtr lhs, FormulaPtr rhs) {
  auto f = node(FormulaKind::NotEqual);
  f->args = {std::move(lhs), std::move(rhs)};
  return f;
}

FormulaPtr negate(FormulaPtr arg) {
  auto f = node(FormulaKind::Unary);
  f->connective = Connective::Not;
  f->args = {std::move(arg)};
  return f;
}

FormulaPtr binary(Connective c, FormulaPtr lhs, FormulaPtr rhs) {
  auto f = node(FormulaKind::Binary);
  f->connective = c;
  f->args = {std::move(lhs), std::move(rhs)};
  return f;
}

FormulaPtr forall(std::vector<TypedVariable> vars, FormulaPtr body) {
  auto f = node(FormulaKind::Forall);
  f->variables = std::move(vars);
  f->args = {std::move(body)};
  return f;
}

FormulaPtr exists(std::vector<TypedVariable> vars, FormulaPtr body) {
  auto f = node(FormulaKind::Exists);
  f->variables = std::move(vars);
  f->args = {std::move(body)};
  return f;
}

FormulaPtr truth(bool value) { return node(value ? FormulaKind::True : FormulaKind::False); }

FormulaPtr non_classical(std::string name, std::vector<ConnectiveParam> params,
                         std::vector<FormulaPtr> args) {
  auto f = node(FormulaKind::NonClassical);
  f->name = std::move(name);
  f->params = std::move(params);
  f->args = std::move(args);
  return f;
}

FormulaPtr list(std::vector<FormulaPtr> elements) {
  auto f = node(FormulaKind::List);
  f->args = std::move(elements);
  return f;
}

FormulaPtr index(std::string token) {
  auto f = node(FormulaKind::Index);
  f->name = std::move(token);
  return f;
}

FormulaPtr assign(FormulaPtr lhs, FormulaPtr rhs) {
  auto f = node(FormulaKind::Assign);
  f->args = {std::move(lhs), std::move(rhs)};
  return f;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.kind != b.kind || a.name != b.name) return false;
  if ((a.kind == FormulaKind::Unary || a.kind == FormulaKind::Binary) &&
      a.connective != b.connective)
    return false;
  if (a.args.size() != b.args.size() || a.variables.size() != b.variables.size() ||
      a.params.size() != b.params.size())
    return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!same_formula(a.args[i], b.args[i])) return false;
  for (std::size_t i = 0; i < a.variables.size(); ++i) {
    if (a.variables[i].name != b.variables[i].name) return false;
    if (!same_type(a.variables[i].type, b.variables[i].type)) return false;
  }
  for (std::size_t i = 0; i < a.params.size(); ++i) {
    if (a.params[i].key != b.params[i].key) return false;
    if (!same_formula(a.params[i].value, b.params[i].value)) return false;
  }
  return true;
}

bool same_formula(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

std::string_view role_name(Role role) {
  switch (role) {
    case Role::Axiom: return "axiom";
    case Role::Hypothesis: return "hypothesis";
    case Role::Conjecture: return "conjecture";
    case Role::Logic: return "logic";
    case Role::Definition: return "definition";
    case Role::Lemma: return "lemma";
    case Role::Theorem: return "theorem";
    case Role::Type: return "type";
  }
  return "axiom";
}

std::optional<Role> role_from_name(std::string_view name) {
  for (Role r : {Role::Axiom, Role::Hypothesis, Role::Conjecture, Role::Logic, Role::Definition,
                 Role::Lemma, Role::Theorem, Role::Type})
    if (role_name(r) == name) return r;
  return std::nullopt;
}

const Formula* AnnotatedFormula::formula() const {
  auto p = std::get_if<FormulaPtr>(&content);
  return p ? p->get() : nullptr;
}

const TypeDeclaration* AnnotatedFormula::type_declaration() const {
  return std::get_if<TypeDeclaration>(&content);
}

const LogicSpecBody* AnnotatedFormula::logic_spec() const {
  return std::get_if<LogicSpecBody>(&content);
}

bool operator==(const AnnotatedFormula& a, const AnnotatedFormula& b) {
  if (a.language != b.language || a.name != b.name || a.role != b.role) return false;
  if (a.content.index() != b.content.index()) return false;
  if (auto fa = std::get_if<FormulaPtr>(&a.content))
    return same_formula(*fa, std::get<FormulaPtr>(b.content));
  if (auto ta = std::get_if<TypeDeclaration>(&a.content)) {
    const auto& tb = std::get<TypeDeclaration>(b.content);
    return ta->symbol == tb.symbol && same_type(ta->type, tb.type);
  }
  return same_formula(std::get<LogicSpecBody>(a.content).definition,
                      std::get<LogicSpecBody>(b.content).definition);
}

bool operator==(const Problem& a, const Problem& b) {
  return a.formulas == b.formulas && a.includes == b.includes;
}

}  // namespace ncl::syntax
