#pragma once

// Abstract syntax for TPTP TFF/TXF/THF problems extended with non-classical
// connectives `{$name(params)}`. Nodes are immutable once built and shared
// through shared_ptr<const ...>.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ncl::syntax {

enum class Language { Tff, Thf };

struct TptpType;
using TypePtr = std::shared_ptr<const TptpType>;

/// Either a base type (`$o`, `$i`, `$tType`, user name) or a mapping type
/// `(a1 * ... * an) > r`. Curried THF arrows are flattened into `args`.
struct TptpType {
  std::string name;
  std::vector<TypePtr> args;
  TypePtr result;

  bool is_mapping() const { return result != nullptr; }
};

TypePtr base_type(std::string name);
/// Throws ncl::Error(TypeError) when `args` is empty or `result` is `$tType`.
TypePtr mapping_type(std::vector<TypePtr> args, TypePtr result);

bool operator==(const TptpType& a, const TptpType& b);
bool same_type(const TypePtr& a, const TypePtr& b);

/// Rendered in the given language's arrow syntax.
std::string to_string(const TptpType& type, Language lang = Language::Tff);

inline constexpr std::string_view kIndividual = "$i";
inline constexpr std::string_view kBoolean = "$o";
inline constexpr std::string_view kTypeOfTypes = "$tType";

enum class Connective {
  Not,
  And,
  Or,
  Implies,         // =>
  ReverseImplies,  // <=
  Iff,             // <=>
  Xor,             // <~>
  Nor,             // ~|
  Nand,            // ~&
};

std::string_view connective_token(Connective c);

enum class FormulaKind {
  Variable,
  Apply,         // user or defined symbol applied to zero or more arguments
  Equal,
  NotEqual,
  Unary,         // negation
  Binary,
  Forall,
  Exists,
  True,
  False,
  NonClassical,  // {$name(params)} applied to `args` (bare when args is empty)
  List,          // [a, b, ...]
  Index,         // #name
  Assign,        // lhs == rhs, in logic specifications
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct TypedVariable {
  std::string name;
  TypePtr type;  // null when the source omits it
};

/// Positional parameter (key empty) or `key := value` parameter of a
/// non-classical connective.
struct ConnectiveParam {
  std::optional<std::string> key;
  FormulaPtr value;
};

struct Formula {
  FormulaKind kind = FormulaKind::True;
  std::string name;
  Connective connective = Connective::Not;
  std::vector<FormulaPtr> args;
  std::vector<TypedVariable> variables;
  std::vector<ConnectiveParam> params;

  bool is_atomic() const;
  /// Positional `#` parameters of a non-classical connective, with the `#`.
  std::vector<std::string> indices() const;
  /// Value of a keyed connective parameter, or null.
  FormulaPtr param(std::string_view key) const;
};

FormulaPtr variable(std::string name);
FormulaPtr apply(std::string name, std::vector<FormulaPtr> args = {});
FormulaPtr equal(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr not_equal(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr negate(FormulaPtr arg);
FormulaPtr binary(Connective c, FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr forall(std::vector<TypedVariable> vars, FormulaPtr body);
FormulaPtr exists(std::vector<TypedVariable> vars, FormulaPtr body);
FormulaPtr truth(bool value);
FormulaPtr non_classical(std::string name, std::vector<ConnectiveParam> params,
                         std::vector<FormulaPtr> args);
FormulaPtr list(std::vector<FormulaPtr> elements);
FormulaPtr index(std::string token);
FormulaPtr assign(FormulaPtr lhs, FormulaPtr rhs);

bool operator==(const Formula& a, const Formula& b);
bool same_formula(const FormulaPtr& a, const FormulaPtr& b);

enum class Role {
  Axiom,
  Hypothesis,
  Conjecture,
  Logic,
  Definition,
  Lemma,
  Theorem,
  Type,
};

std::string_view role_name(Role role);
std::optional<Role> role_from_name(std::string_view name);

struct TypeDeclaration {
  std::string symbol;
  TypePtr type;
};

/// `logic_name == properties`; `definition` is always an Assign node.
struct LogicSpecBody {
  FormulaPtr definition;
};

using Content = std::variant<FormulaPtr, TypeDeclaration, LogicSpecBody>;

struct AnnotatedFormula {
  Language language = Language::Tff;
  std::string name;
  Role role = Role::Axiom;
  Content content;

  const Formula* formula() const;
  const TypeDeclaration* type_declaration() const;
  const LogicSpecBody* logic_spec() const;
};

bool operator==(const AnnotatedFormula& a, const AnnotatedFormula& b);

struct IncludeDirective {
  std::string path;
  std::vector<std::string> selection;
  /// Number of annotated formulas that precede the directive.
  std::size_t position = 0;

  bool operator==(const IncludeDirective&) const = default;
};

struct Problem {
  std::vector<AnnotatedFormula> formulas;
  std::vector<IncludeDirective> includes;
};

bool operator==(const Problem& a, const Problem& b);

}  // namespace ncl::syntax
