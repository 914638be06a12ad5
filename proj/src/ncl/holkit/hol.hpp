#pragma once

// Simply typed classical higher-order terms, the target of every embedding.

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace ncl::hol {

struct HolType;
using HolTypePtr = std::shared_ptr<const HolType>;

/// Base type (`name` set) or function type `arg > result`. `user` marks base
/// types taken from the input problem; it is ignored by equality.
struct HolType {
  std::string name;
  HolTypePtr arg;
  HolTypePtr result;
  bool user = false;

  bool is_function() const { return arg != nullptr; }
};

HolTypePtr base(std::string name, bool user = false);
HolTypePtr arrow(HolTypePtr arg, HolTypePtr result);
/// `a1 > a2 > ... > result`.
HolTypePtr arrows(const std::vector<HolTypePtr>& args, HolTypePtr result);
HolTypePtr bool_type();

bool operator==(const HolType& a, const HolType& b);
bool same(const HolTypePtr& a, const HolTypePtr& b);
bool is_bool(const HolTypePtr& t);

/// Right-associative, function-typed arguments parenthesized.
std::string to_string(const HolType& type);

enum class TermKind {
  Var,
  Const,
  App,
  Lambda,
  Forall,
  Exists,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Equal,
  True,
  False,
};

struct HolTerm;
using HolTermPtr = std::shared_ptr<const HolTerm>;

/// Binders hold one variable (`name`, `type`) and their body in `left`.
/// Variables carry their type; constants are typed by the declarations in
/// scope. `user` marks constants that come from the input problem.
struct HolTerm {
  TermKind kind = TermKind::True;
  std::string name;
  HolTypePtr type;
  HolTermPtr left;
  HolTermPtr right;
  bool user = false;

  bool is_binder() const {
    return kind == TermKind::Lambda || kind == TermKind::Forall || kind == TermKind::Exists;
  }
};

bool operator==(const HolTerm& a, const HolTerm& b);
bool same(const HolTermPtr& a, const HolTermPtr& b);

HolTermPtr var(std::string name, HolTypePtr type);
HolTermPtr cnst(std::string name, bool user = false);
HolTermPtr app(HolTermPtr fn, HolTermPtr arg);
HolTermPtr app(HolTermPtr fn, const std::vector<HolTermPtr>& args);
HolTermPtr lam(std::string name, HolTypePtr type, HolTermPtr body);
HolTermPtr forall(std::string name, HolTypePtr type, HolTermPtr body);
HolTermPtr exists(std::string name, HolTypePtr type, HolTermPtr body);
HolTermPtr binder(TermKind kind, std::string name, HolTypePtr type, HolTermPtr body);
HolTermPtr lnot(HolTermPtr arg);
HolTermPtr land(HolTermPtr l, HolTermPtr r);
HolTermPtr lor(HolTermPtr l, HolTermPtr r);
HolTermPtr implies(HolTermPtr l, HolTermPtr r);
HolTermPtr iff(HolTermPtr l, HolTermPtr r);
HolTermPtr eq(HolTermPtr l, HolTermPtr r);
HolTermPtr connective(TermKind kind, HolTermPtr l, HolTermPtr r);
HolTermPtr truth(bool value);

std::set<std::string> free_vars(const HolTermPtr& t);
/// Names of all constants occurring in `t`.
std::set<std::string> constants(const HolTermPtr& t);

/// `base` if unused, else `base` followed by the smallest positive integer
/// that makes it unused.
std::string fresh_name(const std::string& base, const std::set<std::string>& used);

enum class Segment { Declaration, Definition, Axiom, UserFormula };

/// One emitted annotated formula. Declarations use `symbol` and `type`
/// (null type means `$tType`); definitions hold `symbol = body` in
/// `formula`; user formulas keep the world-lifted term before role wrapping
/// in `lifted` and their source name in `source_name`; user declarations
/// keep the original symbol there when assembly renames them.
struct HolEntry {
  Segment segment = Segment::Axiom;
  std::string name;
  std::string role;
  std::string symbol;
  HolTypePtr type;
  HolTermPtr formula;
  HolTermPtr lifted;
  std::string source_name;
  bool user = false;
};

struct HolProblem {
  std::vector<HolEntry> entries;

  const HolEntry* declaration(const std::string& symbol) const;
  const HolEntry* definition(const std::string& symbol) const;
  const HolEntry* entry(const std::string& name) const;
};

HolEntry type_declaration(const std::string& symbol, bool user = false);
HolEntry constant_declaration(const std::string& symbol, HolTypePtr type, bool user = false);
HolEntry definition(const std::string& symbol, HolTermPtr body);
HolEntry axiom(const std::string& name, HolTermPtr formula);

}  // namespace ncl::hol
