#include "ncl/holkit/hol.hpp"

namespace ncl::hol {

HolTypePtr base(std::string name, bool user) {
  auto t = std::make_shared<HolType>();
  t->name = std::move(name);
  t->user = user;
  return t;
}

HolTypePtr arrow(HolTypePtr arg, HolTypePtr result) {
  auto t = std::make_shared<HolType>();
  t->arg = std::move(arg);
  t->result = std::move(result);
  return t;
}

HolTypePtr arrows(const std::vector<HolTypePtr>& args, HolTypePtr result) {
  for (auto it = args.rbegin(); it != args.rend(); ++it) result = arrow(*it, result);
  return result;
}

HolTypePtr bool_type() {
  static const HolTypePtr o = base("$o");
  return o;
}

bool operator==(const HolType& a, const HolType& b) {
  if (a.is_function() != b.is_function()) return false;
  if (!a.is_function()) return a.name == b.name;
  return same(a.arg, b.arg) && same(a.result, b.result);
}

bool same(const HolTypePtr& a, const HolTypePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool is_bool(const HolTypePtr& t) { return t && !t->is_function() && t->name == "$o"; }

std::string to_string(const HolType& type) {
  if (!type.is_function()) return type.name;
  std::string arg = to_string(*type.arg);
  if (type.arg->is_function()) arg = "(" + arg + ")";
  return arg + " > " + to_string(*type.result);
}

bool operator==(const HolTerm& a, const HolTerm& b) {
  if (a.kind != b.kind || a.name != b.name) return false;
  if ((a.kind == TermKind::Var || a.is_binder()) && !same(a.type, b.type)) return false;
  return same(a.left, b.left) && same(a.right, b.right);
}

bool same(const HolTermPtr& a, const HolTermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

namespace {

HolTermPtr make(TermKind kind, std::string name, HolTypePtr type, HolTermPtr l, HolTermPtr r,
                bool user = false) {
  auto t = std::make_shared<HolTerm>();
  t->kind = kind;
  t->name = std::move(name);
  t->type = std::move(type);
  t->left = std::move(l);
  t->right = std::move(r);
  t->user = user;
  return t;
}

void collect_free(const HolTermPtr& t, std::set<std::string>& bound, std::set<std::string>& out) {
  if (!t) return;
  if (t->kind == TermKind::Var) {
    if (!bound.count(t->name)) out.insert(t->name);
    return;
  }
  if (t->is_binder()) {
    bool fresh = bound.insert(t->name).second;
    collect_free(t->left, bound, out);
    if (fresh) bound.erase(t->name);
    return;
  }
  collect_free(t->left, bound, out);
  collect_free(t->right, bound, out);
}

void collect_constants(const HolTermPtr& t, std::set<std::string>& out) {
  if (!t) return;
  if (t->kind == TermKind::Const) out.insert(t->name);
  collect_constants(t->left, out);
  collect_constants(t->right, out);
}

}  // namespace

HolTermPtr var(std::string name, HolTypePtr type) {
  return make(TermKind::Var, std::move(name), std::move(type), nullptr, nullptr);
}
HolTermPtr cnst(std::string name, bool user) {
  return make(TermKind::Const, std::move(name), nullptr, nullptr, nullptr, user);
}
HolTermPtr app(HolTermPtr fn, HolTermPtr arg) {
  return make(TermKind::App, "", nullptr, std::move(fn), std::move(arg));
}
HolTermPtr app(HolTermPtr fn, const std::vector<HolTermPtr>& args) {
  for (const auto& a : args) fn = app(fn, a);
  return fn;
}
HolTermPtr binder(TermKind kind, std::string name, HolTypePtr type, HolTermPtr body) {
  return make(kind, std::move(name), std::move(type), std::move(body), nullptr);
}
HolTermPtr lam(std::string name, HolTypePtr type, HolTermPtr body) {
  return binder(TermKind::Lambda, std::move(name), std::move(type), std::move(body));
}
HolTermPtr forall(std::string name, HolTypePtr type, HolTermPtr body) {
  return binder(TermKind::Forall, std::move(name), std::move(type), std::move(body));
}
HolTermPtr exists(std::string name, HolTypePtr type, HolTermPtr body) {
  return binder(TermKind::Exists, std::move(name), std::move(type), std::move(body));
}
HolTermPtr lnot(HolTermPtr arg) { return make(TermKind::Not, "", nullptr, std::move(arg), nullptr); }
HolTermPtr connective(TermKind kind, HolTermPtr l, HolTermPtr r) {
  return make(kind, "", nullptr, std::move(l), std::move(r));
}
HolTermPtr land(HolTermPtr l, HolTermPtr r) { return connective(TermKind::And, l, r); }
HolTermPtr lor(HolTermPtr l, HolTermPtr r) { return connective(TermKind::Or, l, r); }
HolTermPtr implies(HolTermPtr l, HolTermPtr r) { return connective(TermKind::Implies, l, r); }
HolTermPtr iff(HolTermPtr l, HolTermPtr r) { return connective(TermKind::Iff, l, r); }
HolTermPtr eq(HolTermPtr l, HolTermPtr r) { return connective(TermKind::Equal, l, r); }
HolTermPtr truth(bool value) {
  static const HolTermPtr t = make(TermKind::True, "", nullptr, nullptr, nullptr);
  static const HolTermPtr f = make(TermKind::False, "", nullptr, nullptr, nullptr);
  return value ? t : f;
}

std::set<std::string> free_vars(const HolTermPtr& t) {
  std::set<std::string> bound, out;
  collect_free(t, bound, out);
  return out;
}

std::set<std::string> constants(const HolTermPtr& t) {
  std::set<std::string> out;
  collect_constants(t, out);
  return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& used) {
  if (!used.count(base)) return base;
  for (unsigned long i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!used.count(candidate)) return candidate;
  }
}

const HolEntry* HolProblem::declaration(const std::string& symbol) const {
  for (const auto& e : entries)
    if (e.segment == Segment::Declaration && e.symbol == symbol) return &e;
  return nullptr;
}

const HolEntry* HolProblem::definition(const std::string& symbol) const {
  for (const auto& e : entries)
    if (e.segment == Segment::Definition && e.symbol == symbol) return &e;
  return nullptr;
}

const HolEntry* HolProblem::entry(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

HolEntry type_declaration(const std::string& symbol, bool user) {
  HolEntry e;
  e.segment = Segment::Declaration;
  e.name = symbol + "_type";
  e.role = "type";
  e.symbol = symbol;
  e.user = user;
  e.source_name = symbol;
  return e;
}

HolEntry constant_declaration(const std::string& symbol, HolTypePtr type, bool user) {
  HolEntry e;
  e.segment = Segment::Declaration;
  e.name = symbol + "_decl";
  e.role = "type";
  e.symbol = symbol;
  e.type = std::move(type);
  e.user = user;
  e.source_name = symbol;
  return e;
}

HolEntry definition(const std::string& symbol, HolTermPtr body) {
  HolEntry e;
  e.segment = Segment::Definition;
  e.name = symbol + "_def";
  e.role = "definition";
  e.symbol = symbol;
  e.formula = eq(cnst(symbol), std::move(body));
  return e;
}

HolEntry axiom(const std::string& name, HolTermPtr formula) {
  HolEntry e;
  e.segment = Segment::Axiom;
  e.name = name;
  e.role = "axiom";
  e.formula = std::move(formula);
  return e;
}

}  // namespace ncl::hol
