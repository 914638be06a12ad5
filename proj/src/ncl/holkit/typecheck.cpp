#include "ncl/holkit/typecheck.hpp"

#include <set>

#include "ncl/error.hpp"
#include "ncl/holkit/hol_printer.hpp"

namespace ncl::hol {

namespace {

[[noreturn]] void mismatch(const HolTermPtr& t, const HolTypePtr& expected,
                           const HolTypePtr& actual) {
  throw Error(ErrorCode::TypeError, "term " + print_term(t) + " expected type " +
                                        to_string(*expected) + " but has type " +
                                        to_string(*actual));
}

class Checker {
 public:
  explicit Checker(const ConstantTypes& constants) : constants_(constants) {}

  HolTypePtr infer(const HolTermPtr& t) {
    switch (t->kind) {
      case TermKind::Var: {
        auto it = scope_.find(t->name);
        if (it == scope_.end() || it->second.empty())
          throw Error(ErrorCode::TypeError, "unbound variable " + t->name);
        if (!same(it->second.back(), t->type)) mismatch(t, it->second.back(), t->type);
        return t->type;
      }
      case TermKind::Const: {
        auto it = constants_.find(t->name);
        if (it == constants_.end() && !t->name.empty() && t->name[0] == '"') return base("$i");
        if (it == constants_.end())
          throw Error(ErrorCode::TypeError, "undeclared constant " + t->name);
        return it->second;
      }
      case TermKind::True:
      case TermKind::False:
        return bool_type();
      case TermKind::App: {
        HolTypePtr f = infer(t->left);
        if (!f->is_function())
          throw Error(ErrorCode::TypeError, "term " + print_term(t->left) + " of type " +
                                                to_string(*f) + " is applied to an argument");
        HolTypePtr a = infer(t->right);
        if (!same(f->arg, a)) mismatch(t->right, f->arg, a);
        return f->result;
      }
      case TermKind::Lambda:
      case TermKind::Forall:
      case TermKind::Exists: {
        scope_[t->name].push_back(t->type);
        HolTypePtr body = infer(t->left);
        scope_[t->name].pop_back();
        if (t->kind == TermKind::Lambda) return arrow(t->type, body);
        if (!is_bool(body)) mismatch(t->left, bool_type(), body);
        return bool_type();
      }
      case TermKind::Not: {
        expect_bool(t->left);
        return bool_type();
      }
      case TermKind::And:
      case TermKind::Or:
      case TermKind::Implies:
      case TermKind::Iff:
        expect_bool(t->left);
        expect_bool(t->right);
        return bool_type();
      case TermKind::Equal: {
        HolTypePtr l = infer(t->left);
        HolTypePtr r = infer(t->right);
        if (!same(l, r)) mismatch(t->right, l, r);
        return bool_type();
      }
    }
    throw Error(ErrorCode::InternalError, "unknown term kind");
  }

 private:
  void expect_bool(const HolTermPtr& t) {
    HolTypePtr ty = infer(t);
    if (!is_bool(ty)) mismatch(t, bool_type(), ty);
  }

  const ConstantTypes& constants_;
  std::map<std::string, std::vector<HolTypePtr>> scope_;
};

void check_type_known(const HolTypePtr& t, const std::set<std::string>& types,
                      const std::string& where) {
  if (t->is_function()) {
    check_type_known(t->arg, types, where);
    check_type_known(t->result, types, where);
    return;
  }
  if (t->name == "$o" || t->name == "$i") return;
  if (!types.count(t->name))
    throw Error(ErrorCode::TypeError, "type " + t->name + " used by " + where +
                                          " before its declaration");
}

}  // namespace

HolTypePtr type_of(const HolTermPtr& term, const ConstantTypes& constants) {
  return Checker(constants).infer(term);
}

ConstantTypes constant_types(const HolProblem& problem) {
  ConstantTypes out;
  for (const auto& e : problem.entries)
    if (e.segment == Segment::Declaration && e.type) out[e.symbol] = e.type;
  return out;
}

void typecheck(const HolProblem& problem) {
  ConstantTypes constants;
  std::set<std::string> types;
  std::set<std::string> names;
  for (const auto& e : problem.entries) {
    if (!names.insert(e.name).second)
      throw Error(ErrorCode::TypeError, "duplicate formula name " + e.name);
    switch (e.segment) {
      case Segment::Declaration:
        if (!e.type) {
          types.insert(e.symbol);
        } else {
          check_type_known(e.type, types, e.symbol);
          if (constants.count(e.symbol))
            throw Error(ErrorCode::TypeError, "constant " + e.symbol + " declared twice");
          constants[e.symbol] = e.type;
        }
        break;
      case Segment::Definition: {
        auto it = constants.find(e.symbol);
        if (it == constants.end())
          throw Error(ErrorCode::TypeError, "definition of undeclared constant " + e.symbol);
        HolTypePtr body = type_of(e.formula->right, constants);
        if (!same(body, it->second)) mismatch(e.formula->right, it->second, body);
        break;
      }
      case Segment::Axiom:
      case Segment::UserFormula: {
        HolTypePtr t = type_of(e.formula, constants);
        if (!is_bool(t)) mismatch(e.formula, bool_type(), t);
        break;
      }
    }
  }
}

}  // namespace ncl::hol
