#include "ncl/holkit/normalize.hpp"

namespace ncl::hol {

namespace {

HolTermPtr rebuild(const HolTermPtr& t, HolTermPtr l, HolTermPtr r) {
  if (l == t->left && r == t->right) return t;
  auto copy = std::make_shared<HolTerm>(*t);
  copy->left = std::move(l);
  copy->right = std::move(r);
  return copy;
}

HolTermPtr subst(const HolTermPtr& t, const std::string& name, const HolTermPtr& value,
                 const std::set<std::string>& value_free) {
  if (!t) return t;
  switch (t->kind) {
    case TermKind::Var:
      return t->name == name ? value : t;
    case TermKind::Const:
    case TermKind::True:
    case TermKind::False:
      return t;
    case TermKind::Lambda:
    case TermKind::Forall:
    case TermKind::Exists: {
      if (t->name == name) return t;
      std::set<std::string> body_free = free_vars(t->left);
      if (!body_free.count(name)) return t;
      if (!value_free.count(t->name))
        return rebuild(t, subst(t->left, name, value, value_free), nullptr);
      // Rename the binder away from the incoming free variables.
      std::set<std::string> avoid = value_free;
      avoid.insert(body_free.begin(), body_free.end());
      avoid.insert(name);
      std::string renamed = fresh_name(t->name, avoid);
      HolTermPtr body = subst(t->left, t->name, var(renamed, t->type), {renamed});
      return binder(t->kind, renamed, t->type, subst(body, name, value, value_free));
    }
    default:
      return rebuild(t, subst(t->left, name, value, value_free),
                     subst(t->right, name, value, value_free));
  }
}

}  // namespace

HolTermPtr substitute(const HolTermPtr& term, const std::string& name, const HolTermPtr& value) {
  return subst(term, name, value, free_vars(value));
}

HolTermPtr replace_constants(const HolTermPtr& t, const std::map<std::string, HolTermPtr>& map) {
  if (!t) return t;
  if (t->kind == TermKind::Const) {
    auto it = map.find(t->name);
    return it == map.end() ? t : it->second;
  }
  return rebuild(t, replace_constants(t->left, map), replace_constants(t->right, map));
}

HolTermPtr beta_normalize(const HolTermPtr& t) {
  if (!t) return t;
  if (t->kind == TermKind::App) {
    HolTermPtr fn = beta_normalize(t->left);
    HolTermPtr arg = beta_normalize(t->right);
    if (fn->kind == TermKind::Lambda) return beta_normalize(substitute(fn->left, fn->name, arg));
    return rebuild(t, fn, arg);
  }
  return rebuild(t, beta_normalize(t->left), beta_normalize(t->right));
}

HolProblem inline_definitions(const HolProblem& problem) {
  std::map<std::string, HolTermPtr> bodies;
  for (const auto& e : problem.entries) {
    if (e.segment != Segment::Definition) continue;
    // Earlier definitions may occur in later ones.
    bodies[e.symbol] = beta_normalize(replace_constants(e.formula->right, bodies));
  }
  HolProblem out;
  for (const auto& e : problem.entries) {
    if (e.segment == Segment::Definition) continue;
    if (e.segment == Segment::Declaration && bodies.count(e.symbol)) continue;
    HolEntry copy = e;
    if (copy.formula) copy.formula = beta_normalize(replace_constants(copy.formula, bodies));
    if (copy.lifted) copy.lifted = beta_normalize(replace_constants(copy.lifted, bodies));
    out.entries.push_back(std::move(copy));
  }
  return out;
}

}  // namespace ncl::hol
