#include "ncl/holkit/assemble.hpp"

#include <map>
#include <set>

#include "ncl/holkit/typecheck.hpp"

namespace ncl::hol {

namespace {

using Renaming = std::map<std::string, std::string>;

HolTypePtr rename_type(const HolTypePtr& t, const Renaming& types) {
  if (!t) return t;
  if (t->is_function()) {
    HolTypePtr a = rename_type(t->arg, types);
    HolTypePtr r = rename_type(t->result, types);
    return a == t->arg && r == t->result ? t : arrow(a, r);
  }
  if (!t->user) return t;
  auto it = types.find(t->name);
  return it == types.end() ? t : base(it->second, true);
}

HolTermPtr rename_term(const HolTermPtr& t, const Renaming& consts, const Renaming& types) {
  if (!t) return t;
  HolTermPtr l = rename_term(t->left, consts, types);
  HolTermPtr r = rename_term(t->right, consts, types);
  HolTypePtr ty = rename_type(t->type, types);
  std::string name = t->name;
  if (t->kind == TermKind::Const && t->user) {
    auto it = consts.find(name);
    if (it != consts.end()) name = it->second;
  }
  if (l == t->left && r == t->right && ty == t->type && name == t->name) return t;
  auto copy = std::make_shared<HolTerm>(*t);
  copy->left = l;
  copy->right = r;
  copy->type = ty;
  copy->name = name;
  return copy;
}

}  // namespace

HolProblem assemble(std::vector<HolEntry> declarations, std::vector<HolEntry> definitions,
                    std::vector<HolEntry> axioms, std::vector<HolEntry> user_formulas) {
  std::set<std::string> introduced, used;
  for (const auto& d : declarations) {
    used.insert(d.symbol);
    if (!d.user) introduced.insert(d.symbol);
  }

  Renaming consts, types;
  for (auto& d : declarations) {
    if (!d.user || !introduced.count(d.symbol)) continue;
    std::string renamed = fresh_name(d.symbol, used);
    used.insert(renamed);
    (d.type ? consts : types)[d.symbol] = renamed;
  }

  std::vector<std::vector<HolEntry>*> segments = {&declarations, &definitions, &axioms,
                                                  &user_formulas};
  std::set<std::string> names;
  for (auto* seg : segments)
    for (const auto& e : *seg)
      if (!e.user) names.insert(e.name);

  HolProblem out;
  for (auto* seg : segments) {
    for (auto& e : *seg) {
      if (e.segment == Segment::Declaration && e.user) {
        if (e.source_name.empty()) e.source_name = e.symbol;
        auto& map = e.type ? consts : types;
        auto it = map.find(e.symbol);
        if (it != map.end()) {
          e.symbol = it->second;
          e.name = e.symbol + (e.type ? "_decl" : "_type");
        }
      }
      if (e.user) {
        e.name = fresh_name(e.name, names);
        names.insert(e.name);
      }
      e.type = rename_type(e.type, types);
      e.formula = rename_term(e.formula, consts, types);
      e.lifted = rename_term(e.lifted, consts, types);
      out.entries.push_back(std::move(e));
    }
  }
  typecheck(out);
  return out;
}

}  // namespace ncl::hol
