#include "ncl/embed/pal.hpp"

#include <algorithm>

#include "ncl/embed/common.hpp"
#include "ncl/embed/modal.hpp"
#include "ncl/error.hpp"
#include "ncl/holkit/assemble.hpp"
#include "ncl/syntax/printer.hpp"
#include "ncl/syntax/signature.hpp"

namespace ncl::embed {

using namespace ncl::hol;
using syntax::Formula;
using syntax::FormulaKind;
using syntax::FormulaPtr;
using syntax::print_formula;
using syntax::Problem;
using syntax::Role;

namespace {

HolTypePtr relation_type() { return arrows({world(), world()}, bool_type()); }

[[noreturn]] void malformed(const Formula& c, const std::string& why) {
  throw Error(ErrorCode::MalformedConnective, "{" + c.name + "}: " + why + " in " + print_formula(c));
}

void check_connective(const Formula& c) {
  if (c.args.size() != 1) malformed(c, "expected exactly one argument");
  if (c.name == "$$knows") {
    if (c.params.size() != 1 || c.params[0].key || c.params[0].value->kind != FormulaKind::Index)
      malformed(c, "expected one agent index such as #a");
  } else if (c.name == "$$common") {
    FormulaPtr group = c.param("$$group");
    if (!group) malformed(c, "missing $$group parameter");
    if (group->kind != FormulaKind::List || group->args.empty())
      malformed(c, "$$group must be a non-empty list of agents");
    for (const auto& a : group->args)
      if (!(a->kind == FormulaKind::Index || (a->kind == FormulaKind::Apply && a->args.empty())))
        malformed(c, "'" + print_formula(*a) + "' is not an agent");
    if (c.params.size() != 1) malformed(c, "unexpected parameters");
  } else if (c.name == "$$announce") {
    if (!c.param("$$formula")) malformed(c, "missing $$formula parameter");
    if (c.params.size() != 1) malformed(c, "unexpected parameters");
  }
}

class PalConverter {
 public:
  HolTermPtr convert(const Formula& f) {
    switch (f.kind) {
      case FormulaKind::True:
      case FormulaKind::False:
        return lam("D", prop(), lam("W", world(), truth(f.kind == FormulaKind::True)));
      case FormulaKind::Apply:
        // Atoms ignore the surviving-world set.
        return lam("D", prop(), lam("W", world(), app(cnst(f.name, true), var("W", world()))));
      case FormulaKind::Unary:
        return lifted_connective(syntax::Connective::Not, convert(*f.args[0]), nullptr);
      case FormulaKind::Binary:
        return lifted_connective(f.connective, convert(*f.args[0]), convert(*f.args[1]));
      case FormulaKind::NonClassical:
        return connective(f);
      default:
        throw Error(ErrorCode::NotPropositional, "unexpected '" + print_formula(f) + "' under $$pal");
    }
  }

 private:
  HolTermPtr connective(const Formula& c) {
    HolTermPtr body = convert(*c.args[0]);
    if (c.name == "$$knows") return app(cnst(knows_name(pal_agents(c)[0])), body);
    if (c.name == "$$announce") return app(cnst("mannounce"), {convert(*c.param("$$formula")), body});
    auto U = var("U", world()), V = var("V", world());
    HolTermPtr edges;
    for (const auto& a : pal_agents(c)) {
      HolTermPtr e = app(cnst(relation_name("#" + a)), {U, V});
      edges = edges ? lor(edges, e) : e;
    }
    return app(cnst("mcommon"), {lam("U", world(), lam("V", world(), edges)), body});
  }
};

}  // namespace

HolTypePtr pal_prop() {
  static const HolTypePtr s = arrows({prop(), world()}, bool_type());
  return s;
}

std::vector<std::string> pal_agents(const Formula& c) {
  std::vector<std::string> out;
  if (c.name == "$$knows") {
    out.push_back(index_suffix(c.params[0].value->name));
  } else if (FormulaPtr group = c.param("$$group")) {
    for (const auto& a : group->args) out.push_back(index_suffix(a->name));
  }
  return out;
}

HolTermPtr transitive_closure_definition() {
  auto R = var("R", relation_type()), Q = var("Q", relation_type());
  auto U = var("U", world()), V = var("V", world()), Z = var("Z", world());
  auto X = var("X", world()), Y = var("Y", world());
  HolTermPtr contains = forall("U", world(), forall("V", world(), implies(app(R, {U, V}), app(Q, {U, V}))));
  HolTermPtr transitive = forall(
      "U", world(),
      forall("V", world(),
             forall("Z", world(), implies(land(app(Q, {U, V}), app(Q, {V, Z})), app(Q, {U, Z})))));
  return lam("R", relation_type(),
             lam("X", world(),
                 lam("Y", world(),
                     forall("Q", relation_type(), implies(land(contains, transitive), app(Q, {X, Y}))))));
}

HolProblem embed_pal_problem(const Problem& problem) {
  require_connectives(problem, {"$$knows", "$$common", "$$announce"}, "$$pal");
  std::vector<std::string> agents;
  for (const auto& af : problem.formulas) {
    if (!af.formula()) continue;
    std::vector<const Formula*> found;
    collect_connectives(std::get<FormulaPtr>(af.content), found);
    for (const Formula* c : found) {
      check_connective(*c);
      for (const auto& a : pal_agents(*c))
        if (std::find(agents.begin(), agents.end(), a) == agents.end()) agents.push_back(a);
    }
  }
  syntax::Signature sig = syntax::infer_signature(problem);
  require_propositional(problem, sig, "$$pal");
  bool has_hypotheses = std::any_of(problem.formulas.begin(), problem.formulas.end(),
                                    [](const auto& af) { return af.role == Role::Hypothesis; });

  std::vector<HolEntry> decls, defs, axioms, users;
  decls.push_back(type_declaration(kWorld));
  for (const auto& a : agents) decls.push_back(constant_declaration(relation_name("#" + a), relation_type()));
  for (auto& d : user_declarations(sig, true)) decls.push_back(d);
  if (has_hypotheses) decls.push_back(constant_declaration("mactual", world()));

  HolTypePtr s = pal_prop();
  auto A = var("A", s), B = var("B", s), D = var("D", prop()), W = var("W", world());
  auto V = var("V", world()), U = var("U", world()), P = var("P", s);
  auto G = var("G", relation_type()), Z = var("Z", world());
  auto at = [&](const HolTermPtr& a, const HolTermPtr& d, const HolTermPtr& w) { return app(a, {d, w}); };
  auto def = [&](const std::string& name, HolTypePtr type, HolTermPtr body) {
    decls.push_back(constant_declaration(name, type));
    defs.push_back(definition(name, body));
  };
  def("mnot", arrow(s, s), lam("A", s, lam("D", prop(), lam("W", world(), lnot(at(A, D, W))))));
  for (auto [name, k] : {std::pair{"mand", TermKind::And}, std::pair{"mor", TermKind::Or},
                         std::pair{"mimpl", TermKind::Implies}, std::pair{"mequiv", TermKind::Iff}}) {
    def(name, arrows({s, s}, s),
        lam("A", s, lam("B", s, lam("D", prop(), lam("W", world(), connective(k, at(A, D, W), at(B, D, W)))))));
  }
  for (const auto& a : agents) {
    HolTermPtr r = app(cnst(relation_name("#" + a)), {W, V});
    def(knows_name(a), arrow(s, s),
        lam("A", s, lam("D", prop(), lam("W", world(),
            forall("V", world(), implies(app(D, V), implies(r, at(A, D, V))))))));
  }
  def("mtc", arrows({relation_type(), world(), world()}, bool_type()), transitive_closure_definition());
  HolTermPtr restricted = lam("U", world(), lam("Z", world(), land(app(D, Z), app(G, {U, Z}))));
  def("mcommon", arrows({relation_type(), s}, s),
      lam("G", relation_type(), lam("A", s, lam("D", prop(), lam("W", world(),
          forall("V", world(), implies(app(cnst("mtc"), {restricted, W, V}), at(A, D, V))))))));
  HolTermPtr survivors = lam("U", world(), land(app(D, U), at(P, D, U)));
  def("mannounce", arrows({s, s}, s),
      lam("P", s, lam("A", s, lam("D", prop(), lam("W", world(),
          implies(at(P, D, W), at(A, survivors, W)))))));
  HolTermPtr full = lam("U", world(), truth(true));
  def("mglobal", arrow(s, bool_type()), lam("A", s, forall("W", world(), at(A, full, W))));
  if (has_hypotheses)
    def("mlocal", arrow(s, bool_type()), lam("A", s, at(A, full, cnst("mactual"))));

  for (const auto& a : agents)
    for (auto scheme : {logic::Scheme::T, logic::Scheme::B, logic::Scheme::Four}) {
      std::string r = relation_name("#" + a);
      axioms.push_back(axiom(r + "_" + frame_property(scheme), frame_condition(scheme, r)));
    }

  PalConverter conv;
  for (const auto& af : problem.formulas) {
    const Formula* f = af.formula();
    if (!f) continue;
    HolTermPtr lifted = conv.convert(*f);
    bool local = af.role == Role::Hypothesis || (af.role == Role::Conjecture && has_hypotheses);
    users.push_back(user_formula(af, lifted, app(cnst(local ? "mlocal" : "mglobal"), lifted)));
  }
  return assemble(std::move(decls), std::move(defs), std::move(axioms), std::move(users));
}

}  // namespace ncl::embed
