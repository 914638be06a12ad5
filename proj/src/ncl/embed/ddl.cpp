#include "ncl/embed/ddl.hpp"

#include <algorithm>

#include "ncl/embed/common.hpp"
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

HolTermPtr at_world(HolTermPtr body) { return lam("W", world(), std::move(body)); }

class DdlConverter {
 public:
  HolTermPtr convert(const Formula& f) {
    switch (f.kind) {
      case FormulaKind::True:
      case FormulaKind::False:
        return at_world(truth(f.kind == FormulaKind::True));
      case FormulaKind::Apply:
        return cnst(f.name, true);
      case FormulaKind::Unary:
        return lifted_connective(syntax::Connective::Not, convert(*f.args[0]), nullptr);
      case FormulaKind::Binary:
        return lifted_connective(f.connective, convert(*f.args[0]), convert(*f.args[1]));
      case FormulaKind::NonClassical:
        if (f.args.size() != 2 || !f.params.empty())
          throw Error(ErrorCode::MalformedConnective,
                      "{$$obl} expects two arguments and no parameters: " + print_formula(f));
        return app(cnst("mobl"), {convert(*f.args[0]), convert(*f.args[1])});
      default:
        throw Error(ErrorCode::NotPropositional, "unexpected '" + print_formula(f) + "' under $$ddl");
    }
  }
};

}  // namespace

std::vector<HolEntry> cj_ob_axioms() {
  auto X = var("X", prop()), Y = var("Y", prop()), Z = var("Z", prop()), W = var("W", world());
  auto ob = [](const HolTermPtr& a, const HolTermPtr& b) { return app(cnst("mob"), {a, b}); };
  auto at = [&](const HolTermPtr& s) { return app(s, W); };
  auto everywhere = [](HolTermPtr body) { return forall("W", world(), std::move(body)); };
  auto somewhere = [](HolTermPtr body) { return exists("W", world(), std::move(body)); };
  auto subset = [&](const HolTermPtr& a, const HolTermPtr& b) { return everywhere(implies(at(a), at(b))); };
  auto sets = [](std::vector<const char*> names, HolTermPtr body) {
    for (auto it = names.rbegin(); it != names.rend(); ++it) body = forall(*it, prop(), body);
    return body;
  };

  std::vector<HolEntry> out;
  out.push_back(axiom("mob_5a", sets({"X"}, lnot(ob(X, at_world(truth(false)))))));
  out.push_back(axiom(
      "mob_5b", sets({"X", "Y", "Z"},
                     implies(everywhere(iff(land(at(X), at(Y)), land(at(X), at(Z)))),
                             iff(ob(X, Y), ob(X, Z))))));
  out.push_back(axiom(
      "mob_5c", sets({"X", "Y", "Z"},
                     implies(land(somewhere(land(at(X), land(at(Y), at(Z)))), land(ob(X, Y), ob(X, Z))),
                             ob(X, at_world(land(at(Y), at(Z))))))));
  out.push_back(axiom(
      "mob_5d", sets({"X", "Y", "Z"},
                     implies(land(subset(Y, X), land(ob(X, Y), subset(X, Z))),
                             ob(Z, at_world(lor(land(at(Z), lnot(at(X))), at(Y))))))));
  out.push_back(axiom(
      "mob_5e", sets({"X", "Y", "Z"},
                     implies(land(subset(Y, X), land(ob(X, Z), somewhere(land(at(Y), at(Z))))),
                             ob(Y, Z)))));
  return out;
}

HolProblem embed_ddl_problem(const Problem& problem, const logic::DdlConfig& config) {
  require_connectives(problem, {"$$obl"}, "$$ddl");
  syntax::Signature sig = syntax::infer_signature(problem);
  require_propositional(problem, sig, "$$ddl");
  bool has_hypotheses = std::any_of(problem.formulas.begin(), problem.formulas.end(),
                                    [](const auto& af) { return af.role == Role::Hypothesis; });
  bool aqvist = config.system == logic::DdlSystem::AqvistE;

  std::vector<HolEntry> decls, defs, axioms, users;
  decls.push_back(type_declaration(kWorld));
  HolTypePtr rel = arrows({world(), world()}, bool_type());
  if (aqvist)
    decls.push_back(constant_declaration("mbetter", rel));
  else
    decls.push_back(constant_declaration("mob", arrows({prop(), prop()}, bool_type())));
  for (auto& d : user_declarations(sig, true)) decls.push_back(d);
  if (has_hypotheses) decls.push_back(constant_declaration("mactual", world()));

  auto A = var("A", prop()), B = var("B", prop()), W = var("W", world()), V = var("V", world());
  auto U = var("U", world()), Phi = var("Phi", prop()), Psi = var("Psi", prop());
  auto def = [&](const std::string& name, HolTypePtr type, HolTermPtr body) {
    decls.push_back(constant_declaration(name, type));
    defs.push_back(definition(name, body));
  };
  HolTypePtr unary = arrow(prop(), prop()), binary = arrows({prop(), prop()}, prop());
  def("mnot", unary, lam("A", prop(), at_world(lnot(app(A, W)))));
  for (auto [name, k] : {std::pair{"mand", TermKind::And}, std::pair{"mor", TermKind::Or},
                         std::pair{"mimpl", TermKind::Implies}, std::pair{"mequiv", TermKind::Iff}})
    def(name, binary, lam("A", prop(), lam("B", prop(), at_world(connective(k, app(A, W), app(B, W))))));
  if (aqvist) {
    def("mopt", unary,
        lam("Phi", prop(), lam("V", world(),
            land(app(Phi, V), forall("U", world(), implies(app(Phi, U), app(cnst("mbetter"), {V, U})))))));
    def("mobl", binary,
        lam("Psi", prop(), lam("Phi", prop(), at_world(
            forall("V", world(), implies(app(cnst("mopt"), {Phi, V}), app(Psi, V)))))));
  } else {
    def("mobl", binary,
        lam("Psi", prop(), lam("Phi", prop(), at_world(app(cnst("mob"), {Phi, Psi})))));
    axioms = cj_ob_axioms();
  }
  def("mglobal", arrow(prop(), bool_type()), lam("A", prop(), forall("W", world(), app(A, W))));
  if (has_hypotheses)
    def("mlocal", arrow(prop(), bool_type()), lam("A", prop(), app(A, cnst("mactual"))));

  DdlConverter conv;
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
