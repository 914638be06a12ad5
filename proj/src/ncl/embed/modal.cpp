#include "ncl/embed/modal.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "ncl/embed/common.hpp"
#include "ncl/error.hpp"
#include "ncl/holkit/assemble.hpp"
#include "ncl/syntax/printer.hpp"
#include "ncl/syntax/signature.hpp"

namespace ncl::embed {

using namespace ncl::hol;
using syntax::base_type;
using syntax::Connective;
using syntax::Formula;
using syntax::FormulaKind;
using syntax::FormulaPtr;
using syntax::infer_signature;
using syntax::print_formula;
using syntax::Problem;
using syntax::Role;
using syntax::Signature;
using syntax::variable_type;
using logic::Quantification;
using logic::Scheme;

namespace {

HolTermPtr rel(const std::string& r, const HolTermPtr& a, const HolTermPtr& b) {
  return app(cnst(r), {a, b});
}

HolTermPtr wv(const char* name) { return var(name, world()); }

// Validates the shape of one connective occurrence.
void check_connective(const Formula& c) {
  auto malformed = [&](const std::string& why) {
    throw Error(ErrorCode::MalformedConnective,
                "{" + c.name + "}: " + why + " in " + print_formula(c));
  };
  if (c.args.size() != 1) malformed("expected exactly one argument");
  for (const auto& p : c.params) {
    if (p.key) malformed("unexpected parameter " + *p.key);
    if (p.value->kind != FormulaKind::Index)
      throw Error(ErrorCode::ParseError, "modality index '" + print_formula(*p.value) +
                                             "' must be #-prefixed in " + print_formula(c));
  }
  if (c.name == "$box" || c.name == "$dia") {
    if (c.params.size() > 1) malformed("at most one index");
  } else if (c.name == "$$nominal") {
    if (!c.params.empty()) malformed("no index expected");
  } else if (c.name == "$$shift" || c.name == "$$bind") {
    if (c.params.size() != 1) malformed("exactly one index expected");
    if (c.name == "$$bind" && !std::isupper(static_cast<unsigned char>(c.params[0].value->name[1])))
      malformed("the bound index must be a variable such as #X");
  }
}

class ModalConverter {
 public:
  explicit ModalConverter(std::string world_var) : w_(std::move(world_var)) {}

  HolTermPtr convert(const Formula& f) {
    switch (f.kind) {
      case FormulaKind::True:
      case FormulaKind::False:
        return at_world(truth(f.kind == FormulaKind::True));
      case FormulaKind::Variable:
        // Only bind variables reach formula position (checked by the signature).
        return at_world(eq(var(w_, world()), var(f.name, world())));
      case FormulaKind::Apply:
        return apply_symbol(f);
      case FormulaKind::Equal:
        return at_world(eq(term(*f.args[0]), term(*f.args[1])));
      case FormulaKind::NotEqual:
        return at_world(lnot(eq(term(*f.args[0]), term(*f.args[1]))));
      case FormulaKind::Unary:
        return lifted_connective(Connective::Not, convert(*f.args[0]), nullptr);
      case FormulaKind::Binary:
        return lifted_connective(f.connective, convert(*f.args[0]), convert(*f.args[1]));
      case FormulaKind::Forall:
      case FormulaKind::Exists:
        return quantifier(f);
      case FormulaKind::NonClassical:
        return connective(f);
      default:
        throw Error(ErrorCode::TypeError, "unexpected '" + print_formula(f) + "' in formula position");
    }
  }

 private:
  HolTermPtr at_world(HolTermPtr body) { return lam(w_, world(), std::move(body)); }

  HolTermPtr apply_symbol(const Formula& f) {
    std::vector<HolTermPtr> args;
    for (const auto& a : f.args) args.push_back(term(*a));
    return app(cnst(f.name, true), args);
  }

  HolTermPtr term(const Formula& f) {
    if (f.kind == FormulaKind::Variable) {
      auto it = scope_.find(f.name);
      if (it == scope_.end() || it->second.empty())
        throw Error(ErrorCode::TypeError, "unbound variable '" + f.name + "'");
      return var(f.name, it->second.back());
    }
    return apply_symbol(f);
  }

  HolTermPtr quantifier(const Formula& f) {
    bool universal = f.kind == FormulaKind::Forall;
    for (const auto& v : f.variables) scope_[v.name].push_back(hol_type(variable_type(v)));
    HolTermPtr body = convert(*f.args[0]);
    for (auto it = f.variables.rbegin(); it != f.variables.rend(); ++it) {
      std::string type = variable_type(*it)->name;
      std::string q = universal ? forall_name(type) : exists_name(type);
      body = app(cnst(q), lam(it->name, hol_type(variable_type(*it)), body));
    }
    for (const auto& v : f.variables) scope_[v.name].pop_back();
    return body;
  }

  HolTermPtr world_term(const std::string& name) {
    auto it = scope_.find(name);
    if (it != scope_.end() && !it->second.empty()) return var(name, world());
    return cnst(name, true);
  }

  HolTermPtr connective(const Formula& c) {
    if (c.name == "$box" || c.name == "$dia") {
      auto idx = c.indices();
      std::string index = idx.empty() ? "" : idx[0];
      return app(cnst(c.name == "$box" ? box_name(index) : dia_name(index)), convert(*c.args[0]));
    }
    if (c.name == "$$nominal") return at_world(eq(var(w_, world()), cnst(c.args[0]->name, true)));
    std::string index = c.indices()[0].substr(1);
    if (c.name == "$$shift") return at_world(app(convert(*c.args[0]), world_term(index)));
    // $$bind: the bound variable denotes the current world.
    scope_[index].push_back(world());
    HolTermPtr body = convert(*c.args[0]);
    scope_[index].pop_back();
    HolTermPtr w = var(w_, world());
    return at_world(app(lam(index, world(), app(body, w)), w));
  }

  std::string w_;
  std::map<std::string, std::vector<HolTypePtr>> scope_;
};

}  // namespace

std::string frame_property(Scheme s) {
  switch (s) {
    case Scheme::T: return "reflexive";
    case Scheme::B: return "symmetric";
    case Scheme::D: return "serial";
    case Scheme::Four: return "transitive";
    case Scheme::Five: return "euclidean";
    case Scheme::CD: return "functional";
    case Scheme::C4: return "dense";
    case Scheme::Universal: return "universal";
    case Scheme::K: break;
  }
  return "";
}

HolTermPtr frame_condition(Scheme s, const std::string& r) {
  auto U = wv("U"), V = wv("V"), W = wv("W"), Z = wv("Z");
  auto all = [](std::vector<const char*> names, HolTermPtr body) {
    for (auto it = names.rbegin(); it != names.rend(); ++it) body = forall(*it, world(), body);
    return body;
  };
  switch (s) {
    case Scheme::K:
      return nullptr;
    case Scheme::T:
      return all({"W"}, rel(r, W, W));
    case Scheme::B:
      return all({"W", "V"}, implies(rel(r, W, V), rel(r, V, W)));
    case Scheme::D:
      return all({"W"}, exists("V", world(), rel(r, W, V)));
    case Scheme::Four:
      return all({"W", "V", "U"}, implies(land(rel(r, W, V), rel(r, V, U)), rel(r, W, U)));
    case Scheme::Five:
      return all({"U", "V", "W"}, implies(land(rel(r, U, V), rel(r, U, W)), rel(r, V, W)));
    case Scheme::CD:
      return all({"U", "V", "W"}, implies(land(rel(r, U, V), rel(r, U, W)), eq(V, W)));
    case Scheme::C4:
      return all({"U", "V"},
                 implies(rel(r, U, V), exists("Z", world(), land(rel(r, U, Z), rel(r, Z, V)))));
    case Scheme::Universal:
      return all({"U", "V"}, rel(r, U, V));
  }
  return nullptr;
}

std::vector<HolEntry> frame_axioms(const std::string& index, const logic::SchemeSet& schemes) {
  std::vector<HolEntry> out;
  std::string r = relation_name(index);
  for (Scheme s : schemes)
    if (s != Scheme::K) out.push_back(axiom(r + "_" + frame_property(s), frame_condition(s, r)));
  return out;
}

HolProblem embed_modal_problem(const Problem& problem, const logic::ModalConfig& cfg, bool hybrid) {
  std::string logic = hybrid ? "$$hybrid" : "$modal";
  std::set<std::string> allowed = {"$box", "$dia"};
  if (hybrid) allowed.insert({"$$nominal", "$$shift", "$$bind"});
  require_connectives(problem, allowed, logic);

  std::vector<std::string> indices;
  for (const auto& af : problem.formulas) {
    if (!af.formula()) continue;
    std::vector<const Formula*> found;
    collect_connectives(std::get<FormulaPtr>(af.content), found);
    for (const Formula* c : found) {
      check_connective(*c);
      if (c->name != "$box" && c->name != "$dia") continue;
      auto idx = c->indices();
      std::string index = idx.empty() ? "" : idx[0];
      if (std::find(indices.begin(), indices.end(), index) == indices.end())
        indices.push_back(index);
    }
  }
  for (const auto& [index, set] : cfg.modalities)
    if (std::find(indices.begin(), indices.end(), index) == indices.end()) indices.push_back(index);
  if (indices.empty()) indices.push_back("");

  Signature sig = infer_signature(problem);
  bool has_hypotheses = std::any_of(problem.formulas.begin(), problem.formulas.end(),
                                    [](const auto& af) { return af.role == Role::Hypothesis; });

  std::vector<HolEntry> decls, defs, axioms, users;
  decls.push_back(type_declaration(kWorld));
  std::vector<HolEntry> user_decls = user_declarations(sig, true);
  for (auto& d : user_decls)
    if (!d.type) decls.push_back(d);
  HolTypePtr rel_type = arrows({world(), world()}, bool_type());
  for (const auto& i : indices) decls.push_back(constant_declaration(relation_name(i), rel_type));
  for (auto& d : user_decls)
    if (d.type) decls.push_back(d);
  for (const auto& n : sig.nominals) decls.push_back(constant_declaration(n, world(), true));

  std::vector<std::string> guarded;
  for (const auto& t : sig.quantified_types)
    if (cfg.quantification_for(t) != Quantification::Constant) guarded.push_back(t);
  auto tau = [](const std::string& t) { return hol_type(base_type(t)); };
  for (const auto& t : guarded)
    decls.push_back(constant_declaration(eiw_name(t), arrows({tau(t), world()}, bool_type())));
  if (has_hypotheses) decls.push_back(constant_declaration("mactual", world()));

  // Lifted connectives.
  auto A = var("A", prop()), B = var("B", prop()), W = wv("W"), V = wv("V");
  auto at = [](const HolTermPtr& p, const HolTermPtr& w) { return app(p, w); };
  auto unary_def = [&](const std::string& name, HolTermPtr body) {
    decls.push_back(constant_declaration(name, arrows({prop(), world()}, bool_type())));
    defs.push_back(definition(name, lam("A", prop(), lam("W", world(), body))));
  };
  auto binary_def = [&](const std::string& name, TermKind k) {
    decls.push_back(constant_declaration(name, arrows({prop(), prop(), world()}, bool_type())));
    defs.push_back(definition(
        name, lam("A", prop(), lam("B", prop(), lam("W", world(), connective(k, at(A, W), at(B, W)))))));
  };
  unary_def("mnot", lnot(at(A, W)));
  binary_def("mand", TermKind::And);
  binary_def("mor", TermKind::Or);
  binary_def("mimpl", TermKind::Implies);
  binary_def("mequiv", TermKind::Iff);

  auto Phi = var("Phi", prop());
  for (const auto& i : indices) {
    std::string r = relation_name(i);
    decls.push_back(constant_declaration(box_name(i), arrows({prop(), world()}, bool_type())));
    defs.push_back(definition(
        box_name(i),
        lam("Phi", prop(), lam("W", world(), forall("V", world(), implies(rel(r, W, V), at(Phi, V)))))));
    decls.push_back(constant_declaration(dia_name(i), arrows({prop(), world()}, bool_type())));
    defs.push_back(definition(
        dia_name(i),
        lam("Phi", prop(), lam("W", world(), exists("V", world(), land(rel(r, W, V), at(Phi, V)))))));
  }

  for (const auto& t : sig.quantified_types) {
    HolTypePtr pred = arrow(tau(t), prop());
    auto P = var("P", pred), X = var("X", tau(t));
    HolTermPtr body = app(P, {X, W});
    bool guard = cfg.quantification_for(t) != Quantification::Constant;
    HolTermPtr exists_in = guard ? app(cnst(eiw_name(t)), {X, W}) : nullptr;
    HolTermPtr all_body = guard ? implies(exists_in, body) : body;
    HolTermPtr some_body = guard ? land(exists_in, body) : body;
    for (auto [name, q, b] : {std::tuple{forall_name(t), TermKind::Forall, all_body},
                              std::tuple{exists_name(t), TermKind::Exists, some_body}}) {
      decls.push_back(constant_declaration(name, arrows({pred, world()}, bool_type())));
      defs.push_back(definition(name, lam("P", pred, lam("W", world(), binder(q, "X", tau(t), b)))));
    }
  }

  decls.push_back(constant_declaration("mglobal", arrow(prop(), bool_type())));
  defs.push_back(definition("mglobal", lam("A", prop(), forall("W", world(), at(A, W)))));
  if (has_hypotheses) {
    decls.push_back(constant_declaration("mlocal", arrow(prop(), bool_type())));
    defs.push_back(definition("mlocal", lam("A", prop(), at(A, cnst("mactual")))));
  }

  for (const auto& i : indices) {
    auto frame = frame_axioms(i, cfg.schemes_for(i));
    axioms.insert(axioms.end(), frame.begin(), frame.end());
  }
  for (const auto& t : guarded) {
    std::string e = eiw_name(t);
    auto X = var("X", tau(t));
    axioms.push_back(axiom(e + "_nonempty",
                           forall("W", world(), exists("X", tau(t), app(cnst(e), {X, W})))));
    Quantification q = cfg.quantification_for(t);
    if (q != Quantification::Cumulative && q != Quantification::Decreasing) continue;
    bool cumulative = q == Quantification::Cumulative;
    for (const auto& i : indices) {
      std::string r = relation_name(i);
      HolTermPtr from = app(cnst(e), {X, cumulative ? W : V});
      HolTermPtr to = app(cnst(e), {X, cumulative ? V : W});
      HolTermPtr body = implies(land(from, rel(r, W, V)), to);
      axioms.push_back(axiom(e + (cumulative ? "_cumulative_" : "_decreasing_") + r,
                             forall("X", tau(t), forall("W", world(), forall("V", world(), body)))));
    }
  }

  ModalConverter conv(fresh_name("W", variable_names(problem)));
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
