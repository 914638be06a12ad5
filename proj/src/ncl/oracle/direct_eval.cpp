#include "ncl/oracle/direct_eval.hpp"

#include <cctype>
#include <map>

#include "ncl/error.hpp"
#include "ncl/syntax/printer.hpp"
#include "ncl/syntax/signature.hpp"

namespace ncl::oracle {

using syntax::Connective;
using syntax::Formula;
using syntax::FormulaKind;

namespace {

enum class Op {
  True, False, Atom, Equal, NotEqual, Not, Binary, Forall, Exists,
  Box, Dia, Nominal, Shift, Bind, WorldVar, Knows, Common, Announce, Obligation,
};

// Terms denote individuals: a variable slot or a function application.
struct Term {
  int slot = -1;
  int function = -1;
  std::vector<Term> args;
};

struct Node {
  Op op = Op::True;
  Connective connective = Connective::And;
  int id = -1;     // predicate, relation, nominal, or sort of a quantifier
  int slot = -1;   // bound variable slot, or world variable for Shift/WorldVar
  std::vector<Term> terms;
  std::vector<int> relations;  // Common
  std::vector<std::unique_ptr<Node>> kids;
};

WorldSet combine(Connective c, WorldSet a, WorldSet b, WorldSet all) {
  switch (c) {
    case Connective::And: return a & b;
    case Connective::Or: return a | b;
    case Connective::Implies: return (~a | b) & all;
    case Connective::ReverseImplies: return (a | ~b) & all;
    case Connective::Iff: return ~(a ^ b) & all;
    case Connective::Xor: return (a ^ b) & all;
    case Connective::Nor: return ~(a | b) & all;
    case Connective::Nand: return ~(a & b) & all;
    case Connective::Not: break;
  }
  return 0;
}

bool bit(WorldSet s, int w) { return (s >> w) & 1; }

}  // namespace

struct DirectEvaluator::Impl {
  const Vocabulary& voc;
  std::vector<std::unique_ptr<Node>> roots;
  // Compile-time scope: variable name -> (slot, sort or -1 for worlds).
  std::vector<std::pair<std::string, int>> scope;
  int slots = 0;
  // Evaluation state.
  const FiniteModel* m = nullptr;
  std::vector<int> env;

  explicit Impl(const Vocabulary& v) : voc(v) {}

  [[noreturn]] void fragment(ErrorCode code, const Formula& f, const std::string& why) const {
    throw Error(code, why + ": " + syntax::print_formula(f));
  }

  bool propositional() const {
    return voc.logic.family == Family::Pal || voc.logic.family == Family::Ddl;
  }

  int lookup(const std::string& name) const {
    for (std::size_t i = scope.size(); i-- > 0;)
      if (scope[i].first == name) return static_cast<int>(i);
    return -1;
  }

  Term term(const Formula& f) {
    Term t;
    if (f.kind == FormulaKind::Variable) {
      int i = lookup(f.name);
      if (i < 0 || scope[i].second < 0)
        throw Error(ErrorCode::TypeError, "unbound individual variable " + f.name);
      t.slot = i;
      return t;
    }
    if (f.kind != FormulaKind::Apply) fragment(ErrorCode::TypeError, f, "not a term");
    t.function = voc.function_id(f.name);
    if (t.function < 0) fragment(ErrorCode::TypeError, f, "unknown function symbol");
    for (const auto& a : f.args) t.args.push_back(term(*a));
    return t;
  }

  std::unique_ptr<Node> node(Op op) {
    auto n = std::make_unique<Node>();
    n->op = op;
    return n;
  }

  int relation(const std::string& index, const Formula& f) {
    int r = voc.relation_id(index);
    if (r < 0) fragment(ErrorCode::InternalError, f, "relation not in vocabulary");
    return r;
  }

  std::unique_ptr<Node> compile(const Formula& f) {
    switch (f.kind) {
      case FormulaKind::True:
        return node(Op::True);
      case FormulaKind::False:
        return node(Op::False);
      case FormulaKind::Variable: {
        int i = lookup(f.name);
        if (i < 0 || scope[i].second >= 0)
          fragment(ErrorCode::TypeError, f, "variable in formula position");
        auto n = node(Op::WorldVar);
        n->slot = i;
        return n;
      }
      case FormulaKind::Apply: {
        auto n = node(Op::Atom);
        n->id = voc.predicate_id(f.name);
        if (n->id < 0) fragment(ErrorCode::TypeError, f, "unknown predicate");
        if (propositional() && !f.args.empty())
          fragment(ErrorCode::NotPropositional, f, "non-propositional atom");
        for (const auto& a : f.args) n->terms.push_back(term(*a));
        return n;
      }
      case FormulaKind::Equal:
      case FormulaKind::NotEqual: {
        if (propositional()) fragment(ErrorCode::NotPropositional, f, "equality");
        auto n = node(f.kind == FormulaKind::Equal ? Op::Equal : Op::NotEqual);
        n->terms.push_back(term(*f.args[0]));
        n->terms.push_back(term(*f.args[1]));
        return n;
      }
      case FormulaKind::Unary: {
        auto n = node(Op::Not);
        n->kids.push_back(compile(*f.args[0]));
        return n;
      }
      case FormulaKind::Binary: {
        auto n = node(Op::Binary);
        n->connective = f.connective;
        n->kids.push_back(compile(*f.args[0]));
        n->kids.push_back(compile(*f.args[1]));
        return n;
      }
      case FormulaKind::Forall:
      case FormulaKind::Exists:
        return quantifier(f, 0);
      case FormulaKind::NonClassical:
        return connective(f);
      default:
        fragment(ErrorCode::TypeError, f, "not a formula");
    }
  }

  std::unique_ptr<Node> quantifier(const Formula& f, std::size_t k) {
    if (k == f.variables.size()) return compile(*f.args[0]);
    if (propositional()) fragment(ErrorCode::NotPropositional, f, "quantifier");
    const auto& v = f.variables[k];
    auto n = node(f.kind == FormulaKind::Forall ? Op::Forall : Op::Exists);
    n->id = voc.sort_id(syntax::variable_type(v)->name);
    if (n->id < 0) fragment(ErrorCode::TypeError, f, "quantified type without a sort");
    n->slot = push(v.name, n->id);
    n->kids.push_back(quantifier(f, k + 1));
    scope.pop_back();
    return n;
  }

  int push(const std::string& name, int sort) {
    scope.emplace_back(name, sort);
    slots = std::max(slots, static_cast<int>(scope.size()));
    return static_cast<int>(scope.size()) - 1;
  }

  void allow(const Formula& f, bool ok) const {
    if (!ok) fragment(ErrorCode::UnsupportedConnective, f, "connective outside the logic");
  }

  std::unique_ptr<Node> connective(const Formula& f) {
    Family fam = voc.logic.family;
    bool modal = fam == Family::Modal || fam == Family::Hybrid;
    const std::string& c = f.name;
    if (c == "$box" || c == "$dia") {
      allow(f, modal);
      auto n = node(c == "$box" ? Op::Box : Op::Dia);
      auto idx = f.indices();
      n->id = relation(idx.empty() ? "" : idx[0], f);
      n->kids.push_back(compile(*f.args.at(0)));
      return n;
    }
    if (c == "$$nominal") {
      allow(f, fam == Family::Hybrid);
      auto n = node(Op::Nominal);
      n->id = voc.nominal_id(f.args.at(0)->name);
      return n;
    }
    if (c == "$$shift") {
      allow(f, fam == Family::Hybrid);
      auto n = node(Op::Shift);
      std::string name = f.indices().at(0).substr(1);
      int i = lookup(name);
      if (i >= 0 && scope[i].second < 0) {
        n->slot = i;
      } else {
        n->id = voc.nominal_id(name);
        if (n->id < 0) fragment(ErrorCode::TypeError, f, "unknown nominal");
      }
      n->kids.push_back(compile(*f.args.at(0)));
      return n;
    }
    if (c == "$$bind") {
      allow(f, fam == Family::Hybrid);
      auto n = node(Op::Bind);
      n->slot = push(f.indices().at(0).substr(1), -1);
      n->kids.push_back(compile(*f.args.at(0)));
      scope.pop_back();
      return n;
    }
    if (c == "$$knows") {
      allow(f, fam == Family::Pal);
      auto n = node(Op::Knows);
      n->id = relation(f.indices().at(0), f);
      n->kids.push_back(compile(*f.args.at(0)));
      return n;
    }
    if (c == "$$common") {
      allow(f, fam == Family::Pal);
      auto n = node(Op::Common);
      auto group = f.param("$$group");
      if (!group || group->args.empty())
        fragment(ErrorCode::MalformedConnective, f, "missing agent group");
      for (const auto& a : group->args)
        n->relations.push_back(relation(a->kind == FormulaKind::Index ? a->name : "#" + a->name, f));
      n->kids.push_back(compile(*f.args.at(0)));
      return n;
    }
    if (c == "$$announce") {
      allow(f, fam == Family::Pal);
      auto n = node(Op::Announce);
      auto psi = f.param("$$formula");
      if (!psi) fragment(ErrorCode::MalformedConnective, f, "missing announced formula");
      n->kids.push_back(compile(*psi));
      n->kids.push_back(compile(*f.args.at(0)));
      return n;
    }
    if (c == "$$obl") {
      allow(f, fam == Family::Ddl);
      if (f.args.size() != 2) fragment(ErrorCode::MalformedConnective, f, "expected two arguments");
      auto n = node(Op::Obligation);
      n->kids.push_back(compile(*f.args[0]));
      n->kids.push_back(compile(*f.args[1]));
      return n;
    }
    allow(f, false);
    return nullptr;
  }

  // ---- evaluation --------------------------------------------------------

  int value(const Term& t) {
    if (t.slot >= 0) return env[t.slot];
    const Symbol& sym = voc.functions[t.function];
    std::size_t i = 0;
    for (std::size_t k = 0; k < t.args.size(); ++k) i = i * m->domain[sym.args[k]] + value(t.args[k]);
    return m->functions[t.function][i];
  }

  WorldSet eval(const Node& n, WorldSet D) {
    const WorldSet all = m->all();
    switch (n.op) {
      case Op::True:
        return all;
      case Op::False:
        return 0;
      case Op::Atom: {
        const Symbol& sym = voc.predicates[n.id];
        std::size_t i = 0;
        for (std::size_t k = 0; k < n.terms.size(); ++k)
          i = i * m->domain[sym.args[k]] + value(n.terms[k]);
        return m->valuation[n.id][i];
      }
      case Op::Equal:
        return value(n.terms[0]) == value(n.terms[1]) ? all : 0;
      case Op::NotEqual:
        return value(n.terms[0]) != value(n.terms[1]) ? all : 0;
      case Op::Not:
        return ~eval(*n.kids[0], D) & all;
      case Op::Binary:
        return combine(n.connective, eval(*n.kids[0], D), eval(*n.kids[1], D), all);
      case Op::Forall:
      case Op::Exists: {
        bool universal = n.op == Op::Forall;
        bool guarded = voc.sorts[n.id].guarded();
        WorldSet acc = universal ? all : 0;
        for (int d = 0; d < m->domain[n.id]; ++d) {
          WorldSet e = guarded ? m->exists[n.id][d] : all;
          env[n.slot] = d;
          WorldSet body = eval(*n.kids[0], D);
          if (universal) acc &= (~e | body) & all;
          else acc |= e & body;
        }
        return acc;
      }
      case Op::Box:
      case Op::Dia: {
        WorldSet body = eval(*n.kids[0], D);
        WorldSet out = 0;
        for (int w = 0; w < m->worlds; ++w) {
          WorldSet succ = m->successors(m->relations[n.id], w);
          bool holds = n.op == Op::Box ? (succ & ~body) == 0 : (succ & body) != 0;
          if (holds) out |= WorldSet{1} << w;
        }
        return out;
      }
      case Op::Nominal:
        return WorldSet{1} << m->nominals[n.id];
      case Op::WorldVar:
        return WorldSet{1} << env[n.slot];
      case Op::Shift: {
        int target = n.slot >= 0 ? env[n.slot] : m->nominals[n.id];
        return bit(eval(*n.kids[0], D), target) ? all : 0;
      }
      case Op::Bind: {
        WorldSet out = 0;
        for (int w = 0; w < m->worlds; ++w) {
          env[n.slot] = w;
          if (bit(eval(*n.kids[0], D), w)) out |= WorldSet{1} << w;
        }
        return out;
      }
      case Op::Knows: {
        WorldSet body = eval(*n.kids[0], D);
        WorldSet out = 0;
        for (int w = 0; w < m->worlds; ++w)
          if ((m->successors(m->relations[n.id], w) & D & ~body) == 0) out |= WorldSet{1} << w;
        return out;
      }
      case Op::Common: {
        WorldSet body = eval(*n.kids[0], D);
        // Reachability by one or more steps along the group's edges into D.
        WorldSet step[kMaxWorlds] = {};
        for (int u = 0; u < m->worlds; ++u)
          for (int r : n.relations) step[u] |= m->successors(m->relations[r], u) & D;
        WorldSet reach[kMaxWorlds];
        for (int u = 0; u < m->worlds; ++u) reach[u] = step[u];
        for (bool changed = true; changed;) {
          changed = false;
          for (int u = 0; u < m->worlds; ++u) {
            WorldSet next = reach[u];
            for (int v = 0; v < m->worlds; ++v)
              if (bit(reach[u], v)) next |= step[v];
            if (next != reach[u]) {
              reach[u] = next;
              changed = true;
            }
          }
        }
        WorldSet out = 0;
        for (int w = 0; w < m->worlds; ++w)
          if ((reach[w] & ~body) == 0) out |= WorldSet{1} << w;
        return out;
      }
      case Op::Announce: {
        WorldSet psi = eval(*n.kids[0], D);
        return (~psi | eval(*n.kids[1], D & psi)) & all;
      }
      case Op::Obligation: {
        WorldSet psi = eval(*n.kids[0], D);
        WorldSet phi = eval(*n.kids[1], D);
        if (voc.logic.ddl.system == logic::DdlSystem::CarmoJones)
          return (m->ob[phi] >> psi) & 1 ? all : 0;
        WorldSet best = 0;
        for (int v = 0; v < m->worlds; ++v) {
          if (!bit(phi, v)) continue;
          bool top = true;
          for (int u = 0; u < m->worlds && top; ++u) top = !bit(phi, u) || m->prefers(v, u);
          if (top) best |= WorldSet{1} << v;
        }
        return (best & ~psi) == 0 ? all : 0;
      }
    }
    return 0;
  }
};

DirectEvaluator::DirectEvaluator(const Vocabulary& vocabulary)
    : impl_(std::make_unique<Impl>(vocabulary)) {}

DirectEvaluator::~DirectEvaluator() = default;

int DirectEvaluator::compile(const Formula& formula) {
  impl_->scope.clear();
  impl_->roots.push_back(impl_->compile(formula));
  return static_cast<int>(impl_->roots.size()) - 1;
}

WorldSet DirectEvaluator::eval(int handle, const FiniteModel& model) {
  impl_->m = &model;
  impl_->env.assign(std::max(impl_->slots, 1), 0);
  return impl_->eval(*impl_->roots.at(handle), model.all());
}

bool eval_direct(const FiniteModel& model, int world, const Formula& formula,
                 const Vocabulary& vocabulary) {
  DirectEvaluator e(vocabulary);
  return bit(e.eval(e.compile(formula), model), world);
}

}  // namespace ncl::oracle
