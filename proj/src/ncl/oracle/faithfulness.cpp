#include "ncl/oracle/faithfulness.hpp"

#include "ncl/embed/common.hpp"
#include "ncl/embed/pal.hpp"
#include "ncl/error.hpp"
#include "ncl/holkit/hol_printer.hpp"
#include "ncl/logicspec/logic_spec.hpp"
#include "ncl/oracle/direct_eval.hpp"

namespace ncl::oracle {

using namespace ncl::hol;

namespace {

const HolEntry* user_declaration(const HolProblem& p, const std::string& source, bool type_decl) {
  for (const auto& e : p.entries)
    if (e.segment == Segment::Declaration && e.user && e.source_name == source &&
        (e.type == nullptr) == type_decl)
      return &e;
  return nullptr;
}

const HolEntry* declaration(const HolProblem& p, const std::string& symbol) {
  const HolEntry* e = p.declaration(symbol);
  return e && !e->user ? e : nullptr;
}

}  // namespace

ModelInterpreter::ModelInterpreter(const Vocabulary& v, const HolProblem& p) : voc_(v) {
  for (const auto& s : v.sorts) {
    const HolEntry* d = s.name[0] == '$' ? nullptr : user_declaration(p, s.name, true);
    sort_names_.push_back(d ? d->symbol : s.name);
  }
  auto bind = [&](Binding::Kind kind, int id, const HolEntry* d) {
    if (d) bindings_.push_back({kind, id, d->symbol, d->type});
  };
  for (std::size_t r = 0; r < v.relations.size(); ++r)
    bind(Binding::Relation, static_cast<int>(r), declaration(p, embed::relation_name(v.relations[r].index)));
  for (std::size_t s = 0; s < v.sorts.size(); ++s)
    if (v.sorts[s].guarded())
      bind(Binding::Exists, static_cast<int>(s), declaration(p, embed::eiw_name(v.sorts[s].name)));
  for (std::size_t i = 0; i < v.predicates.size(); ++i)
    bind(Binding::Predicate, static_cast<int>(i), user_declaration(p, v.predicates[i].name, false));
  for (std::size_t i = 0; i < v.functions.size(); ++i)
    bind(Binding::Function, static_cast<int>(i), user_declaration(p, v.functions[i].name, false));
  for (std::size_t i = 0; i < v.nominals.size(); ++i)
    bind(Binding::Nominal, static_cast<int>(i), user_declaration(p, v.nominals[i], false));
  bind(Binding::Actual, 0, declaration(p, "mactual"));
  bind(Binding::Better, 0, declaration(p, "mbetter"));
  bind(Binding::Ob, 0, declaration(p, "mob"));
}

void ModelInterpreter::load(HolEvaluator& eval, const FiniteModel& m) const {
  std::map<std::string, uint64_t> carriers{{embed::kWorld, static_cast<uint64_t>(m.worlds)}};
  for (std::size_t s = 0; s < sort_names_.size(); ++s) carriers[sort_names_[s]] = m.domain[s];
  eval.set_carriers(carriers);
  const uint64_t n = static_cast<uint64_t>(m.worlds);
  for (const auto& b : bindings_) {
    std::function<uint64_t(const std::vector<uint64_t>&)> table;
    switch (b.kind) {
      case Binding::Relation:
        table = [&](const auto& a) { return (m.relations[b.id] >> (a[0] * n + a[1])) & 1; };
        break;
      case Binding::Exists:
        table = [&](const auto& a) { return (m.exists[b.id][a[0]] >> a[1]) & 1; };
        break;
      case Binding::Predicate:
        table = [&](const auto& a) {
          std::size_t t = 0;
          const Symbol& sym = voc_.predicates[b.id];
          for (std::size_t k = 0; k < sym.args.size(); ++k) t = t * m.domain[sym.args[k]] + a[k];
          return static_cast<uint64_t>((m.valuation[b.id][t] >> a.back()) & 1);
        };
        break;
      case Binding::Function:
        table = [&](const auto& a) {
          std::size_t t = 0;
          const Symbol& sym = voc_.functions[b.id];
          for (std::size_t k = 0; k < sym.args.size(); ++k) t = t * m.domain[sym.args[k]] + a[k];
          return static_cast<uint64_t>(m.functions[b.id][t]);
        };
        break;
      case Binding::Nominal:
        table = [&](const auto&) { return static_cast<uint64_t>(m.nominals[b.id]); };
        break;
      case Binding::Actual:
        table = [](const auto&) { return uint64_t{0}; };
        break;
      case Binding::Better:
        table = [&](const auto& a) { return (m.better >> (a[0] * n + a[1])) & 1; };
        break;
      case Binding::Ob:
        table = [&](const auto& a) { return (m.ob[a[0]] >> a[1]) & 1; };
        break;
    }
    eval.set_constant(b.symbol, eval.encode(b.type, table));
  }
}

std::string FaithReport::text() const {
  std::string out = "models: " + std::to_string(models) + "\ncomparisons: " +
                    std::to_string(comparisons) + "\ndisagreements: " +
                    std::to_string(disagreement_count) + "\n";
  for (const auto& d : disagreements) {
    out += "formula " + d.formula;
    if (d.world >= 0) out += " at w" + std::to_string(d.world);
    out += ": " + d.detail + "\n" + d.model;
  }
  return out;
}

FaithReport check_faithfulness(const syntax::Problem& problem, const HolProblem& embedded,
                               const Bounds& bounds, std::size_t max_reports) {
  auto [spec, rest] = logic::extract_logic_spec(problem);
  if (!spec) throw Error(ErrorCode::UnsupportedLogic, "the problem has no logic specification");
  Vocabulary voc = build_vocabulary(rest, oracle_logic(*spec));
  bool pal = voc.logic.family == Family::Pal;

  struct Check {
    std::string name;
    int direct;
    HolTermPtr lifted;
    HolTermPtr wrapped;
    bool local;
  };
  bool has_hypotheses = false;
  for (const auto& af : rest.formulas) has_hypotheses = has_hypotheses || af.role == syntax::Role::Hypothesis;
  DirectEvaluator direct(voc);
  std::vector<Check> checks;
  for (const auto& af : rest.formulas) {
    if (!af.formula()) continue;
    const HolEntry* e = nullptr;
    for (const auto& entry : embedded.entries)
      if (entry.segment == Segment::UserFormula && entry.source_name == af.name) e = &entry;
    if (!e) throw Error(ErrorCode::InternalError, "formula " + af.name + " missing from the embedding");
    bool local = af.role == syntax::Role::Hypothesis ||
                 (af.role == syntax::Role::Conjecture && has_hypotheses);
    checks.push_back({af.name, direct.compile(*af.formula()), e->lifted, e->formula, local});
  }
  std::vector<const HolEntry*> axioms;
  for (const auto& e : embedded.entries)
    if (e.segment == Segment::Axiom) axioms.push_back(&e);

  ModelInterpreter interp(voc, embedded);
  HolEvaluator hol(embedded);
  HolTypePtr lifted_type = pal ? embed::pal_prop() : nullptr;
  FaithReport report;
  auto disagree = [&](const FiniteModel& m, const std::string& name, int world, std::string detail) {
    ++report.disagreement_count;
    if (report.disagreements.size() < max_reports)
      report.disagreements.push_back({name, describe(m, voc), world, std::move(detail)});
  };
  report.models = enumerate_models(voc, bounds, [&](const FiniteModel& m) {
    interp.load(hol, m);
    const WorldSet all = m.all();
    for (const auto* a : axioms) {
      ++report.comparisons;
      if (!hol.eval_bool(a->formula)) disagree(m, a->name, -1, "emitted axiom is false");
    }
    for (const auto& c : checks) {
      WorldSet expected = direct.eval(c.direct, m);
      Value v = hol.eval(c.lifted);
      if (pal) v = hol.apply(v, Value{all, nullptr}, lifted_type);
      WorldSet actual = static_cast<WorldSet>(v.bits) & all;
      report.comparisons += m.worlds;
      for (int w = 0; w < m.worlds; ++w) {
        bool d = (expected >> w) & 1, h = (actual >> w) & 1;
        if (d != h)
          disagree(m, c.name, w, std::string("direct ") + (d ? "true" : "false") + ", embedded " +
                                     (h ? "true" : "false"));
      }
      bool wrapped_direct = c.local ? (expected & 1) : expected == all;
      ++report.comparisons;
      if (hol.eval_bool(c.wrapped) != wrapped_direct)
        disagree(m, c.name, -1, "role-wrapped formula disagrees");
    }
    return true;
  });
  return report;
}

}  // namespace ncl::oracle
