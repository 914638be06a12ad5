#include "ncl/oracle/decide.hpp"

#include <algorithm>

#include "ncl/error.hpp"
#include "ncl/logicspec/logic_spec.hpp"
#include "ncl/oracle/direct_eval.hpp"

namespace ncl::oracle {

using syntax::Role;

namespace {

struct Roles {
  std::vector<const syntax::Formula*> global, local;
  const syntax::Formula* conjecture = nullptr;
};

Roles split(const syntax::Problem& problem) {
  Roles r;
  static const syntax::FormulaPtr falsum = syntax::truth(false);
  for (const auto& af : problem.formulas) {
    const syntax::Formula* f = af.formula();
    if (!f) continue;
    if (af.role == Role::Conjecture) {
      if (r.conjecture) throw Error(ErrorCode::UsageError, "more than one conjecture");
      r.conjecture = f;
    } else if (af.role == Role::Hypothesis) {
      r.local.push_back(f);
    } else {
      r.global.push_back(f);
    }
  }
  if (!r.conjecture) r.conjecture = falsum.get();
  return r;
}

// World where the conjecture fails, or -1.
int failure(const FiniteModel& m, bool local, WorldSet conjecture) {
  WorldSet candidates = local ? WorldSet{1} : m.all();
  WorldSet failing = candidates & ~conjecture;
  for (int w = 0; w < m.worlds; ++w)
    if ((failing >> w) & 1) return w;
  return -1;
}

}  // namespace

Verdict decide_bounded(const syntax::Problem& problem, const Bounds& bounds) {
  auto [spec, rest] = logic::extract_logic_spec(problem);
  if (!spec) throw Error(ErrorCode::UnsupportedLogic, "the problem has no logic specification");
  Verdict out;
  out.bounds = bounds;
  out.vocabulary = build_vocabulary(rest, oracle_logic(*spec));
  Roles roles = split(rest);
  bool local = !roles.local.empty();

  DirectEvaluator eval(out.vocabulary);
  std::vector<int> global, hyps;
  for (const auto* f : roles.global) global.push_back(eval.compile(*f));
  for (const auto* f : roles.local) hyps.push_back(eval.compile(*f));
  int conj = eval.compile(*roles.conjecture);

  out.models_checked = enumerate_models(out.vocabulary, bounds, [&](const FiniteModel& m) {
    const WorldSet all = m.all();
    for (int h : global)
      if (eval.eval(h, m) != all) return true;
    for (int h : hyps)
      if (!(eval.eval(h, m) & 1)) return true;
    int w = failure(m, local, eval.eval(conj, m));
    if (w < 0) return true;
    out.countermodel = true;
    out.model = m;
    out.world = w;
    return false;
  });

  if (out.countermodel) {
    const FiniteModel& m = out.model;
    const Vocabulary& v = out.vocabulary;
    bool ok = !eval_direct(m, out.world, *roles.conjecture, v);
    for (int w = 0; w < m.worlds; ++w)
      for (const auto* f : roles.global) ok = ok && eval_direct(m, w, *f, v);
    for (const auto* f : roles.local) ok = ok && eval_direct(m, 0, *f, v);
    if (!ok) throw Error(ErrorCode::InternalError, "countermodel failed its re-check");
  }
  return out;
}

std::string Verdict::text() const {
  std::string range = "worlds <= " + std::to_string(bounds.max_worlds) +
                      ", domain <= " + std::to_string(bounds.max_domain);
  if (!countermodel)
    return "verdict: no countermodel within bounds (" + range + ")\nmodels checked: " +
           std::to_string(models_checked) + "\n";
  return "verdict: countermodel (" + range + ")\nfails at: w" + std::to_string(world) + "\n" +
         describe(model, vocabulary);
}

}  // namespace ncl::oracle
