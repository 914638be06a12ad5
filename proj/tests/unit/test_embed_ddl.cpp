#include "doctest.h"
#include "generators.hpp"
#include "ncl/embed/common.hpp"
#include "ncl/embed/ddl.hpp"
#include "ncl/error.hpp"
#include "ncl/holkit/hol_printer.hpp"
#include "ncl/logicspec/logic_spec.hpp"
#include "ncl/oracle/decide.hpp"
#include "ncl/oracle/direct_eval.hpp"
#include "ncl/oracle/faithfulness.hpp"
#include "ncl/oracle/hol_eval.hpp"
#include "ncl/pipeline.hpp"
#include "ncl/syntax/parser.hpp"

using namespace ncl;
using ncl::testing::error_of;
using ncl::testing::fixture;

namespace {

const std::string kE = "tff(s, logic, $$ddl == [$$system == $$aqvistE]).\n";
const std::string kCJ = "tff(s, logic, $$ddl == [$$system == $$carmoJones]).\n";

hol::HolProblem embed_text(const std::string& text) { return embed_problem(syntax::parse_problem(text)); }

std::string entry_text(const hol::HolProblem& p, const std::string& name) {
  const hol::HolEntry* e = p.entry(name);
  REQUIRE_MESSAGE(e, name);
  return hol::print_entry(*e);
}

oracle::Vocabulary vocabulary(const std::string& text) {
  auto [spec, rest] = logic::extract_logic_spec(syntax::parse_problem(text));
  return oracle::build_vocabulary(rest, oracle::oracle_logic(*spec));
}

// Evaluates the HOL axioms of cj_ob_axioms() on one table.
struct CjAxioms {
  hol::HolProblem problem;
  std::vector<hol::HolEntry> axioms = embed::cj_ob_axioms();
  std::unique_ptr<oracle::HolEvaluator> ev;

  CjAxioms() {
    problem.entries = {hol::type_declaration("mworld"),
                       hol::constant_declaration("mob", hol::arrows({embed::prop(), embed::prop()},
                                                                    hol::bool_type()))};
    ev = std::make_unique<oracle::HolEvaluator>(problem);
  }

  bool holds(std::size_t k, const oracle::ObTable& ob, int n) {
    ev->set_carriers({{"mworld", static_cast<uint64_t>(n)}});
    ev->set_constant("mob", ev->encode(problem.entries[1].type, [&](const std::vector<uint64_t>& a) {
      return (ob[a[0]] >> a[1]) & 1;
    }));
    return ev->eval_bool(axioms[k].formula);
  }
};

oracle::ObTable known_good(int n) {
  uint64_t sets = uint64_t{1} << n;
  oracle::ObTable ob(sets);
  for (uint64_t x = 1; x < sets; ++x)
    for (uint64_t y = 0; y < sets; ++y)
      if (x & y) ob[x] |= uint64_t{1} << y;
  return ob;
}

}  // namespace

TEST_CASE("system E definitions") {
  hol::HolProblem p = embed_text(fixture("examples/example3_ctd.p"));
  CHECK(to_string(*p.declaration("mbetter")->type) == "mworld > mworld > $o");
  CHECK(entry_text(p, "mopt_def") ==
        "thf(mopt_def, definition, mopt = ( ^[Phi: mworld > $o, V: mworld]: ((Phi @ V) & ( ! [U: mworld]: ((Phi @ "
        "U) => (mbetter @ V @ U)))))).");
  CHECK(entry_text(p, "mobl_def") ==
        "thf(mobl_def, definition, mobl = ( ^[Psi: mworld > $o, Phi: mworld > $o, W: mworld]: ! [V: mworld]: ((mopt "
        "@ Phi @ V) => (Psi @ V)))).");
  CHECK(entry_text(p, "a2") == "thf(a2, axiom, (mglobal @ (mobl @ tell @ go))).");
  CHECK(entry_text(p, "c") == "thf(c, conjecture, (mglobal @ (mobl @ (mnot @ tell) @ ( ^[W: mworld]: $true)))).");
  for (const auto& e : p.entries) CHECK(e.segment != hol::Segment::Axiom);  // betterness is unconstrained
  CHECK(p.declaration("mob") == nullptr);
}

TEST_CASE("Carmo-Jones definitions") {
  hol::HolProblem p = embed_text(fixture("roundtrip/10_ddl_cj.p"));
  CHECK(to_string(*p.declaration("mob")->type) == "(mworld > $o) > (mworld > $o) > $o");
  CHECK(entry_text(p, "mobl_def") ==
        "thf(mobl_def, definition, mobl = ( ^[Psi: mworld > $o, Phi: mworld > $o, W: mworld]: (mob @ Phi @ Psi))).");
  CHECK(entry_text(p, "mob_5a") ==
        "thf(mob_5a, axiom, ! [X: mworld > $o]: (~ (mob @ X @ ( ^[W: mworld]: $false)))).");
  for (const char* name : {"mob_5b", "mob_5c", "mob_5d", "mob_5e"}) CHECK(p.entry(name));
  CHECK(p.declaration("mbetter") == nullptr);
}

TEST_CASE("example 3 has no countermodel") {
  oracle::Verdict v = oracle::decide_bounded(syntax::parse_problem(fixture("examples/example3_ctd.p")), oracle::Bounds{});
  CHECK_FALSE(v.countermodel);
  CHECK(v.bounds.max_worlds == 3);
  CHECK(v.models_checked > 0);
}

TEST_CASE("best world obligation") {
  oracle::Vocabulary voc = vocabulary(kE + "tff(c, conjecture, {$$obl}(p, $true)).");
  oracle::FiniteModel m;
  m.worlds = 2;
  m.better = 0b1011;  // w0 >= w0, w0 >= w1, w1 >= w1
  m.valuation = {{0b01}};
  auto f = syntax::parse_formula("{$$obl}(p, $true)");
  CHECK(oracle::eval_direct(m, 0, *f, voc));
  CHECK(oracle::eval_direct(m, 1, *f, voc));
  m.valuation = {{0b10}};
  CHECK_FALSE(oracle::eval_direct(m, 0, *f, voc));
}

TEST_CASE("obligations given a condition are valid for it") {
  oracle::Verdict v =
      oracle::decide_bounded(syntax::parse_problem(kE + "tff(c, conjecture, {$$obl}(p, p))."), oracle::Bounds{});
  CHECK_FALSE(v.countermodel);
  oracle::Verdict w =
      oracle::decide_bounded(syntax::parse_problem(kE + "tff(c, conjecture, {$$obl}(p, q))."), oracle::Bounds{});
  CHECK(w.countermodel);
}

TEST_CASE("obligation is world independent") {
  ncl::testing::Rng rng(3);
  ncl::testing::GenOptions o;
  o.depth = 2;
  std::vector<syntax::FormulaPtr> formulas;
  for (int i = 0; i < 10; ++i)
    formulas.push_back(syntax::non_classical("$$obl", {}, {ncl::testing::random_ddl(rng, o),
                                                           ncl::testing::random_ddl(rng, o)}));
  for (const std::string& spec : {kE, kCJ}) {
    syntax::Problem problem = ncl::testing::problem_of(spec, formulas);
    hol::HolProblem embedded = embed_problem(problem);
    auto [s, rest] = logic::extract_logic_spec(problem);
    oracle::Vocabulary voc = oracle::build_vocabulary(rest, oracle::oracle_logic(*s));
    oracle::ModelInterpreter interp(voc, embedded);
    oracle::HolEvaluator ev(embedded);
    oracle::Bounds b;
    b.max_worlds = 2;
    oracle::enumerate_models(voc, b, [&](const oracle::FiniteModel& m) {
      interp.load(ev, m);
      for (std::size_t i = 0; i < formulas.size(); ++i) {
        oracle::Value fn = ev.eval(embedded.entry("f" + std::to_string(i))->lifted);
        uint64_t mask = 0;
        for (int w = 0; w < m.worlds; ++w)
          mask |= ev.apply(fn, oracle::Value{static_cast<uint64_t>(w), nullptr}, embed::prop()).bits << w;
        CHECK((mask == 0 || mask == m.all()));
      }
      return true;
    });
  }
}

TEST_CASE("E faithfulness sample") {
  ncl::testing::Rng rng(21);
  ncl::testing::GenOptions o;
  o.depth = 2;
  std::vector<syntax::FormulaPtr> formulas;
  for (int i = 0; i < 60; ++i) formulas.push_back(ncl::testing::random_ddl(rng, o));
  syntax::Problem problem = ncl::testing::problem_of(kE, formulas);
  oracle::FaithReport r = oracle::check_faithfulness(problem, embed_problem(problem), oracle::Bounds{});
  CHECK_MESSAGE(r.ok(), r.text());
  CHECK(r.models > 0);
}

TEST_CASE("Carmo-Jones faithfulness sample") {
  ncl::testing::Rng rng(22);
  ncl::testing::GenOptions o;
  o.depth = 2;
  std::vector<syntax::FormulaPtr> formulas;
  for (int i = 0; i < 40; ++i) formulas.push_back(ncl::testing::random_ddl(rng, o));
  syntax::Problem problem = ncl::testing::problem_of(kCJ, formulas);
  oracle::Bounds b;
  b.max_worlds = 2;
  oracle::FaithReport r = oracle::check_faithfulness(problem, embed_problem(problem), b);
  CHECK_MESSAGE(r.ok(), r.text());
}

TEST_CASE("known-good table on one world") {
  oracle::ObTable good = known_good(1);
  CHECK(oracle::cj_conditions(good, 1));
  CjAxioms hol;
  for (std::size_t k = 0; k < 5; ++k) CHECK(hol.holds(k, good, 1));
}

TEST_CASE("an obligatory empty set violates condition a") {
  CjAxioms hol;
  for (int n = 1; n <= 2; ++n) {
    oracle::ObTable bad = known_good(n);
    bad[1] |= 1;
    CHECK_FALSE(oracle::cj_condition('a', bad, n));
    CHECK_FALSE(hol.holds(0, bad, n));
  }
}

TEST_CASE("tables local to the context satisfy condition b") {
  CjAxioms hol;
  for (int n = 1; n <= 2; ++n) {
    uint64_t sets = uint64_t{1} << n;
    // ob(X, Y) depends on X and X & Y only.
    for (uint64_t seed = 0; seed < 16; ++seed) {
      oracle::ObTable ob(sets);
      for (uint64_t x = 0; x < sets; ++x)
        for (uint64_t y = 0; y < sets; ++y)
          if ((seed >> ((x * 3 + (x & y)) % 4)) & 1) ob[x] |= uint64_t{1} << y;
      CHECK(oracle::cj_condition('b', ob, n));
      CHECK(hol.holds(1, ob, n));
    }
  }
}

TEST_CASE("condition checks agree with the emitted axioms on all small tables") {
  CjAxioms hol;
  int agree = 0;
  for (int n = 1; n <= 2; ++n) {
    uint64_t sets = uint64_t{1} << n;
    uint64_t bits = sets * sets;
    for (uint64_t code = 0; code < (uint64_t{1} << bits); ++code) {
      oracle::ObTable ob(sets);
      for (uint64_t x = 0; x < sets; ++x) ob[x] = (code >> (x * sets)) & ((uint64_t{1} << sets) - 1);
      for (std::size_t k = 0; k < 5; ++k) {
        bool direct = oracle::cj_condition(static_cast<char>('a' + k), ob, n);
        if (direct == hol.holds(k, ob, n)) {
          ++agree;
        } else {
          FAIL_CHECK("condition " << static_cast<char>('a' + k) << " disagrees on table " << code);
        }
      }
    }
  }
  CHECK(agree == 5 * (16 + 65536));
}

TEST_CASE("enumerated tables satisfy every condition") {
  for (int n = 1; n <= 3; ++n) {
    const auto& tables = oracle::cj_tables(n);
    CHECK_FALSE(tables.empty());
    for (const auto& t : tables) CHECK(oracle::cj_conditions(t, n));
  }
  CHECK(error_of([] { oracle::cj_tables(4); }) == ErrorCode::BudgetExceeded);
}

TEST_CASE("ddl fragment errors") {
  CHECK(error_of([] { embed_text(kE + "tff(c, conjecture, ![X]: {$$obl}(q(X), $true))."); }) ==
        ErrorCode::NotPropositional);
  CHECK(error_of([] { embed_text(kE + "tff(c, conjecture, {$$obl}(p))."); }) == ErrorCode::MalformedConnective);
  CHECK(error_of([] { embed_text(kE + "tff(c, conjecture, {$dia}(p))."); }) == ErrorCode::UnsupportedConnective);
  CHECK(error_of([] {
          embed_text("tff(s, logic, $$ddl == [$$system == $$aqvistF]).\ntff(c, conjecture, p).");
        }) == ErrorCode::UnknownParameter);
}
