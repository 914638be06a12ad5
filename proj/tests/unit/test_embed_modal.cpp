#include "doctest.h"
#include "generators.hpp"
#include "ncl/embed/common.hpp"
#include "ncl/embed/modal.hpp"
#include "ncl/error.hpp"
#include "ncl/holkit/hol_printer.hpp"
#include "ncl/holkit/normalize.hpp"
#include "ncl/holkit/typecheck.hpp"
#include "ncl/logicspec/logic_spec.hpp"
#include "ncl/pipeline.hpp"
#include "ncl/syntax/parser.hpp"

using namespace ncl;
using ncl::testing::error_of;
using ncl::testing::fixture;

namespace {

const char* kK = "tff(s, logic, $modal == [$modalities == $modal_system_K]).\n";

hol::HolProblem embed_text(const std::string& text, bool inline_defs = false) {
  return embed_problem(syntax::parse_problem(text), inline_defs);
}

std::string entry_text(const hol::HolProblem& p, const std::string& name) {
  const hol::HolEntry* e = p.entry(name);
  REQUIRE_MESSAGE(e, name);
  return hol::print_entry(*e);
}

bool contains(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("example 1 embedding") {
  hol::HolProblem p = embed_text(fixture("examples/example1_barcan.p"));
  CHECK(entry_text(p, "mrel_euclidean") ==
        "thf(mrel_euclidean, axiom, ! [U: mworld, V: mworld, W: mworld]: (((mrel @ U @ V) & (mrel @ U @ W)) => "
        "(mrel @ V @ W))).");
  CHECK(entry_text(p, "meiw_i_decreasing_mrel") ==
        "thf(meiw_i_decreasing_mrel, axiom, ! [X: $i, W: mworld, V: mworld]: (((meiw_i @ X @ V) & (mrel @ W @ "
        "V)) => (meiw_i @ X @ W))).");
  CHECK(entry_text(p, "meiw_i_nonempty") ==
        "thf(meiw_i_nonempty, axiom, ! [W: mworld]: ? [X: $i]: (meiw_i @ X @ W)).");
  CHECK(entry_text(p, "bf") ==
        "thf(bf, conjecture, (mglobal @ (mimpl @ (mforall_i @ ( ^[X: $i]: (mbox @ (f @ X)))) @ (mbox @ "
        "(mforall_i @ ( ^[X: $i]: (f @ X))))))).");
  CHECK(to_string(*p.declaration("f")->type) == "$i > mworld > $o");
  CHECK(p.declaration("mactual") == nullptr);

  // Inlined, the conjecture is the quantification over all worlds.
  hol::HolProblem inl = embed_text(fixture("examples/example1_barcan.p"), true);
  CHECK(entry_text(inl, "bf") ==
        "thf(bf, conjecture, ! [W: mworld]: (( ! [X: $i]: ((meiw_i @ X @ W) => ( ! [V: mworld]: ((mrel @ W @ V) "
        "=> (f @ X @ V))))) => ( ! [V: mworld]: ((mrel @ W @ V) => ( ! [X: $i]: ((meiw_i @ X @ V) => (f @ X @ "
        "V))))))).");
}

TEST_CASE("box unfolds under the bound world") {
  hol::HolProblem p = embed_text(std::string(kK) + "tff(c, conjecture, {$box}(p)).", true);
  CHECK(entry_text(p, "c") ==
        "thf(c, conjecture, ! [W: mworld, V: mworld]: ((mrel @ W @ V) => (p @ V))).");
  hol::HolProblem named = embed_text(std::string(kK) + "tff(c, conjecture, {$box}(p)).");
  CHECK(entry_text(named, "c") == "thf(c, conjecture, (mglobal @ (mbox @ p))).");
  CHECK(p.entry("mrel_reflexive") == nullptr);
}

TEST_CASE("diamond is the dual of box") {
  hol::HolProblem p = embed_text(std::string(kK) + "tff(c, conjecture, {$dia}(p)).");
  CHECK(entry_text(p, "c") == "thf(c, conjecture, (mglobal @ (mdia @ p))).");
  CHECK(entry_text(p, "mdia_def") ==
        "thf(mdia_def, definition, mdia = ( ^[Phi: mworld > $o, W: mworld]: ? [V: mworld]: ((mrel @ W @ V) & "
        "(Phi @ V)))).");
}

TEST_CASE("indexed boxes get their own relations") {
  hol::HolProblem p = embed_text(std::string(kK) + "tff(c, conjecture, {$box(#a)}(p) => {$box(#b)}(p)).");
  CHECK(p.declaration("mrel_a"));
  CHECK(p.declaration("mrel_b"));
  CHECK(p.definition("mbox_a"));
  CHECK(p.definition("mbox_b"));
  CHECK(p.declaration("mrel") == nullptr);
  CHECK(entry_text(p, "c") == "thf(c, conjecture, (mglobal @ (mimpl @ (mbox_a @ p) @ (mbox_b @ p)))).");

  hol::HolProblem both = embed_text(std::string(kK) + "tff(c, conjecture, {$box(#a)}(p) => {$box}(p)).");
  CHECK(both.declaration("mrel"));
  CHECK(both.declaration("mrel_a"));
}

TEST_CASE("per-index schemes give per-relation frame axioms") {
  hol::HolProblem p = embed_text(fixture("roundtrip/03_indexed.p"));
  CHECK(p.entry("mrel_reflexive"));
  CHECK(p.entry("mrel_euclidean"));
  CHECK(p.entry("mrel_a_serial"));
  CHECK(p.entry("mrel_a_reflexive") == nullptr);
  CHECK(p.entry("mrel_b_transitive"));
}

TEST_CASE("varying quantification over individuals") {
  hol::HolProblem p = embed_text(
      "tff(s, logic, $modal == [$quantification == $varying, $modalities == $modal_system_K]).\n"
      "tff(c, conjecture, ![X]: p(X)).",
      true);
  CHECK(entry_text(p, "c") ==
        "thf(c, conjecture, ! [W: mworld, X: $i]: ((meiw_i @ X @ W) => (p @ X @ W))).");
  CHECK(p.entry("meiw_i_nonempty"));
  CHECK(p.entry("meiw_i_cumulative_mrel") == nullptr);
  CHECK(p.entry("meiw_i_decreasing_mrel") == nullptr);
}

TEST_CASE("constant quantification has no existence predicate") {
  hol::HolProblem p = embed_text(std::string(kK) + "tff(c, conjecture, ![X]: p(X)).", true);
  CHECK(p.declaration("meiw_i") == nullptr);
  CHECK(entry_text(p, "c") == "thf(c, conjecture, ! [W: mworld, X: $i]: (p @ X @ W)).");
}

TEST_CASE("cumulative axiom per relation and per type") {
  hol::HolProblem p = embed_text(
      "tff(s, logic, $modal == [$quantification == [$constant, person == $cumulative], $modalities == "
      "$modal_system_K]).\n"
      "tff(t, type, person: $tType).\n"
      "tff(q_type, type, q: person > $o).\n"
      "tff(r_type, type, r: person > $o).\n"
      "tff(c, conjecture, ![X: person]: ({$box(#a)}(q(X)) & {$box}(r(X)))).");
  CHECK(entry_text(p, "meiw_person_cumulative_mrel_a") ==
        "thf(meiw_person_cumulative_mrel_a, axiom, ! [X: person, W: mworld, V: mworld]: (((meiw_person @ X @ "
        "W) & (mrel_a @ W @ V)) => (meiw_person @ X @ V))).");
  CHECK(p.entry("meiw_person_cumulative_mrel"));
  CHECK(p.declaration("meiw_i") == nullptr);
}

TEST_CASE("frame axioms") {
  CHECK(embed::frame_axioms("", {logic::Scheme::K}).empty());
  auto t = embed::frame_axioms("", {logic::Scheme::K, logic::Scheme::T});
  REQUIRE(t.size() == 1);
  CHECK(hol::print_term(t[0].formula) == "! [W: mworld]: (mrel @ W @ W)");
  auto d = embed::frame_axioms("", {logic::Scheme::K, logic::Scheme::D});
  CHECK(hol::print_term(d[0].formula) == "! [W: mworld]: ? [V: mworld]: (mrel @ W @ V)");
  auto u = embed::frame_axioms("#a", {logic::Scheme::K, logic::Scheme::Universal});
  CHECK(hol::print_term(u[0].formula) == "! [U: mworld, V: mworld]: (mrel_a @ U @ V)");
  auto b = embed::frame_axioms("", {logic::Scheme::B});
  CHECK(hol::print_term(b[0].formula) == "! [W: mworld, V: mworld]: ((mrel @ W @ V) => (mrel @ V @ W))");
  auto four = embed::frame_axioms("", {logic::Scheme::Four});
  CHECK(hol::print_term(four[0].formula) ==
        "! [W: mworld, V: mworld, U: mworld]: (((mrel @ W @ V) & (mrel @ V @ U)) => (mrel @ W @ U))");
  auto cd = embed::frame_axioms("", {logic::Scheme::CD});
  CHECK(hol::print_term(cd[0].formula) ==
        "! [U: mworld, V: mworld, W: mworld]: (((mrel @ U @ V) & (mrel @ U @ W)) => (V = W))");
  auto c4 = embed::frame_axioms("", {logic::Scheme::C4});
  CHECK(hol::print_term(c4[0].formula) ==
        "! [U: mworld, V: mworld]: ((mrel @ U @ V) => ( ? [Z: mworld]: ((mrel @ U @ Z) & (mrel @ Z @ V))))");
  CHECK(embed::frame_condition(logic::Scheme::K, "mrel") == nullptr);
}

TEST_CASE("hypotheses make the conjecture local") {
  hol::HolProblem p = embed_text(std::string(kK) +
                                 "tff(h, hypothesis, p).\ntff(a, axiom, q).\ntff(c, conjecture, {$dia}(p)).");
  CHECK(p.declaration("mactual"));
  CHECK(entry_text(p, "h") == "thf(h, hypothesis, (mlocal @ p)).");
  CHECK(entry_text(p, "a") == "thf(a, axiom, (mglobal @ q)).");
  CHECK(entry_text(p, "c") == "thf(c, conjecture, (mlocal @ (mdia @ p))).");
  CHECK(entry_text(p, "mlocal_def") ==
        "thf(mlocal_def, definition, mlocal = ( ^[A: mworld > $o]: (A @ mactual))).");
}

TEST_CASE("definitions, lemmas and theorems are global") {
  hol::HolProblem p = embed_text(fixture("roundtrip/16_roles.p"));
  CHECK(entry_text(p, "d") == "thf(d, axiom, (mglobal @ (mequiv @ q @ p))).");
  CHECK(entry_text(p, "l") == "thf(l, lemma, (mglobal @ (mdia @ q))).");
  CHECK(entry_text(p, "h") == "thf(h, hypothesis, (mlocal @ p)).");
}

TEST_CASE("rigid symbols keep their types") {
  hol::HolProblem p = embed_text(std::string(kK) +
                                 "tff(a, axiom, ![X]: (p(g(X)) => {$box}(X = c))).");
  CHECK(to_string(*p.declaration("g")->type) == "$i > $i");
  CHECK(to_string(*p.declaration("c")->type) == "$i");
  CHECK(to_string(*p.declaration("p")->type) == "$i > mworld > $o");
}

TEST_CASE("hybrid example 2") {
  hol::HolProblem p = embed_text(fixture("examples/example2_hybrid.p"));
  CHECK(to_string(*p.declaration("n")->type) == "mworld");
  CHECK(entry_text(p, "1") ==
        "thf(1, conjecture, (mglobal @ (mforall_i @ ( ^[X: $i]: (mbox @ ( ^[W: mworld]: (( ^[W: mworld]: (( "
        "^[Y: mworld]: (mequiv @ (mand @ ( ^[W: mworld]: (W = Y)) @ (p @ X)) @ (mand @ ( ^[W: mworld]: (W = n)) "
        "@ (p @ X)) @ W)) @ W)) @ n))))))).");
  CHECK(p.entry("mrel_reflexive"));
  CHECK(p.entry("mrel_euclidean"));
  hol::HolProblem inl = embed_text(fixture("examples/example2_hybrid.p"), true);
  // Shift evaluates at n and bind substitutes the current world (n) for Y.
  CHECK(contains(entry_text(inl, "1"), "((n = n) & (p @ X @ n)) <=> ((n = n) & (p @ X @ n))"));
}

TEST_CASE("hybrid constructs") {
  const std::string h = "tff(s, logic, $$hybrid == [$modalities == $modal_system_K]).\n";
  hol::HolProblem nominal = embed_text(h + "tff(c, conjecture, {$$nominal}(home)).", true);
  CHECK(entry_text(nominal, "c") == "thf(c, conjecture, ! [W: mworld]: (W = home)).");
  hol::HolProblem shift = embed_text(h + "tff(c, conjecture, {$$shift(#home)}(p)).", true);
  CHECK(entry_text(shift, "c") == "thf(c, conjecture, ! [W: mworld]: (p @ home)).");
  CHECK(to_string(*shift.declaration("home")->type) == "mworld");
  hol::HolProblem bind = embed_text(h + "tff(c, conjecture, {$$bind(#X)}({$box}(~X))).", true);
  CHECK(entry_text(bind, "c") ==
        "thf(c, conjecture, ! [W: mworld, V: mworld]: ((mrel @ W @ V) => (~ (V = W)))).");
  // A bound variable may also be a shift target.
  hol::HolProblem bound_shift =
      embed_text(h + "tff(c, conjecture, {$$bind(#X)}({$box}({$$shift(#X)}(p)))).", true);
  CHECK(entry_text(bound_shift, "c") ==
        "thf(c, conjecture, ! [W: mworld, V: mworld]: ((mrel @ W @ V) => (p @ W))).");
}

TEST_CASE("connectives outside the logic are rejected") {
  CHECK(error_of([] { embed_text(std::string(kK) + "tff(c, conjecture, {$$knows(#a)}(p))."); }) ==
        ErrorCode::UnsupportedConnective);
  CHECK(error_of([] { embed_text(std::string(kK) + "tff(c, conjecture, {$$nominal}(n))."); }) ==
        ErrorCode::UnsupportedConnective);
  CHECK(error_of([] { embed_text(std::string(kK) + "tff(c, conjecture, {$$shift(#n)}(p))."); }) ==
        ErrorCode::UnsupportedConnective);
  CHECK(error_of([] { embed_text(std::string(kK) + "tff(c, conjecture, {$box(a)}(p))."); }) ==
        ErrorCode::ParseError);
  CHECK(error_of([] { embed_text(std::string(kK) + "tff(c, conjecture, {$box}(p, q))."); }) ==
        ErrorCode::MalformedConnective);
}

TEST_CASE("every converted formula is a proposition and wraps to $o") {
  ncl::testing::Rng rng(11);
  ncl::testing::GenOptions o;
  o.indices = {"", "#a"};
  o.nominals = {"n"};
  for (int i = 0; i < 200; ++i) {
    for (bool hybrid : {false, true}) {
      syntax::FormulaPtr f = hybrid ? ncl::testing::random_hybrid(rng, o) : ncl::testing::random_modal(rng, o);
      syntax::Problem problem = ncl::testing::problem_of(
          hybrid ? "tff(s, logic, $$hybrid == [$modalities == $modal_system_S4])."
                 : "tff(s, logic, $modal == [$modalities == $modal_system_KB5]).",
          {f});
      hol::HolProblem p = embed_problem(problem);
      hol::ConstantTypes types = hol::constant_types(p);
      const hol::HolEntry* e = p.entry("f0");
      REQUIRE(e);
      CHECK(hol::same(hol::type_of(e->lifted, types), embed::prop()));
      CHECK(hol::is_bool(hol::type_of(e->formula, types)));
    }
  }
}
