#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "generators.hpp"
#include "ncl/error.hpp"
#include "ncl/syntax/includes.hpp"
#include "ncl/syntax/parser.hpp"
#include "ncl/syntax/printer.hpp"
#include "ncl/syntax/signature.hpp"

using namespace ncl;
using namespace ncl::syntax;
using ncl::testing::error_of;
using ncl::testing::fixture;
using ncl::testing::fixture_path;
using ncl::testing::message_of;

namespace {

Problem reparse(const Problem& p) { return parse_problem(print_problem(p)); }

}  // namespace

TEST_CASE("barcan conjecture parses to the expected shape") {
  Problem p = parse_problem(
      "tff(bf, conjecture, ( ![X]: ({$box}(f(X))) ) => {$box}(![X]: f(X)) ).");
  REQUIRE(p.formulas.size() == 1);
  const AnnotatedFormula& af = p.formulas[0];
  CHECK(af.name == "bf");
  CHECK(af.role == Role::Conjecture);
  CHECK(af.language == Language::Tff);
  const Formula& body = *af.formula();
  REQUIRE(body.kind == FormulaKind::Binary);
  CHECK(body.connective == Connective::Implies);

  const Formula& lhs = *body.args[0];
  REQUIRE(lhs.kind == FormulaKind::Forall);
  CHECK(lhs.variables.size() == 1);
  CHECK(lhs.variables[0].name == "X");
  CHECK(lhs.args[0]->kind == FormulaKind::NonClassical);
  CHECK(lhs.args[0]->name == "$box");

  const Formula& rhs = *body.args[1];
  REQUIRE(rhs.kind == FormulaKind::NonClassical);
  CHECK(rhs.name == "$box");
  CHECK(rhs.args[0]->kind == FormulaKind::Forall);
}

TEST_CASE("empty text is an empty problem") {
  Problem p = parse_problem("");
  CHECK(p.formulas.empty());
  CHECK(p.includes.empty());
  CHECK(print_problem(p).empty());
  CHECK(parse_problem("% only a comment\n/* and a block */\n").formulas.empty());
}

TEST_CASE("dyadic obligation node") {
  Problem p = parse_problem("tff(a1, axiom, {$$obl}(go,$true)).");
  const Formula& f = *p.formulas[0].formula();
  CHECK(f.kind == FormulaKind::NonClassical);
  CHECK(f.name == "$$obl");
  CHECK(f.params.empty());
  CHECK(f.indices().empty());
  REQUIRE(f.args.size() == 2);
  CHECK(f.args[0]->kind == FormulaKind::Apply);
  CHECK(f.args[0]->name == "go");
  CHECK(f.args[1]->kind == FormulaKind::True);
}

TEST_CASE("syntax error points just after the dangling connective") {
  std::string msg = message_of([] { parse_problem("tff(x, axiom, p & )."); });
  CHECK(msg.find("line 1, column 19") != std::string::npos);
  CHECK(msg.find("')'") != std::string::npos);
  CHECK(error_of([] { parse_problem("tff(x, axiom, p & )."); }) == ErrorCode::ParseError);
}

TEST_CASE("malformed inputs are parse errors") {
  for (const char* text : {"tff(x, axiom, p", "tff(x, axiom, {$box(p)).", "tff(x, axiom, $box}(p)).",
                           "tff(x, nonsense, p).", "tff(x, axiom, p) q.", "tff(x, axiom, 'open",
                           "tff(x, axiom, {}(p))."}) {
    CAPTURE(text);
    CHECK(error_of([&] { parse_problem(text); }) == ErrorCode::ParseError);
  }
}

TEST_CASE("txn and thn application give the same node") {
  Problem tff = parse_problem("tff(a, axiom, {$box(#k)}(p)).");
  Problem thf = parse_problem("thf(a, axiom, {$box(#k)} @ p).");
  CHECK(*tff.formulas[0].formula() == *thf.formulas[0].formula());
  CHECK(tff.formulas[0].formula()->indices() == std::vector<std::string>{"#k"});
}

TEST_CASE("keyed connective parameters") {
  Problem p = parse_problem(
      "tff(c, axiom, {$$announce($$formula := p & q)}({$$common($$group := [#a, #b])}(r))).");
  const Formula& f = *p.formulas[0].formula();
  REQUIRE(f.param("$$formula"));
  CHECK(f.param("$$formula")->kind == FormulaKind::Binary);
  const Formula& inner = *f.args[0];
  REQUIRE(inner.param("$$group"));
  CHECK(inner.param("$$group")->kind == FormulaKind::List);
  CHECK(inner.param("$$group")->args.size() == 2);
  CHECK(inner.param("$$missing") == nullptr);
}

TEST_CASE("logic specification content") {
  Problem p = parse_problem(fixture("examples/example1_barcan.p"));
  REQUIRE(p.formulas.size() == 2);
  CHECK(p.formulas[0].role == Role::Logic);
  REQUIRE(p.formulas[0].logic_spec());
  CHECK(p.formulas[0].formula() == nullptr);
  CHECK(p.formulas[0].logic_spec()->definition->kind == FormulaKind::Assign);
  CHECK(error_of([] { parse_problem("tff(s, logic, p & q)."); }) == ErrorCode::ParseError);
}

TEST_CASE("type declarations") {
  Problem p = parse_problem(
      "tff(t, type, person: $tType).\n"
      "tff(r, type, likes: (person * person) > $o).\n"
      "thf(f, type, g: person > person > $i).");
  REQUIRE(p.formulas[1].type_declaration());
  const TypeDeclaration& likes = *p.formulas[1].type_declaration();
  CHECK(likes.symbol == "likes");
  CHECK(likes.type->args.size() == 2);
  CHECK(to_string(*likes.type) == "(person * person) > $o");
  CHECK(to_string(*p.formulas[2].type_declaration()->type, Language::Thf) == "person > person > $i");
  CHECK(*reparse(p).formulas[2].type_declaration()->type == *p.formulas[2].type_declaration()->type);
  CHECK(error_of([] { mapping_type({}, base_type("$o")); }) == ErrorCode::TypeError);
  CHECK(error_of([] { mapping_type({base_type("$i")}, base_type("$tType")); }) == ErrorCode::TypeError);
}

TEST_CASE("example listings round trip") {
  for (const char* file : {"examples/example1_barcan.p", "examples/example2_hybrid.p", "examples/example3_ctd.p"}) {
    CAPTURE(file);
    Problem p = parse_problem(fixture(file));
    CHECK(reparse(p) == p);
    CHECK(print_problem(reparse(p)) == print_problem(p));
  }
}

TEST_CASE("crafted corpus round trips and keeps connective names") {
  int files = 0;
  for (const auto& e : std::filesystem::directory_iterator(fixture_path("roundtrip"))) {
    CAPTURE(e.path().string());
    Problem p = parse_problem(ncl::testing::fixture("roundtrip/" + e.path().filename().string()));
    Problem q = reparse(p);
    CHECK(q == p);
    CHECK(q.includes == p.includes);
    for (std::size_t i = 0; i < p.formulas.size(); ++i) CHECK(q.formulas[i].name == p.formulas[i].name);
    ++files;
  }
  CHECK(files >= 20);
}

TEST_CASE("random formulas round trip") {
  ncl::testing::Rng rng(7);
  ncl::testing::GenOptions o;
  o.indices = {"", "#a"};
  o.nominals = {"n"};
  o.agents = {"#a", "#b"};
  for (int i = 0; i < 300; ++i) {
    for (FormulaPtr f : {ncl::testing::random_modal(rng, o), ncl::testing::random_hybrid(rng, o),
                         ncl::testing::random_pal(rng, o), ncl::testing::random_ddl(rng, o)}) {
      for (Language lang : {Language::Tff, Language::Thf}) {
        std::string text = print_formula(*f, lang);
        CAPTURE(text);
        Problem p = parse_problem(std::string(lang == Language::Thf ? "thf" : "tff") + "(x, axiom, " +
                                  text + ").");
        CHECK(*p.formulas[0].formula() == *f);
      }
    }
  }
}

TEST_CASE("order of formulas is the source order") {
  Problem p = parse_problem("tff(c, axiom, p).\ntff(a, axiom, q).\ntff(b, conjecture, r).");
  REQUIRE(p.formulas.size() == 3);
  CHECK(p.formulas[0].name == "c");
  CHECK(p.formulas[1].name == "a");
  CHECK(p.formulas[2].name == "b");
}

TEST_CASE("symbols are quoted only when needed") {
  CHECK(print_symbol("p") == "p");
  CHECK(print_symbol("$box") == "$box");
  CHECK(print_symbol("42") == "42");
  CHECK(print_symbol("Upper") == "'Upper'");
  CHECK(print_symbol("it's") == "'it\\'s'");
  CHECK(print_symbol("with space") == "'with space'");
}

TEST_CASE("numbers and distinct objects") {
  Problem p = parse_problem("tff(a, axiom, q(\"obj\", 12)).");
  const Formula& f = *p.formulas[0].formula();
  CHECK(f.args[0]->name == "\"obj\"");
  CHECK(f.args[1]->name == "12");
  CHECK(reparse(p) == p);
}

TEST_CASE("include splices in place") {
  Problem p = parse_problem(fixture("includes/uses_axioms.p"));
  REQUIRE(p.includes.size() == 1);
  CHECK(p.includes[0].position == 1);
  Problem r = resolve_includes(p, fixture_path("includes/uses_axioms.p"), {});
  REQUIRE(r.formulas.size() == 3);
  CHECK(r.formulas[0].name == "spec");
  CHECK(r.formulas[1].name == "reflexive_instance");
  CHECK(r.formulas[2].name == "c");
  CHECK(r.includes.empty());
}

TEST_CASE("include without directives is the identity") {
  Problem p = parse_problem(fixture("examples/example3_ctd.p"));
  CHECK(resolve_includes(p, fixture_path("examples/example3_ctd.p"), {}) == p);
}

TEST_CASE("include selection keeps the named formulas") {
  Problem p = parse_problem(fixture("includes/selected.p"));
  Problem r = resolve_includes(p, fixture_path("includes/selected.p"), {});
  REQUIRE(r.formulas.size() == 2);
  CHECK(r.formulas[0].name == "keep");
}

TEST_CASE("include cycle lists the path") {
  Problem p = parse_problem(fixture("includes/a.p"));
  std::string msg = message_of([&] { resolve_includes(p, fixture_path("includes/a.p"), {}); });
  CHECK(msg.find("a.p -> b.p -> a.p") != std::string::npos);
  CHECK(error_of([&] { resolve_includes(p, fixture_path("includes/a.p"), {}); }) ==
        ErrorCode::IncludeError);
}

TEST_CASE("missing include and search paths") {
  auto dir = std::filesystem::temp_directory_path() / "ncl_include_test";
  std::filesystem::create_directories(dir / "root" / "Axioms");
  std::ofstream(dir / "root" / "Axioms" / "extra.ax") << "tff(extra, axiom, p).\n";
  std::ofstream(dir / "main.p") << "include('Axioms/extra.ax').\ntff(c, conjecture, p).\n";
  Problem p = parse_problem("include('Axioms/extra.ax').\ntff(c, conjecture, p).\n");
  CHECK(error_of([&] { resolve_includes(p, dir / "main.p", {}); }) == ErrorCode::IncludeError);
  Problem r = resolve_includes(p, dir / "main.p", {dir / "root"});
  REQUIRE(r.formulas.size() == 2);
  CHECK(r.formulas[0].name == "extra");
  std::filesystem::remove_all(dir);
}

TEST_CASE("duplicate names after inclusion") {
  auto dir = std::filesystem::temp_directory_path() / "ncl_include_dup";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "dup.ax") << "tff(c, axiom, p).\n";
  Problem p = parse_problem("include('dup.ax').\ntff(c, conjecture, p).\n");
  CHECK(error_of([&] { resolve_includes(p, dir / "main.p", {}); }) == ErrorCode::IncludeError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("default typing rule") {
  Problem p = parse_problem("tff(a, axiom, ![X]: (p(X, c) => q)).\ntff(b, axiom, r(f(c))).");
  Signature sig = infer_signature(p);
  REQUIRE(sig.find("p"));
  CHECK(to_string(**sig.find("p")) == "($i * $i) > $o");
  CHECK(to_string(**sig.find("c")) == "$i");
  CHECK(to_string(**sig.find("q")) == "$o");
  CHECK(to_string(**sig.find("f")) == "$i > $i");
  CHECK(sig.is_predicate("r"));
  CHECK_FALSE(sig.is_predicate("f"));
  CHECK(sig.quantified_types == std::vector<std::string>{"$i"});
}

TEST_CASE("typing errors") {
  CHECK(error_of([] { infer_signature(parse_problem("tff(a, axiom, p(c) & p(c, c)).")); }) ==
        ErrorCode::TypeError);
  CHECK(error_of([] { infer_signature(parse_problem("tff(a, axiom, p(X)).")); }) == ErrorCode::TypeError);
  CHECK(error_of([] {
          infer_signature(parse_problem("tff(t, type, p: $i > $o).\ntff(a, axiom, p(p(c)))."));
        }) == ErrorCode::TypeError);
}
