#include <algorithm>
#include <filesystem>

#include "doctest.h"
#include "generators.hpp"
#include "ncl/error.hpp"
#include "ncl/holkit/hol_parser.hpp"
#include "ncl/holkit/hol_printer.hpp"
#include "ncl/holkit/typecheck.hpp"
#include "ncl/pipeline.hpp"
#include "ncl/syntax/parser.hpp"
#include "ncl/syntax/printer.hpp"

using namespace ncl;
using ncl::testing::error_of;
using ncl::testing::fixture;
using ncl::testing::fixture_path;

namespace {

EmbedOutcome embed_file(const std::string& relative, PipelineOptions options = {}) {
  return embed_source(fixture(relative), fixture_path(relative), options);
}

bool contains(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("problems without a specification pass through") {
  EmbedOutcome out = embed_file("corpus/no_spec.p");
  CHECK(out.passthrough);
  CHECK(out.text == syntax::print_problem(syntax::parse_problem(fixture("corpus/no_spec.p"))));
  CHECK_FALSE(contains(out.text, "mworld"));
}

TEST_CASE("embedding a file") {
  EmbedOutcome out = embed_file("examples/example1_barcan.p");
  CHECK_FALSE(out.passthrough);
  CHECK(contains(out.text, "thf(mworld_type, type, mworld: $tType)."));
  CHECK(contains(out.text, "thf(bf, conjecture, "));
  CHECK(out.text.back() == '\n');
  CHECK_NOTHROW(hol::typecheck(hol::parse_hol_problem(out.text)));
}

TEST_CASE("inline option") {
  PipelineOptions o;
  o.inline_definitions = true;
  EmbedOutcome out = embed_file("examples/example1_barcan.p", o);
  CHECK_FALSE(contains(out.text, "definition"));
  CHECK_FALSE(contains(out.text, "mbox"));
}

TEST_CASE("includes are resolved before embedding") {
  syntax::Problem p = load_problem(fixture("includes/uses_axioms.p"), fixture_path("includes/uses_axioms.p"), {});
  CHECK(p.includes.empty());
  bool found = false;
  for (const auto& af : p.formulas) found = found || af.name == "reflexive_instance";
  CHECK(found);
  EmbedOutcome out = embed_file("includes/uses_axioms.p");
  CHECK(contains(out.text, "thf(reflexive_instance, axiom"));
}

TEST_CASE("include search path") {
  // The include is written relative to an Axioms directory that only the
  // search path makes visible.
  std::string text =
      "tff(spec, logic, $modal == [$modalities == $modal_system_T]).\n"
      "include('Axioms/frame.ax').\n"
      "tff(c, conjecture, p).\n";
  CHECK(error_of([&] { embed_source(text, "/nonexistent/problem.p", {}); }) == ErrorCode::IncludeError);
  PipelineOptions o;
  o.include_dirs = {fixture_path("includes")};
  CHECK(contains(embed_source(text, "/nonexistent/problem.p", o).text, "reflexive_instance"));
}

TEST_CASE("include selections") {
  syntax::Problem p = load_problem(fixture("includes/selected.p"), fixture_path("includes/selected.p"), {});
  std::vector<std::string> names;
  for (const auto& af : p.formulas) names.push_back(af.name);
  CHECK(std::find(names.begin(), names.end(), "keep") != names.end());
  CHECK(std::find(names.begin(), names.end(), "drop") == names.end());
}

TEST_CASE("pipeline errors") {
  CHECK(error_of([] { read_file("/nonexistent/input.p"); }) == ErrorCode::IoError);
  CHECK(error_of([] { embed_file("errors/bad_syntax.p"); }) == ErrorCode::ParseError);
  CHECK(error_of([] { embed_file("errors/ambiguous.p"); }) == ErrorCode::AmbiguousLogicSpec);
  CHECK(error_of([] { embed_file("errors/unknown_logic.p"); }) == ErrorCode::UnsupportedLogic);
  CHECK(error_of([] { embed_file("errors/flexible.p"); }) == ErrorCode::UnsupportedParameter);
  CHECK(error_of([] { embed_file("errors/unknown_system.p"); }) == ErrorCode::UnknownParameter);
  CHECK(error_of([] { embed_file("errors/missing_modalities.p"); }) == ErrorCode::MissingParameter);
  CHECK(error_of([] { embed_file("errors/wrong_connective.p"); }) == ErrorCode::UnsupportedConnective);
  CHECK(error_of([] { embed_file("includes/a.p"); }) == ErrorCode::IncludeError);
  CHECK(error_of([] { embed_problem(syntax::parse_problem("tff(a, axiom, p).")); }) ==
        ErrorCode::UnsupportedLogic);
}

TEST_CASE("check through the pipeline") {
  oracle::Bounds b;
  oracle::Verdict v = check_source(fixture("includes/uses_axioms.p"), fixture_path("includes/uses_axioms.p"), {}, b);
  CHECK_FALSE(v.countermodel);
  oracle::Verdict ex3 = check_source(fixture("examples/example3_ctd.p"), fixture_path("examples/example3_ctd.p"), {}, b);
  CHECK(contains(ex3.text(), "verdict: "));
  CHECK(error_of([&] { check_source(fixture("corpus/no_spec.p"), fixture_path("corpus/no_spec.p"), {}, b); }) ==
        ErrorCode::UnsupportedLogic);
}

TEST_CASE("every round trip fixture embeds or passes through") {
  int embedded = 0;
  for (const auto& entry : std::filesystem::directory_iterator(fixture_path("roundtrip"))) {
    std::string name = entry.path().filename().string();
    CAPTURE(name);
    std::string text = read_file(entry.path());
    EmbedOutcome out = embed_source(text, entry.path(), {});
    if (out.passthrough) {
      CHECK(out.text == syntax::print_problem(syntax::parse_problem(text)));
      continue;
    }
    ++embedded;
    CHECK_NOTHROW(hol::typecheck(hol::parse_hol_problem(out.text)));
  }
  CHECK(embedded >= 20);
}
