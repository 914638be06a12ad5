#include <set>

#include "doctest.h"
#include "generators.hpp"
#include "ncl/error.hpp"
#include "ncl/logicspec/logic_spec.hpp"
#include "ncl/logicspec/modal_config.hpp"
#include "ncl/logicspec/registry.hpp"
#include "ncl/syntax/parser.hpp"
#include "ncl/syntax/printer.hpp"

using namespace ncl;
using namespace ncl::logic;
using ncl::testing::error_of;
using ncl::testing::fixture;
using ncl::testing::message_of;

namespace {

LogicSpec spec_of(const std::string& text) {
  auto [spec, rest] = extract_logic_spec(syntax::parse_problem(text));
  REQUIRE(spec.has_value());
  return *spec;
}

ModalConfig modal(const std::string& properties, const std::string& logic = "$modal") {
  return validate_modal_config(spec_of("tff(s, logic, " + logic + " == " + properties + ")."));
}

std::optional<std::string> value_text(const LogicSpec& spec, const std::string& key) {
  const Property* p = spec.find(key);
  if (!p) return std::nullopt;
  return syntax::print_formula(*p->value);
}

}  // namespace

TEST_CASE("example 1 specification") {
  auto [spec, rest] = extract_logic_spec(syntax::parse_problem(fixture("examples/example1_barcan.p")));
  REQUIRE(spec);
  CHECK(spec->logic_name == "$modal");
  CHECK(spec->source_name == "modal_k5");
  CHECK(spec->properties.size() == 3);
  CHECK(value_text(*spec, "$constants") == "$rigid");
  CHECK(value_text(*spec, "$quantification") == "$decreasing");
  CHECK(value_text(*spec, "$modalities") == "[$modal_axiom_K, $modal_axiom_5]");
  REQUIRE(rest.formulas.size() == 1);
  CHECK(rest.formulas[0].name == "bf");
}

TEST_CASE("no specification") {
  auto [spec, rest] = extract_logic_spec(syntax::parse_problem("tff(a, axiom, p)."));
  CHECK_FALSE(spec.has_value());
  CHECK(rest.formulas.size() == 1);
}

TEST_CASE("two specifications are ambiguous") {
  auto p = syntax::parse_problem(fixture("errors/ambiguous.p"));
  CHECK(error_of([&] { extract_logic_spec(p); }) == ErrorCode::AmbiguousLogicSpec);
  std::string msg = message_of([&] { extract_logic_spec(p); });
  CHECK(msg.find("first") != std::string::npos);
  CHECK(msg.find("second") != std::string::npos);
}

TEST_CASE("specification right-hand side must be a list") {
  CHECK(error_of([] { spec_of("tff(s, logic, $modal == $rigid)."); }) == ErrorCode::ParseError);
}

TEST_CASE("example 1 configuration") {
  ModalConfig c = modal(
      "[$constants == $rigid, $quantification == $decreasing, $modalities == [$modal_axiom_K, "
      "$modal_axiom_5]]");
  CHECK(c.default_quantification == Quantification::Decreasing);
  CHECK(c.quantification_for("$i") == Quantification::Decreasing);
  CHECK(c.quantification_for("person") == Quantification::Decreasing);
  CHECK(c.default_schemes == SchemeSet{Scheme::K, Scheme::Five});
  CHECK(c.rigid);
}

TEST_CASE("example 2 configuration") {
  ModalConfig c = modal(
      "[$constants == $rigid, $quantification == $varying, $modalities == $modal_system_S5]", "$$hybrid");
  CHECK(c.default_quantification == Quantification::Varying);
  CHECK(c.default_schemes == SchemeSet{Scheme::K, Scheme::T, Scheme::Five});
}

TEST_CASE("flexible constants are unsupported") {
  CHECK(error_of([] {
          modal("[$constants == $flexible, $modalities == $modal_system_K]");
        }) == ErrorCode::UnsupportedParameter);
}

TEST_CASE("parameter errors") {
  CHECK(error_of([] { modal("[$modalities == $modal_system_XYZ]"); }) == ErrorCode::UnknownParameter);
  CHECK(error_of([] { modal("[$modalities == [$modal_axiom_Q]]"); }) == ErrorCode::UnknownParameter);
  CHECK(error_of([] { modal("[$quantification == $sometimes, $modalities == $modal_system_K]"); }) ==
        ErrorCode::UnknownParameter);
  CHECK(error_of([] { modal("[$colour == $red, $modalities == $modal_system_K]"); }) ==
        ErrorCode::UnknownParameter);
  CHECK(error_of([] { modal("[$constants == $rigid]"); }) == ErrorCode::MissingParameter);
}

TEST_CASE("defaults") {
  ModalConfig c = modal("[$modalities == $modal_system_K]");
  CHECK(c.default_quantification == Quantification::Constant);
  CHECK(c.rigid);
  CHECK(c.default_schemes == SchemeSet{Scheme::K});
}

TEST_CASE("per-type quantification") {
  ModalConfig c = modal("[$quantification == [$cumulative, person == $varying], $modalities == $modal_system_K]");
  CHECK(c.default_quantification == Quantification::Cumulative);
  CHECK(c.quantification_for("person") == Quantification::Varying);
  CHECK(c.quantification_for("$i") == Quantification::Cumulative);

  ModalConfig no_default = modal("[$quantification == [person == $decreasing], $modalities == $modal_system_K]");
  CHECK(no_default.default_quantification == Quantification::Constant);
  CHECK(no_default.quantification_for("person") == Quantification::Decreasing);
}

TEST_CASE("per-index modalities") {
  ModalConfig c = modal(
      "[$modalities == [$modal_system_S4, {$box(#a)} == $modal_system_D45, {$box(#b)} == "
      "[$modal_axiom_T]]]");
  CHECK(c.default_schemes == SchemeSet{Scheme::K, Scheme::T, Scheme::Four});
  CHECK(c.schemes_for("#a") == SchemeSet{Scheme::K, Scheme::D, Scheme::Four, Scheme::Five});
  CHECK(c.schemes_for("#b") == SchemeSet{Scheme::K, Scheme::T});
  CHECK(c.schemes_for("#c") == c.default_schemes);
  CHECK(c.schemes_for("") == c.default_schemes);
}

TEST_CASE("named system table") {
  const std::map<std::string, SchemeSet> expected = {
      {"K", {Scheme::K}},
      {"KB", {Scheme::K, Scheme::B}},
      {"K4", {Scheme::K, Scheme::Four}},
      {"K5", {Scheme::K, Scheme::Five}},
      {"K45", {Scheme::K, Scheme::Four, Scheme::Five}},
      {"KB5", {Scheme::K, Scheme::B, Scheme::Five}},
      {"D", {Scheme::K, Scheme::D}},
      {"DB", {Scheme::K, Scheme::D, Scheme::B}},
      {"D4", {Scheme::K, Scheme::D, Scheme::Four}},
      {"D5", {Scheme::K, Scheme::D, Scheme::Five}},
      {"D45", {Scheme::K, Scheme::D, Scheme::Four, Scheme::Five}},
      {"T", {Scheme::K, Scheme::T}},
      {"B", {Scheme::K, Scheme::T, Scheme::B}},
      {"S4", {Scheme::K, Scheme::T, Scheme::Four}},
      {"S5", {Scheme::K, Scheme::T, Scheme::Five}},
      {"S5U", {Scheme::K, Scheme::Universal}},
  };
  CHECK(modal_systems().size() == 16);
  for (const auto& [name, schemes] : modal_systems()) {
    CAPTURE(name);
    REQUIRE(expected.count(name));
    CHECK(expected.at(name) == schemes);
    CHECK(modal("[$modalities == $modal_system_" + name + "]").default_schemes == schemes);
  }
}

TEST_CASE("K is always present") {
  CHECK(modal("[$modalities == [$modal_axiom_T]]").default_schemes == SchemeSet{Scheme::K, Scheme::T});
  CHECK(modal("[$modalities == [$modal_axiom_CD, $modal_axiom_C4]]").default_schemes ==
        SchemeSet{Scheme::K, Scheme::CD, Scheme::C4});
}

TEST_CASE("normalization is idempotent") {
  for (const ModalConfig& c : enumerate_modal_configurations()) {
    LogicSpec rendered = render_modal_config(c);
    ModalConfig again = validate_modal_config(rendered);
    CHECK(again == c);
    CHECK(validate_modal_config(render_modal_config(again)) == again);
  }
  ModalConfig mixed = modal(
      "[$quantification == [$varying, person == $cumulative], $modalities == [$modal_system_K, "
      "{$box(#a)} == $modal_system_S5]]",
      "$$hybrid");
  CHECK(validate_modal_config(render_modal_config(mixed, "$$hybrid")) == mixed);
}

TEST_CASE("at least sixty configurations") {
  auto configs = enumerate_modal_configurations();
  CHECK(configs.size() == 64);
  std::set<std::string> distinct;
  for (const auto& c : configs)
    distinct.insert(syntax::print_annotated(to_annotated(render_modal_config(c))));
  CHECK(distinct.size() == configs.size());
}

TEST_CASE("ddl and pal parameters") {
  CHECK(validate_ddl_config(spec_of("tff(s, logic, $$ddl == [$$system == $$aqvistE]).")).system ==
        DdlSystem::AqvistE);
  CHECK(validate_ddl_config(spec_of("tff(s, logic, $$ddl == [$$system == $$carmoJones]).")).system ==
        DdlSystem::CarmoJones);
  CHECK(error_of([] { validate_ddl_config(spec_of("tff(s, logic, $$ddl == [$$system == $$aqvistG]).")); }) ==
        ErrorCode::UnknownParameter);
  CHECK(error_of([] { validate_ddl_config(spec_of("tff(s, logic, $$ddl == []).")); }) ==
        ErrorCode::MissingParameter);
  CHECK_NOTHROW(validate_pal_config(spec_of("tff(s, logic, $$pal == []).")));
  CHECK(error_of([] { validate_pal_config(spec_of("tff(s, logic, $$pal == [$x == $y]).")); }) ==
        ErrorCode::UnknownParameter);
}

TEST_CASE("registry lookup") {
  CHECK(lookup_embedding("$modal").name == "$modal");
  CHECK(lookup_embedding("$$pal").name == "$$pal");
  CHECK(lookup_embedding("$$hybrid").name == "$$hybrid");
  CHECK(lookup_embedding("$$ddl").name == "$$ddl");
  CHECK(registry().size() == 4);
  CHECK(error_of([] { lookup_embedding("$foo"); }) == ErrorCode::UnsupportedLogic);
  std::string msg = message_of([] { lookup_embedding("$foo"); });
  CHECK(msg.find("$foo") != std::string::npos);
  for (const char* name : {"$modal", "$$hybrid", "$$pal", "$$ddl"}) CHECK(msg.find(name) != std::string::npos);
}

TEST_CASE("registry dispatch embeds") {
  auto [spec, rest] = extract_logic_spec(syntax::parse_problem(fixture("examples/example3_ctd.p")));
  hol::HolProblem out = lookup_embedding(spec->logic_name).embed(*spec, rest);
  CHECK(out.declaration("mbetter") != nullptr);
}
