#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ncl/logicspec/logic_spec.hpp"

namespace ncl::logic {

enum class Quantification { Varying, Constant, Cumulative, Decreasing };

/// Axiom schemes; `Universal` stands for the S5U universal relation.
enum class Scheme { K, T, B, D, Four, Five, CD, C4, Universal };

using SchemeSet = std::set<Scheme>;

std::string_view quantification_token(Quantification q);   // "$varying", ...
std::string_view scheme_token(Scheme s);                   // "$modal_axiom_T", ...
std::string_view scheme_name(Scheme s);                    // "T", "4", "universal"

/// Named systems in table order, e.g. {"K", {K}}, ..., {"S5U", {K, Universal}}.
const std::vector<std::pair<std::string, SchemeSet>>& modal_systems();

struct ModalConfig {
  Quantification default_quantification = Quantification::Constant;
  std::map<std::string, Quantification> quantification;  // per type name
  bool rigid = true;
  SchemeSet default_schemes = {Scheme::K};
  std::map<std::string, SchemeSet> modalities;  // per index, with the '#'

  Quantification quantification_for(const std::string& type) const;
  /// Schemes of the box with `index` (`""` for the unindexed box).
  const SchemeSet& schemes_for(const std::string& index) const;

  bool operator==(const ModalConfig&) const = default;
};

/// Validates `$modal` / `$$hybrid` parameters. Errors: `$flexible` is
/// UnsupportedParameter, unknown keys/systems/schemes are UnknownParameter,
/// a missing `$modalities` is MissingParameter.
ModalConfig validate_modal_config(const LogicSpec& spec);

/// Canonical specification for `config` under `logic_name`; validating it
/// yields `config` again.
LogicSpec render_modal_config(const ModalConfig& config, const std::string& logic_name = "$modal");

/// Every (named system x default quantification) configuration, each
/// obtained by validating its rendered specification.
std::vector<ModalConfig> enumerate_modal_configurations();

enum class DdlSystem { AqvistE, CarmoJones };

struct DdlConfig {
  DdlSystem system = DdlSystem::AqvistE;
};

/// `$$ddl == [$$system == $$aqvistE | $$carmoJones]`.
DdlConfig validate_ddl_config(const LogicSpec& spec);

/// `$$pal` takes no parameters; any property is UnknownParameter.
void validate_pal_config(const LogicSpec& spec);

}  // namespace ncl::logic
