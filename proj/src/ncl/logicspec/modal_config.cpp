#include "ncl/logicspec/modal_config.hpp"

#include "ncl/error.hpp"
#include "ncl/syntax/printer.hpp"

namespace ncl::logic {

using namespace ncl::syntax;

namespace {

const std::vector<std::pair<Scheme, std::string_view>> kSchemeTokens = {
    {Scheme::K, "$modal_axiom_K"},   {Scheme::T, "$modal_axiom_T"},
    {Scheme::B, "$modal_axiom_B"},   {Scheme::D, "$modal_axiom_D"},
    {Scheme::Four, "$modal_axiom_4"}, {Scheme::Five, "$modal_axiom_5"},
    {Scheme::CD, "$modal_axiom_CD"}, {Scheme::C4, "$modal_axiom_C4"},
};

constexpr std::string_view kSystemPrefix = "$modal_system_";

[[noreturn]] void unknown(const std::string& what) {
  throw Error(ErrorCode::UnknownParameter, what);
}

Quantification parse_quantification(const FormulaPtr& value) {
  auto tok = token_text(value);
  if (tok) {
    for (auto q : {Quantification::Varying, Quantification::Constant, Quantification::Cumulative,
                   Quantification::Decreasing})
      if (*tok == quantification_token(q)) return q;
  }
  unknown("unknown quantification semantics '" + print_formula(*value) + "'");
}

std::optional<SchemeSet> system_set(const std::string& token) {
  if (token.rfind(kSystemPrefix, 0) != 0) return std::nullopt;
  std::string name = token.substr(kSystemPrefix.size());
  for (const auto& [n, set] : modal_systems())
    if (n == name) return set;
  unknown("unknown modal system '" + token + "'");
}

std::optional<Scheme> axiom_scheme(const std::string& token) {
  for (const auto& [s, t] : kSchemeTokens)
    if (token == t) return s;
  return std::nullopt;
}

SchemeSet parse_scheme_tokens(const std::vector<std::string>& tokens);

// A token, or a list of bare tokens: all axiom schemes or a single system.
SchemeSet parse_scheme_value(const FormulaPtr& value) {
  if (auto tok = token_text(value)) {
    if (auto set = system_set(*tok)) return *set;
    if (auto s = axiom_scheme(*tok)) return {Scheme::K, *s};
    unknown("unknown modality specification '" + *tok + "'");
  }
  if (value->kind != FormulaKind::List)
    unknown("unknown modality specification '" + print_formula(*value) + "'");
  std::vector<std::string> tokens;
  for (const auto& e : value->args) {
    auto tok = token_text(e);
    if (!tok) unknown("unexpected modality entry '" + print_formula(*e) + "'");
    tokens.push_back(*tok);
  }
  return parse_scheme_tokens(tokens);
}

SchemeSet parse_scheme_tokens(const std::vector<std::string>& tokens) {
  SchemeSet set = {Scheme::K};
  bool saw_system = false, saw_axiom = false;
  for (const auto& tok : tokens) {
    if (auto sys = system_set(tok)) {
      if (saw_system || saw_axiom)
        unknown("a modal system cannot be combined with other entries: '" + tok + "'");
      saw_system = true;
      set = *sys;
    } else if (auto s = axiom_scheme(tok)) {
      if (saw_system)
        unknown("a modal system cannot be combined with other entries: '" + tok + "'");
      saw_axiom = true;
      set.insert(*s);
    } else {
      unknown("unknown axiom scheme '" + tok + "'");
    }
  }
  return set;
}

}  // namespace

std::string_view quantification_token(Quantification q) {
  switch (q) {
    case Quantification::Varying: return "$varying";
    case Quantification::Constant: return "$constant";
    case Quantification::Cumulative: return "$cumulative";
    case Quantification::Decreasing: return "$decreasing";
  }
  return "";
}

std::string_view scheme_token(Scheme s) {
  for (const auto& [sc, t] : kSchemeTokens)
    if (sc == s) return t;
  return "$modal_system_S5U";
}

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::K: return "K";
    case Scheme::T: return "T";
    case Scheme::B: return "B";
    case Scheme::D: return "D";
    case Scheme::Four: return "4";
    case Scheme::Five: return "5";
    case Scheme::CD: return "CD";
    case Scheme::C4: return "C4";
    case Scheme::Universal: return "universal";
  }
  return "";
}

const std::vector<std::pair<std::string, SchemeSet>>& modal_systems() {
  using S = Scheme;
  static const std::vector<std::pair<std::string, SchemeSet>> table = {
      {"K", {S::K}},
      {"KB", {S::K, S::B}},
      {"K4", {S::K, S::Four}},
      {"K5", {S::K, S::Five}},
      {"K45", {S::K, S::Four, S::Five}},
      {"KB5", {S::K, S::B, S::Five}},
      {"D", {S::K, S::D}},
      {"DB", {S::K, S::D, S::B}},
      {"D4", {S::K, S::D, S::Four}},
      {"D5", {S::K, S::D, S::Five}},
      {"D45", {S::K, S::D, S::Four, S::Five}},
      {"T", {S::K, S::T}},
      {"B", {S::K, S::T, S::B}},
      {"S4", {S::K, S::T, S::Four}},
      {"S5", {S::K, S::T, S::Five}},
      {"S5U", {S::K, S::Universal}},
  };
  return table;
}

Quantification ModalConfig::quantification_for(const std::string& type) const {
  auto it = quantification.find(type);
  return it == quantification.end() ? default_quantification : it->second;
}

const SchemeSet& ModalConfig::schemes_for(const std::string& index) const {
  auto it = modalities.find(index);
  return it == modalities.end() ? default_schemes : it->second;
}

ModalConfig validate_modal_config(const LogicSpec& spec) {
  if (spec.logic_name != "$modal" && spec.logic_name != "$$hybrid")
    throw Error(ErrorCode::UnsupportedLogic,
                "'" + spec.logic_name + "' is not a modal or hybrid logic");
  ModalConfig cfg;
  bool saw_modalities = false;
  for (const auto& p : spec.properties) {
    std::string key = p.key_text();
    if (key == "$constants") {
      std::vector<FormulaPtr> values;
      if (p.value->kind == FormulaKind::List) {
        for (const auto& e : p.value->args)
          values.push_back(e->kind == FormulaKind::Assign ? e->args[1] : e);
      } else {
        values.push_back(p.value);
      }
      for (const auto& v : values) {
        auto tok = token_text(v);
        if (tok && *tok == "$flexible")
          throw Error(ErrorCode::UnsupportedParameter,
                      "$constants == $flexible is not supported (only $rigid)");
        if (!tok || *tok != "$rigid") unknown("unknown $constants value '" + print_formula(*v) + "'");
      }
    } else if (key == "$quantification") {
      if (p.value->kind != FormulaKind::List) {
        cfg.default_quantification = parse_quantification(p.value);
        continue;
      }
      for (const auto& e : p.value->args) {
        if (e->kind == FormulaKind::Assign) {
          auto type = token_text(e->args[0]);
          if (!type) unknown("quantification entry '" + print_formula(*e) + "' needs a type name");
          cfg.quantification[*type] = parse_quantification(e->args[1]);
        } else {
          cfg.default_quantification = parse_quantification(e);
        }
      }
    } else if (key == "$modalities") {
      saw_modalities = true;
      if (p.value->kind != FormulaKind::List) {
        cfg.default_schemes = parse_scheme_value(p.value);
        continue;
      }
      std::vector<std::string> bare;
      for (const auto& e : p.value->args) {
        if (e->kind != FormulaKind::Assign) {
          auto tok = token_text(e);
          if (!tok) unknown("unexpected modality entry '" + print_formula(*e) + "'");
          bare.push_back(*tok);
          continue;
        }
        const FormulaPtr& lhs = e->args[0];
        if (lhs->kind != FormulaKind::NonClassical || lhs->name != "$box" || !lhs->args.empty())
          unknown("per-modality entries must have the form {$box(#i)} == value, got '" +
                  print_formula(*e) + "'");
        auto idx = lhs->indices();
        if (idx.size() > 1 || idx.size() != lhs->params.size())
          unknown("malformed modality index in '" + print_formula(*lhs) + "'");
        SchemeSet set = parse_scheme_value(e->args[1]);
        if (idx.empty())
          cfg.modalities[""] = set;
        else
          cfg.modalities[idx[0]] = set;
      }
      if (!bare.empty()) cfg.default_schemes = parse_scheme_tokens(bare);
    } else {
      unknown("unknown parameter '" + key + "' for logic " + spec.logic_name);
    }
  }
  if (!saw_modalities)
    throw Error(ErrorCode::MissingParameter,
                "logic " + spec.logic_name + " requires a $modalities parameter");
  return cfg;
}

namespace {

FormulaPtr render_schemes(const SchemeSet& set) {
  for (const auto& [name, s] : modal_systems())
    if (s == set && set.count(Scheme::Universal)) return apply(std::string(kSystemPrefix) + name);
  std::vector<FormulaPtr> tokens;
  for (Scheme s : set) tokens.push_back(apply(std::string(scheme_token(s))));
  return list(std::move(tokens));
}

}  // namespace

LogicSpec render_modal_config(const ModalConfig& cfg, const std::string& logic_name) {
  LogicSpec spec;
  spec.logic_name = logic_name;
  spec.properties.push_back({apply("$constants"), apply("$rigid")});
  std::vector<FormulaPtr> quant = {apply(std::string(quantification_token(cfg.default_quantification)))};
  for (const auto& [type, q] : cfg.quantification)
    quant.push_back(assign(apply(type), apply(std::string(quantification_token(q)))));
  spec.properties.push_back({apply("$quantification"), list(std::move(quant))});

  std::vector<FormulaPtr> mods;
  FormulaPtr def = render_schemes(cfg.default_schemes);
  if (def->kind == FormulaKind::List)
    mods = def->args;
  else
    mods.push_back(def);
  for (const auto& [idx, set] : cfg.modalities) {
    std::vector<ConnectiveParam> params;
    if (!idx.empty()) params.push_back({std::nullopt, index(idx)});
    mods.push_back(assign(non_classical("$box", std::move(params), {}), render_schemes(set)));
  }
  spec.properties.push_back({apply("$modalities"), list(std::move(mods))});
  return spec;
}

std::vector<ModalConfig> enumerate_modal_configurations() {
  std::vector<ModalConfig> out;
  for (const auto& [name, set] : modal_systems()) {
    for (auto q : {Quantification::Varying, Quantification::Constant, Quantification::Cumulative,
                   Quantification::Decreasing}) {
      LogicSpec spec;
      spec.logic_name = "$modal";
      spec.properties.push_back({apply("$constants"), apply("$rigid")});
      spec.properties.push_back({apply("$quantification"), apply(std::string(quantification_token(q)))});
      spec.properties.push_back({apply("$modalities"), apply(std::string(kSystemPrefix) + name)});
      out.push_back(validate_modal_config(spec));
    }
  }
  return out;
}

DdlConfig validate_ddl_config(const LogicSpec& spec) {
  std::optional<DdlConfig> cfg;
  for (const auto& p : spec.properties) {
    if (p.key_text() != "$$system") unknown("unknown parameter '" + p.key_text() + "' for logic $$ddl");
    auto tok = token_text(p.value);
    if (tok && *tok == "$$aqvistE")
      cfg = DdlConfig{DdlSystem::AqvistE};
    else if (tok && *tok == "$$carmoJones")
      cfg = DdlConfig{DdlSystem::CarmoJones};
    else
      unknown("unknown $$system value '" + print_formula(*p.value) + "'");
  }
  if (!cfg) throw Error(ErrorCode::MissingParameter, "logic $$ddl requires a $$system parameter");
  return *cfg;
}

void validate_pal_config(const LogicSpec& spec) {
  if (!spec.properties.empty())
    unknown("unknown parameter '" + spec.properties.front().key_text() + "' for logic $$pal");
}

}  // namespace ncl::logic
