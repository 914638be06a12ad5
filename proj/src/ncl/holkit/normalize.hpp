#pragma once

#include <map>

#include "ncl/holkit/hol.hpp"

namespace ncl::hol {

/// Capture-avoiding substitution of `value` for the free variable `name`.
HolTermPtr substitute(const HolTermPtr& term, const std::string& name, const HolTermPtr& value);

/// Replaces constants by closed terms (no capture is possible).
HolTermPtr replace_constants(const HolTermPtr& term, const std::map<std::string, HolTermPtr>& map);

/// Full beta normal form; eta is left alone.
HolTermPtr beta_normalize(const HolTermPtr& term);

/// Expands every definition into its uses, beta-normalizes axioms and user
/// formulas and drops the definitions with their declarations.
HolProblem inline_definitions(const HolProblem& problem);

}  // namespace ncl::hol
