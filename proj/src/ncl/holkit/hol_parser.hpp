#pragma once

#include <string_view>

#include "ncl/holkit/hol.hpp"

namespace ncl::hol {

/// Reads back the monomorphic THF subset produced by print_hol_problem.
/// Role `type` entries become declarations, `definition` entries
/// definitions, `axiom` entries axioms and every other role a user formula.
/// Throws ncl::Error(ParseError).
HolProblem parse_hol_problem(std::string_view text);

HolTermPtr parse_hol_term(std::string_view text);
HolTypePtr parse_hol_type(std::string_view text);

}  // namespace ncl::hol
