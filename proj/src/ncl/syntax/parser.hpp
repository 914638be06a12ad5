#pragma once

#include <string_view>

#include "ncl/syntax/ast.hpp"

namespace ncl::syntax {

/// Parses a TPTP problem (tff/thf annotated formulas and include
/// directives). `{$box}(p)` and `{$box} @ p` yield the same node shape.
/// Throws ncl::Error(ParseError) with line and column on malformed input.
Problem parse_problem(std::string_view text);

/// Parses a single formula, as it would appear inside an annotated formula.
FormulaPtr parse_formula(std::string_view text);

/// Parses a single type expression such as `($i * $i) > $o`.
TypePtr parse_type(std::string_view text);

}  // namespace ncl::syntax
