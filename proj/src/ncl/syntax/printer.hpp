#pragma once

#include <string>

#include "ncl/syntax/ast.hpp"

namespace ncl::syntax {

/// One line per annotated formula or include directive. Compound formulas
/// are fully parenthesized so the text re-parses to an equal AST.
std::string print_problem(const Problem& problem);

std::string print_annotated(const AnnotatedFormula& formula);

std::string print_formula(const Formula& formula, Language lang = Language::Tff);

/// Quotes `name` unless it is a lower word, a `$`/`$$` word, an integer or a
/// distinct object (kept with its double quotes).
std::string print_symbol(const std::string& name);

}  // namespace ncl::syntax
