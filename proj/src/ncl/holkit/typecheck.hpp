#pragma once

#include <map>
#include <string>

#include "ncl/holkit/hol.hpp"

namespace ncl::hol {

using ConstantTypes = std::map<std::string, HolTypePtr>;

/// Type of `term` given the constant declarations in scope. Throws
/// ncl::Error(TypeError) naming the offending subterm together with its
/// expected and actual type.
HolTypePtr type_of(const HolTermPtr& term, const ConstantTypes& constants);

/// Checks a whole problem in emission order: every symbol is declared before
/// use, definitions match their declared type, and every axiom and user
/// formula has type `$o`.
void typecheck(const HolProblem& problem);

/// Declared constant types of `problem`.
ConstantTypes constant_types(const HolProblem& problem);

}  // namespace ncl::hol
