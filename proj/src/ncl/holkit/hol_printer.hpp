#pragma once

#include <string>

#include "ncl/holkit/hol.hpp"

namespace ncl::hol {

/// Top-level rendering: binders and equations appear without outer
/// parentheses, every nested compound term is parenthesized.
std::string print_term(const HolTermPtr& term);

/// `thf(<name>, <role>, <content>).`
std::string print_entry(const HolEntry& entry);

/// One line per entry, every line tagged `thf`.
std::string print_hol_problem(const HolProblem& problem);

}  // namespace ncl::hol
