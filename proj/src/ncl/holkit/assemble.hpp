#pragma once

#include <vector>

#include "ncl/holkit/hol.hpp"

namespace ncl::hol {

/// Orders the segments, renames user symbols, user types and user formula
/// names that clash with introduced ones (fresh_name, applied everywhere),
/// then type checks the result. Entries marked `user` are the ones that may
/// be renamed; everything else keeps its reserved name.
HolProblem assemble(std::vector<HolEntry> declarations, std::vector<HolEntry> definitions,
                    std::vector<HolEntry> axioms, std::vector<HolEntry> user_formulas);

}  // namespace ncl::hol
