#pragma once

#include <filesystem>
#include <vector>

#include "ncl/syntax/ast.hpp"

namespace ncl::syntax {

/// Splices included formulas in place of each include directive. Paths are
/// tried relative to the including file's directory, then each entry of
/// `search_paths` in order. Throws ncl::Error(IncludeError) on a missing
/// file, an include cycle (the message lists the cycle) or a duplicate
/// formula name in the resolved problem.
Problem resolve_includes(const Problem& problem, const std::filesystem::path& problem_file,
                         const std::vector<std::filesystem::path>& search_paths);

}  // namespace ncl::syntax
