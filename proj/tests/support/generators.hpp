#pragma once

// Seeded random formula generators for property tests.

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ncl/error.hpp"
#include "ncl/syntax/ast.hpp"

namespace ncl::testing {

using Rng = std::mt19937_64;

struct GenOptions {
  int depth = 3;
  std::vector<std::string> atoms = {"p", "q"};
  std::vector<std::string> indices = {""};     // modal indices, "" for unindexed
  std::vector<std::string> nominals;           // hybrid
  std::vector<std::string> agents;             // PAL, with '#'
  int announce_depth = 2;                      // PAL
};

syntax::FormulaPtr random_modal(Rng& rng, const GenOptions& options);
syntax::FormulaPtr random_hybrid(Rng& rng, const GenOptions& options);
syntax::FormulaPtr random_pal(Rng& rng, const GenOptions& options);
syntax::FormulaPtr random_ddl(Rng& rng, const GenOptions& options);

/// Modal depth (nesting of non-classical connectives) of a formula.
int modal_depth(const syntax::Formula& f);
/// Announcement nesting depth.
int announce_depth(const syntax::Formula& f);

/// `spec` followed by one axiom `f<i>` per formula.
syntax::Problem problem_of(const std::string& spec, const std::vector<syntax::FormulaPtr>& formulas);

/// The code of the ncl::Error thrown by `action`, or nullopt when it
/// returns normally.
std::optional<ErrorCode> error_of(const std::function<void()>& action);
/// Message of the ncl::Error thrown by `action`, empty when none.
std::string message_of(const std::function<void()>& action);

/// Source text of a file in the test fixture directory.
std::string fixture(const std::string& relative);
std::string fixture_path(const std::string& relative);

}  // namespace ncl::testing
