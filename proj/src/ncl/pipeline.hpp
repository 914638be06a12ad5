#pragma once

// The end-to-end pipeline behind the CLI and the C API: parse, resolve
// includes, find the logic specification, dispatch and print.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ncl/holkit/hol.hpp"
#include "ncl/oracle/decide.hpp"
#include "ncl/syntax/ast.hpp"

namespace ncl {

struct PipelineOptions {
  std::vector<std::filesystem::path> include_dirs;
  bool inline_definitions = false;
};

struct EmbedOutcome {
  bool passthrough = false;  // no logic specification: `text` is the input
  std::string text;
};

/// Throws ncl::Error(IoError) when the file cannot be read.
std::string read_file(const std::filesystem::path& path);

/// Parses `text` and resolves its includes relative to `file`.
syntax::Problem load_problem(std::string_view text, const std::filesystem::path& file,
                             const PipelineOptions& options);

/// Embeds a resolved problem that carries a logic specification.
hol::HolProblem embed_problem(const syntax::Problem& problem, bool inline_definitions = false);

EmbedOutcome embed_source(std::string_view text, const std::filesystem::path& file,
                          const PipelineOptions& options);

oracle::Verdict check_source(std::string_view text, const std::filesystem::path& file,
                             const PipelineOptions& options, const oracle::Bounds& bounds);

}  // namespace ncl
