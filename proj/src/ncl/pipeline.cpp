#include "ncl/pipeline.hpp"

#include <fstream>
#include <sstream>

#include "ncl/error.hpp"
#include "ncl/holkit/hol_printer.hpp"
#include "ncl/holkit/normalize.hpp"
#include "ncl/logicspec/logic_spec.hpp"
#include "ncl/logicspec/registry.hpp"
#include "ncl/syntax/includes.hpp"
#include "ncl/syntax/parser.hpp"
#include "ncl/syntax/printer.hpp"

namespace ncl {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

syntax::Problem load_problem(std::string_view text, const std::filesystem::path& file,
                             const PipelineOptions& options) {
  return syntax::resolve_includes(syntax::parse_problem(text), file, options.include_dirs);
}

hol::HolProblem embed_problem(const syntax::Problem& problem, bool inline_definitions) {
  auto [spec, rest] = logic::extract_logic_spec(problem);
  if (!spec) throw Error(ErrorCode::UnsupportedLogic, "the problem has no logic specification");
  hol::HolProblem out = logic::lookup_embedding(spec->logic_name).embed(*spec, rest);
  return inline_definitions ? hol::inline_definitions(out) : out;
}

EmbedOutcome embed_source(std::string_view text, const std::filesystem::path& file,
                          const PipelineOptions& options) {
  syntax::Problem parsed = syntax::parse_problem(text);
  syntax::Problem resolved = syntax::resolve_includes(parsed, file, options.include_dirs);
  auto [spec, rest] = logic::extract_logic_spec(resolved);
  if (!spec) return {true, syntax::print_problem(parsed)};
  return {false, hol::print_hol_problem(embed_problem(resolved, options.inline_definitions))};
}

oracle::Verdict check_source(std::string_view text, const std::filesystem::path& file,
                             const PipelineOptions& options, const oracle::Bounds& bounds) {
  return oracle::decide_bounded(load_problem(text, file, options), bounds);
}

}  // namespace ncl
