#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nclembed {

enum class Command { Embed, Check };

struct RunConfig {
  Command command = Command::Embed;
  std::string input = "-";  // "-" reads standard input
  std::optional<std::string> output;
  bool tstp = false;
  bool inline_definitions = false;
  int max_worlds = 3;
  int max_domain = 2;
  std::vector<std::string> include_dirs;
};

/// Runs one subcommand. Results go to `out` (or the output file), the
/// reason code line to `err`. Returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace nclembed
