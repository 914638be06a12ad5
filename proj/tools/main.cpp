#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "app.hpp"

int main(int argc, char** argv) {
  nclembed::RunConfig config;
  CLI::App app{"Embeds non-classical TPTP problems into THF and searches for small countermodels"};
  app.require_subcommand(1);

  auto* embed = app.add_subcommand("embed", "Translate a problem to THF");
  embed->add_flag("--tstp", config.tstp, "Wrap the output in SZS status lines");
  embed->add_flag("--inline", config.inline_definitions, "Inline definitions and beta-normalize");
  embed->add_option("input", config.input, "Problem file, or - for standard input")->required();
  embed->add_option("output", config.output, "Output file (default: standard output)");

  auto* check = app.add_subcommand("check", "Search for a countermodel within bounds");
  check->add_option("--max-worlds", config.max_worlds, "Largest number of worlds")
      ->check(CLI::Range(1, 8));
  check->add_option("--max-domain", config.max_domain, "Largest domain per type")
      ->check(CLI::Range(1, 8));
  check->add_option("input", config.input, "Problem file, or - for standard input")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  config.command = app.got_subcommand(check) ? nclembed::Command::Check : nclembed::Command::Embed;
  if (const char* root = std::getenv("TPTP"); root && *root) config.include_dirs.push_back(root);
  return nclembed::run(config, std::cout, std::cerr);
}
