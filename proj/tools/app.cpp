#include "app.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>

#include "nclembed/nclembed.h"

namespace nclembed {

namespace {

using Session = std::unique_ptr<ncl_session, decltype(&ncl_session_free)>;

std::string envelope(const std::string& body) {
  return "% SZS status Success\n% SZS output start ListOfFormulae\n" + body +
         "% SZS output end ListOfFormulae\n";
}

int fail(const RunConfig& config, std::ostream& out, std::ostream& err, const std::string& reason,
         const std::string& message) {
  err << "nclembed: " << reason << ": " << message << "\n";
  if (config.tstp) out << "% SZS status Error\n% " << reason << ": " << message << "\n";
  return 1;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Session session(ncl_session_new(), &ncl_session_free);
  if (!session) return fail(config, out, err, "INTERNAL_ERROR", "out of memory");
  for (const auto& dir : config.include_dirs) ncl_add_include_dir(session.get(), dir.c_str());

  const bool from_stdin = config.input == "-";
  std::string text;
  if (from_stdin) text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());

  ncl_status status;
  if (config.command == Command::Embed) {
    int flags = config.inline_definitions ? NCL_INLINE : 0;
    status = from_stdin ? ncl_embed_text(session.get(), text.c_str(), nullptr, flags)
                        : ncl_embed_file(session.get(), config.input.c_str(), flags);
  } else {
    status = from_stdin
                 ? ncl_check_text(session.get(), text.c_str(), nullptr, config.max_worlds, config.max_domain)
                 : ncl_check_file(session.get(), config.input.c_str(), config.max_worlds, config.max_domain);
  }
  if (status != NCL_OK)
    return fail(config, out, err, ncl_status_reason(status), ncl_last_error(session.get()));

  std::string result = ncl_result_text(session.get());
  if (config.tstp && config.command == Command::Embed) result = envelope(result);
  if (!config.output) {
    out << result;
    out.flush();
    return 0;
  }
  std::ofstream file(*config.output, std::ios::binary);
  file << result;
  file.close();
  if (!file) return fail(config, out, err, "IO_ERROR", "cannot write " + *config.output);
  return 0;
}

}  // namespace nclembed
