#include "nclembed/nclembed.h"

#include <filesystem>
#include <string>

#include "ncl/error.hpp"
#include "ncl/pipeline.hpp"

struct ncl_session {
  ncl::PipelineOptions options;
  std::string result;
  std::string error;
  bool passthrough = false;
  bool countermodel = false;
};

namespace {

ncl_status status_of(ncl::ErrorCode code) {
  // The C enumeration lists the codes in ErrorCode order, after NCL_OK.
  return static_cast<ncl_status>(static_cast<int>(code) + 1);
}

template <class F>
ncl_status guarded(ncl_session* s, F&& body) {
  if (!s) return NCL_USAGE_ERROR;
  s->result.clear();
  s->error.clear();
  s->passthrough = false;
  s->countermodel = false;
  try {
    body();
    return NCL_OK;
  } catch (const ncl::Error& e) {
    s->error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    s->error = e.what();
    return NCL_INTERNAL_ERROR;
  }
}

std::filesystem::path source_path(const char* path) {
  return path ? std::filesystem::path(path) : std::filesystem::current_path() / "stdin.p";
}

void run_embed(ncl_session* s, const std::string& text, const char* path, int flags) {
  ncl::PipelineOptions options = s->options;
  options.inline_definitions = (flags & NCL_INLINE) != 0;
  ncl::EmbedOutcome out = ncl::embed_source(text, source_path(path), options);
  s->result = std::move(out.text);
  s->passthrough = out.passthrough;
}

void run_check(ncl_session* s, const std::string& text, const char* path, int max_worlds,
               int max_domain) {
  if (max_worlds < 1 || max_domain < 1)
    throw ncl::Error(ncl::ErrorCode::UsageError, "bounds must be at least 1");
  ncl::oracle::Bounds bounds;
  bounds.max_worlds = max_worlds;
  bounds.max_domain = max_domain;
  ncl::oracle::Verdict v = ncl::check_source(text, source_path(path), s->options, bounds);
  s->result = v.text();
  s->countermodel = v.countermodel;
}

}  // namespace

extern "C" {

ncl_session* ncl_session_new(void) { return new (std::nothrow) ncl_session(); }

void ncl_session_free(ncl_session* session) { delete session; }

ncl_status ncl_add_include_dir(ncl_session* session, const char* dir) {
  return guarded(session, [&] {
    if (!dir) throw ncl::Error(ncl::ErrorCode::UsageError, "null include directory");
    session->options.include_dirs.emplace_back(dir);
  });
}

ncl_status ncl_embed_file(ncl_session* session, const char* path, int flags) {
  return guarded(session, [&] {
    if (!path) throw ncl::Error(ncl::ErrorCode::UsageError, "null path");
    run_embed(session, ncl::read_file(path), path, flags);
  });
}

ncl_status ncl_embed_text(ncl_session* session, const char* text, const char* path, int flags) {
  return guarded(session, [&] {
    if (!text) throw ncl::Error(ncl::ErrorCode::UsageError, "null text");
    run_embed(session, text, path, flags);
  });
}

ncl_status ncl_check_file(ncl_session* session, const char* path, int max_worlds, int max_domain) {
  return guarded(session, [&] {
    if (!path) throw ncl::Error(ncl::ErrorCode::UsageError, "null path");
    run_check(session, ncl::read_file(path), path, max_worlds, max_domain);
  });
}

ncl_status ncl_check_text(ncl_session* session, const char* text, const char* path, int max_worlds,
                          int max_domain) {
  return guarded(session, [&] {
    if (!text) throw ncl::Error(ncl::ErrorCode::UsageError, "null text");
    run_check(session, text, path, max_worlds, max_domain);
  });
}

const char* ncl_result_text(const ncl_session* session) {
  return session ? session->result.c_str() : "";
}

int ncl_result_passthrough(const ncl_session* session) { return session && session->passthrough; }

int ncl_result_countermodel(const ncl_session* session) { return session && session->countermodel; }

const char* ncl_last_error(const ncl_session* session) {
  return session ? session->error.c_str() : "null session";
}

const char* ncl_status_reason(ncl_status status) {
  if (status == NCL_OK) return "OK";
  int code = static_cast<int>(status) - 1;
  if (code < 0 || code > static_cast<int>(ncl::ErrorCode::InternalError)) return "INTERNAL_ERROR";
  return ncl::reason_code(static_cast<ncl::ErrorCode>(code)).data();
}

const char* ncl_version(void) { return "1.0.0"; }

}  // extern "C"
