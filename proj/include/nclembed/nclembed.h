#ifndef NCLEMBED_NCLEMBED_H
#define NCLEMBED_NCLEMBED_H

/* C interface to the nclembed library: embedding of non-classical TPTP
 * problems into THF and bounded countermodel search. All strings are UTF-8
 * and owned by the session; they stay valid until the next call on it. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(NCLEMBED_BUILDING)
#define NCLEMBED_API __attribute__((visibility("default")))
#else
#define NCLEMBED_API
#endif

typedef struct ncl_session ncl_session;

typedef enum ncl_status {
  NCL_OK = 0,
  NCL_PARSE_ERROR,
  NCL_AMBIGUOUS_LOGIC_SPEC,
  NCL_UNSUPPORTED_LOGIC,
  NCL_UNSUPPORTED_PARAMETER,
  NCL_UNKNOWN_PARAMETER,
  NCL_MISSING_PARAMETER,
  NCL_UNSUPPORTED_CONNECTIVE,
  NCL_MALFORMED_CONNECTIVE,
  NCL_NOT_PROPOSITIONAL,
  NCL_TYPE_ERROR,
  NCL_INCLUDE_ERROR,
  NCL_BUDGET_EXCEEDED,
  NCL_IO_ERROR,
  NCL_USAGE_ERROR,
  NCL_INTERNAL_ERROR
} ncl_status;

/* Flags for ncl_embed_*. */
#define NCL_INLINE 1

NCLEMBED_API ncl_session* ncl_session_new(void);
NCLEMBED_API void ncl_session_free(ncl_session* session);

/* Adds a directory searched for include files after the including file's
 * own directory. */
NCLEMBED_API ncl_status ncl_add_include_dir(ncl_session* session, const char* dir);

/* Embeds a problem. Without a logic specification the result is the input
 * problem, reprinted, and ncl_result_passthrough returns 1. `path` names
 * the file includes are resolved against; it may be NULL for text. */
NCLEMBED_API ncl_status ncl_embed_file(ncl_session* session, const char* path, int flags);
NCLEMBED_API ncl_status ncl_embed_text(ncl_session* session, const char* text, const char* path,
                                       int flags);

/* Bounded countermodel search. The result text starts with a `verdict:`
 * line; ncl_result_countermodel tells which verdict it is. */
NCLEMBED_API ncl_status ncl_check_file(ncl_session* session, const char* path, int max_worlds,
                                       int max_domain);
NCLEMBED_API ncl_status ncl_check_text(ncl_session* session, const char* text, const char* path,
                                       int max_worlds, int max_domain);

NCLEMBED_API const char* ncl_result_text(const ncl_session* session);
NCLEMBED_API int ncl_result_passthrough(const ncl_session* session);
NCLEMBED_API int ncl_result_countermodel(const ncl_session* session);

/* Message of the last failed call, or "" after a success. */
NCLEMBED_API const char* ncl_last_error(const ncl_session* session);

/* Reason code such as "PARSE_ERROR"; "OK" for NCL_OK. */
NCLEMBED_API const char* ncl_status_reason(ncl_status status);

NCLEMBED_API const char* ncl_version(void);

#ifdef __cplusplus
}
#endif

#endif
