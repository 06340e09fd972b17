/* C interface to the factorization library.
 *
 * Jobs are JSON documents (see README.md). Every handle is opaque; strings
 * returned through char** belong to the caller and go back through
 * whf_string_free. Strings returned as const char* live as long as the
 * handle they came from. */
#ifndef WHF_H
#define WHF_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(WHF_BUILDING)
#    define WHF_API __declspec(dllexport)
#  else
#    define WHF_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__)
#  define WHF_API __attribute__((visibility("default")))
#else
#  define WHF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* 0-3 double as process exit codes. */
typedef enum whf_status {
  WHF_OK = 0,
  WHF_ERR_INTERNAL = 1,
  WHF_ERR_VALIDATION = 2,
  WHF_ERR_NUMERICAL = 3,
  WHF_ERR_ARGUMENT = 4
} whf_status;

typedef struct whf_job whf_job;
typedef struct whf_result whf_result;

WHF_API const char* whf_version(void);

/* Message of the last failing call on this thread, "" if none. */
WHF_API const char* whf_last_error(void);

/* Parses a job document. Only JSON syntax is checked here; the schema is
 * checked by whf_job_run so that overrides can still change the mode. */
WHF_API whf_status whf_job_parse(const char* json, whf_job** out);
WHF_API void whf_job_free(whf_job* job);

WHF_API whf_status whf_job_set_mode(whf_job* job, const char* mode);
WHF_API whf_status whf_job_set_window(whf_job* job, int half_width);
WHF_API whf_status whf_job_set_seed(whf_job* job, uint64_t seed);
WHF_API whf_status whf_job_set_tolerance(whf_job* job, double tolerance);
WHF_API whf_status whf_job_set_dump_matrices(whf_job* job, int enabled);

/* Runs the job. *out is set whenever the job could be attempted, also on
 * validation and numerical failures (its JSON then holds an "error" key). */
WHF_API whf_status whf_job_run(const whf_job* job, whf_result** out);

WHF_API whf_status whf_result_status(const whf_result* result);
WHF_API const char* whf_result_json(const whf_result* result);
/* Matrix dump text, "" unless requested. */
WHF_API const char* whf_result_dump(const whf_result* result);
WHF_API void whf_result_free(whf_result* result);

/* One-shot convenience: parse, run, copy out. out_dump may be NULL. */
WHF_API whf_status whf_run_json(const char* job_json, char** out_json, char** out_dump);
WHF_API void whf_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* WHF_H */
