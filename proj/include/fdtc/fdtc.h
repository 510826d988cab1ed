#ifndef FDTC_H
#define FDTC_H

/* C interface to the fdtc library. Strings returned through out-parameters
   are owned by the caller and released with fdtc_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define FDTC_API __attribute__((visibility("default")))
#else
#define FDTC_API
#endif

typedef enum fdtc_status {
  FDTC_OK = 0,
  FDTC_PARSE_ERROR = 2,
  FDTC_COMPUTE_ERROR = 3,
  FDTC_INCONCLUSIVE = 4,
  FDTC_ARGUMENT_ERROR = 5
} fdtc_status;

typedef struct fdtc_problem fdtc_problem;

/* Parses a problem document. On failure *error receives a message. */
FDTC_API fdtc_status fdtc_problem_parse(const char* json, fdtc_problem** out, char** error);
FDTC_API fdtc_status fdtc_problem_load(const char* path, fdtc_problem** out, char** error);
FDTC_API void fdtc_problem_free(fdtc_problem* problem);

/* Runs a command document against a problem (NULL for commands that need
   none). *report receives the report, or an error message on failure.
   The command field "format" selects "json" (default) or "text". */
FDTC_API fdtc_status fdtc_run(const fdtc_problem* problem, const char* command_json, char** report);

FDTC_API void fdtc_string_free(char* s);
FDTC_API const char* fdtc_version(void);

#ifdef __cplusplus
}
#endif

#endif
