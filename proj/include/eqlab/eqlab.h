/* C interface to the eqlab checker. Every object is an opaque handle owned
 * by the caller and released with its _free function. Functions report
 * failure through eqlab_status; the message for the most recent failure on
 * the calling thread is available from eqlab_last_error(). Strings returned
 * through char** are released with eqlab_string_free. */
#ifndef EQLAB_EQLAB_H
#define EQLAB_EQLAB_H

#include <stddef.h>

#if defined(_WIN32)
#define EQLAB_API __declspec(dllexport)
#else
#define EQLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eqlab_status {
  EQLAB_OK = 0,
  EQLAB_COUNTEREXAMPLE = 1, /* a report was produced and some check failed */
  EQLAB_PARSE_ERROR = 2,
  EQLAB_CAP_EXCEEDED = 3,
  EQLAB_UNKNOWN_OBJECT = 4, /* unknown suite or object name */
  EQLAB_INVALID_ARGUMENT = 5,
  EQLAB_INTERNAL = 6
} eqlab_status;

typedef enum eqlab_format { EQLAB_FORMAT_TEXT = 0, EQLAB_FORMAT_JSON = 1 } eqlab_format;

typedef struct eqlab_instance eqlab_instance;
typedef struct eqlab_report eqlab_report;

EQLAB_API const char* eqlab_version(void);

/* Message for the last failed call on this thread; "" if none. Valid until
 * the next eqlab call on the same thread. */
EQLAB_API const char* eqlab_last_error(void);

EQLAB_API eqlab_status eqlab_instance_load_file(const char* path, eqlab_instance** out);
EQLAB_API eqlab_status eqlab_instance_load_string(const char* text, eqlab_instance** out);
EQLAB_API void eqlab_instance_free(eqlab_instance* inst);

/* Keys: budget, cap, zigzag_bound, seed; values are decimal strings. The
 * instance is rebuilt so bundled packs see the new seed and bound. */
EQLAB_API eqlab_status eqlab_config_set(eqlab_instance* inst, const char* key, const char* value);

/* Suites: axioms, equ-equivalence, eff-quotient, interval, encoding, all.
 * On EQLAB_OK or EQLAB_COUNTEREXAMPLE *out holds the report. */
EQLAB_API eqlab_status eqlab_run_suite(const eqlab_instance* inst, const char* suite, eqlab_report** out);

EQLAB_API int eqlab_report_passed(const eqlab_report* report);
EQLAB_API size_t eqlab_report_check_count(const eqlab_report* report);
EQLAB_API size_t eqlab_report_counterexample_count(const eqlab_report* report);
EQLAB_API eqlab_status eqlab_report_render(const eqlab_report* report, eqlab_format format, char** out);
EQLAB_API void eqlab_report_free(eqlab_report* report);

/* Graphviz text for a span, groupoid or 2-groupoid base of the instance. */
EQLAB_API eqlab_status eqlab_emit_dot(const eqlab_instance* inst, const char* name, char** out);

EQLAB_API void eqlab_string_free(char* s);

/* Naturals cross the boundary as decimal strings. */
EQLAB_API eqlab_status eqlab_cantor_pair(const char* n, const char* m, char** out);
EQLAB_API eqlab_status eqlab_cantor_unpair(const char* k, char** n, char** m);

/* *exhausted is set to 1 when the budget ran out (and *value is NULL). */
EQLAB_API eqlab_status eqlab_program_eval(const char* program, const char* input, size_t budget, int* exhausted,
                                          char** value);

#ifdef __cplusplus
}
#endif

#endif
