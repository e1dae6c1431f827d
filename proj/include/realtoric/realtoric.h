/*
 * C interface to the realtoric library: rational and mod-2 Betti numbers,
 * orientability and Euler-characteristic checks for small covers (real toric
 * manifolds) N_P(chi).
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns an rtm_status; on failure rtm_last_error()
 * describes the problem (the message is thread-local and valid until the
 * next failing call on the same thread). Strings returned through char**
 * are owned by the caller and released with rtm_string_free.
 */
#ifndef REALTORIC_H
#define REALTORIC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RTM_API __declspec(dllexport)
#else
#define RTM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rtm_status {
  RTM_OK = 0,
  RTM_E_ARGUMENT = 1,   /* null pointer or out-of-range argument */
  RTM_E_INPUT = 2,      /* malformed JSON or inconsistent input data */
  RTM_E_VALIDATION = 3, /* not a valid small cover (e.g. singular minor) */
  RTM_E_INVARIANT = 4,  /* cross-check failed: closed form or covering identity */
  RTM_E_INTERNAL = 5
} rtm_status;

typedef enum rtm_format { RTM_FORMAT_TEXT = 0, RTM_FORMAT_JSON = 1 } rtm_format;

typedef struct rtm_problem rtm_problem;
typedef struct rtm_report rtm_report;

typedef struct rtm_options {
  unsigned jobs;  /* worker threads; 0 = hardware concurrency */
  int breakdown;  /* nonzero: record per-subset contributions */
} rtm_options;

RTM_API const char* rtm_version(void);
RTM_API const char* rtm_last_error(void);
RTM_API void rtm_string_free(char* s);

/* Problems: a complex plus a characteristic matrix, not yet validated. */
RTM_API rtm_status rtm_problem_parse(const char* json, const char* description,
                                     rtm_problem** out);
RTM_API rtm_status rtm_problem_permutahedron(int n, rtm_problem** out);
RTM_API rtm_status rtm_problem_graph_assoc(const char* graph_json, const char* description,
                                           rtm_problem** out);
RTM_API rtm_status rtm_problem_to_json(const rtm_problem* problem, char** out);
RTM_API int rtm_problem_dimension(const rtm_problem* problem);
RTM_API int rtm_problem_facet_count(const rtm_problem* problem);
RTM_API void rtm_problem_free(rtm_problem* problem);

/* Per-face minor report. Returns RTM_E_VALIDATION, with *out still filled,
 * when the problem is not a valid small cover. */
RTM_API rtm_status rtm_validate(const rtm_problem* problem, rtm_format format, char** out);

/* Betti report. Returns RTM_E_VALIDATION when the problem is invalid. */
RTM_API rtm_status rtm_report_compute(const rtm_problem* problem, const rtm_options* options,
                                      rtm_report** out);
RTM_API rtm_status rtm_report_render(const rtm_report* report, rtm_format format, char** out);
RTM_API size_t rtm_report_degree_count(const rtm_report* report);
RTM_API int64_t rtm_report_betti(const rtm_report* report, size_t degree);
RTM_API int rtm_report_orientable(const rtm_report* report);
/* Witness bitmask (bit i-1 = row i); 0 when not orientable. */
RTM_API uint64_t rtm_report_witness(const rtm_report* report);
RTM_API int64_t rtm_report_euler(const rtm_report* report);
/* -1: no closed form attached, 0: mismatch, 1: match. */
RTM_API int rtm_report_closed_form(const rtm_report* report);
RTM_API void rtm_report_free(rtm_report* report);

/* Covering identity chi(Z_K(D^1,S^0)) = 2^(m-n) chi(N). Returns
 * RTM_E_INVARIANT, with *out filled, on mismatch. */
RTM_API rtm_status rtm_moment_angle_check(const rtm_problem* problem, unsigned jobs,
                                          rtm_format format, char** out);

/* Euler secant numbers A_0 ... A_2k. */
RTM_API rtm_status rtm_secant(int k, rtm_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* REALTORIC_H */
