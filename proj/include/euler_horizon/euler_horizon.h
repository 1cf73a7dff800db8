#ifndef EULER_HORIZON_H
#define EULER_HORIZON_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(EH_BUILDING_LIBRARY)
#define EH_API __attribute__((visibility("default")))
#else
#define EH_API
#endif

typedef enum eh_status {
  EH_OK = 0,
  EH_SYNTAX_ERROR,
  EH_NORMALIZATION_ERROR,
  EH_DIVISION_BY_ZERO_POLY,
  EH_DEGENERATE_INPUT,
  EH_ZERO_RESULTANT,
  EH_TRUNCATION_INSUFFICIENT,
  EH_RECONSTRUCTION_AMBIGUOUS,
  EH_BOUND_OVERFLOW,
  EH_ROOT_FINDING_DIVERGED,
  EH_ALL_ROOTS_CANCELLED,
  EH_POLE_AT_ONE,
  EH_CONVERGENCE_DOMAIN,
  EH_LOCAL_FACTOR_ZERO,
  EH_FACTOR_POLE,
  EH_DOMAIN_ERROR,
  EH_MISSING_ZEROS_FILE,
  EH_INCONCLUSIVE,
  EH_INVALID_ARGUMENT,
  EH_IO_ERROR,
  EH_INTERNAL
} eh_status;

typedef struct eh_rational eh_rational;
typedef struct eh_config eh_config;
typedef struct eh_report eh_report;

/* Name of a status code, e.g. "SyntaxError". Static storage. */
EH_API const char* eh_status_name(eh_status status);
/* Message of the last failing call on this thread; never NULL. */
EH_API const char* eh_last_error(void);
/* Releases strings returned through char** out-parameters. */
EH_API void eh_string_free(char* s);

EH_API eh_config* eh_config_create(void);
EH_API void eh_config_destroy(eh_config* cfg);
EH_API eh_status eh_config_set_ydeg(eh_config* cfg, int ydeg);
EH_API eh_status eh_config_set_prime_bound(eh_config* cfg, int64_t bound);
EH_API eh_status eh_config_set_margin_tol(eh_config* cfg, double tol);
EH_API eh_status eh_config_set_density_threshold(eh_config* cfg, double threshold);
/* NULL clears the zeros file. */
EH_API eh_status eh_config_set_zeros_file(eh_config* cfg, const char* path);

EH_API eh_status eh_rational_parse(const char* text, eh_rational** out);
EH_API void eh_rational_destroy(eh_rational* w);
EH_API eh_status eh_rational_to_string(const eh_rational* w, char** out);

/* Full classification. Returns EH_OK with a report even when the case is
   undecided; eh_report_case then yields 0. */
EH_API eh_status eh_analyze(const eh_rational* w, const eh_config* cfg, const char* expr, eh_report** out);
EH_API void eh_report_destroy(eh_report* r);
EH_API int eh_report_case(const eh_report* r);
EH_API eh_status eh_report_json(const eh_report* r, char** out);

/* Expansion c(n,m) as CSV "n,m,c". */
EH_API eh_status eh_expand_csv(const eh_rational* w, int ydeg, char** out);
/* Local roots for all primes up to the configured bound, CSV
   "p,root_re,root_im,re_s,margin". */
EH_API eh_status eh_zeros_csv(const eh_rational* w, const eh_config* cfg, char** out);
/* Singularity atlas of a decided report; as_json selects JSON over CSV. */
EH_API eh_status eh_atlas(const eh_report* r, double T, int as_json, char** out);
/* Partial Euler product at s = re + i*im over the configured prime bound. */
EH_API eh_status eh_eval(const eh_rational* w, const eh_config* cfg, double re, double im, double* value_re,
                         double* value_im, double* tail_bound);
/* Riemann zeta. */
EH_API eh_status eh_zeta(double re, double im, double* value_re, double* value_im);

/* Corpus as JSON array of {id, expr, supported, expected_case, expected_beta, notes}. */
EH_API eh_status eh_corpus_list_json(char** out);
/* Runs one supported entry; *passed receives 0/1 and *out a one-line summary. */
EH_API eh_status eh_corpus_run(const char* id, const eh_config* cfg, int* passed, char** out);

#ifdef __cplusplus
}
#endif

#endif
