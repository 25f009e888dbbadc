/* Newton filtrations and Poincaré series coefficients: C interface.
 *
 * Every function returns an nf_status. On failure nf_last_error() describes
 * the problem (thread-local, valid until the next call on the same thread).
 * Strings returned through `char**` are owned by the caller and released with
 * nf_string_free(). Integer outputs are int64_t; reports are JSON documents
 * with sorted keys.
 */
#ifndef NEWTONFILT_H
#define NEWTONFILT_H

#include <stddef.h>
#include <stdint.h>

#if defined(NEWTONFILT_BUILDING_LIBRARY)
#define NF_API __attribute__((visibility("default")))
#else
#define NF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  NF_OK = 0,
  NF_ERR_PARSE = 1,        /* malformed polynomial text */
  NF_ERR_INPUT = 2,        /* schema, arity or validation failure */
  NF_ERR_RANGE = 3,        /* index or exponent out of range */
  NF_ERR_INAPPLICABLE = 4, /* claim hypotheses fail for this input */
  NF_ERR_UNSUPPORTED = 5,
  NF_ERR_NULL_ARGUMENT = 6,
  NF_ERR_INTERNAL = 7
} nf_status;

typedef enum { NF_METHOD_A = 0, NF_METHOD_B = 1, NF_METHOD_BOTH = 2 } nf_method;

typedef struct nf_problem nf_problem;

typedef struct {
  nf_method method;
  unsigned threads;    /* 0 means 1 */
  int64_t truncation;  /* method A truncation; 0 selects the safe level */
  int force;           /* nonzero: skip the method-A size guard */
} nf_options;

typedef struct {
  const char* claim;      /* prop1, thm1, thm2, ps-identity, methods-agree */
  const int64_t* box;     /* s bounds or NULL */
  const int64_t* targets; /* target_count * s entries or NULL */
  size_t target_count;
  int64_t bound;          /* target-set degree bound; used without box/targets */
  int64_t margin;         /* ps-identity padding, >= 2 */
} nf_verify_request;

NF_API const char* nf_last_error(void);
NF_API const char* nf_status_name(nf_status status);
NF_API void nf_string_free(char* text);
NF_API nf_options nf_default_options(void);

NF_API nf_status nf_problem_load(const char* path, nf_problem** out);
NF_API nf_status nf_problem_parse(const char* json_text, nf_problem** out);
NF_API nf_status nf_problem_from_polynomial(const char* polynomial, const char* const* variables,
                                            size_t variable_count, nf_problem** out);
NF_API void nf_problem_free(nf_problem* problem);

NF_API size_t nf_problem_num_variables(const nf_problem* problem);
NF_API size_t nf_problem_num_facets(const nf_problem* problem);
/* coefficients: n entries. */
NF_API nf_status nf_problem_facet(const nf_problem* problem, size_t index, int64_t* coefficients,
                                  int64_t* degree);
/* Writes n entries and sets *is_stellar. */
NF_API nf_status nf_problem_stellar_vertex(const nf_problem* problem, int64_t* vertex,
                                           int* is_stellar);
/* s entries. */
NF_API nf_status nf_problem_u_of_f(const nf_problem* problem, int64_t* values);
/* Problem-file targets and box: counts, then s entries each. */
NF_API size_t nf_problem_target_count(const nf_problem* problem);
NF_API nf_status nf_problem_target(const nf_problem* problem, size_t index, int64_t* v);
NF_API int nf_problem_box(const nf_problem* problem, int64_t* bounds);
/* Method stored in the problem file, or `fallback`. */
NF_API nf_method nf_problem_method(const nf_problem* problem, nf_method fallback);

NF_API nf_status nf_poincare_coefficient(const nf_problem* problem, const int64_t* v,
                                         const nf_options* options, int64_t* coefficient,
                                         int* discrepancy);
NF_API nf_status nf_quotient_dim(const nf_problem* problem, const int64_t* lower,
                                 const int64_t* upper, const nf_options* options, int64_t* dim);

NF_API nf_status nf_report_diagram(const nf_problem* problem, char** json_out);
NF_API nf_status nf_report_coefficients(const nf_problem* problem, const int64_t* targets,
                                        size_t target_count, const nf_options* options,
                                        char** json_out);
/* Targets: the explicit list if given, else [0, box]. */
NF_API nf_status nf_report_series(const nf_problem* problem, const int64_t* targets,
                                  size_t target_count, const int64_t* box,
                                  const nf_options* options, char** json_out);
NF_API nf_status nf_report_verify(const nf_problem* problem, const nf_verify_request* request,
                                  const nf_options* options, char** json_out, int* holds);
/* facet is 0-based; budget < 0 selects the default. */
NF_API nf_status nf_report_order_value(const nf_problem* problem, const char* germ, size_t facet,
                                       int64_t budget, char** json_out);
NF_API nf_status nf_report_examples(const char* corpus_dir, int all, unsigned threads,
                                    char** json_out, int* all_green);

#ifdef __cplusplus
}
#endif

#endif /* NEWTONFILT_H */
