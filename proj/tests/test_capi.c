/* The shared library seen from plain C. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include <newtonfilt/newtonfilt.h>

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s (last error: %s)\n", __FILE__, \
              __LINE__, #cond, nf_last_error());                      \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static void example1(void) {
  nf_problem* p = NULL;
  EXPECT(nf_problem_load(NEWTONFILT_CORPUS_DIR "/example1.json", &p) == NF_OK);
  if (!p) return;
  EXPECT(nf_problem_num_variables(p) == 3);
  EXPECT(nf_problem_num_facets(p) == 4);

  int64_t a[3], d;
  EXPECT(nf_problem_facet(p, 1, a, &d) == NF_OK);
  EXPECT(a[0] == 2 && a[1] == 1 && a[2] == 1 && d == 5);
  EXPECT(nf_problem_facet(p, 4, a, &d) == NF_ERR_RANGE);

  int64_t vertex[3];
  int stellar = -1;
  EXPECT(nf_problem_stellar_vertex(p, vertex, &stellar) == NF_OK);
  EXPECT(stellar == 0);

  int64_t uf[4];
  EXPECT(nf_problem_u_of_f(p, uf) == NF_OK);
  EXPECT(uf[0] == 4 && uf[1] == 5 && uf[2] == 5 && uf[3] == 5);

  EXPECT(nf_problem_target_count(p) == 1);
  int64_t target[4];
  EXPECT(nf_problem_target(p, 0, target) == NF_OK);
  EXPECT(nf_problem_method(p, NF_METHOD_A) == NF_METHOD_BOTH);

  nf_options opts = nf_default_options();
  opts.method = NF_METHOD_BOTH;
  int64_t c = 0;
  int discrepancy = -1;
  EXPECT(nf_poincare_coefficient(p, target, &opts, &c, &discrepancy) == NF_OK);
  EXPECT(c == -1);
  EXPECT(discrepancy == 0);

  int64_t lower[4] = {4, 5, 5, 5}, upper[4] = {5, 6, 6, 6}, dim = 0;
  opts.method = NF_METHOD_B;
  EXPECT(nf_quotient_dim(p, lower, upper, &opts, &dim) == NF_OK);
  EXPECT(dim == 17);
  EXPECT(nf_quotient_dim(p, upper, lower, &opts, &dim) == NF_ERR_INPUT);

  char* json = NULL;
  EXPECT(nf_report_diagram(p, &json) == NF_OK);
  EXPECT(json && strstr(json, "\"stellar_vertex\": null"));
  nf_string_free(json);

  nf_verify_request req;
  memset(&req, 0, sizeof req);
  req.claim = "thm2";
  req.bound = 2;
  req.margin = 2;
  int holds = -1;
  json = NULL;
  EXPECT(nf_report_verify(p, &req, &opts, &json, &holds) == NF_ERR_INAPPLICABLE);
  EXPECT(json == NULL);
  EXPECT(strstr(nf_last_error(), "stellar") != NULL);

  req.claim = "no-such-claim";
  EXPECT(nf_report_verify(p, &req, &opts, &json, &holds) == NF_ERR_INPUT);

  nf_problem_free(p);
}

static void curve(void) {
  const char* vars[] = {"x", "y"};
  nf_problem* p = NULL;
  EXPECT(nf_problem_from_polynomial("x^5 + x^2*y^2 + y^5", vars, 2, &p) == NF_OK);
  if (!p) return;
  int64_t vertex[2];
  int stellar = 0;
  EXPECT(nf_problem_stellar_vertex(p, vertex, &stellar) == NF_OK);
  EXPECT(stellar == 1 && vertex[0] == 2 && vertex[1] == 2);

  nf_options opts = nf_default_options();
  nf_verify_request req;
  memset(&req, 0, sizeof req);
  req.claim = "thm1";
  int64_t box[2] = {8, 8};
  req.box = box;
  req.margin = 2;
  char* json = NULL;
  int holds = 0;
  EXPECT(nf_report_verify(p, &req, &opts, &json, &holds) == NF_OK);
  EXPECT(holds == 1);
  EXPECT(json && strstr(json, "\"holds\": true"));
  nf_string_free(json);

  int64_t targets[4] = {0, 0, 10, 10};
  json = NULL;
  EXPECT(nf_report_coefficients(p, targets, 2, &opts, &json) == NF_OK);
  EXPECT(json && strstr(json, "\"coefficient\""));
  nf_string_free(json);

  json = NULL;
  EXPECT(nf_report_order_value(p, "x^5 + x^2*y^2", 0, 20, &json) == NF_OK);
  EXPECT(json && strstr(json, "15"));
  nf_string_free(json);

  nf_problem_free(p);
}

static void errors(void) {
  nf_problem* p = NULL;
  EXPECT(nf_problem_load(NULL, &p) == NF_ERR_NULL_ARGUMENT);
  EXPECT(nf_problem_parse("{\"variables\":[\"x\",\"y\"],\"polynomial\":\"x^2.5\"}", &p) ==
         NF_ERR_PARSE);
  EXPECT(p == NULL);
  EXPECT(nf_problem_parse("{\"variables\":[\"x\",\"y\"],\"polynomial\":\"x^3*y+y^4\"}", &p) ==
         NF_ERR_INPUT);
  EXPECT(nf_problem_parse("{\"variables\":[\"x\"],\"polynomial\":\"x^3\"}", &p) ==
         NF_ERR_UNSUPPORTED);
  EXPECT(nf_problem_parse("{\"variables\":[\"x\",\"y\"],\"polynomial\":\"x^2+y^3\",\"extra\":1}",
                          &p) == NF_ERR_INPUT);
  EXPECT(strstr(nf_last_error(), "extra") != NULL);
  EXPECT(strcmp(nf_status_name(NF_ERR_INAPPLICABLE), "inapplicable") == 0);
  EXPECT(nf_problem_num_facets(NULL) == 0);
  nf_problem_free(NULL);
  nf_string_free(NULL);
}

int main(void) {
  example1();
  curve();
  errors();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  puts("C interface: all checks passed");
  return 0;
}
