#include <stdio.h>
#include <string.h>

#include "tcoh/tcoh.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

int main(void) {
  tcoh_algebra* alg = NULL;
  tcoh_bimodule* theta = NULL;
  tcoh_bimodule* top = NULL;
  tcoh_module* s = NULL;
  tcoh_module* t = NULL;
  size_t n = 0, stage = 0, index = 0;
  int pure = -1, code = -1;
  char* report = NULL;

  EXPECT(strlen(tcoh_version()) > 0);
  EXPECT(tcoh_algebra_load("kronecker", "Q", &alg) == TCOH_OK);
  EXPECT(tcoh_algebra_dim(alg, &n) == TCOH_OK && n == 4);
  EXPECT(tcoh_algebra_vertices(alg, &n) == TCOH_OK && n == 2);
  EXPECT(tcoh_bimodule_load(alg, "theta(1)", 2, &theta) == TCOH_OK);
  EXPECT(tcoh_bimodule_dim(theta, &n) == TCOH_OK && n == 12);
  EXPECT(tcoh_module_simple(alg, 1, &s) == TCOH_OK);
  EXPECT(tcoh_tensor(s, theta, &t) == TCOH_OK);
  EXPECT(tcoh_module_dim(t, &n) == TCOH_OK && n == 5);
  EXPECT(tcoh_tor_dim(s, theta, 1, &n) == TCOH_OK && n == 0);
  EXPECT(tcoh_purity_power(theta, 3, 2, &pure, &stage, &index) == TCOH_OK && pure == 1);
  EXPECT(tcoh_module_simple(alg, 7, &s) == TCOH_ERR_INPUT);
  EXPECT(strlen(tcoh_last_error()) > 0);
  EXPECT(tcoh_algebra_dim(NULL, &n) == TCOH_ERR_ARGUMENT);
  EXPECT(tcoh_bimodule_load(alg, "theta(0)", 2, &top) == TCOH_ERR_HYPOTHESIS);
  tcoh_module_free(t);
  tcoh_module_free(s);
  tcoh_bimodule_free(theta);
  tcoh_algebra_free(alg);

  EXPECT(tcoh_algebra_load("dual-numbers", "3", &alg) == TCOH_OK);
  EXPECT(tcoh_bimodule_load(alg, "top", 3, &top) == TCOH_OK);
  EXPECT(tcoh_purity_power(top, 3, 3, &pure, &stage, &index) == TCOH_OK);
  EXPECT(pure == 0 && stage == 2 && index == 1);
  tcoh_bimodule_free(top);
  tcoh_algebra_free(alg);
  EXPECT(tcoh_algebra_load("dual-numbers", "4", &alg) == TCOH_ERR_INPUT);

  EXPECT(tcoh_run_command("{\"command\": \"theta\", \"algebra\": \"kronecker\"}", &report, &code) == TCOH_OK);
  EXPECT(code == 0 && strstr(report, "\"dim\": 12") != NULL);
  tcoh_string_free(report);
  EXPECT(tcoh_run_command("{\"command\": \"theta\"", &report, &code) == TCOH_OK);
  EXPECT(code == 2);
  tcoh_string_free(report);

  if (failures) fprintf(stderr, "%d failures\n", failures);
  else printf("capi: all checks passed\n");
  return failures ? 1 : 0;
}
