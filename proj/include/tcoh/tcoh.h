#ifndef TCOH_H
#define TCOH_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define TCOH_API __declspec(dllexport)
#else
#define TCOH_API __attribute__((visibility("default")))
#endif

typedef enum {
  TCOH_OK = 0,
  TCOH_ERR_INPUT = 1,
  TCOH_ERR_HYPOTHESIS = 2,
  TCOH_ERR_UNDETERMINED = 3,
  TCOH_ERR_INTERNAL = 4,
  TCOH_ERR_ARGUMENT = 5
} tcoh_status;

typedef struct tcoh_algebra tcoh_algebra;
typedef struct tcoh_module tcoh_module;
typedef struct tcoh_bimodule tcoh_bimodule;

TCOH_API const char* tcoh_version(void);
/* Message of the last failed call on this thread; empty after success. */
TCOH_API const char* tcoh_last_error(void);

/* ref is a file path or a built-in name; field is "Q" or a prime such as "7". */
TCOH_API tcoh_status tcoh_algebra_load(const char* ref, const char* field, tcoh_algebra** out);
TCOH_API tcoh_status tcoh_algebra_dim(const tcoh_algebra* a, size_t* out);
TCOH_API tcoh_status tcoh_algebra_vertices(const tcoh_algebra* a, size_t* out);
TCOH_API void tcoh_algebra_free(tcoh_algebra* a);

TCOH_API tcoh_status tcoh_module_load(const tcoh_algebra* a, const char* path, tcoh_module** out);
TCOH_API tcoh_status tcoh_module_simple(const tcoh_algebra* a, size_t vertex, tcoh_module** out);
TCOH_API tcoh_status tcoh_module_dim(const tcoh_module* m, size_t* out);
TCOH_API void tcoh_module_free(tcoh_module* m);

/* ref is a bimodule file or one of regular, dual, top, bar, free(r), theta(n). */
TCOH_API tcoh_status tcoh_bimodule_load(const tcoh_algebra* a, const char* ref, size_t gldim_bound,
                                        tcoh_bimodule** out);
TCOH_API tcoh_status tcoh_bimodule_dim(const tcoh_bimodule* b, size_t* out);
TCOH_API void tcoh_bimodule_free(tcoh_bimodule* b);

TCOH_API tcoh_status tcoh_tensor(const tcoh_module* m, const tcoh_bimodule* s, tcoh_module** out);
TCOH_API tcoh_status tcoh_tor_dim(const tcoh_module* m, const tcoh_bimodule* s, size_t i, size_t* out);
/* pure is set to 1 or 0; on failure the witness stage and Tor index are stored. */
TCOH_API tcoh_status tcoh_purity_power(const tcoh_bimodule* s, size_t n_max, size_t gldim_bound, int* pure,
                                       size_t* witness_stage, size_t* witness_index);

/* Runs a JSON request; *report_json is owned by the caller (tcoh_string_free). */
TCOH_API tcoh_status tcoh_run_command(const char* request_json, char** report_json, int* exit_code);
TCOH_API void tcoh_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
