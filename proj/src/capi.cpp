#include "tcoh/tcoh.h"

#include <cstring>
#include <string>

#include "tcoh/commands.hpp"
#include "tcoh/errors.hpp"
#include "tcoh/io.hpp"
#include "tcoh/purity.hpp"
#include "tcoh/tensor.hpp"

struct tcoh_algebra {
  tcoh::AlgebraPtr alg;
};
struct tcoh_module {
  tcoh::RightModule m;
};
struct tcoh_bimodule {
  tcoh::Bimodule b;
};

namespace {

thread_local std::string last_error;

template <class F>
tcoh_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    return TCOH_OK;
  } catch (const tcoh::InputError& e) {
    last_error = e.what();
    return TCOH_ERR_INPUT;
  } catch (const tcoh::HypothesisError& e) {
    last_error = e.what();
    return TCOH_ERR_HYPOTHESIS;
  } catch (const tcoh::UndeterminedError& e) {
    last_error = e.what();
    return TCOH_ERR_UNDETERMINED;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TCOH_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return TCOH_ERR_INTERNAL;
  }
}

tcoh_status missing(const char* what) {
  last_error = std::string("null argument: ") + what;
  return TCOH_ERR_ARGUMENT;
}

tcoh::Field parse_field(const char* field) {
  if (!field || std::strcmp(field, "Q") == 0) return tcoh::Field::rationals();
  char* end = nullptr;
  unsigned long long p = std::strtoull(field, &end, 10);
  if (*end != '\0' || !tcoh::is_prime_u64(p)) throw tcoh::InputError(std::string("bad field: ") + field);
  return tcoh::Field::prime(p);
}

}  // namespace

extern "C" {

const char* tcoh_version(void) { return tcoh::kToolVersion; }

const char* tcoh_last_error(void) { return last_error.c_str(); }

tcoh_status tcoh_algebra_load(const char* ref, const char* field, tcoh_algebra** out) {
  if (!ref || !out) return missing("ref/out");
  return guard([&] { *out = new tcoh_algebra{tcoh::load_algebra(ref, parse_field(field))}; });
}

tcoh_status tcoh_algebra_dim(const tcoh_algebra* a, size_t* out) {
  if (!a || !out) return missing("algebra/out");
  *out = a->alg->dim();
  return TCOH_OK;
}

tcoh_status tcoh_algebra_vertices(const tcoh_algebra* a, size_t* out) {
  if (!a || !out) return missing("algebra/out");
  *out = a->alg->num_vertices();
  return TCOH_OK;
}

void tcoh_algebra_free(tcoh_algebra* a) { delete a; }

tcoh_status tcoh_module_load(const tcoh_algebra* a, const char* path, tcoh_module** out) {
  if (!a || !path || !out) return missing("algebra/path/out");
  return guard([&] { *out = new tcoh_module{tcoh::load_module(path, a->alg)}; });
}

tcoh_status tcoh_module_simple(const tcoh_algebra* a, size_t vertex, tcoh_module** out) {
  if (!a || !out) return missing("algebra/out");
  return guard([&] {
    if (vertex >= a->alg->num_vertices()) throw tcoh::InputError("vertex out of range");
    *out = new tcoh_module{tcoh::simple_module(a->alg, vertex)};
  });
}

tcoh_status tcoh_module_dim(const tcoh_module* m, size_t* out) {
  if (!m || !out) return missing("module/out");
  *out = m->m.dim();
  return TCOH_OK;
}

void tcoh_module_free(tcoh_module* m) { delete m; }

tcoh_status tcoh_bimodule_load(const tcoh_algebra* a, const char* ref, size_t gldim_bound, tcoh_bimodule** out) {
  if (!a || !ref || !out) return missing("algebra/ref/out");
  return guard([&] { *out = new tcoh_bimodule{tcoh::load_sigma(ref, a->alg, gldim_bound)}; });
}

tcoh_status tcoh_bimodule_dim(const tcoh_bimodule* b, size_t* out) {
  if (!b || !out) return missing("bimodule/out");
  *out = b->b.dim();
  return TCOH_OK;
}

void tcoh_bimodule_free(tcoh_bimodule* b) { delete b; }

tcoh_status tcoh_tensor(const tcoh_module* m, const tcoh_bimodule* s, tcoh_module** out) {
  if (!m || !s || !out) return missing("module/bimodule/out");
  return guard([&] { *out = new tcoh_module{tcoh::tensor_over(m->m, s->b)}; });
}

tcoh_status tcoh_tor_dim(const tcoh_module* m, const tcoh_bimodule* s, size_t i, size_t* out) {
  if (!m || !s || !out) return missing("module/bimodule/out");
  return guard([&] { *out = tcoh::tor_dim(m->m, s->b, i); });
}

tcoh_status tcoh_purity_power(const tcoh_bimodule* s, size_t n_max, size_t gldim_bound, int* pure,
                              size_t* witness_stage, size_t* witness_index) {
  if (!s || !pure) return missing("bimodule/pure");
  return guard([&] {
    tcoh::PurityReport r = tcoh::purity_power(s->b, n_max, gldim_bound);
    *pure = r.pure ? 1 : 0;
    if (r.witness) {
      if (witness_stage) *witness_stage = r.witness->stage;
      if (witness_index) *witness_index = r.witness->index;
    }
  });
}

tcoh_status tcoh_run_command(const char* request_json, char** report_json, int* exit_code) {
  if (!request_json || !report_json || !exit_code) return missing("request/report/exit_code");
  return guard([&] {
    tcoh::CommandResult r = tcoh::run_request(request_json);
    *exit_code = r.exit_code;
    *report_json = static_cast<char*>(std::malloc(r.rendered.size() + 1));
    if (!*report_json) throw std::bad_alloc();
    std::memcpy(*report_json, r.rendered.c_str(), r.rendered.size() + 1);
  });
}

void tcoh_string_free(char* s) { std::free(s); }

}  // extern "C"
