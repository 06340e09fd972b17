#include "whf/whf.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "whf/errors.hpp"
#include "whf/job.hpp"

struct whf_job {
  nlohmann::json document;
  whf::JobOverrides overrides;
};

struct whf_result {
  whf_status status;
  std::string json;
  std::string dump;
};

namespace {

thread_local std::string last_error;

whf_status fail(whf_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
whf_status guard(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const std::bad_alloc&) {
    return fail(WHF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(WHF_ERR_INTERNAL, e.what());
  }
}

whf_status from_exit(int code) {
  switch (code) {
    case whf::kExitOk:
      return WHF_OK;
    case whf::kExitValidation:
      return WHF_ERR_VALIDATION;
    case whf::kExitNumerical:
      return WHF_ERR_NUMERICAL;
    default:
      return WHF_ERR_INTERNAL;
  }
}

whf_result* execute(const whf_job& job) {
  whf::JobOutcome outcome;
  try {
    outcome = whf::run_job(whf::parse_job(job.document, job.overrides));
  } catch (const std::exception& e) {
    outcome.exit_code = whf::kExitValidation;
    outcome.output = {{"error", {{"kind", "validation"}, {"message", e.what()}}}};
  }
  auto* r = new whf_result{from_exit(outcome.exit_code), outcome.output.dump(), std::move(outcome.dump)};
  if (r->status != WHF_OK) last_error = outcome.output.contains("error") ? outcome.output["error"]["message"].get<std::string>() : "job failed";
  return r;
}

}  // namespace

extern "C" {

const char* whf_version(void) { return WHF_VERSION; }

const char* whf_last_error(void) { return last_error.c_str(); }

whf_status whf_job_parse(const char* json, whf_job** out) {
  if (!json || !out) return fail(WHF_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] {
    nlohmann::json doc = nlohmann::json::parse(json, nullptr, false);
    if (doc.is_discarded()) return fail(WHF_ERR_VALIDATION, "malformed JSON");
    *out = new whf_job{std::move(doc), {}};
    return WHF_OK;
  });
}

void whf_job_free(whf_job* job) { delete job; }

whf_status whf_job_set_mode(whf_job* job, const char* mode) {
  if (!job || !mode) return fail(WHF_ERR_ARGUMENT, "null argument");
  return guard([&] {
    try {
      whf::parse_mode(mode);
    } catch (const whf::ValidationError& e) {
      return fail(WHF_ERR_ARGUMENT, e.what());
    }
    job->overrides.mode = mode;
    return WHF_OK;
  });
}

whf_status whf_job_set_window(whf_job* job, int half_width) {
  if (!job) return fail(WHF_ERR_ARGUMENT, "null job");
  if (half_width < 1) return fail(WHF_ERR_ARGUMENT, "window must be a positive half-width");
  job->overrides.window = half_width;
  return WHF_OK;
}

whf_status whf_job_set_seed(whf_job* job, uint64_t seed) {
  if (!job) return fail(WHF_ERR_ARGUMENT, "null job");
  job->overrides.seed = seed;
  return WHF_OK;
}

whf_status whf_job_set_tolerance(whf_job* job, double tolerance) {
  if (!job) return fail(WHF_ERR_ARGUMENT, "null job");
  if (!(tolerance > 0.0)) return fail(WHF_ERR_ARGUMENT, "tolerance must be positive");
  job->overrides.tolerance = tolerance;
  return WHF_OK;
}

whf_status whf_job_set_dump_matrices(whf_job* job, int enabled) {
  if (!job) return fail(WHF_ERR_ARGUMENT, "null job");
  job->overrides.dump_matrices = enabled != 0;
  return WHF_OK;
}

whf_status whf_job_run(const whf_job* job, whf_result** out) {
  if (!job || !out) return fail(WHF_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] {
    *out = execute(*job);
    return (*out)->status;
  });
}

whf_status whf_result_status(const whf_result* result) { return result ? result->status : WHF_ERR_ARGUMENT; }

const char* whf_result_json(const whf_result* result) { return result ? result->json.c_str() : ""; }

const char* whf_result_dump(const whf_result* result) { return result ? result->dump.c_str() : ""; }

void whf_result_free(whf_result* result) { delete result; }

whf_status whf_run_json(const char* job_json, char** out_json, char** out_dump) {
  if (!job_json || !out_json) return fail(WHF_ERR_ARGUMENT, "null argument");
  *out_json = nullptr;
  if (out_dump) *out_dump = nullptr;
  return guard([&] {
    whf_job* job = nullptr;
    if (whf_status s = whf_job_parse(job_json, &job); s != WHF_OK) {
      *out_json = copy_string(R"({"error":{"kind":"validation","message":"malformed JSON"}})");
      return s;
    }
    if (out_dump) job->overrides.dump_matrices = true;
    whf_result* r = execute(*job);
    whf_job_free(job);
    const whf_status status = r->status;
    *out_json = copy_string(r->json);
    if (out_dump) *out_dump = copy_string(r->dump);
    const bool copied = *out_json && (!out_dump || *out_dump);
    whf_result_free(r);
    return copied ? status : fail(WHF_ERR_INTERNAL, "out of memory");
  });
}

void whf_string_free(char* s) { std::free(s); }

}  // extern "C"
