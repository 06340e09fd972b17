// whf: batch front end over the C interface.
//
//   whf --input job.json [--mode M] [--window N] [--seed N] [--tolerance X] [--dump-matrices]
//
// The job's JSON result goes to stdout; matrix dumps go to stderr.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "whf/whf.h"

namespace {

int report(whf_status status) {
  std::fprintf(stderr, "whf: %s\n", whf_last_error());
  return status == WHF_ERR_ARGUMENT ? WHF_ERR_VALIDATION : status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wiener-Hopf factorization of Laurent series via Toeplitz determinants"};
  app.set_version_flag("--version", std::string(whf_version()));

  std::string input = "-";
  std::optional<std::string> mode;
  std::optional<int> window;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
  bool dump = false;
  app.add_option("-i,--input", input, "JSON job file, - for stdin");
  app.add_option("--mode", mode, "factorize | verify | orthogonal | oracle-compare | matrix-dump")
      ->check(CLI::IsMember({"factorize", "verify", "orthogonal", "oracle-compare", "matrix-dump"}));
  app.add_option("--window", window, "half-width of the inverse window")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "corpus seed for oracle-compare");
  app.add_option("--tolerance", tolerance, "ring tolerance for floating coefficients")->check(CLI::PositiveNumber);
  app.add_flag("--dump-matrices", dump, "print the windowed matrices to stderr");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : WHF_ERR_VALIDATION;
  }

  std::string text;
  if (input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(input);
    if (!in) {
      std::fprintf(stderr, "whf: cannot read %s\n", input.c_str());
      return WHF_ERR_VALIDATION;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  whf_job* job = nullptr;
  if (whf_status s = whf_job_parse(text.c_str(), &job); s != WHF_OK) {
    std::printf("{\"error\":{\"kind\":\"validation\",\"message\":\"malformed JSON\"}}\n");
    return report(s);
  }
  whf_status s = WHF_OK;
  if (mode) s = whf_job_set_mode(job, mode->c_str());
  if (s == WHF_OK && window) s = whf_job_set_window(job, *window);
  if (s == WHF_OK && seed) s = whf_job_set_seed(job, *seed);
  if (s == WHF_OK && tolerance) s = whf_job_set_tolerance(job, *tolerance);
  if (s == WHF_OK) s = whf_job_set_dump_matrices(job, dump ? 1 : 0);
  if (s != WHF_OK) {
    whf_job_free(job);
    return report(s);
  }

  whf_result* result = nullptr;
  s = whf_job_run(job, &result);
  whf_job_free(job);
  if (!result) return report(s);
  std::printf("%s\n", whf_result_json(result));
  const std::string matrices = whf_result_dump(result);
  if (!matrices.empty()) std::fprintf(stderr, "%s\n", matrices.c_str());
  whf_result_free(result);
  if (s != WHF_OK) return report(s);
  return 0;
}
