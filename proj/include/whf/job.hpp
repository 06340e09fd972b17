#ifndef WHF_JOB_HPP
#define WHF_JOB_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "whf/factorization.hpp"

namespace whf {

enum class JobMode { factorize, verify, orthogonal, oracle_compare, matrix_dump };

// Exit statuses shared by the C API and the command line.
enum ExitCode : int { kExitOk = 0, kExitInternal = 1, kExitValidation = 2, kExitNumerical = 3 };

// A batch job. The symbol is given either as coefficients or as an
// elementary factor list (never both); oracle-compare may omit it and draw
// a seeded corpus instead.
struct JobSpec {
  Ring ring = Ring::rational();
  JobMode mode = JobMode::factorize;
  std::optional<nlohmann::json> coefficients;
  std::optional<nlohmann::json> factors;
  // Known inverse coefficients for a coefficient-form symbol.
  std::optional<nlohmann::json> inverse;
  // Half-width of the inverse window; 0 picks a default per mode.
  int window = 0;
  TildeRoute route = TildeRoute::derived;
  std::uint64_t seed = 42;
  int count = 100;
  int samples = 1024;
  double oracle_tolerance = 1e-8;
  // verify: the factors to re-multiply.
  std::optional<nlohmann::json> result;
  // matrix-dump.
  std::string matrix = "U";
  int matrix_half_width = 4;
  std::optional<std::string> t;
  bool dump_matrices = false;
};

// Overrides applied on top of the JSON document (command-line flags).
struct JobOverrides {
  std::optional<std::string> mode;
  std::optional<int> window;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
  bool dump_matrices = false;
};

struct JobOutcome {
  int exit_code = kExitOk;
  nlohmann::json output;
  // Text dumps of windowed matrices (matrix-dump mode or dump_matrices).
  std::string dump;
};

JobMode parse_mode(std::string_view name);
std::string to_string(JobMode mode);

// "Q", "C", "Q^3", or {"base": "Q", "arity": 3, "tolerance": 1e-9}.
Ring parse_ring(const nlohmann::json& j);

// Throws ValidationError on schema violations.
JobSpec parse_job(const nlohmann::json& j, const JobOverrides& overrides = {});

// Never throws: failures become an exit code plus {"error": {...}}.
JobOutcome run_job(const JobSpec& spec);
JobOutcome run_job_text(std::string_view text, const JobOverrides& overrides = {});

nlohmann::json result_to_json(const FactorizationResult& r, const Ring& ring);

}  // namespace whf

#endif  // WHF_JOB_HPP
