#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "mnormlab/error.hpp"

namespace mnormlab::experiment {

/// Invalid flag values or combinations. The CLI exits with status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Command { norm, gamma, farey, eigen, hadamard };
enum class OutputFormat { csv, json };

struct ExperimentConfig {
  Command command = Command::norm;
  std::string integrand = "exp";
  double exponent = 1.0;
  // n for norm/eigen/gamma, x for farey, k for hadamard.
  std::vector<std::int64_t> orders;
  // Real grid for gamma reflection/duplication.
  std::vector<double> points;
  OutputFormat format = OutputFormat::csv;
  std::optional<std::string> output_path;
  std::optional<double> tol;
  int max_sweeps = 64;
  std::string gamma_mode = "integral";
  std::string hadamard_check = "orthogonality";
  bool timestamp = false;
};

using Cell = std::variant<std::int64_t, double, bool, std::string>;

struct Report {
  nlohmann::ordered_json meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string to_string(Command c);

/// Validates the configuration; throws UsageError with an actionable
/// message on the first problem found.
void validate(const ExperimentConfig& config);

/// Validates and runs one experiment. Rows come back in input order.
/// Module errors propagate unchanged.
Report run_experiment(const ExperimentConfig& config);

/// CSV: header row, '.' decimal point, 17 significant digits, '\n' endings.
void write_csv(const Report& report, std::ostream& os);
/// One top-level object {"meta": ..., "rows": [...]}, 2-space indent.
void write_json(const Report& report, std::ostream& os);

/// Runs and writes to config.output_path (or `out`). Diagnostics go to
/// `err`. Returns 0 on success, 2 on usage errors, 1 on computation errors.
int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

}  // namespace mnormlab::experiment
