#include "mnormlab/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "mnormlab/eigen.hpp"
#include "mnormlab/farey.hpp"
#include "mnormlab/hadamard.hpp"
#include "mnormlab/integrand.hpp"
#include "mnormlab/matrix_core.hpp"
#include "mnormlab/quadrature.hpp"
#include "mnormlab/specfun.hpp"

namespace mnormlab::experiment {
namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

std::vector<double> default_reflection_grid() {
  std::vector<double> g;
  for (int i = 1; i <= 19; ++i) g.push_back(0.05 * i);
  return g;
}

std::vector<double> default_duplication_grid() {
  std::vector<double> g;
  for (int i = 1; i <= 20; ++i) g.push_back(0.25 * i);
  return g;
}

bool uses_points(const ExperimentConfig& c) {
  return c.command == Command::gamma &&
         (c.gamma_mode == "reflection" || c.gamma_mode == "duplication");
}

bool uses_tol(const ExperimentConfig& c) {
  switch (c.command) {
    case Command::norm:
    case Command::farey:
    case Command::eigen:
      return true;
    case Command::hadamard:
      return c.hadamard_check == "spectral";
    case Command::gamma:
      return false;
  }
  return false;
}

QuadratureOptions quad_opts(const ExperimentConfig& c) {
  QuadratureOptions q;
  if (c.tol) q.abs_tol = *c.tol;
  return q;
}

eigen::JacobiOptions jacobi_opts(const ExperimentConfig& c) {
  eigen::JacobiOptions j;
  if (c.tol) j.tol = *c.tol;
  j.max_sweeps = c.max_sweeps;
  return j;
}

double rel_diff(double a, double b) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

void run_norm(const ExperimentConfig& c, Report& r) {
  const Integrand f = integrands::by_name(c.integrand);
  r.meta["integrand"] = c.integrand;
  r.meta["m"] = c.exponent;
  r.columns = {"n", "raw", "normalized", "predicted", "abs_error"};
  std::vector<std::size_t> orders(c.orders.begin(), c.orders.end());
  for (const NormReport& row :
       convergence_table(f, c.exponent, orders, quad_opts(c))) {
    r.rows.push_back({static_cast<std::int64_t>(row.order), row.raw_norm_power,
                      row.normalized, row.predicted_limit, row.abs_error});
  }
}

void run_gamma(const ExperimentConfig& c, Report& r) {
  using namespace specfun;
  const std::string& mode = c.gamma_mode;
  r.meta["mode"] = mode;
  if (mode == "integral") {
    const double limit = 0.5 * std::log(2.0 * std::numbers::pi);
    r.columns = {"n", "matrix_route", "closed_route", "rel_diff", "limit",
                 "closed_abs_error"};
    for (std::int64_t n : c.orders) {
      const double via = gamma_integral_via_matrix(n);
      const double closed = gamma_integral_closed_partial(n);
      r.rows.push_back({n, via, closed, rel_diff(via, closed), limit,
                        std::fabs(closed - limit)});
    }
  } else if (mode == "rowproduct") {
    r.columns = {"k", "log_product", "closed_form", "residual"};
    for (std::int64_t k : c.orders) {
      const double lhs = gamma_row_log_product(k);
      const double rhs = gamma_row_log_product_closed(k);
      r.rows.push_back({k, lhs, rhs, lhs - rhs});
    }
  } else if (mode == "sine-odd" || mode == "sine-even") {
    const bool odd = mode == "sine-odd";
    r.columns = {"n", "order", "residual"};
    for (std::int64_t n : c.orders) {
      r.rows.push_back({n, odd ? 2 * n + 1 : 2 * n,
                        odd ? sine_product_odd_residual(n)
                            : sine_product_even_residual(n)});
    }
  } else {
    const bool refl = mode == "reflection";
    std::vector<double> grid = c.points;
    if (grid.empty()) {
      grid = refl ? default_reflection_grid() : default_duplication_grid();
    }
    r.columns = {refl ? "s" : "z", "residual"};
    for (double p : grid) {
      r.rows.push_back(
          {p, refl ? euler_reflection_residual(p) : duplication_residual(p)});
    }
  }
}

void run_farey(const ExperimentConfig& c, Report& r) {
  const Integrand f = integrands::by_name(c.integrand);
  r.meta["integrand"] = c.integrand;
  const double integral = integrate_open_unit(f.eval, quad_opts(c));
  r.columns = {"x", "phi", "average", "integral", "abs_error",
               "coprime_density"};
  for (std::int64_t x : c.orders) {
    const auto ux = static_cast<std::uint64_t>(x);
    const double avg = farey::weyl_average(f, ux);
    r.rows.push_back({x, static_cast<std::int64_t>(farey::phi_summatory(ux)),
                      avg, integral, std::fabs(avg - integral),
                      farey::coprime_density(ux)});
  }
}

void run_eigen(const ExperimentConfig& c, Report& r) {
  const Integrand f = integrands::by_name(c.integrand);
  r.meta["integrand"] = c.integrand;
  const double predicted = predict_limit(f, 2.0);
  r.columns = {"n",           "trace",     "sum_sq", "normalized_sum_sq",
               "norm_power_2", "predicted", "sweeps"};
  for (std::int64_t n : c.orders) {
    const auto un = static_cast<std::size_t>(n);
    const auto s = eigen::spectral_sum_report(f, un, jacobi_opts(c));
    r.rows.push_back({n, s.trace, s.sum_sq, s.normalized_sum_sq,
                      norm_power(SampledMatrixSpec(f, un), 2.0), predicted,
                      static_cast<std::int64_t>(s.sweeps_used)});
  }
}

void run_hadamard(const ExperimentConfig& c, Report& r) {
  using namespace hadamard;
  const std::string& check = c.hadamard_check;
  r.meta["check"] = check;
  if (check == "orthogonality") {
    r.columns = {"k", "order", "is_hadamard"};
  } else if (check == "oscillation") {
    r.columns = {"k", "order", "mismatch_count", "lower_bound", "verdict"};
  } else {
    r.columns = {"k", "order", "spectral_sum_sq", "eigen_sum_sq"};
  }
  for (std::int64_t k : c.orders) {
    const SignMatrix m = sylvester(static_cast<unsigned>(k));
    const auto order = static_cast<std::int64_t>(m.order());
    if (check == "orthogonality") {
      r.rows.push_back({k, order, is_hadamard(m)});
    } else if (check == "oscillation") {
      const OscillationReport o = oscillation_bound(m);
      r.rows.push_back({k, order, static_cast<std::int64_t>(o.mismatch_count),
                        o.lower_bound, std::string(to_string(o.verdict))});
    } else {
      const auto dec = eigen::jacobi_eigenvalues(to_dense(m), jacobi_opts(c));
      double sq = 0.0;
      for (double l : dec.eigenvalues) sq += l * l;
      r.rows.push_back({k, order, spectral_sum_sq(m), sq});
    }
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ordered_json cell_to_json(const Cell& cell) {
  return std::visit([](const auto& v) { return ordered_json(v); }, cell);
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::norm: return "norm";
    case Command::gamma: return "gamma";
    case Command::farey: return "farey";
    case Command::eigen: return "eigen";
    case Command::hadamard: return "hadamard";
  }
  return "?";
}

void validate(const ExperimentConfig& c) {
  if (uses_points(c)) {
    if (!c.orders.empty()) {
      throw UsageError("--orders does not apply to gamma --mode " +
                       c.gamma_mode + "; use --points");
    }
    for (double p : c.points) {
      if (!std::isfinite(p)) throw UsageError("--points must be finite");
    }
  } else {
    if (!c.points.empty()) {
      throw UsageError("--points only applies to gamma --mode reflection or "
                       "duplication");
    }
    if (c.orders.empty()) {
      const char* flag = c.command == Command::farey      ? "--x"
                         : c.command == Command::hadamard ? "--k"
                                                          : "--orders";
      throw UsageError(std::string(flag) + " is required for " +
                       to_string(c.command));
    }
    for (std::size_t i = 0; i < c.orders.size(); ++i) {
      const std::int64_t lo = c.command == Command::hadamard ? 0 : 1;
      if (c.orders[i] < lo) {
        throw UsageError("orders must be >= " + std::to_string(lo));
      }
      if (i > 0 && c.orders[i] <= c.orders[i - 1]) {
        throw UsageError("orders must be strictly ascending");
      }
    }
  }
  if (!(c.exponent >= 1.0) || !std::isfinite(c.exponent)) {
    throw UsageError("--m must be a finite real >= 1");
  }
  if (c.tol) {
    if (!uses_tol(c)) {
      throw UsageError("--tol does not apply to this command");
    }
    if (!(*c.tol > 0.0) || !std::isfinite(*c.tol)) {
      throw UsageError("--tol must be a positive real");
    }
  }
  if (c.max_sweeps < 1) throw UsageError("--max-sweeps must be >= 1");
  if (c.command == Command::gamma) {
    static const char* modes[] = {"integral",   "rowproduct", "sine-odd",
                                  "sine-even", "reflection", "duplication"};
    bool ok = false;
    for (const char* m : modes) ok = ok || c.gamma_mode == m;
    if (!ok) throw UsageError("unknown gamma --mode '" + c.gamma_mode + "'");
  }
  if (c.command == Command::hadamard && c.hadamard_check != "orthogonality" &&
      c.hadamard_check != "oscillation" && c.hadamard_check != "spectral") {
    throw UsageError("unknown hadamard --check '" + c.hadamard_check + "'");
  }
  if (c.command == Command::norm || c.command == Command::farey ||
      c.command == Command::eigen) {
    bool known = false;
    for (const auto& name : integrands::preset_names()) {
      known = known || name == c.integrand;
    }
    if (!known) {
      throw UsageError("unknown integrand '" + c.integrand +
                       "' (expected exp, lngamma, identity or const1)");
    }
  }
}

Report run_experiment(const ExperimentConfig& c) {
  validate(c);
  Report r;
  r.meta["tool"] = "mnormlab";
  r.meta["version"] = kVersion;
  r.meta["command"] = to_string(c.command);
  if (c.tol) r.meta["tol"] = *c.tol;
  if (c.timestamp) r.meta["timestamp"] = utc_timestamp();
  switch (c.command) {
    case Command::norm: run_norm(c, r); break;
    case Command::gamma: run_gamma(c, r); break;
    case Command::farey: run_farey(c, r); break;
    case Command::eigen: run_eigen(c, r); break;
    case Command::hadamard: run_hadamard(c, r); break;
  }
  return r;
}

void write_csv(const Report& report, std::ostream& os) {
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    os << (i ? "," : "") << report.columns[i];
  }
  os << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      std::visit(
          [&os](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              os << format_double(v);
            } else if constexpr (std::is_same_v<T, bool>) {
              os << (v ? "true" : "false");
            } else {
              os << v;
            }
          },
          row[i]);
    }
    os << '\n';
  }
}

void write_json(const Report& report, std::ostream& os) {
  ordered_json doc;
  doc["meta"] = report.meta;
  doc["rows"] = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json obj = ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      obj[report.columns[i]] = cell_to_json(row[i]);
    }
    doc["rows"].push_back(std::move(obj));
  }
  os << doc.dump(2) << '\n';
}

int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  Report report;
  try {
    report = run_experiment(config);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  std::ostringstream buf;
  if (config.format == OutputFormat::json) {
    write_json(report, buf);
  } else {
    write_csv(report, buf);
  }
  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!file || !(file << buf.str()) || !file.flush()) {
      err << "error: cannot write " << *config.output_path << '\n';
      return 1;
    }
  } else {
    out << buf.str();
  }
  return 0;
}

}  // namespace mnormlab::experiment
