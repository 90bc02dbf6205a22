#include "mnormlab/matrix_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "mnormlab/error.hpp"
#include "mnormlab/summation.hpp"

namespace mnormlab {
namespace {

double sample(const Integrand& f, std::size_t j, std::size_t k) {
  const double v = f(static_cast<double>(j) / static_cast<double>(k));
  if (!std::isfinite(v)) {
    throw EvaluationError("integrand '" + f.label + "' is non-finite at " +
                          std::to_string(j) + "/" + std::to_string(k));
  }
  return v;
}

double abs_pow(double v, double m) {
  const double a = std::fabs(v);
  if (m == 1.0) return a;
  if (m == 2.0) return a * a;
  if (m == 3.0) return a * a * a;
  return std::pow(a, m);
}

void require_exponent(double m) {
  if (!(m >= 1.0) || !std::isfinite(m)) {
    throw DomainError("norm exponent must be a finite real >= 1");
  }
}

}  // namespace

SampledMatrixSpec::SampledMatrixSpec(Integrand integrand, std::size_t order)
    : integrand_(std::move(integrand)), order_(order) {
  if (order_ == 0) throw PreconditionError("matrix order must be >= 1");
  if (!integrand_.eval) throw PreconditionError("integrand has no evaluator");
}

double matrix_entry(const SampledMatrixSpec& spec, std::size_t i,
                    std::size_t j) {
  const std::size_t n = spec.order();
  if (i < 1 || i > n || j < 1 || j > n) {
    throw IndexError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                     ") outside a matrix of order " + std::to_string(n));
  }
  return sample(spec.integrand(), std::min(i, j), std::max(i, j));
}

double norm_power(const SampledMatrixSpec& spec, double m) {
  require_exponent(m);
  const Integrand& f = spec.integrand();
  const std::size_t n = spec.order();
  CompensatedSum acc;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t j = 1; j < k; ++j) {
      acc.add(2.0 * abs_pow(sample(f, j, k), m));
    }
    acc.add(abs_pow(sample(f, k, k), m));
  }
  return acc.value();
}

NormReport norm_report(const SampledMatrixSpec& spec, double m,
                       double predicted) {
  NormReport r;
  r.order = spec.order();
  r.exponent = m;
  r.raw_norm_power = norm_power(spec, m);
  const double n = static_cast<double>(spec.order());
  r.normalized = r.raw_norm_power / (n * n);
  r.predicted_limit = predicted;
  r.abs_error = std::fabs(r.normalized - predicted);
  return r;
}

double predict_limit(const Integrand& f, double m,
                     const QuadratureOptions& opts) {
  require_exponent(m);
  return integrate_open_unit([&](double t) { return abs_pow(f(t), m); }, opts);
}

double weighted_cesaro(std::span<const double> terms) {
  if (terms.empty()) throw PreconditionError("Cesaro input must be nonempty");
  CompensatedSum acc;
  for (std::size_t k = 1; k <= terms.size(); ++k) {
    const double a = terms[k - 1];
    if (!std::isfinite(a)) {
      throw EvaluationError("Cesaro term a_" + std::to_string(k) +
                            " is non-finite");
    }
    acc.add(static_cast<double>(k) * a);
  }
  const double n = static_cast<double>(terms.size());
  return acc.value() / (n * n);
}

double weighted_cesaro(const CesaroInput& input) {
  return weighted_cesaro(std::span<const double>(input.terms));
}

std::vector<NormReport> convergence_table(const Integrand& f, double m,
                                          std::span<const std::size_t> orders,
                                          const QuadratureOptions& opts) {
  if (orders.empty()) throw PreconditionError("orders must be nonempty");
  for (std::size_t i = 1; i < orders.size(); ++i) {
    if (orders[i] <= orders[i - 1]) {
      throw PreconditionError("orders must be strictly increasing");
    }
  }
  const double predicted = predict_limit(f, m, opts);
  std::vector<NormReport> rows;
  rows.reserve(orders.size());
  for (std::size_t n : orders) {
    rows.push_back(norm_report(SampledMatrixSpec(f, n), m, predicted));
  }
  return rows;
}

}  // namespace mnormlab
