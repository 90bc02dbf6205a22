#include "mnormlab/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "mnormlab/error.hpp"
#include "mnormlab/integrand.hpp"
#include "mnormlab/matrix_core.hpp"
#include "mnormlab/summation.hpp"

namespace mnormlab::specfun {
namespace {

using std::numbers::pi;

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosShift = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,
    -1259.1392167224028,     771.32342877765313,
    -176.61502916214059,     12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * pi);

double lanczos_ln_gamma(double x) {
  const double z = x - 1.0;
  double series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    series += kLanczos[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosShift + 0.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(series);
}

// sum_{k=1..count} 2 ln sin(k pi / denom)
double log_sine_sq_product(long count, long denom) {
  CompensatedSum acc;
  for (long k = 1; k <= count; ++k) {
    acc.add(2.0 * std::log(std::sin(static_cast<double>(k) * pi /
                                    static_cast<double>(denom))));
  }
  return acc.value();
}

void require_positive_order(long n, const char* what) {
  if (n < 1) {
    throw DomainError(std::string(what) + " requires n >= 1, got " +
                      std::to_string(n));
  }
}

}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0)) {
    throw DomainError("ln_gamma is defined here only for x > 0");
  }
  if (std::isinf(x)) return x;
  if (x < 0.5) {
    return std::log(pi / std::sin(pi * x)) - lanczos_ln_gamma(1.0 - x);
  }
  return lanczos_ln_gamma(x);
}

double euler_reflection_residual(double s) {
  if (!(s > 0.0 && s < 1.0)) {
    throw DomainError("reflection residual requires 0 < s < 1");
  }
  return ln_gamma(s) + ln_gamma(1.0 - s) - std::log(pi / std::sin(pi * s));
}

double duplication_residual(double z) {
  if (!(z > 0.0)) throw DomainError("duplication residual requires z > 0");
  return 0.5 * std::log(pi) + ln_gamma(2.0 * z) -
         (2.0 * z - 1.0) * std::numbers::ln2 - ln_gamma(z) -
         ln_gamma(z + 0.5);
}

double sine_product_odd_residual(long n) {
  require_positive_order(n, "sine_product_odd_residual");
  const double log_rhs = 2.0 * static_cast<double>(n) * std::numbers::ln2 +
                         log_sine_sq_product(n, 2 * n + 1);
  return static_cast<double>(2 * n + 1) - std::exp(log_rhs);
}

double sine_product_even_residual(long n) {
  require_positive_order(n, "sine_product_even_residual");
  const double log_rhs =
      (2.0 * static_cast<double>(n) - 1.0) * std::numbers::ln2 +
      log_sine_sq_product(n, 2 * n);
  return static_cast<double>(2 * n) - std::exp(log_rhs);
}

double gamma_row_log_product(long k) {
  if (k < 2) throw DomainError("gamma_row_log_product requires k >= 2");
  CompensatedSum acc;
  for (long j = 1; j < k; ++j) {
    acc.add(ln_gamma(static_cast<double>(j) / static_cast<double>(k)));
  }
  return acc.value();
}

double gamma_row_log_product_closed(long k) {
  if (k < 1) throw DomainError("row product closed form requires k >= 1");
  const double kd = static_cast<double>(k);
  return 0.5 * (kd - 1.0) * std::log(2.0 * pi) - 0.5 * std::log(kd);
}

double half_sine_log_product(long k) {
  if (k < 1) throw DomainError("half_sine_log_product requires k >= 1");
  const long h = (k % 2 == 1) ? (k - 1) / 2 : k / 2;
  CompensatedSum acc;
  for (long j = 1; j <= h; ++j) {
    acc.add(std::log(std::sin(static_cast<double>(j) * pi /
                              static_cast<double>(k))));
  }
  return acc.value();
}

double gamma_integral_closed_partial(long n) {
  require_positive_order(n, "gamma_integral_closed_partial");
  CompensatedSum log_factorial;
  for (long k = 2; k <= n; ++k) log_factorial.add(std::log(static_cast<double>(k)));
  const double nd = static_cast<double>(n);
  CompensatedSum bracket;
  bracket.add(0.5 * nd * (nd - 1.0) * std::log(2.0 * pi));
  bracket.add(-log_factorial.value());
  return bracket.value() / (nd * nd);
}

double gamma_integral_via_matrix(long n) {
  require_positive_order(n, "gamma_integral_via_matrix");
  const SampledMatrixSpec spec(integrands::lngamma(),
                               static_cast<std::size_t>(n));
  const double nd = static_cast<double>(n);
  return norm_power(spec, 1.0) / (nd * nd);
}

}  // namespace mnormlab::specfun
