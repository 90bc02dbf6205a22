#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mnormlab/integrand.hpp"
#include "mnormlab/quadrature.hpp"

namespace mnormlab {

/// The symmetric matrix A_{f,n} with entry (i,j) = f(min(i,j)/max(i,j)),
/// 1-based. Only the integrand and the order are stored; entries are
/// evaluated on demand.
class SampledMatrixSpec {
 public:
  SampledMatrixSpec(Integrand integrand, std::size_t order);

  const Integrand& integrand() const noexcept { return integrand_; }
  std::size_t order() const noexcept { return order_; }

 private:
  Integrand integrand_;
  std::size_t order_;
};

struct NormReport {
  std::size_t order = 0;
  double exponent = 1.0;
  double raw_norm_power = 0.0;  // sum over all entries of |a_ij|^m
  double normalized = 0.0;      // raw_norm_power / n^2
  double predicted_limit = 0.0;
  double abs_error = 0.0;
};

struct CesaroInput {
  std::vector<double> terms;  // a_1 .. a_n
  double claimed_limit = 0.0;
};

/// Entry (i,j) of the sampled matrix, 1-based. Throws IndexError when
/// either index is outside [1, order].
double matrix_entry(const SampledMatrixSpec& spec, std::size_t i,
                    std::size_t j);

/// Entrywise sum of |a_ij|^m over the whole matrix, evaluated over the lower
/// triangle only: each off-diagonal sample is counted twice and each
/// diagonal sample once. Rows k = 1..n ascending, columns j = 1..k
/// ascending, with compensated accumulation. O(n^2) time, O(1) memory.
///
/// Throws DomainError for m < 1 and EvaluationError naming j/k when the
/// integrand is non-finite there.
double norm_power(const SampledMatrixSpec& spec, double m);

NormReport norm_report(const SampledMatrixSpec& spec, double m,
                       double predicted);

/// Numerical value of the integral of |f|^m over (0,1].
double predict_limit(const Integrand& f, double m,
                     const QuadratureOptions& opts = {});

/// (sum_k k * a_k) / n^2.
double weighted_cesaro(std::span<const double> terms);
double weighted_cesaro(const CesaroInput& input);

/// One NormReport per order, all measured against the same predicted limit.
/// `orders` must be strictly increasing and nonempty.
std::vector<NormReport> convergence_table(const Integrand& f, double m,
                                          std::span<const std::size_t> orders,
                                          const QuadratureOptions& opts = {});

}  // namespace mnormlab
