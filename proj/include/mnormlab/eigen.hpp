#pragma once

#include <cstddef>
#include <vector>

#include "mnormlab/integrand.hpp"
#include "mnormlab/matrix_core.hpp"

namespace mnormlab::eigen {

inline constexpr std::size_t kDefaultDenseLimit = 2048;

/// Symmetric matrix stored as a packed lower triangle, row-major:
/// (i,j) with i >= j lives at i(i+1)/2 + j (0-based).
class DenseSymmetric {
 public:
  explicit DenseSymmetric(std::size_t order);
  DenseSymmetric(std::size_t order, std::vector<double> packed);

  std::size_t order() const noexcept { return order_; }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return packed_[index(i, j)];
  }
  void set(std::size_t i, std::size_t j, double v);

  double trace() const;
  double frobenius_sq() const;
  const std::vector<double>& packed() const noexcept { return packed_; }

 private:
  static std::size_t index(std::size_t i, std::size_t j) noexcept {
    return i >= j ? i * (i + 1) / 2 + j : j * (j + 1) / 2 + i;
  }

  std::size_t order_;
  std::vector<double> packed_;
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  int sweeps_used = 0;
  double off_diag_residual = 0.0;
};

struct JacobiOptions {
  double tol = 1e-12;
  int max_sweeps = 64;
};

DenseSymmetric materialize(const SampledMatrixSpec& spec,
                           std::size_t dense_limit = kDefaultDenseLimit);

/// Cyclic Jacobi. Stops once the off-diagonal Frobenius norm drops to
/// tol * (Frobenius norm of the input). Throws ConvergenceError carrying
/// the final residual when max_sweeps is exhausted first.
EigenDecomposition jacobi_eigenvalues(const DenseSymmetric& a,
                                      const JacobiOptions& opts = {});

struct SpectralSums {
  double trace = 0.0;   // sum of eigenvalues
  double sum_sq = 0.0;  // sum of squared eigenvalues
  double normalized_sum_sq = 0.0;
  int sweeps_used = 0;
};

SpectralSums spectral_sum_report(const Integrand& f, std::size_t n,
                                 const JacobiOptions& opts = {},
                                 std::size_t dense_limit = kDefaultDenseLimit);

}  // namespace mnormlab::eigen
