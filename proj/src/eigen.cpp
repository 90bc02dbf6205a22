#include "mnormlab/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "mnormlab/error.hpp"
#include "mnormlab/summation.hpp"

namespace mnormlab::eigen {
namespace {

// Square working copy, row-major, kept symmetric by every rotation.
class Work {
 public:
  explicit Work(const DenseSymmetric& a) : n_(a.order()), v_(n_ * n_) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        v_[i * n_ + j] = v_[j * n_ + i] = a(i, j);
      }
    }
  }

  double& at(std::size_t i, std::size_t j) { return v_[i * n_ + j]; }

  double off_diagonal_norm() const {
    CompensatedSum acc;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        const double x = v_[i * n_ + j];
        acc.add(2.0 * x * x);
      }
    }
    return std::sqrt(acc.value());
  }

  // Zeroes (p,q) with one Jacobi rotation.
  void rotate(std::size_t p, std::size_t q) {
    const double apq = at(p, q);
    if (apq == 0.0) return;
    const double app = at(p, p);
    const double aqq = at(q, q);
    const double theta = (aqq - app) / (2.0 * apq);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                     (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    at(p, p) = app - t * apq;
    at(q, q) = aqq + t * apq;
    at(p, q) = at(q, p) = 0.0;
    for (std::size_t k = 0; k < n_; ++k) {
      if (k == p || k == q) continue;
      const double akp = at(k, p);
      const double akq = at(k, q);
      const double nkp = c * akp - s * akq;
      const double nkq = s * akp + c * akq;
      at(k, p) = at(p, k) = nkp;
      at(k, q) = at(q, k) = nkq;
    }
  }

  std::vector<double> diagonal() const {
    std::vector<double> d(n_);
    for (std::size_t i = 0; i < n_; ++i) d[i] = v_[i * n_ + i];
    return d;
  }

 private:
  std::size_t n_;
  std::vector<double> v_;
};

}  // namespace

DenseSymmetric::DenseSymmetric(std::size_t order)
    : order_(order), packed_(order * (order + 1) / 2, 0.0) {
  if (order_ == 0) throw PreconditionError("matrix order must be >= 1");
}

DenseSymmetric::DenseSymmetric(std::size_t order, std::vector<double> packed)
    : order_(order), packed_(std::move(packed)) {
  if (order_ == 0) throw PreconditionError("matrix order must be >= 1");
  if (packed_.size() != order_ * (order_ + 1) / 2) {
    throw PreconditionError("packed triangle has " +
                            std::to_string(packed_.size()) +
                            " entries, expected n(n+1)/2");
  }
  for (double v : packed_) {
    if (!std::isfinite(v)) throw PreconditionError("matrix entries must be finite");
  }
}

void DenseSymmetric::set(std::size_t i, std::size_t j, double v) {
  if (i >= order_ || j >= order_) throw IndexError("entry outside the matrix");
  if (!std::isfinite(v)) throw PreconditionError("matrix entries must be finite");
  packed_[index(i, j)] = v;
}

double DenseSymmetric::trace() const {
  CompensatedSum acc;
  for (std::size_t i = 0; i < order_; ++i) acc.add((*this)(i, i));
  return acc.value();
}

double DenseSymmetric::frobenius_sq() const {
  CompensatedSum acc;
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const double x = (*this)(i, j);
      acc.add((i == j ? 1.0 : 2.0) * x * x);
    }
  }
  return acc.value();
}

DenseSymmetric materialize(const SampledMatrixSpec& spec,
                           std::size_t dense_limit) {
  const std::size_t n = spec.order();
  if (n > dense_limit) {
    throw CapacityError("order " + std::to_string(n) +
                        " exceeds the dense limit " +
                        std::to_string(dense_limit));
  }
  DenseSymmetric a(n);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t j = 1; j <= k; ++j) {
      a.set(k - 1, j - 1, matrix_entry(spec, k, j));
    }
  }
  return a;
}

EigenDecomposition jacobi_eigenvalues(const DenseSymmetric& a,
                                      const JacobiOptions& opts) {
  if (!(opts.tol > 0.0)) throw PreconditionError("Jacobi tolerance must be > 0");
  if (opts.max_sweeps < 0) throw PreconditionError("max_sweeps must be >= 0");
  const std::size_t n = a.order();
  Work w(a);
  const double target = opts.tol * std::sqrt(a.frobenius_sq());

  EigenDecomposition out;
  out.off_diag_residual = w.off_diagonal_norm();
  while (out.off_diag_residual > target) {
    if (out.sweeps_used == opts.max_sweeps) {
      throw ConvergenceError(
          "Jacobi did not converge in " + std::to_string(opts.max_sweeps) +
              " sweeps (off-diagonal residual " +
              std::to_string(out.off_diag_residual) + ")",
          out.off_diag_residual);
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) w.rotate(p, q);
    }
    ++out.sweeps_used;
    out.off_diag_residual = w.off_diagonal_norm();
  }
  out.eigenvalues = w.diagonal();
  std::stable_sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

SpectralSums spectral_sum_report(const Integrand& f, std::size_t n,
                                 const JacobiOptions& opts,
                                 std::size_t dense_limit) {
  const auto dec =
      jacobi_eigenvalues(materialize(SampledMatrixSpec(f, n), dense_limit), opts);
  CompensatedSum sum;
  CompensatedSum sum_sq;
  for (double l : dec.eigenvalues) {
    sum.add(l);
    sum_sq.add(l * l);
  }
  SpectralSums r;
  r.trace = sum.value();
  r.sum_sq = sum_sq.value();
  const double nd = static_cast<double>(n);
  r.normalized_sum_sq = r.sum_sq / (nd * nd);
  r.sweeps_used = dec.sweeps_used;
  return r;
}

}  // namespace mnormlab::eigen
