#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mnormlab/eigen.hpp"

namespace mnormlab::hadamard {

/// Square matrix with every entry +1 or -1, row-major.
class SignMatrix {
 public:
  SignMatrix(std::size_t order, std::vector<std::int8_t> entries);

  std::size_t order() const noexcept { return order_; }
  // 0-based
  int operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * order_ + j];
  }
  const std::vector<std::int8_t>& entries() const noexcept { return entries_; }
  bool is_symmetric() const noexcept;

 private:
  std::size_t order_;
  std::vector<std::int8_t> entries_;
};

enum class Verdict { exceeds_half, inconclusive };

const char* to_string(Verdict v) noexcept;

/// Counting bound on the Darboux oscillation sum S - s for any f that
/// would realize the matrix. Rows n-1 and n disagree at every column in I0;
/// each such column forces oscillation 2 on a mesh cell of width 1/n.
struct OscillationReport {
  std::size_t order = 0;
  std::size_t mismatch_count = 0;  // #I0
  double lower_bound = 0.0;        // 2 #I0 / n
  Verdict verdict = Verdict::inconclusive;
};

/// Sylvester construction of order 2^k. The order is capped by `limit`.
SignMatrix sylvester(unsigned k,
                     std::size_t limit = eigen::kDefaultDenseLimit);

/// M M^T == n I, checked with integer dot products.
bool is_hadamard(const SignMatrix& m);

/// Squared Frobenius norm; n^2 for every sign matrix.
std::int64_t spectral_sum_sq(const SignMatrix& m);

/// Requires a symmetric matrix of order >= 2 (PreconditionError otherwise).
OscillationReport oscillation_bound(const SignMatrix& m);

/// Floating-point copy for the eigensolver. Requires symmetry.
eigen::DenseSymmetric to_dense(const SignMatrix& m);

}  // namespace mnormlab::hadamard
