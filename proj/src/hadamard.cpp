#include "mnormlab/hadamard.hpp"

#include <string>
#include <utility>

#include "mnormlab/error.hpp"

namespace mnormlab::hadamard {

SignMatrix::SignMatrix(std::size_t order, std::vector<std::int8_t> entries)
    : order_(order), entries_(std::move(entries)) {
  if (order_ == 0) throw PreconditionError("sign matrix order must be >= 1");
  if (entries_.size() != order_ * order_) {
    throw PreconditionError("sign matrix needs n*n entries");
  }
  for (std::int8_t e : entries_) {
    if (e != 1 && e != -1) {
      throw PreconditionError("sign matrix entries must be +1 or -1");
    }
  }
}

bool SignMatrix::is_symmetric() const noexcept {
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

const char* to_string(Verdict v) noexcept {
  return v == Verdict::exceeds_half ? "exceeds_half" : "inconclusive";
}

SignMatrix sylvester(unsigned k, std::size_t limit) {
  if (k >= 31 || (std::size_t{1} << k) > limit) {
    throw CapacityError("Sylvester order 2^" + std::to_string(k) +
                        " exceeds the dense limit " + std::to_string(limit));
  }
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::int8_t> h(n * n);
  h[0] = 1;
  for (std::size_t m = 1; m < n; m *= 2) {
    // [[H, H], [H, -H]] built in place from the m x m leading block.
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const std::int8_t v = h[i * n + j];
        h[i * n + j + m] = v;
        h[(i + m) * n + j] = v;
        h[(i + m) * n + j + m] = static_cast<std::int8_t>(-v);
      }
    }
  }
  return SignMatrix(n, std::move(h));
}

bool is_hadamard(const SignMatrix& m) {
  const std::size_t n = m.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      std::int64_t dot = 0;
      for (std::size_t c = 0; c < n; ++c) dot += m(i, c) * m(j, c);
      const std::int64_t expected = i == j ? static_cast<std::int64_t>(n) : 0;
      if (dot != expected) return false;
    }
  }
  return true;
}

std::int64_t spectral_sum_sq(const SignMatrix& m) {
  std::int64_t total = 0;
  for (std::int8_t e : m.entries()) total += e * e;
  return total;
}

OscillationReport oscillation_bound(const SignMatrix& m) {
  const std::size_t n = m.order();
  if (n < 2) throw PreconditionError("oscillation bound needs order >= 2");
  if (!m.is_symmetric()) {
    throw PreconditionError(
        "oscillation bound needs a symmetric matrix; only symmetric sign "
        "matrices can be sampled from a function on (0,1]");
  }
  // I0 = { i <= n-1 : M[n-1,i] * M[n,i] = -1 }, 1-based.
  OscillationReport r;
  r.order = n;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (m(n - 2, i) * m(n - 1, i) == -1) ++r.mismatch_count;
  }
  r.lower_bound = 2.0 * static_cast<double>(r.mismatch_count) /
                  static_cast<double>(n);
  r.verdict = 4 * r.mismatch_count > n ? Verdict::exceeds_half
                                       : Verdict::inconclusive;
  return r;
}

eigen::DenseSymmetric to_dense(const SignMatrix& m) {
  if (!m.is_symmetric()) {
    throw PreconditionError("only symmetric sign matrices convert to dense");
  }
  const std::size_t n = m.order();
  eigen::DenseSymmetric a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) a.set(i, j, m(i, j));
  }
  return a;
}

}  // namespace mnormlab::hadamard
