#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "mnormlab/eigen.hpp"
#include "mnormlab/error.hpp"
#include "mnormlab/hadamard.hpp"
#include "oracles.hpp"

using namespace mnormlab;
using namespace mnormlab::hadamard;

namespace {

std::vector<int> as_ints(const SignMatrix& m) {
  return {m.entries().begin(), m.entries().end()};
}

SignMatrix from_ints(std::size_t n, const std::vector<int>& v) {
  return SignMatrix(n, std::vector<std::int8_t>(v.begin(), v.end()));
}

}  // namespace

TEST_CASE("Sylvester base cases") {
  CHECK(as_ints(sylvester(0)) == std::vector<int>{1});
  CHECK(as_ints(sylvester(1)) == std::vector<int>{1, 1, 1, -1});
  const auto h8 = sylvester(3);
  CHECK(h8.order() == 8);
  CHECK(h8.is_symmetric());
  const auto g = oracle::gram(as_ints(h8), 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) CHECK(g[i * 8 + j] == (i == j ? 8 : 0));
  CHECK(is_hadamard(h8));
  CHECK_THROWS_AS(sylvester(12), CapacityError);
  CHECK_THROWS_AS(sylvester(4, 8), CapacityError);
}

TEST_CASE("is_hadamard") {
  for (unsigned k = 0; k <= 6; ++k) CHECK(is_hadamard(sylvester(k)));
  CHECK_FALSE(is_hadamard(from_ints(2, {1, 1, 1, 1})));

  auto v = as_ints(sylvester(5));
  v[7 * 32 + 11] = -v[7 * 32 + 11];
  const auto g = oracle::gram(v, 32);
  bool identity = true;
  for (std::size_t i = 0; i < 32; ++i)
    for (std::size_t j = 0; j < 32; ++j) identity = identity && g[i * 32 + j] == (i == j ? 32 : 0);
  CHECK_FALSE(identity);
  CHECK_FALSE(is_hadamard(from_ints(32, v)));
}

TEST_CASE("property: Hadamard is preserved by row negation and simultaneous permutation") {
  std::mt19937 rng(5);
  for (unsigned k = 1; k <= 5; ++k) {
    const auto h = sylvester(k);
    const std::size_t n = h.order();
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::size_t> p(n);
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      std::vector<int> v(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v[i * n + j] = h(p[i], p[j]);
      const std::size_t row = rng() % n;
      for (std::size_t j = 0; j < n; ++j) v[row * n + j] = -v[row * n + j];
      REQUIRE(is_hadamard(from_ints(n, v)));
    }
  }
}

TEST_CASE("spectral_sum_sq") {
  CHECK(spectral_sum_sq(sylvester(0)) == 1);
  CHECK(spectral_sum_sq(sylvester(2)) == 16);
  const auto h16 = sylvester(4);
  CHECK(spectral_sum_sq(h16) == 256);
  const auto dec = eigen::jacobi_eigenvalues(to_dense(h16));
  double sq = 0.0;
  for (double l : dec.eigenvalues) sq += l * l;
  CHECK(std::fabs(sq - 256.0) <= 1e-8 * 256.0);
  // Any sign matrix, Hadamard or not.
  std::mt19937 rng(11);
  for (std::size_t n = 1; n <= 20; ++n) {
    std::vector<int> v(n * n);
    for (int& x : v) x = (rng() & 1) ? 1 : -1;
    REQUIRE(spectral_sum_sq(from_ints(n, v)) == static_cast<std::int64_t>(n * n));
  }
}

TEST_CASE("oscillation bound") {
  const auto r4 = oscillation_bound(sylvester(2));
  CHECK(r4.order == 4);
  CHECK(r4.mismatch_count == 1);
  CHECK(r4.lower_bound == 0.5);
  CHECK(r4.verdict == Verdict::inconclusive);

  const auto r8 = oscillation_bound(sylvester(3));
  CHECK(r8.mismatch_count >= 3);
  CHECK(r8.lower_bound >= 0.75);
  CHECK(r8.verdict == Verdict::exceeds_half);

  const auto ones = oscillation_bound(from_ints(2, {1, 1, 1, 1}));
  CHECK(ones.mismatch_count == 0);
  CHECK(ones.lower_bound == 0.0);
  CHECK(ones.verdict == Verdict::inconclusive);

  CHECK_THROWS_AS(oscillation_bound(sylvester(0)), PreconditionError);
  CHECK_THROWS_AS(oscillation_bound(from_ints(2, {1, 1, -1, 1})), PreconditionError);
  CHECK_THROWS_AS(from_ints(2, {1, 0, 1, 1}), PreconditionError);
}

TEST_CASE("property: Sylvester orders >= 8 clear the n/2 - 1 mismatch count") {
  for (unsigned k = 3; k <= 10; ++k) {
    const auto h = sylvester(k);
    const auto r = oscillation_bound(h);
    const std::size_t n = h.order();
    // Oracle: compare the last two rows directly.
    std::size_t direct = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) direct += h(n - 2, i) != h(n - 1, i);
    CHECK(r.mismatch_count == direct);
    CHECK(r.mismatch_count >= n / 2 - 1);
    CHECK(r.lower_bound == 2.0 * r.mismatch_count / n);
    CHECK(r.lower_bound >= 1.0 - 2.0 / n);
    CHECK(r.verdict == Verdict::exceeds_half);
  }
}
