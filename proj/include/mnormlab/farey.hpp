#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mnormlab/integrand.hpp"

namespace mnormlab::farey {

/// Largest sieve accepted by totient_sieve() unless overridden.
inline constexpr std::uint64_t kDefaultSieveLimit = 100'000'000;
/// Largest order materialized by farey_sequence() unless overridden.
inline constexpr std::uint64_t kDefaultSequenceLimit = 10'000;

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const noexcept {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

class TotientTable {
 public:
  TotientTable(std::uint64_t limit, std::vector<std::uint32_t> values);

  std::uint64_t limit() const noexcept { return limit_; }
  std::uint32_t operator[](std::uint64_t n) const { return values_.at(n); }
  /// Sum of phi(n) for 1 <= n <= x, x <= limit.
  std::uint64_t summatory(std::uint64_t x) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> values_;  // values_[0] unused
};

/// Linear sieve for Euler's phi on [1, x].
TotientTable totient_sieve(std::uint64_t x,
                           std::uint64_t max_limit = kDefaultSieveLimit);

std::uint64_t phi_summatory(std::uint64_t x);

/// Streams F_x in ascending order by the neighbour recurrence: from
/// consecutive p/q < r/s the next term is (t r - p)/(t s - q) with
/// t = floor((x + q)/s). Starts at 1/x and stops after 1/1. Single
/// consumer; copying yields an independent traversal.
class FareyCursor {
 public:
  explicit FareyCursor(std::uint64_t order);

  std::optional<Fraction> next();
  std::uint64_t order() const noexcept { return order_; }

 private:
  std::int64_t order_;
  Fraction prev_{};
  Fraction cur_{};
  int emitted_ = 0;  // 0: nothing yet, 1: seed emitted, 2: running
  bool done_ = false;
};

struct FareySequence {
  std::uint64_t order = 0;
  std::vector<Fraction> fractions;
  std::uint64_t count = 0;  // Phi(order)
};

FareySequence farey_sequence(std::uint64_t x,
                             std::uint64_t max_order = kDefaultSequenceLimit);

/// Mean of f over F_x, streamed without materializing the sequence.
double weyl_average(const Integrand& f, std::uint64_t x);
/// Same mean over an already materialized sequence; bit-identical to the
/// streaming overload for the same order.
double weyl_average(const Integrand& f, const FareySequence& seq);

/// Fraction of pairs (a,b) in [1,N]^2 with gcd 1, via (2 Phi(N) - 1)/N^2.
double coprime_density(std::uint64_t n);

}  // namespace mnormlab::farey
