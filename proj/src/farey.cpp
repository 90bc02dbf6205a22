#include "mnormlab/farey.hpp"

#include <cmath>
#include <limits>
#include <new>
#include <string>
#include <utility>

#include "mnormlab/error.hpp"
#include "mnormlab/summation.hpp"

namespace mnormlab::farey {
namespace {

std::int64_t checked_mul_sub(std::int64_t t, std::int64_t a, std::int64_t b) {
  std::int64_t prod = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(t, a, &prod) ||
      __builtin_sub_overflow(prod, b, &out)) {
    throw CapacityError("Farey recurrence overflowed 64-bit integers");
  }
  return out;
}

double sample(const Integrand& f, const Fraction& r) {
  const double v = f(r.value());
  if (!std::isfinite(v)) {
    throw EvaluationError("integrand '" + f.label + "' is non-finite at " +
                          std::to_string(r.num) + "/" + std::to_string(r.den));
  }
  return v;
}

}  // namespace

TotientTable::TotientTable(std::uint64_t limit,
                           std::vector<std::uint32_t> values)
    : limit_(limit), values_(std::move(values)) {
  if (values_.size() != limit_ + 1) {
    throw PreconditionError("totient table must hold limit + 1 slots");
  }
}

std::uint64_t TotientTable::summatory(std::uint64_t x) const {
  if (x > limit_) {
    throw PreconditionError("summatory(" + std::to_string(x) +
                            ") beyond sieve limit " + std::to_string(limit_));
  }
  std::uint64_t total = 0;
  for (std::uint64_t n = 1; n <= x; ++n) total += values_[n];
  return total;
}

TotientTable totient_sieve(std::uint64_t x, std::uint64_t max_limit) {
  if (x < 1) throw PreconditionError("totient_sieve requires x >= 1");
  if (x > max_limit) {
    throw CapacityError("totient sieve of size " + std::to_string(x) +
                        " exceeds the limit " + std::to_string(max_limit));
  }
  std::vector<std::uint32_t> phi;
  std::vector<std::uint32_t> primes;
  try {
    phi.assign(x + 1, 0);
  } catch (const std::bad_alloc&) {
    throw CapacityError("out of memory allocating a totient table of size " +
                        std::to_string(x));
  }
  phi[1] = 1;
  for (std::uint64_t i = 2; i <= x; ++i) {
    if (phi[i] == 0) {
      phi[i] = static_cast<std::uint32_t>(i - 1);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      const std::uint64_t ip = i * p;
      if (ip > x) break;
      if (i % p == 0) {
        phi[ip] = phi[i] * p;
        break;
      }
      phi[ip] = phi[i] * (p - 1);
    }
  }
  return TotientTable(x, std::move(phi));
}

std::uint64_t phi_summatory(std::uint64_t x) {
  return totient_sieve(x).summatory(x);
}

FareyCursor::FareyCursor(std::uint64_t order) {
  if (order < 1) throw PreconditionError("Farey order must be >= 1");
  if (order > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max() / 4)) {
    throw CapacityError("Farey order " + std::to_string(order) +
                        " too large for 64-bit arithmetic");
  }
  order_ = static_cast<std::int64_t>(order);
}

std::optional<Fraction> FareyCursor::next() {
  if (done_) return std::nullopt;
  if (emitted_ == 0) {
    cur_ = {1, order_};
    emitted_ = 1;
  } else if (emitted_ == 1) {
    prev_ = cur_;
    cur_ = {1, order_ - 1};
    emitted_ = 2;
  } else {
    const std::int64_t t = (order_ + prev_.den) / cur_.den;
    const Fraction nxt{checked_mul_sub(t, cur_.num, prev_.num),
                       checked_mul_sub(t, cur_.den, prev_.den)};
    prev_ = cur_;
    cur_ = nxt;
  }
  if (cur_.num == cur_.den) done_ = true;
  return cur_;
}

FareySequence farey_sequence(std::uint64_t x, std::uint64_t max_order) {
  if (x > max_order) {
    throw CapacityError("Farey order " + std::to_string(x) +
                        " exceeds the materialization limit " +
                        std::to_string(max_order));
  }
  FareySequence seq;
  seq.order = x;
  FareyCursor cursor(x);
  try {
    seq.fractions.reserve(phi_summatory(x));
    while (auto r = cursor.next()) seq.fractions.push_back(*r);
  } catch (const std::bad_alloc&) {
    throw CapacityError("out of memory materializing F_" + std::to_string(x));
  }
  seq.count = seq.fractions.size();
  return seq;
}

double weyl_average(const Integrand& f, std::uint64_t x) {
  FareyCursor cursor(x);
  CompensatedSum acc;
  std::uint64_t count = 0;
  while (auto r = cursor.next()) {
    acc.add(sample(f, *r));
    ++count;
  }
  return acc.value() / static_cast<double>(count);
}

double weyl_average(const Integrand& f, const FareySequence& seq) {
  if (seq.fractions.empty()) {
    throw PreconditionError("Farey sequence is empty");
  }
  CompensatedSum acc;
  for (const Fraction& r : seq.fractions) acc.add(sample(f, r));
  return acc.value() / static_cast<double>(seq.fractions.size());
}

double coprime_density(std::uint64_t n) {
  const std::uint64_t phi = phi_summatory(n);
  const double nd = static_cast<double>(n);
  return static_cast<double>(2 * phi - 1) / (nd * nd);
}

}  // namespace mnormlab::farey
