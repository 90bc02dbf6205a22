// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <boost/multiprecision/cpp_int.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "mnormlab/eigen.hpp"
#include "mnormlab/farey.hpp"
#include "mnormlab/hadamard.hpp"
#include "mnormlab/integrand.hpp"
#include "mnormlab/matrix_core.hpp"
#include "mnormlab/summation.hpp"
#include "mnormlab/specfun.hpp"
#include "oracles.hpp"

using namespace mnormlab;

namespace {

const double e = std::numbers::e;
const double pi = std::numbers::pi;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " FAILED[" << what << "]";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. m = 1 norm limit: error <= 5/n on n = 64..4096, ratio <= 0.75 from 256 on.
void norm_limit_m1(Check& c) {
  const auto t0 = Clock::now();
  double prev = 0.0;
  for (std::size_t n = 64; n <= 4096; n *= 2) {
    const auto r = norm_report(SampledMatrixSpec(integrands::exp(), n), 1.0, e - 1.0);
    c.expect(r.abs_error <= 5.0 / n, "err(" + std::to_string(n) + ") <= 5/n");
    if (n >= 512) {
      c.expect(r.abs_error <= 0.75 * prev,
               "err(" + std::to_string(n) + ") <= 0.75 err(" + std::to_string(n / 2) + ")");
    }
    prev = r.abs_error;
  }
  const double elapsed = seconds_since(t0);
  c.detail << " err(4096)=" << prev << " time=" << elapsed << "s";
  c.expect(elapsed <= 10.0, "runtime <= 10 s");
}

// 2. m = 2, 3 at n = 4096 within 0.02.
void norm_limit_m23(Check& c) {
  for (double m : {2.0, 3.0}) {
    const double limit = (std::exp(m) - 1.0) / m;
    const auto r = norm_report(SampledMatrixSpec(integrands::exp(), 4096), m, limit);
    c.detail << " m=" << m << " normalized=" << r.normalized << " limit=" << limit;
    c.expect(r.abs_error <= 0.02, "m=" + std::to_string(m));
  }
}

// 3. Weighted Cesaro mean at n = 500.
void cesaro(Check& c) {
  std::vector<double> a;
  for (int k = 1; k <= 500; ++k) {
    CompensatedSum s;
    for (int j = 1; j <= k; ++j) s.add(std::exp(static_cast<double>(j) / k));
    a.push_back(s.value() / k);
  }
  const double w = weighted_cesaro(CesaroInput{a, e - 1.0});
  c.detail << " value=" << w << " target=" << (e - 1.0) / 2.0;
  c.expect(std::fabs(w - (e - 1.0) / 2.0) <= 0.01, "within 0.01 of (e-1)/2");
}

// 4. Gamma integral, matrix route vs closed form, and the limit.
void gamma_integral(Check& c) {
  for (long n : {2L, 16L, 128L, 512L}) {
    const double via = specfun::gamma_integral_via_matrix(n);
    const double closed = specfun::gamma_integral_closed_partial(n);
    c.expect(std::fabs(via - closed) <= 1e-8 * std::fabs(closed),
             "routes agree at n=" + std::to_string(n));
  }
  const double p = specfun::gamma_integral_closed_partial(4096);
  c.detail << " closed(4096)=" << p << " ln sqrt(2pi)=" << 0.5 * std::log(2 * pi);
  c.expect(std::fabs(p - 0.5 * std::log(2 * pi)) <= 0.01, "closed(4096) within 0.01");
}

// 5. Identity suite.
void identities(Check& c) {
  double worst_refl = 0.0;
  for (int i = 1; i <= 19; ++i) {
    worst_refl = std::max(worst_refl, std::fabs(specfun::euler_reflection_residual(0.05 * i)));
  }
  std::vector<double> dup_grid = {0.5, 1.0, 3.7};
  for (int i = 1; i <= 20; ++i) dup_grid.push_back(0.25 * i);
  double worst_dup = 0.0;
  for (double z : dup_grid) {
    worst_dup = std::max(worst_dup, std::fabs(specfun::duplication_residual(z)));
  }
  c.expect(worst_refl <= 1e-12, "reflection <= 1e-12");
  c.expect(worst_dup <= 1e-12, "duplication <= 1e-12");
  for (long k = 2; k <= 512; ++k) {
    const double r = specfun::gamma_row_log_product(k) - specfun::gamma_row_log_product_closed(k);
    if (std::fabs(r) > 1e-10 * k) c.expect(false, "row product k=" + std::to_string(k));
  }
  for (long n = 1; n <= 200; ++n) {
    if (std::fabs(specfun::sine_product_odd_residual(n)) > 1e-10 * (2 * n + 1))
      c.expect(false, "odd sine n=" + std::to_string(n));
    if (std::fabs(specfun::sine_product_even_residual(n)) > 1e-10 * (2 * n))
      c.expect(false, "even sine n=" + std::to_string(n));
  }
  c.detail << " max|reflection|=" << worst_refl << " max|duplication|=" << worst_dup;
}

// 6. Farey structure, Phi(1000), coprime density, exact mean.
void farey_checks(Check& c) {
  for (std::int64_t x = 1; x <= 100; ++x) {
    const auto seq = farey::farey_sequence(x);
    const auto brute = oracle::brute_farey(x);
    bool same = seq.fractions.size() == brute.size();
    for (std::size_t i = 0; same && i < brute.size(); ++i) {
      same = seq.fractions[i].num == brute[i].first && seq.fractions[i].den == brute[i].second;
    }
    if (!same) c.expect(false, "brute force x=" + std::to_string(x));
  }
  for (std::uint64_t x = 1; x <= 300; ++x) {
    const auto seq = farey::farey_sequence(x);
    for (std::size_t i = 0; i + 1 < seq.fractions.size(); ++i) {
      const auto& a = seq.fractions[i];
      const auto& b = seq.fractions[i + 1];
      if (b.num * a.den - a.num * b.den != 1) {
        c.expect(false, "neighbour x=" + std::to_string(x));
        break;
      }
    }
  }
  const double phi = static_cast<double>(farey::phi_summatory(1000));
  const double dens = farey::coprime_density(1000);
  c.expect(std::fabs(phi / 1e6 - 3.0 / (pi * pi)) <= 0.005, "Phi(1000)/1e6");
  c.expect(std::fabs(dens - 6.0 / (pi * pi)) <= 0.01, "coprime density");
  using boost::multiprecision::cpp_rational;
  for (std::uint64_t x = 1; x <= 200; ++x) {
    const auto seq = farey::farey_sequence(x);
    cpp_rational sum = 0;
    for (const auto& r : seq.fractions) sum += cpp_rational(r.num, r.den);
    if (sum / cpp_rational(seq.count) != cpp_rational(seq.count + 1, 2 * seq.count)) {
      c.expect(false, "exact mean x=" + std::to_string(x));
    }
  }
  c.detail << " Phi(1000)=" << phi << " density(1000)=" << dens;
}

// 7. Weyl average at x = 400.
void weyl(Check& c) {
  const double w = farey::weyl_average(integrands::exp(), 400);
  c.detail << " average=" << w << " err=" << std::fabs(w - (e - 1.0));
  c.expect(std::fabs(w - (e - 1.0)) <= 0.01, "within 0.01 of e-1");
}

// 8. Spectral sums via Jacobi.
void spectral(Check& c) {
  const auto t0 = Clock::now();
  double normalized256 = 0.0;
  for (std::size_t n : {2u, 16u, 64u, 256u}) {
    const SampledMatrixSpec spec(integrands::exp(), n);
    const auto s = eigen::spectral_sum_report(integrands::exp(), n);
    const double frob = norm_power(spec, 2.0);
    c.expect(std::fabs(s.trace - n * e) <= 1e-8 * n * e, "trace n=" + std::to_string(n));
    c.expect(std::fabs(s.sum_sq - frob) <= 1e-8 * frob, "sum sq n=" + std::to_string(n));
    normalized256 = s.normalized_sum_sq;
  }
  const double elapsed = seconds_since(t0);
  c.detail << " normalized(256)=" << normalized256 << " time=" << elapsed << "s";
  c.expect(std::fabs(normalized256 - (e * e - 1.0) / 2.0) <= 0.05, "normalized(256)");
  c.expect(elapsed <= 60.0, "runtime <= 60 s");
}

// 9. Hadamard construction and oscillation bound.
void hadamard_checks(Check& c) {
  for (unsigned k = 0; k <= 6; ++k) {
    const auto h = hadamard::sylvester(k);
    const auto n = static_cast<std::int64_t>(h.order());
    c.expect(hadamard::is_hadamard(h), "is_hadamard k=" + std::to_string(k));
    c.expect(hadamard::spectral_sum_sq(h) == n * n, "spectral_sum_sq k=" + std::to_string(k));
    if (k >= 3) {
      const auto r = hadamard::oscillation_bound(h);
      c.expect(r.lower_bound >= 1.0 - 2.0 / static_cast<double>(n) &&
                   r.verdict == hadamard::Verdict::exceeds_half,
               "oscillation n=" + std::to_string(n));
    }
  }
  const auto r4 = hadamard::oscillation_bound(hadamard::sylvester(2));
  c.expect(r4.lower_bound == 0.5 && r4.verdict == hadamard::Verdict::inconclusive,
           "order 4 borderline");
  c.detail << " order4 bound=" << r4.lower_bound << " (" << hadamard::to_string(r4.verdict) << ")";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"AC1 norm limit m=1, error <= 5/n and halving", norm_limit_m1},
      {"AC2 norm limits m=2,3 at n=4096 within 0.02", norm_limit_m23},
      {"AC3 weighted Cesaro mean at n=500 within 0.01", cesaro},
      {"AC4 Gamma integral: routes agree, limit ln sqrt(2pi)", gamma_integral},
      {"AC5 Gamma and sine identity suite", identities},
      {"AC6 Farey sequence, Phi, coprime density, exact mean", farey_checks},
      {"AC7 Weyl average at x=400 within 0.01", weyl},
      {"AC8 Jacobi spectral sums", spectral},
      {"AC9 Hadamard orthogonality and oscillation bound", hadamard_checks},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Check c;
    try {
      fn(c);
    } catch (const std::exception& ex) {
      c.ok = false;
      c.detail << " exception: " << ex.what();
    }
    std::printf("[%s] %s:%s\n", c.ok ? "PASS" : "FAIL", name.c_str(), c.detail.str().c_str());
    failures += c.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
