#pragma once

namespace mnormlab::specfun {

/// Natural log of the Gamma function for x > 0.
///
/// Lanczos approximation (g = 7, nine terms) for x >= 0.5; below that the
/// reflection formula Gamma(x) Gamma(1-x) = pi / sin(pi x) is applied to
/// 1 - x. Relative accuracy of exp(ln_gamma(x)) is around 1e-15 on
/// [0.01, 30]. Throws DomainError for x <= 0 or NaN.
double ln_gamma(double x);

/// ln_gamma(s) + ln_gamma(1-s) - ln(pi / sin(pi s)), for 0 < s < 1.
double euler_reflection_residual(double s);

/// ln sqrt(pi) + ln_gamma(2z) - (2z-1) ln 2 - ln_gamma(z) - ln_gamma(z+1/2).
double duplication_residual(double z);

/// (2n+1) - 2^(2n) prod_{k=1..n} sin^2(k pi/(2n+1)).
double sine_product_odd_residual(long n);

/// 2n - 2^(2n-1) prod_{k=1..n} sin^2(k pi/(2n)).
double sine_product_even_residual(long n);

/// sum_{j=1..k-1} ln_gamma(j/k), k >= 2.
double gamma_row_log_product(long k);

/// ((k-1)/2) ln(2 pi) - (1/2) ln k, the closed form of the row product.
double gamma_row_log_product_closed(long k);

/// log of prod_{j=1..h} sin(j pi/k) with h = (k-1)/2 for odd k and k/2
/// for even k. Equals log(sqrt(k) / sqrt(2)^(k-1)) for every k >= 1.
double half_sine_log_product(long k);

/// (1/n^2) [ (n(n-1)/2) ln(2 pi) - sum_{k<=n} ln k ]. ln n! is summed
/// directly and never goes through ln_gamma.
double gamma_integral_closed_partial(long n);

/// (1/n^2) times the entrywise 1-norm of the matrix sampled from ln_gamma.
double gamma_integral_via_matrix(long n);

}  // namespace mnormlab::specfun
