#pragma once

#include <cstddef>
#include <functional>

namespace mnormlab {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  std::size_t max_panels = std::size_t{1} << 20;
  int max_dyadic_levels = 64;
};

/// Integrates `g` over (0,1] with adaptive Simpson, never evaluating at 0.
///
/// The interval is cut into dyadic pieces [2^-(l+1), 2^-l]; each piece is
/// integrated adaptively with a tolerance proportional to its width. Pieces
/// are added until one contributes less than abs_tol/8, and that last
/// contribution is reused as the estimate of the remaining [0, 2^-(l+1)].
/// This handles bounded integrands and integrable log singularities at 0.
///
/// Throws QuadratureError when the panel budget or level budget runs out,
/// or when `g` returns a non-finite value.
double integrate_open_unit(const std::function<double(double)>& g,
                           const QuadratureOptions& opts = {});

/// Closed-interval adaptive Simpson on [a,b], a < b.
double adaptive_simpson(const std::function<double(double)>& g, double a,
                        double b, double abs_tol,
                        std::size_t max_panels = std::size_t{1} << 20);

}  // namespace mnormlab
