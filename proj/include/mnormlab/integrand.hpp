#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace mnormlab {

/// A real function sampled on (0,1]. Sample points are always rationals
/// j/k with 1 <= j <= k, so `eval` is never called at 0.
struct Integrand {
  std::function<double(double)> eval;
  std::string label;

  double operator()(double t) const { return eval(t); }
};

namespace integrands {

Integrand exp();
Integrand lngamma();
Integrand identity();
Integrand const1();

// Looks up one of the presets above by label ("exp", "lngamma", "identity",
// "const1"). Throws PreconditionError for anything else.
Integrand by_name(std::string_view name);

std::vector<std::string> preset_names();

}  // namespace integrands
}  // namespace mnormlab
