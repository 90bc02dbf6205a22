#include "mnormlab/integrand.hpp"

#include <cmath>
#include <string>

#include "mnormlab/error.hpp"
#include "mnormlab/specfun.hpp"

namespace mnormlab::integrands {

Integrand exp() {
  return {[](double t) { return std::exp(t); }, "exp"};
}

Integrand lngamma() {
  return {[](double t) { return specfun::ln_gamma(t); }, "lngamma"};
}

Integrand identity() {
  return {[](double t) { return t; }, "identity"};
}

Integrand const1() {
  return {[](double) { return 1.0; }, "const1"};
}

Integrand by_name(std::string_view name) {
  if (name == "exp") return exp();
  if (name == "lngamma") return lngamma();
  if (name == "identity") return identity();
  if (name == "const1") return const1();
  throw PreconditionError("unknown integrand '" + std::string(name) +
                          "' (expected exp, lngamma, identity or const1)");
}

std::vector<std::string> preset_names() {
  return {"exp", "lngamma", "identity", "const1"};
}

}  // namespace mnormlab::integrands
