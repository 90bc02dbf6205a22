#include "mnormlab/quadrature.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "mnormlab/error.hpp"
#include "mnormlab/summation.hpp"

namespace mnormlab {
namespace {

struct SimpsonState {
  const std::function<double(double)>& g;
  std::size_t panels = 0;
  std::size_t max_panels;

  double eval(double t) const {
    const double v = g(t);
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os.precision(17);
      os << "integrand is non-finite at t = " << t;
      throw QuadratureError(os.str());
    }
    return v;
  }
};

double refine(SimpsonState& st, double a, double b, double fa, double fm,
              double fb, double whole, double tol) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  if (!(a < lm && lm < m && m < rm && rm < b)) {
    throw QuadratureError("adaptive Simpson exhausted floating-point "
                          "resolution without meeting the tolerance");
  }
  if (++st.panels > st.max_panels) {
    throw QuadratureError("adaptive Simpson exceeded the subdivision budget of " +
                          std::to_string(st.max_panels) + " panels");
  }
  const double flm = st.eval(lm);
  const double frm = st.eval(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return refine(st, a, m, fa, flm, fm, left, 0.5 * tol) +
         refine(st, m, b, fm, frm, fb, right, 0.5 * tol);
}

double simpson_on(SimpsonState& st, double a, double b, double tol) {
  const double fa = st.eval(a);
  const double fb = st.eval(b);
  const double fm = st.eval(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return refine(st, a, b, fa, fm, fb, whole, tol);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& g, double a,
                        double b, double abs_tol, std::size_t max_panels) {
  if (!(a < b)) throw QuadratureError("adaptive_simpson requires a < b");
  if (!(abs_tol > 0.0)) throw QuadratureError("tolerance must be positive");
  SimpsonState st{g, 0, max_panels};
  return simpson_on(st, a, b, abs_tol);
}

double integrate_open_unit(const std::function<double(double)>& g,
                           const QuadratureOptions& opts) {
  if (!(opts.abs_tol > 0.0)) throw QuadratureError("tolerance must be positive");
  SimpsonState st{g, 0, opts.max_panels};
  CompensatedSum total;
  double hi = 1.0;
  for (int level = 0; level < opts.max_dyadic_levels; ++level) {
    const double lo = 0.5 * hi;
    const double piece = simpson_on(st, lo, hi, 0.5 * opts.abs_tol * (hi - lo));
    total.add(piece);
    if (level >= 3 && std::fabs(piece) <= opts.abs_tol / 8.0) {
      // Tail [0, lo]: for bounded or log-singular integrands it is of the
      // same size as the last dyadic piece.
      total.add(piece);
      return total.value();
    }
    hi = lo;
  }
  throw QuadratureError("integral over (0,1] did not settle within " +
                        std::to_string(opts.max_dyadic_levels) +
                        " dyadic levels; the integrand may not be integrable "
                        "near 0");
}

}  // namespace mnormlab
