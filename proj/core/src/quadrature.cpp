#include "fixcirc/quadrature.hpp"

#include <cmath>

namespace fixcirc {
namespace {

double simpson(double fa, double fm, double fb, double a, double b) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double recurse(const std::function<double(double)>& fn, double a, double b,
               double fa, double fm, double fb, double whole, double tol,
               int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = fn(lm);
  const double frm = fn(rm);
  const double left = simpson(fa, flm, fm, a, m);
  const double right = simpson(fm, frm, fb, m, b);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return recurse(fn, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         recurse(fn, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& fn, double a,
                        double b, double tol, int max_depth) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = fn(a);
  const double fm = fn(m);
  const double fb = fn(b);
  const double whole = simpson(fa, fm, fb, a, b);
  return recurse(fn, a, b, fa, fm, fb, whole, tol, max_depth);
}

}  // namespace fixcirc
