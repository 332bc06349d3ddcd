#pragma once

#include <functional>

namespace fixcirc {

/// Adaptive Simpson integration of fn over [a,b] to absolute tolerance tol.
/// Classic bisection with Richardson correction (error estimate /15).
double adaptive_simpson(const std::function<double(double)>& fn, double a,
                        double b, double tol, int max_depth = 40);

}  // namespace fixcirc
