#pragma once
// Adaptive quadrature built on Gauss-Legendre panels (nodes computed once by
// Newton iteration, to machine precision).  Error estimate per panel: the
// difference between one n-point evaluation and the sum over the two
// halves; panels split until the local estimate fits the budget.

#include <functional>
#include <vector>

namespace hextile {

struct QuadResult {
  double value = 0;
  double error = 0;     // accumulated error estimate
  bool converged = true;
};

using Integrand = std::function<double(double)>;

QuadResult integrate(const Integrand& f, double a, double b, double abs_tol,
                     int max_depth = 48);

// Same, but with forced panel boundaries at the given interior points
// (kinks, jump points, sqrt endpoints).
QuadResult integrate_split(const Integrand& f, double a, double b,
                           std::vector<double> splits, double abs_tol,
                           int max_depth = 48);

// Cauchy principal value of  integral_a^b f(s)/(t-s) ds  with t in (a,b):
// the singular part is removed analytically via f(t)*log|(t-a)/(b-t)|.
double principal_value(const Integrand& f, double a, double b, double t,
                       double abs_tol, bool* converged = nullptr);

}  // namespace hextile
