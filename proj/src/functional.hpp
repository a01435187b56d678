#pragma once
// The variational side: the bilinear form
//
//     <f,g> = integral integral f'(x) g'(y) log|x-y| dx dy
//
// evaluated in closed form on piecewise-linear functions, the profile
// functional V(A) = <A+J, A+J> with J the fixed half-ramp boundary profile,
// its maximization over admissible profiles by projected gradient ascent on
// a uniform slope grid, and the bridge test comparing differences of
// log tiling counts against differences of V.

#include <vector>

#include "exact.hpp"
#include "lineshape.hpp"

namespace hextile {

// Continuous piecewise-linear function; constant outside [xs.front(),
// xs.back()].  The derivative is a step function with compact support.
struct PiecewiseLinear {
  std::vector<double> xs;  // strictly increasing, >= 2 entries
  std::vector<double> ys;

  PiecewiseLinear(std::vector<double> xs_, std::vector<double> ys_);
  double value(double x) const;
  int segments() const { return (int)xs.size() - 1; }
};

// Exact segment-pair closed form of <f,g> via the second antiderivative of
// log|u|, u^2 (2 log|u| - 3)/4 (continuity value 0 at u = 0).
double inner_product(const PiecewiseLinear& f, const PiecewiseLinear& g);

// Weakly increasing Lipschitz-1 profile with A(0)=0, A(1)=lambda, extended
// by constants; the argument of the functional.
struct AdmissibleFn {
  PiecewiseLinear f;

  explicit AdmissibleFn(PiecewiseLinear pl, double tol = 1e-9);
  double lambda() const { return f.ys.back(); }
  double value(double t) const { return f.value(t); }

  // uniform-grid profile with the given per-cell slopes in [0,1]
  static AdmissibleFn from_slopes(const std::vector<double>& slopes);
  // straight-line interpolant of a discrete position vector
  static AdmissibleFn from_positions(int n, const std::vector<int>& positions);
};

// Boundary ramp: J(0)=0 and J' = 1/2 on [-rho_l,0] and [1,1+rho_r], else 0.
struct JProfile {
  double rho_l = 0, rho_r = 0;
  JProfile(double l, double r);
  PiecewiseLinear as_piecewise() const;  // on [-rho_l-1, 2+rho_r]
};

// V(A) = <A+J, A+J>
double functional_value(const AdmissibleFn& A, const JProfile& J);

struct MaximizeResult {
  AdmissibleFn profile;
  double value = 0;
  bool converged = false;
  int iterations = 0;
  double pg_norm = 0;  // projected-gradient norm at the returned iterate
};

struct MaximizeOptions {
  int max_iterations = 10000;
  double pg_tol = 1e-8;
};

// Maximize V over uniform-grid admissible profiles with n_grid slopes in
// [0,1] of mean lambda.  Deterministic: fixed start (constant slopes), step
// from a power-iteration bound, projection by clip-and-shift bisection.
MaximizeResult maximize(const JProfile& J, double lambda, int n_grid,
                        const MaximizeOptions& opt = {});

struct RiemannCheck {
  double lhs = 0;  // [log count(P1) - log count(P2)] / n^2
  double rhs = 0;  // V(A1) - V(A2)
  double gap = 0;  // |lhs - rhs|
};

// Compares exact line counts against the functional on the interpolated
// profiles; the additive constant and o(1) of the continuum limit cancel in
// the difference up to discretization error.
RiemannCheck riemann_check(const HexDims& d, int k, const LinePositions& p1,
                           const LinePositions& p2);

}  // namespace hextile
