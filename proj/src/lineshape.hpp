#pragma once
// Closed form of the maximizing density profile along one horizontal line.
//
// A line is described by lambda in (0,1) (limiting fraction of positions
// holding vertical lozenges) and the boundary ramps rho_l, rho_r >= 0.  With
//   f1(t) = 2t(1-t) - (l^2+rl*l-rr) t - (l^2+rl*l-rl)(1-t)   [l=lambda, r=rho]
//   f2(t) = (r+2l)^2 t(1-t) - (l^2+rl-rr)^2 t - (l^2+rl-rl)^2 (1-t)
// (both invariant under (t, rho_l, rho_r) -> (1-t, rho_r, rho_l)), f2 has
// real roots 0 <= r1 < r2 <= 1 and the density is
//   density(t) = arccot(f1/sqrt(f2)) / pi        on (r1, r2),
// constant equal to its one-sided limit (0 or 1, by the sign of f1 at the
// root; 1/2 in the degenerate root-at-endpoint case) outside.
// cumulative(1) = lambda, which makes the cumulative an admissible profile.

#include <utility>

#include "shape.hpp"

namespace hextile {

struct LineParams {
  double lambda = 0.5, rho_l = 0, rho_r = 0;
  double kappa = -1;  // provenance when derived from a hexagon line, else -1

  LineParams() = default;
  LineParams(double lambda_, double rho_l_, double rho_r_, double kappa_ = -1);

  double rho() const { return rho_l + rho_r; }
  double f1(double t) const;
  double f2(double t) const;
  double r1() const { return r1_; }
  double r2() const { return r2_; }

  // quadratic discriminant of f2 from its coefficients
  double discriminant() const;
  // the same quantity in product form:
  // 16 l (1-l) (l+rho_r) (l+rho_l) (l+rho) (l+rho+1)
  double discriminant_product() const;

  double density(double t) const;
  // integral of density over [0,t], adaptive quadrature to abs_tol
  double cumulative(double t, double abs_tol = 1e-9) const;

 private:
  double r1_ = 0, r2_ = 0;
};

// Parameters of the line a proportion kappa in (0,1) down from the top of
// the alpha,beta,gamma hexagon, with positions rescaled so the line has
// length 1:  k' = kappa*(alpha+gamma), n' = beta + min(k',alpha,gamma,
// alpha+gamma-k'), lambda = min(...)/n', rho_l = |alpha-k'|/n',
// rho_r = |gamma-k'|/n'.  The formulas are already symmetric under the
// half-turn of the hexagon, so no case split on kappa is needed.
LineParams line_params(const ShapeParams& sp, double kappa);

// (1/pi) PV integral of (density + ramp)(s) / (t-s) over [-rho_l, 1+rho_r],
// where ramp = 1/2 on [-rho_l,0] and [1,1+rho_r], 0 elsewhere.  Vanishes on
// (r1,r2) at the maximizer; has the sign of f1(r1) on (0,r1) and of
// -f1(r2) on (r2,1).
double hilbert_residual(const LineParams& lp, double t, double abs_tol = 1e-6);

}  // namespace hextile
