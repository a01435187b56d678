#pragma once
// The normalized limit height surface H over the alpha,beta,gamma hexagon:
// integrates dH/dx = 1 - 3*P(x,y) along each horizontal grid row from the
// left boundary profile.  Also the two global numerical cross-checks: the
// hexagon-average of the density against alpha*gamma/(alpha*beta+beta*gamma+
// alpha*gamma), and the pointwise agreement of the two closed forms for the
// density (2D formula vs per-line formula).

#include <cmath>
#include <vector>

#include "lineshape.hpp"
#include "shape.hpp"

namespace hextile {

struct HeightSurfaceGrid {
  double x0 = 0, y0 = 0, step = 0;
  int nx = 0, ny = 0;
  std::vector<double> values;  // row-major, NaN outside the hexagon
  double right_mismatch = 0;   // max |H - boundary profile| at right endpoints

  double at(int ix, int iy) const { return values[(size_t)iy * nx + ix]; }
  bool inside(int ix, int iy) const { return std::isfinite(at(ix, iy)); }
  double x(int ix) const { return x0 + ix * step; }
  double y(int iy) const { return y0 + iy * step; }
};

// resolution: grid step as a fraction of the alpha+beta+gamma scale (1/200
// means step = total()/200).
HeightSurfaceGrid height_surface(const ShapeParams& sp, double resolution);

// (1/area) * integral of density_P over the hexagon, by nested adaptive
// quadrature with rows split at the ellipse crossings.
double average_density(const ShapeParams& sp, double abs_tol = 1e-6);

// max over the points of |density_P(p) - line density at (kappa(p), t(p))|.
double consistency_density_vs_line(const ShapeParams& sp,
                                   const std::vector<HexPoint>& points);

// Evenly spread interior sample points at least `margin` (normalized units)
// away from the singular points and the hexagon boundary.
std::vector<HexPoint> consistency_sample_points(const ShapeParams& sp, int target_count,
                                                double margin);

}  // namespace hextile
