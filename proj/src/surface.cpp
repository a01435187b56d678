#include "surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quadrature.hpp"

namespace hextile {

namespace {

// x-interval of the ellipse on the horizontal line at height y, if any.
// E restricted to the line is a downward parabola in x.
bool ellipse_span(const ShapeParams& sp, double y, double* xin, double* xout) {
  const double a = sp.alpha, b = sp.beta, c = sp.gamma;
  const double q = a + 2 * b + c;
  const double s3 = std::sqrt(3.0);
  const double A = -3 * (a + c) * (a + c);
  const double B = 2 * s3 * q * (a - c) * y;
  const double C = 3 * a * b * c * (a + b + c) - (q * q - 4 * a * c) * y * y;
  const double disc = B * B - 4 * A * C;
  if (disc <= 0) return false;
  const double sq = std::sqrt(disc);
  const double r = -0.5 * (B + (B >= 0 ? sq : -sq));
  double u = r / A, v = (r != 0) ? C / r : 0.0;
  if (u > v) std::swap(u, v);
  *xin = u;
  *xout = v;
  return true;
}

double slope_fn(const ShapeParams& sp, double x, double y) {
  return 1 - 3 * density_P(sp, HexPoint{x, y});
}

}  // namespace

HeightSurfaceGrid height_surface(const ShapeParams& sp, double resolution) {
  if (!(resolution > 0 && resolution < 0.25))
    throw validation_error("surface resolution must be in (0, 0.25)");
  HeightSurfaceGrid g;
  g.step = resolution * sp.total();
  const auto verts = hex_vertices(sp);
  double xmax = 0;
  for (const auto& v : verts) xmax = std::max(xmax, std::fabs(v.x));
  const double ymax = top_y(sp);
  const int hx = (int)std::ceil(xmax / g.step) + 1;
  const int hy = (int)std::ceil(ymax / g.step) + 1;
  g.nx = 2 * hx + 1;
  g.ny = 2 * hy + 1;
  g.x0 = -hx * g.step;
  g.y0 = -hy * g.step;
  g.values.assign((size_t)g.nx * g.ny, std::numeric_limits<double>::quiet_NaN());
  g.right_mismatch = 0;

  for (int iy = 0; iy < g.ny; iy++) {
    const double y = g.y(iy);
    if (std::fabs(y) >= ymax) continue;
    const double xl = left_boundary_x(sp, y);
    const double xr = right_boundary_x(sp, y);
    double e1 = 0, e2 = 0;
    const bool has_ellipse = ellipse_span(sp, y, &e1, &e2);
    auto segment = [&](double p, double q) {
      if (q <= p) return 0.0;
      std::vector<double> splits;
      if (has_ellipse) {
        if (e1 > p && e1 < q) splits.push_back(e1);
        if (e2 > p && e2 < q) splits.push_back(e2);
      }
      return integrate_split([&](double x) { return slope_fn(sp, x, y); }, p, q, splits,
                             1e-10)
          .value;
    };
    double h = left_boundary_height(sp, y);
    double xprev = xl;
    for (int ix = 0; ix < g.nx; ix++) {
      const double x = g.x(ix);
      if (x < xl || x > xr) continue;
      h += segment(xprev, x);
      xprev = x;
      g.values[(size_t)iy * g.nx + ix] = h;
    }
    h += segment(xprev, xr);
    g.right_mismatch =
        std::max(g.right_mismatch, std::fabs(h - right_boundary_height(sp, y)));
  }
  return g;
}

double average_density(const ShapeParams& sp, double abs_tol) {
  const double ymax = top_y(sp);
  auto row = [&](double y) {
    const double xl = left_boundary_x(sp, y);
    const double xr = right_boundary_x(sp, y);
    if (xr <= xl) return 0.0;
    double e1 = 0, e2 = 0;
    if (!ellipse_span(sp, y, &e1, &e2)) {
      // entirely frozen row (above/below the ellipse): density 0
      return 0.0;
    }
    e1 = std::max(e1, xl);
    e2 = std::min(e2, xr);
    // outside the ellipse the density is exactly 0 or 1; the region with
    // density 1 is the pair of side caps on rows that meet the ellipse
    double frozen = 0;
    if (e1 > xl && density_P(sp, HexPoint{0.5 * (xl + e1), y}) == 1.0)
      frozen += e1 - xl;
    if (e2 < xr && density_P(sp, HexPoint{0.5 * (e2 + xr), y}) == 1.0)
      frozen += xr - e2;
    const QuadResult q = integrate(
        [&](double x) { return density_P(sp, HexPoint{x, y}); }, e1, e2, abs_tol / 8);
    return frozen + q.value;
  };
  // split rows at the heights of the singular points and the hexagon's
  // side-break heights, where the row integral has kinks
  std::vector<double> splits;
  for (const auto& s : singular_points(sp)) splits.push_back(s.y);
  const double s3 = std::sqrt(3.0);
  splits.push_back(s3 * (sp.gamma - sp.alpha) / 4);
  splits.push_back(s3 * (sp.alpha - sp.gamma) / 4);
  const QuadResult q = integrate_split(row, -ymax, ymax, splits, abs_tol);
  return q.value / hex_area(sp);
}

double consistency_density_vs_line(const ShapeParams& sp,
                                   const std::vector<HexPoint>& points) {
  double worst = 0;
  for (const HexPoint& p : points) {
    const double kappa = kappa_of_y(sp, p.y);
    const double xl = left_boundary_x(sp, p.y);
    const double xr = right_boundary_x(sp, p.y);
    const double t = (p.x - xl) / (xr - xl);
    const LineParams lp = line_params(sp, kappa);
    worst = std::max(worst, std::fabs(density_P(sp, p) - lp.density(t)));
  }
  return worst;
}

std::vector<HexPoint> consistency_sample_points(const ShapeParams& sp, int target_count,
                                                double margin) {
  const auto sing = singular_points(sp);
  const double ymax = top_y(sp);
  const auto verts = hex_vertices(sp);
  double xmax = 0;
  for (const auto& v : verts) xmax = std::max(xmax, std::fabs(v.x));
  // points this close to the ellipse zero-set are skipped: the branch choice
  // there flips inside rounding error, which says nothing about the identity
  const double scale = sp.total();
  const double etol = 1e-9 * scale * scale * scale * scale;
  std::vector<HexPoint> out;
  const int grid = (int)std::ceil(std::sqrt((double)target_count * 2));
  for (int iy = 1; iy < grid && (int)out.size() < target_count; iy++)
    for (int ix = 1; ix < grid && (int)out.size() < target_count; ix++) {
      const HexPoint p{-xmax + 2 * xmax * ix / grid, -ymax + 2 * ymax * iy / grid};
      if (hexagon_slack(sp, p) < margin) continue;
      if (std::fabs(ellipse_E(sp, p)) < etol) continue;
      bool near_singular = false;
      for (const auto& s : sing) {
        const double dx = p.x - s.x, dy = p.y - s.y;
        if (dx * dx + dy * dy < margin * margin) near_singular = true;
      }
      if (!near_singular) out.push_back(p);
    }
  return out;
}

}  // namespace hextile
