#include "shape.hpp"

#include <algorithm>
#include <cmath>

namespace hextile {

namespace {
const double kSqrt3 = std::sqrt(3.0);
}

ShapeParams::ShapeParams(double a, double b, double c) : alpha(a), beta(b), gamma(c) {
  if (!(a > 0) || !(b > 0) || !(c > 0))
    throw validation_error("shape parameters must be positive");
}

double ellipse_E(const ShapeParams& sp, HexPoint p) {
  const double a = sp.alpha, b = sp.beta, c = sp.gamma;
  const double q = a + 2 * b + c;
  return 3 * a * b * c * (a + b + c) -
         (3 * (a + c) * (a + c) * p.x * p.x - 2 * kSqrt3 * q * (a - c) * p.x * p.y +
          (q * q - 4 * a * c) * p.y * p.y);
}

double hyperbola_Q(const ShapeParams& sp, HexPoint p) {
  const double a = sp.alpha, b = sp.beta, c = sp.gamma;
  return (kSqrt3 / 2.0) *
         ((4.0 / 3.0) * p.y * p.y - 4 * p.x * p.x + b * b + a * b + b * c - a * c);
}

std::array<HexPoint, 6> hex_vertices(const ShapeParams& sp) {
  const double a = sp.alpha, b = sp.beta, c = sp.gamma;
  const double yt = kSqrt3 * (a + c) / 4;
  return {HexPoint{-(a + 2 * b + c) / 4, kSqrt3 * (c - a) / 4},  // left
          HexPoint{(a - 2 * b - c) / 4, yt},                     // top-left
          HexPoint{(a + 2 * b - c) / 4, yt},                     // top-right
          HexPoint{(a + 2 * b + c) / 4, kSqrt3 * (a - c) / 4},   // right
          HexPoint{(2 * b + c - a) / 4, -yt},                    // bottom-right
          HexPoint{(c - a - 2 * b) / 4, -yt}};                   // bottom-left
}

std::array<HexPoint, 4> singular_points(const ShapeParams& sp) {
  const double a = sp.alpha, b = sp.beta, c = sp.gamma;
  // tangency with the upper-left side (double root of E restricted to it)
  const double xul = (2 * a * c - (a + 2 * b + c) * (b + c)) / (4 * (b + c));
  const double yul = kSqrt3 * (xul + (b + c) / 2);
  // mirror alpha<->gamma, x -> -x gives the upper-right side
  const double xur = -(2 * a * c - (a + 2 * b + c) * (a + b)) / (4 * (a + b));
  const double yur = kSqrt3 * (-xur + (a + b) / 2);
  return {HexPoint{xul, yul}, HexPoint{xur, yur}, HexPoint{-xul, -yul},
          HexPoint{-xur, -yur}};
}

double hex_area(const ShapeParams& sp) {
  return (sp.alpha * sp.beta + sp.beta * sp.gamma + sp.alpha * sp.gamma) * kSqrt3 / 2;
}

double hexagon_slack(const ShapeParams& sp, HexPoint p) {
  const double a = sp.alpha, b = sp.beta, c = sp.gamma;
  const double s = kSqrt3;
  double m = (s / 4) * (a + c) - p.y;                       // below the top edge
  m = std::min(m, p.y + (s / 4) * (a + c));                 // above the bottom edge
  m = std::min(m, ((s / 2) * (2 * p.x + b + c) - p.y) / 2);   // upper-left side
  m = std::min(m, (p.y - (s / 2) * (2 * p.x - b - c)) / 2);   // lower-right side
  m = std::min(m, (p.y + (s / 2) * (2 * p.x + a + b)) / 2);   // lower-left side
  m = std::min(m, ((s / 2) * (-2 * p.x + a + b) - p.y) / 2);  // upper-right side
  return m;
}

bool in_hexagon(const ShapeParams& sp, HexPoint p, double tol) {
  return hexagon_slack(sp, p) >= -tol;
}

Region classify_region(const ShapeParams& sp, HexPoint p) {
  const double scale = sp.total();
  const double tol = 1e-9 * scale;
  const double slack = hexagon_slack(sp, p);
  if (slack < -tol) return Region::Outside;
  const double E = ellipse_E(sp, p);
  const double Q = hyperbola_Q(sp, p);
  // tolerance for "on the ellipse": E is quartic in the scale
  const double tolE = 1e-9 * scale * scale * scale * scale;
  for (const HexPoint& s : singular_points(sp)) {
    const double dx = p.x - s.x, dy = p.y - s.y;
    if (std::sqrt(dx * dx + dy * dy) <= tol) return Region::SingularPoint;
  }
  if (E > tolE) return Region::EllipseInterior;
  if (std::fabs(E) <= tolE) return Region::Boundary;
  return Q < 0 ? Region::R1 : Region::R0;
}

double density_P(const ShapeParams& sp, HexPoint p) {
  const double E = ellipse_E(sp, p);
  if (E > 0) return (M_PI_2 - std::atan(hyperbola_Q(sp, p) / std::sqrt(E))) / M_PI;
  const double Q = hyperbola_Q(sp, p);
  if (Q > 0) return 0.0;
  if (Q < 0) return 1.0;
  throw validation_error("density undefined at a singular point");
}

double top_y(const ShapeParams& sp) { return kSqrt3 * (sp.alpha + sp.gamma) / 4; }

double y_of_kappa(const ShapeParams& sp, double kappa) {
  return top_y(sp) * (1 - 2 * kappa);
}

double kappa_of_y(const ShapeParams& sp, double y) {
  return (top_y(sp) - y) / (2 * top_y(sp));
}

double left_boundary_x(const ShapeParams& sp, double y) {
  const double ysplit = kSqrt3 * (sp.gamma - sp.alpha) / 4;
  if (y >= ysplit) return y / kSqrt3 - (sp.beta + sp.gamma) / 2;  // upper-left side
  return -y / kSqrt3 - (sp.alpha + sp.beta) / 2;                  // lower-left side
}

double right_boundary_x(const ShapeParams& sp, double y) {
  const double ysplit = kSqrt3 * (sp.alpha - sp.gamma) / 4;
  if (y >= ysplit) return (sp.alpha + sp.beta) / 2 - y / kSqrt3;  // upper-right side
  return y / kSqrt3 + (sp.beta + sp.gamma) / 2;                   // lower-right side
}

double left_boundary_height(const ShapeParams& sp, double y) {
  const double yv = kSqrt3 * (sp.gamma - sp.alpha) / 4;  // leftmost vertex
  if (y >= yv) return sp.alpha + sp.gamma - (2 / kSqrt3) * (y - yv);
  return sp.alpha + sp.gamma + (2 / kSqrt3) * (y - yv);
}

double right_boundary_height(const ShapeParams& sp, double y) {
  const double yv = kSqrt3 * (sp.alpha - sp.gamma) / 4;  // rightmost vertex
  if (y >= yv) return sp.beta + (2 / kSqrt3) * (y - yv);
  return sp.beta - (2 / kSqrt3) * (y - yv);
}

}  // namespace hextile
