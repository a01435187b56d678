#pragma once
// Continuum limit-shape objects on the normalized alpha,beta,gamma hexagon:
// the inscribed-ellipse polynomial E, the hyperbola Q, region
// classification, and the local density of vertical lozenges
//
//     P(x,y) = arccot(Q/sqrt(E)) / pi   inside the ellipse,
//              0 on R0,  1 on R1,
//
// with the arccot branch in (0, pi).  Coordinates: origin at the hexagon
// center, horizontal sides of length beta, upper-left side alpha,
// upper-right side gamma.  All formulas are invariant under rescaling
// (alpha,beta,gamma,x,y) -> s*(alpha,beta,gamma,x,y).

#include <array>

#include "exact.hpp"

namespace hextile {

struct ShapeParams {
  double alpha = 1, beta = 1, gamma = 1;
  ShapeParams(double a, double b, double c);
  double total() const { return alpha + beta + gamma; }
};

struct HexPoint {
  double x = 0, y = 0;
};

enum class Region {
  EllipseInterior,  // E > 0: all three orientations have positive density
  R0,               // frozen, no vertical lozenges (top/bottom components)
  R1,               // frozen, all vertical lozenges (left/right components)
  SingularPoint,    // one of the four tangency points on the alpha/gamma sides
  Boundary,         // on the inscribed ellipse, away from the singular points
  Outside           // outside the closed hexagon
};

double ellipse_E(const ShapeParams& sp, HexPoint p);
double hyperbola_Q(const ShapeParams& sp, HexPoint p);

// left, top-left, top-right, right, bottom-right, bottom-left
std::array<HexPoint, 6> hex_vertices(const ShapeParams& sp);
// Tangency points of the inscribed ellipse with the four non-horizontal
// sides, where the density is genuinely discontinuous:
// upper-left, upper-right, bottom-right, bottom-left.
std::array<HexPoint, 4> singular_points(const ShapeParams& sp);

double hex_area(const ShapeParams& sp);  // (ab+bc+ca) * sqrt(3)/2

// signed distance proxy: > 0 strictly inside, 0 on the boundary
double hexagon_slack(const ShapeParams& sp, HexPoint p);
bool in_hexagon(const ShapeParams& sp, HexPoint p, double tol = 0.0);

Region classify_region(const ShapeParams& sp, HexPoint p);

// Density of vertical lozenges at p.  Defined everywhere in the closed
// hexagon except the four singular points (throws validation_error there).
double density_P(const ShapeParams& sp, HexPoint p);

// Horizontal-line geometry.  kappa in (0,1) is the proportion of the way
// down from the top edge; the line at height y has endpoints
// (left_boundary_x(y), y) and (right_boundary_x(y), y).
double top_y(const ShapeParams& sp);
double y_of_kappa(const ShapeParams& sp, double kappa);
double kappa_of_y(const ShapeParams& sp, double y);
double left_boundary_x(const ShapeParams& sp, double y);
double right_boundary_x(const ShapeParams& sp, double y);

// Boundary values of the normalized limit height surface along the hexagon
// sides (piecewise linear; leftmost vertex carries alpha+gamma).
double left_boundary_height(const ShapeParams& sp, double y);
double right_boundary_height(const ShapeParams& sp, double y);

}  // namespace hextile
