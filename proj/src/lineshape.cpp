#include "lineshape.hpp"

#include <algorithm>
#include <cmath>

#include "quadrature.hpp"

namespace hextile {

namespace {
constexpr double kDegenerate = 1e-12;
}

LineParams::LineParams(double lambda_, double rho_l_, double rho_r_, double kappa_)
    : lambda(lambda_), rho_l(rho_l_), rho_r(rho_r_), kappa(kappa_) {
  if (lambda < 0 || lambda > 1) throw validation_error("lambda must lie in [0,1]");
  if (rho_l < 0 || rho_r < 0) throw validation_error("rho_l, rho_r must be >= 0");
  if (lambda < kDegenerate || lambda > 1 - kDegenerate) {
    r1_ = r2_ = 0.5;  // density is identically 0 or 1
    return;
  }
  // f2(t) = A t^2 + B t + C
  const double s = rho() + 2 * lambda;
  const double cl = lambda * lambda + rho() * lambda - rho_l;
  const double cr = lambda * lambda + rho() * lambda - rho_r;
  const double A = -s * s;
  const double B = s * s - cr * cr + cl * cl;
  const double C = -cl * cl;
  const double disc = B * B - 4 * A * C;
  const double prod = discriminant_product();
  const double scale = std::max({B * B, std::fabs(4 * A * C), std::fabs(prod), 1e-300});
  if (std::fabs(disc - prod) > 1e-12 * scale)
    throw std::logic_error("discriminant identity violated");
  const double sq = std::sqrt(std::max(disc, 0.0));
  const double q = -0.5 * (B + (B >= 0 ? sq : -sq));
  double ra = q / A;
  double rb = (q != 0) ? C / q : 0.0;
  if (ra > rb) std::swap(ra, rb);
  r1_ = std::clamp(ra, 0.0, 1.0);
  r2_ = std::clamp(rb, 0.0, 1.0);
}

double LineParams::f1(double t) const {
  const double cl = lambda * lambda + rho() * lambda - rho_l;
  const double cr = lambda * lambda + rho() * lambda - rho_r;
  return 2 * t * (1 - t) - cr * t - cl * (1 - t);
}

double LineParams::f2(double t) const {
  const double s = rho() + 2 * lambda;
  const double cl = lambda * lambda + rho() * lambda - rho_l;
  const double cr = lambda * lambda + rho() * lambda - rho_r;
  return s * s * t * (1 - t) - cr * cr * t - cl * cl * (1 - t);
}

double LineParams::discriminant() const {
  const double s = rho() + 2 * lambda;
  const double cl = lambda * lambda + rho() * lambda - rho_l;
  const double cr = lambda * lambda + rho() * lambda - rho_r;
  const double A = -s * s;
  const double B = s * s - cr * cr + cl * cl;
  const double C = -cl * cl;
  return B * B - 4 * A * C;
}

double LineParams::discriminant_product() const {
  const double l = lambda, r = rho();
  return 16 * l * (1 - l) * (l + rho_r) * (l + rho_l) * (l + r) * (l + r + 1);
}

double LineParams::density(double t) const {
  if (t < -1e-12 || t > 1 + 1e-12)
    throw validation_error("density argument outside [0,1]");
  t = std::clamp(t, 0.0, 1.0);
  if (lambda < kDegenerate) return 0.0;
  if (lambda > 1 - kDegenerate) return 1.0;
  auto edge = [&](double r) {
    // one-sided limit of the arccot form at a root of f2
    const double v = f1(r);
    if (std::fabs(v) < kDegenerate) return 0.5;  // root at an endpoint of [0,1]
    return v > 0 ? 0.0 : 1.0;
  };
  if (t <= r1_) return edge(r1_);
  if (t >= r2_) return edge(r2_);
  const double v2 = f2(t);
  if (v2 <= 0) return edge(t);  // fp guard immediately next to a root
  return (M_PI_2 - std::atan(f1(t) / std::sqrt(v2))) / M_PI;
}

double LineParams::cumulative(double t, double abs_tol) const {
  if (t < -1e-12 || t > 1 + 1e-12)
    throw validation_error("cumulative argument outside [0,1]");
  t = std::clamp(t, 0.0, 1.0);
  double total = 0;
  const double lo = std::min(t, r1_), hi = std::min(t, r2_);
  if (lo > 0) total += density(0.0) * lo;
  if (hi > r1_) {
    const QuadResult q =
        integrate([this](double s) { return density(s); }, r1_, hi, abs_tol);
    if (!q.converged)
      throw std::runtime_error("cumulative quadrature did not converge");
    total += q.value;
  }
  if (t > r2_) total += density(1.0) * (t - r2_);
  return total;
}

LineParams line_params(const ShapeParams& sp, double kappa) {
  if (!(kappa > 0 && kappa < 1)) throw validation_error("kappa must lie in (0,1)");
  const double a = sp.alpha, c = sp.gamma;
  const double kp = kappa * (a + c);
  const double ell = std::min(std::min(kp, a + c - kp), std::min(a, c));
  const double n = sp.beta + ell;
  return LineParams(ell / n, std::fabs(a - kp) / n, std::fabs(c - kp) / n, kappa);
}

double hilbert_residual(const LineParams& lp, double t, double abs_tol) {
  if (!(t > 0 && t < 1)) throw validation_error("residual defined for t in (0,1)");
  const double eps = 1e-12;
  if (std::fabs(t - lp.r1()) < eps || std::fabs(t - lp.r2()) < eps)
    throw validation_error("residual undefined at the roots of f2");

  const double lo = -lp.rho_l, hi = 1 + lp.rho_r;
  auto g = [&](double s) {
    double v = 0;
    if (s >= 0 && s <= 1) v += lp.density(s);
    if ((s >= -lp.rho_l && s <= 0) || (s >= 1 && s <= 1 + lp.rho_r)) v += 0.5;
    return v;
  };

  std::vector<double> cuts = {0.0, lp.r1(), lp.r2(), 1.0};
  cuts.erase(std::remove_if(cuts.begin(), cuts.end(),
                            [&](double x) { return x <= lo || x >= hi; }),
             cuts.end());
  std::sort(cuts.begin(), cuts.end());

  double a = lo, b = hi;  // the piece that contains t
  double prev = lo;
  std::vector<std::pair<double, double>> pieces;
  auto push = [&](double p, double q) {
    if (q <= p) return;
    if (t > p && t < q) {
      a = p;
      b = q;
    } else {
      pieces.emplace_back(p, q);
    }
  };
  for (double ccut : cuts) {
    push(prev, ccut);
    prev = ccut;
  }
  push(prev, hi);

  double total = 0;
  for (const auto& [p, q] : pieces) {
    const QuadResult r =
        integrate([&](double s) { return g(s) / (t - s); }, p, q, abs_tol / 2);
    total += r.value;
  }
  total += principal_value(g, a, b, t, abs_tol / 2);
  return total / M_PI;
}

}  // namespace hextile
