#include "quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace hextile {

namespace {

constexpr int kNodes = 15;

struct GaussRule {
  double x[kNodes];  // nodes on [-1, 1]
  double w[kNodes];
  GaussRule() {
    // Newton iteration on Legendre P_n; standard three-term recurrence
    const int n = kNodes;
    for (int i = 0; i < n; i++) {
      double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double p0 = 0, p1 = 0;
      for (int iter = 0; iter < 100; iter++) {
        p0 = 1;
        p1 = t;
        for (int j = 2; j <= n; j++) {
          const double p2 = ((2 * j - 1) * t * p1 - (j - 1) * p0) / j;
          p0 = p1;
          p1 = p2;
        }
        const double dp = n * (t * p1 - p0) / (t * t - 1);
        const double step = p1 / dp;
        t -= step;
        if (std::fabs(step) < 1e-15) break;
      }
      p0 = 1;
      p1 = t;
      for (int j = 2; j <= n; j++) {
        const double p2 = ((2 * j - 1) * t * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n * (t * p1 - p0) / (t * t - 1);
      x[n - 1 - i] = t;
      w[n - 1 - i] = 2.0 / ((1 - t * t) * dp * dp);
    }
  }
};

const GaussRule& rule() {
  static const GaussRule r;
  return r;
}

double panel(const Integrand& f, double a, double b) {
  const GaussRule& r = rule();
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0;
  for (int i = 0; i < kNodes; i++) s += r.w[i] * f(mid + half * r.x[i]);
  return s * half;
}

void adapt(const Integrand& f, double a, double b, double whole, double tol,
           int depth, int max_depth, QuadResult& out) {
  const double mid = 0.5 * (a + b);
  const double left = panel(f, a, mid);
  const double right = panel(f, mid, b);
  const double err = std::fabs(left + right - whole);
  if (err <= tol || depth >= max_depth) {
    out.value += left + right;
    out.error += err;
    if (err > tol) out.converged = false;
    return;
  }
  adapt(f, a, mid, left, tol / 2, depth + 1, max_depth, out);
  adapt(f, mid, b, right, tol / 2, depth + 1, max_depth, out);
}

}  // namespace

QuadResult integrate(const Integrand& f, double a, double b, double abs_tol,
                     int max_depth) {
  QuadResult out;
  if (a == b) return out;
  adapt(f, a, b, panel(f, a, b), abs_tol, 0, max_depth, out);
  return out;
}

QuadResult integrate_split(const Integrand& f, double a, double b,
                           std::vector<double> splits, double abs_tol, int max_depth) {
  splits.push_back(a);
  splits.push_back(b);
  std::sort(splits.begin(), splits.end());
  QuadResult out;
  double prev = a;
  for (double s : splits) {
    if (s <= prev || s > b) continue;
    const QuadResult piece = integrate(f, prev, s, abs_tol / 2, max_depth);
    out.value += piece.value;
    out.error += piece.error;
    out.converged = out.converged && piece.converged;
    prev = s;
  }
  return out;
}

double principal_value(const Integrand& f, double a, double b, double t,
                       double abs_tol, bool* converged) {
  const double ft = f(t);
  const double scale = std::max({std::fabs(a), std::fabs(b), 1.0});
  auto regular = [&](double s) {
    if (std::fabs(t - s) < 1e-14 * scale) {
      const double h = 1e-7 * scale;
      return -(f(t + h) - f(t - h)) / (2 * h);
    }
    return (f(s) - ft) / (t - s);
  };
  // symmetric split about t keeps panels away from the removable point
  const QuadResult q = integrate_split(regular, a, b, {t}, abs_tol);
  if (converged) *converged = q.converged;
  return q.value + ft * std::log(std::fabs((t - a) / (b - t)));
}

}  // namespace hextile
