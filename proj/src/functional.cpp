#include "functional.hpp"

#include <algorithm>
#include <cmath>

namespace hextile {

namespace {

// second antiderivative of log|u|; value 0 at u = 0 by continuity
inline double phi2(double u) {
  if (u == 0) return 0;
  return u * u * (2 * std::log(std::fabs(u)) - 3) / 4;
}

// integral over [p,q] x [r,s] of log|x-y|
inline double box_log(double p, double q, double r, double s) {
  return phi2(q - r) - phi2(q - s) - phi2(p - r) + phi2(p - s);
}

}  // namespace

PiecewiseLinear::PiecewiseLinear(std::vector<double> xs_, std::vector<double> ys_)
    : xs(std::move(xs_)), ys(std::move(ys_)) {
  if (xs.size() < 2 || xs.size() != ys.size())
    throw validation_error("piecewise-linear function needs matching breakpoints/values");
  for (size_t i = 1; i < xs.size(); i++)
    if (!(xs[i - 1] < xs[i]))
      throw validation_error("breakpoints must be strictly increasing");
}

double PiecewiseLinear::value(double x) const {
  if (x <= xs.front()) return ys.front();
  if (x >= xs.back()) return ys.back();
  const size_t j =
      std::upper_bound(xs.begin(), xs.end(), x) - xs.begin();
  const double t = (x - xs[j - 1]) / (xs[j] - xs[j - 1]);
  return ys[j - 1] + t * (ys[j] - ys[j - 1]);
}

double inner_product(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  double total = 0;
  for (int i = 0; i < f.segments(); i++) {
    const double fi = (f.ys[i + 1] - f.ys[i]) / (f.xs[i + 1] - f.xs[i]);
    if (fi == 0) continue;
    for (int j = 0; j < g.segments(); j++) {
      const double gj = (g.ys[j + 1] - g.ys[j]) / (g.xs[j + 1] - g.xs[j]);
      if (gj == 0) continue;
      total += fi * gj * box_log(f.xs[i], f.xs[i + 1], g.xs[j], g.xs[j + 1]);
    }
  }
  return total;
}

AdmissibleFn::AdmissibleFn(PiecewiseLinear pl, double tol) : f(std::move(pl)) {
  if (std::fabs(f.xs.front()) > tol || std::fabs(f.xs.back() - 1) > tol)
    throw validation_error("admissible profile must live on [0,1]");
  if (std::fabs(f.ys.front()) > tol)
    throw validation_error("admissible profile must start at 0");
  for (int i = 0; i < f.segments(); i++) {
    const double s = (f.ys[i + 1] - f.ys[i]) / (f.xs[i + 1] - f.xs[i]);
    if (s < -tol || s > 1 + tol)
      throw validation_error("admissible slopes must lie in [0,1]");
  }
}

AdmissibleFn AdmissibleFn::from_slopes(const std::vector<double>& slopes) {
  const int n = (int)slopes.size();
  if (n < 1) throw validation_error("need at least one slope");
  std::vector<double> xs(n + 1), ys(n + 1);
  for (int i = 0; i <= n; i++) xs[i] = (double)i / n;
  ys[0] = 0;
  for (int i = 0; i < n; i++) ys[i + 1] = ys[i] + slopes[i] / n;
  return AdmissibleFn(PiecewiseLinear(std::move(xs), std::move(ys)));
}

AdmissibleFn AdmissibleFn::from_positions(int n, const std::vector<int>& positions) {
  std::vector<double> xs(n + 1), ys(n + 1);
  size_t seen = 0;
  for (int i = 0; i <= n; i++) {
    xs[i] = (double)i / n;
    while (seen < positions.size() && positions[seen] <= i) seen++;
    ys[i] = (double)seen / n;
  }
  return AdmissibleFn(PiecewiseLinear(std::move(xs), std::move(ys)));
}

JProfile::JProfile(double l, double r) : rho_l(l), rho_r(r) {
  if (l < 0 || r < 0) throw validation_error("rho_l, rho_r must be >= 0");
}

PiecewiseLinear JProfile::as_piecewise() const {
  std::vector<double> xs, ys;
  double cur = 0;
  xs.push_back(-rho_l);
  ys.push_back(0);
  if (rho_l > 0) {
    cur += rho_l / 2;
    xs.push_back(0);
    ys.push_back(cur);
  }
  xs.push_back(1);
  ys.push_back(cur);
  if (rho_r > 0) {
    cur += rho_r / 2;
    xs.push_back(1 + rho_r);
    ys.push_back(cur);
  }
  if (xs.size() < 2) {  // rho_l = rho_r = 0
    xs = {0, 1};
    ys = {0, 0};
  }
  return PiecewiseLinear(std::move(xs), std::move(ys));
}

namespace {

PiecewiseLinear add_pwl(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  std::vector<double> xs;
  xs.reserve(f.xs.size() + g.xs.size());
  xs.insert(xs.end(), f.xs.begin(), f.xs.end());
  xs.insert(xs.end(), g.xs.begin(), g.xs.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end(),
                       [](double a, double b) { return std::fabs(a - b) < 1e-14; }),
           xs.end());
  std::vector<double> ys(xs.size());
  for (size_t i = 0; i < xs.size(); i++) ys[i] = f.value(xs[i]) + g.value(xs[i]);
  return PiecewiseLinear(std::move(xs), std::move(ys));
}

}  // namespace

double functional_value(const AdmissibleFn& A, const JProfile& J) {
  const PiecewiseLinear sum = add_pwl(A.f, J.as_piecewise());
  return inner_product(sum, sum);
}

namespace {

// projection onto {0 <= s_i <= 1, sum s_i = target} by clip-and-shift:
// sum(clip(z + nu)) is monotone in nu, solved by bisection
std::vector<double> project_capped(std::vector<double> z, double target) {
  const int n = (int)z.size();
  auto total = [&](double nu) {
    double s = 0;
    for (double v : z) s += std::clamp(v + nu, 0.0, 1.0);
    return s;
  };
  double lo = -2, hi = 2;
  for (double v : z) {
    lo = std::min(lo, -v - 1);
    hi = std::max(hi, 1 - v + 1);
  }
  for (int it = 0; it < 200; it++) {
    const double mid = 0.5 * (lo + hi);
    (total(mid) < target ? lo : hi) = mid;
  }
  const double nu = 0.5 * (lo + hi);
  for (double& v : z) v = std::clamp(v + nu, 0.0, 1.0);
  // distribute the residual over interior coordinates
  double resid = target;
  for (double v : z) resid -= v;
  for (int pass = 0; pass < 4 && std::fabs(resid) > 1e-15 * n; pass++) {
    int free_count = 0;
    for (double v : z)
      if (v > 0 && v < 1) free_count++;
    if (!free_count) break;
    const double d = resid / free_count;
    resid = target;
    for (double& v : z) {
      if (v > 0 && v < 1) v = std::clamp(v + d, 0.0, 1.0);
      resid -= v;
    }
  }
  return z;
}

}  // namespace

MaximizeResult maximize(const JProfile& J, double lambda, int n_grid,
                        const MaximizeOptions& opt) {
  if (n_grid < 10) throw validation_error("maximize needs n_grid >= 10");
  if (lambda < 0 || lambda > 1) throw validation_error("lambda must lie in [0,1]");
  const int n = n_grid;

  // quadratic model V(s) = s^T M s + 2 b^T s + const on cell slopes
  std::vector<double> M((size_t)n * n), b(n, 0.0);
  auto cell = [&](int i) { return std::pair<double, double>{(double)i / n, (double)(i + 1) / n}; };
  for (int i = 0; i < n; i++) {
    const auto [p, q] = cell(i);
    for (int j = 0; j < n; j++) {
      const auto [r, s] = cell(j);
      M[(size_t)i * n + j] = box_log(p, q, r, s);
    }
    double bi = 0;
    if (J.rho_l > 0) bi += 0.5 * box_log(p, q, -J.rho_l, 0.0);
    if (J.rho_r > 0) bi += 0.5 * box_log(p, q, 1.0, 1.0 + J.rho_r);
    b[i] = bi;
  }
  auto mat_vec = [&](const std::vector<double>& v, std::vector<double>& out) {
    for (int i = 0; i < n; i++) {
      double acc = 0;
      const double* row = &M[(size_t)i * n];
      for (int j = 0; j < n; j++) acc += row[j] * v[j];
      out[i] = acc;
    }
  };
  // spectral bound by power iteration (deterministic start)
  std::vector<double> pv(n), pw(n);
  for (int i = 0; i < n; i++) pv[i] = 1.0 / (i + 1);
  double L = 0;
  for (int it = 0; it < 60; it++) {
    mat_vec(pv, pw);
    double norm = 0;
    for (double v : pw) norm += v * v;
    norm = std::sqrt(norm);
    if (norm == 0) break;
    L = norm;
    for (int i = 0; i < n; i++) pv[i] = pw[i] / norm;
  }
  const double step = 1.0 / std::max(L, 1e-12);

  auto value_of = [&](const std::vector<double>& s, std::vector<double>& ms) {
    mat_vec(s, ms);
    double v = 0;
    for (int i = 0; i < n; i++) v += s[i] * (ms[i] + 2 * b[i]);
    return v;
  };

  std::vector<double> s(n, lambda), prev = s, y = s, ms(n), grad(n);
  std::vector<double> best = s;
  double best_val = value_of(s, ms);
  double prev_val = best_val;
  double theta = 1;
  MaximizeResult res{AdmissibleFn::from_slopes(s), 0, false, 0, 0};
  for (int it = 0; it < opt.max_iterations; it++) {
    // gradient step at the extrapolated point, then project
    mat_vec(y, ms);
    for (int i = 0; i < n; i++) grad[i] = 2 * (ms[i] + b[i]);
    std::vector<double> z(n);
    for (int i = 0; i < n; i++) z[i] = y[i] + step * grad[i];
    std::vector<double> snew = project_capped(std::move(z), lambda * n);

    double pg = 0;
    for (int i = 0; i < n; i++) {
      const double d = snew[i] - y[i];
      pg += d * d;
    }
    pg = std::sqrt(pg) / step;

    const double vnew = value_of(snew, ms);
    if (vnew > best_val) {
      best_val = vnew;
      best = snew;
    }
    // momentum with value restart
    const double theta_new = (1 + std::sqrt(1 + 4 * theta * theta)) / 2;
    const double mom = (theta - 1) / theta_new;
    const bool restart = vnew < prev_val;
    for (int i = 0; i < n; i++)
      y[i] = restart ? snew[i] : snew[i] + mom * (snew[i] - prev[i]);
    theta = restart ? 1 : theta_new;
    prev = snew;
    prev_val = vnew;
    res.iterations = it + 1;
    res.pg_norm = pg;
    if (pg < opt.pg_tol) {
      res.converged = true;
      break;
    }
  }
  res.profile = AdmissibleFn::from_slopes(best);
  res.value = functional_value(res.profile, J);
  return res;
}

RiemannCheck riemann_check(const HexDims& d, int k, const LinePositions& p1,
                           const LinePositions& p2) {
  if (p1.k != k || p2.k != k) throw validation_error("positions must live on line k");
  validate_line_positions(d, p1);
  validate_line_positions(d, p2);
  const int n = line_slot_count(d, k);
  const double rho_l = std::fabs(d.a - k) / (double)n;
  const double rho_r = std::fabs(d.c - k) / (double)n;
  const JProfile J(rho_l, rho_r);
  const AdmissibleFn A1 = AdmissibleFn::from_positions(n, p1.positions);
  const AdmissibleFn A2 = AdmissibleFn::from_positions(n, p2.positions);
  const ExactInt c1 = line_count(d, p1);
  const ExactInt c2 = line_count(d, p2);
  if (c1 == 0 || c2 == 0) throw validation_error("line count vanished");
  RiemannCheck out;
  out.lhs = (log_of(c1) - log_of(c2)) / ((double)n * n);
  out.rhs = functional_value(A1, J) - functional_value(A2, J);
  out.gap = std::fabs(out.lhs - out.rhs);
  return out;
}

}  // namespace hextile
