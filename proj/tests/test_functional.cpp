#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"

using namespace hextile;

namespace {

PiecewiseLinear random_pwl(std::mt19937_64& rng, int segments, bool zero_ends) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::uniform_real_distribution<double> v(-1.0, 1.0);
  std::vector<double> xs{0.0}, ys{0.0};
  for (int i = 0; i < segments; i++) xs.push_back(xs.back() + u(rng));
  for (int i = 0; i < segments; i++) ys.push_back(zero_ends && i + 1 == segments ? 0.0 : v(rng));
  return PiecewiseLinear(xs, ys);
}

AdmissibleFn random_admissible(std::mt19937_64& rng, int n, double lambda) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> s(n);
  for (double& v : s) v = u(rng);
  // shift-and-clip until the mean is lambda
  double lo = -1, hi = 1;
  for (int it = 0; it < 100; it++) {
    const double mid = 0.5 * (lo + hi);
    double total = 0;
    for (double v : s) total += std::clamp(v + mid, 0.0, 1.0);
    (total < lambda * n ? lo : hi) = mid;
  }
  for (double& v : s) v = std::clamp(v + 0.5 * (lo + hi), 0.0, 1.0);
  return AdmissibleFn::from_slopes(s);
}

}  // namespace

TEST_CASE("piecewise linear plumbing") {
  const PiecewiseLinear f({0.0, 1.0, 3.0}, {0.0, 2.0, 1.0});
  CHECK(f.value(-5) == 0.0);
  CHECK(f.value(0.5) == doctest::Approx(1.0));
  CHECK(f.value(2.0) == doctest::Approx(1.5));
  CHECK(f.value(7.0) == 1.0);
  CHECK_THROWS_AS(PiecewiseLinear({1.0, 1.0}, {0.0, 0.0}), validation_error);
}

TEST_CASE("inner product reference values") {
  const PiecewiseLinear ramp({0.0, 1.0}, {0.0, 1.0});
  CHECK(inner_product(ramp, ramp) == doctest::Approx(-1.5));
  // far-apart unit ramps interact like log(distance)
  for (double dist : {20.0, 80.0, 400.0}) {
    const PiecewiseLinear far({dist, dist + 1}, {0.0, 1.0});
    CHECK(inner_product(ramp, far) ==
          doctest::Approx(std::log(dist)).epsilon(0.01));
  }
}

TEST_CASE("inner product matches the quadrature oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 6; trial++) {
    const PiecewiseLinear f = random_pwl(rng, 3, false);
    const PiecewiseLinear g = random_pwl(rng, 4, false);
    const double closed = inner_product(f, g);
    const double quad = oracles::quad_inner_product(f, g, 1e-9);
    CHECK(closed == doctest::Approx(quad).epsilon(1e-8));
  }
}

TEST_CASE("inner product is symmetric and bilinear") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; trial++) {
    const PiecewiseLinear f = random_pwl(rng, 3, false);
    const PiecewiseLinear g = random_pwl(rng, 3, false);
    CHECK(inner_product(f, g) == doctest::Approx(inner_product(g, f)).epsilon(1e-12));
  }
  // bilinearity through scaled copies
  const PiecewiseLinear f({0.0, 0.7, 2.0}, {0.0, 0.9, 0.2});
  const PiecewiseLinear g({0.3, 1.1, 1.9}, {0.0, -0.4, 0.8});
  PiecewiseLinear f2 = f;
  for (double& y : f2.ys) y *= 3.5;
  CHECK(inner_product(f2, g) == doctest::Approx(3.5 * inner_product(f, g)));
}

TEST_CASE("the form is negative definite on compactly supported functions") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; trial++) {
    const PiecewiseLinear f = random_pwl(rng, 2 + (int)(rng() % 4), true);
    const double q = inner_product(f, f);
    CHECK(q <= 1e-12);
    double norm2 = 0;
    for (double y : f.ys) norm2 += y * y;
    if (norm2 > 0.05) CHECK(q < -1e-8);
  }
}

TEST_CASE("functional is concave (polarization) and strictly so off the diagonal") {
  std::mt19937_64 rng(17);
  const JProfile J(0.4, 0.7);
  for (int trial = 0; trial < 30; trial++) {
    const AdmissibleFn a1 = random_admissible(rng, 24, 0.4);
    const AdmissibleFn a2 = random_admissible(rng, 24, 0.4);
    std::vector<double> mid_slopes(24);
    for (int i = 0; i < 24; i++) {
      const double s1 = (a1.f.ys[i + 1] - a1.f.ys[i]) * 24;
      const double s2 = (a2.f.ys[i + 1] - a2.f.ys[i]) * 24;
      mid_slopes[i] = 0.5 * (s1 + s2);
    }
    const AdmissibleFn mid = AdmissibleFn::from_slopes(mid_slopes);
    const double lhs = 0.5 * (functional_value(a1, J) + functional_value(a2, J));
    const double rhs = functional_value(mid, J);
    CHECK(lhs <= rhs + 1e-10);
    double dist = 0;
    for (int i = 0; i < 24; i++)
      dist = std::max(dist, std::fabs(a1.f.ys[i + 1] - a2.f.ys[i + 1]));
    if (dist > 0.02) CHECK(lhs < rhs);
  }
}

TEST_CASE("admissible validation") {
  CHECK_THROWS_AS(AdmissibleFn(PiecewiseLinear({0.0, 1.0}, {0.1, 0.4})), validation_error);
  CHECK_THROWS_AS(AdmissibleFn(PiecewiseLinear({0.0, 1.0}, {0.0, 1.4})), validation_error);
  CHECK_THROWS_AS(AdmissibleFn(PiecewiseLinear({0.0, 1.0}, {0.0, -0.2})), validation_error);
  const AdmissibleFn ok = AdmissibleFn::from_positions(4, {2, 3});
  CHECK(ok.lambda() == doctest::Approx(0.5));
  CHECK(ok.value(0.25) == doctest::Approx(0.0));
  CHECK(ok.value(0.5) == doctest::Approx(0.25));
  CHECK(ok.value(0.75) == doctest::Approx(0.5));
}

TEST_CASE("maximize: degenerate lambda keeps the profile flat") {
  const MaximizeResult res = maximize(JProfile(0.3, 0.3), 0.0, 16);
  for (double y : res.profile.f.ys) CHECK(y == doctest::Approx(0.0));
}

TEST_CASE("maximize recovers the closed-form profile") {
  struct Case {
    double lambda, rl, rr;
  };
  for (const Case cs : {Case{0.5, 0.0, 0.0}, Case{0.4, 0.5, 0.25}}) {
    const LineParams lp(cs.lambda, cs.rl, cs.rr);
    const MaximizeResult res = maximize(JProfile(cs.rl, cs.rr), cs.lambda, 200);
    double sup = 0;
    for (int i = 0; i <= 200; i++) {
      const double t = i / 200.0;
      sup = std::max(sup, std::fabs(res.profile.value(t) - lp.cumulative(t)));
    }
    CHECK(sup <= 0.02);
    // exact admissibility of the output
    double mean = 0;
    for (int i = 0; i < 200; i++) {
      const double s = (res.profile.f.ys[i + 1] - res.profile.f.ys[i]) * 200;
      CHECK(s >= -1e-12);
      CHECK(s <= 1 + 1e-12);
      mean += s / 200;
    }
    CHECK(std::fabs(mean - cs.lambda) < 1e-12);
  }
}

TEST_CASE("maximize is stable under grid refinement") {
  const MaximizeResult r100 = maximize(JProfile(0.5, 0.25), 0.4, 100);
  const MaximizeResult r200 = maximize(JProfile(0.5, 0.25), 0.4, 200);
  double sup = 0;
  for (int i = 0; i <= 100; i++) {
    const double t = i / 100.0;
    sup = std::max(sup, std::fabs(r100.profile.value(t) - r200.profile.value(t)));
  }
  CHECK(sup < 0.02);
}

TEST_CASE("closed-form profile beats random admissible perturbations") {
  const double lambda = 0.4, rl = 0.5, rr = 0.25;
  const LineParams lp(lambda, rl, rr);
  const JProfile J(rl, rr);
  const int n = 60;
  std::vector<double> slopes(n);
  for (int i = 0; i < n; i++) slopes[i] = lp.density((i + 0.5) / n);
  // nudge the sampled profile onto the simplex mean
  double mean = 0;
  for (double s : slopes) mean += s / n;
  for (double& s : slopes) s = std::clamp(s + (lambda - mean), 0.0, 1.0);
  const AdmissibleFn closed = AdmissibleFn::from_slopes(slopes);
  const double vstar = functional_value(closed, J);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; trial++) {
    const AdmissibleFn rand = random_admissible(rng, n, lambda);
    CHECK(functional_value(rand, J) <= vstar + 1e-6);
  }
}

TEST_CASE("riemann check: identical and mirrored configurations cancel") {
  const HexDims d(8, 8, 8);
  const int k = 4;
  const LinePositions p{k, {5, 6, 7, 8}};
  const RiemannCheck same = riemann_check(d, k, p, p);
  CHECK(same.gap == 0.0);
  const LinePositions pm{k, mirror_positions(d, k, p.positions)};
  const RiemannCheck mir = riemann_check(d, k, p, pm);
  CHECK(std::fabs(mir.lhs) < 1e-10);
  CHECK(mir.gap < 1e-9);
}

TEST_CASE("riemann check: clustered vs spread configurations at n=8") {
  const HexDims d(8, 8, 8);
  const int k = 4;  // 12 slots, 4 vertical lozenges
  const LinePositions clustered{k, {5, 6, 7, 8}};
  const LinePositions spread{k, {2, 5, 8, 11}};
  const RiemannCheck rc = riemann_check(d, k, clustered, spread);
  CHECK(rc.lhs < 0);  // clustered is rarer
  CHECK(rc.gap < 0.2);
}
