#include "verify.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "functional.hpp"
#include "sampler.hpp"
#include "surface.hpp"

namespace hextile {

namespace {

struct Battery {
  std::vector<CheckResult> results;

  void check(const std::string& name, bool pass, const std::string& detail = "") {
    results.push_back({name, pass, detail});
  }

  template <typename Fn>
  void guarded(const std::string& name, Fn fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      check(name, false, std::string("exception: ") + e.what());
    }
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

}  // namespace

std::vector<CheckResult> run_verification(bool quick) {
  Battery bat;
  const int dmax = quick ? 2 : 3;

  bat.guarded("macmahon_reference_values", [&] {
    const bool ok = macmahon_count(HexDims(1, 1, 1)) == 2 &&
                    macmahon_count(HexDims(2, 2, 2)) == 20 &&
                    macmahon_count(HexDims(3, 3, 3)) == 980;
    bat.check("macmahon_reference_values", ok);
  });

  bat.guarded("enumeration_matches_product_formula", [&] {
    for (int a = 1; a <= dmax; a++)
      for (int b = 1; b <= dmax; b++)
        for (int c = 1; c <= dmax; c++) {
          std::uint64_t n = 0;
          enumerate_all_tilings(HexDims(a, b, c), 1 << 20,
                                [&](const LozengeTiling&) { n++; });
          if (macmahon_count(HexDims(a, b, c)) != (unsigned long)n) {
            bat.check("enumeration_matches_product_formula", false,
                      "mismatch at " + std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c));
            return;
          }
        }
    bat.check("enumeration_matches_product_formula", true);
  });

  bat.guarded("line_counts_sum_to_total", [&] {
    for (int a = 1; a <= dmax; a++)
      for (int b = 1; b <= dmax; b++)
        for (int c = 1; c <= dmax; c++) {
          const HexDims d(a, b, c);
          const ExactInt total = macmahon_count(d);
          for (int k = 0; k <= d.lines(); k++) {
            ExactInt sum = 0;
            enumerate_line_positions(d, k, [&](const LinePositions& lp) {
              sum += line_count(d, lp);
              return true;
            });
            if (sum != total) {
              bat.check("line_counts_sum_to_total", false,
                        "mismatch at k=" + std::to_string(k));
              return;
            }
          }
        }
    bat.check("line_counts_sum_to_total", true);
  });

  bat.guarded("line_count_rotation_symmetry", [&] {
    const HexDims d(2, 3, 4);
    for (int k = 0; k <= d.lines(); k++) {
      bool ok = true;
      enumerate_line_positions(d, k, [&](const LinePositions& lp) {
        const LinePositions m{d.lines() - k, mirror_positions(d, k, lp.positions)};
        ok = ok && line_count(d, lp) == line_count(d, m);
        return ok;
      });
      if (!ok) {
        bat.check("line_count_rotation_symmetry", false, "k=" + std::to_string(k));
        return;
      }
    }
    bat.check("line_count_rotation_symmetry", true);
  });

  bat.guarded("pattern_count_matches_v_product", [&] {
    const std::vector<std::vector<long long>> rows = {
        {1, 2, 5, 6}, {1, 3, 5}, {2, 4, 8, 9}, {1, 4}, {3}};
    for (const auto& row : rows) {
      const std::uint64_t n = gelfand_enumerate_count(row, 1 << 22);
      if (v_count(TopRow(row)) != (unsigned long)n) {
        bat.check("pattern_count_matches_v_product", false);
        return;
      }
    }
    bat.check("pattern_count_matches_v_product", true);
  });

  bat.guarded("round_trips_on_random_tilings", [&] {
    const int samples = quick ? 20 : 100;
    for (int i = 0; i < samples; i++) {
      const std::uint64_t u = mix64(1000 + i);
      const HexDims d(1 + (int)(u % 4), 1 + (int)((u >> 8) % 4), 1 + (int)((u >> 16) % 4));
      const LozengeTiling t = cftp_sample(d, 77000 + i);
      const PlanePartition pp = partition_from_tiling(t);
      const GelfandPattern g = pattern_from_tiling(t);
      const HeightField f = heights_from_tiling(t);
      const OrientationCounts oc = orientation_counts(t);
      const bool ok = tiling_from_partition(pp) == t &&
                      tiling_from_pattern(g, d) == t && tiling_from_heights(f) == t &&
                      oc.vertical == (long long)d.a * d.c &&
                      oc.left == (long long)d.b * d.c && oc.right == (long long)d.a * d.b;
      if (!ok) {
        bat.check("round_trips_on_random_tilings", false, "sample " + std::to_string(i));
        return;
      }
    }
    bat.check("round_trips_on_random_tilings", true);
  });

  bat.guarded("uniformity_smallest_hexagon", [&] {
    const int n = quick ? 2000 : 20000;
    const HexDims d(1, 1, 1);
    int ups = 0;
    for (int i = 0; i < n; i++) {
      const LozengeTiling t = cftp_sample(d, mix64(31337 + i));
      ups += t.verticals[1][0] == 2;
    }
    const double f = (double)ups / n;
    bat.check("uniformity_smallest_hexagon", std::fabs(f - 0.5) < 0.04, fmt(f));
  });

  bat.guarded("density_closed_forms_agree", [&] {
    double worst = 0;
    for (const ShapeParams& sp : {ShapeParams(1, 1, 1), ShapeParams(2, 1, 1.5)}) {
      const auto pts = consistency_sample_points(sp, quick ? 100 : 400, 0.05 * sp.total());
      worst = std::max(worst, consistency_density_vs_line(sp, pts));
    }
    bat.check("density_closed_forms_agree", worst < 1e-8, fmt(worst));
  });

  bat.guarded("line_profile_normalization", [&] {
    double worst = 0;
    for (double lambda : {0.3, 0.5, 0.7})
      for (double rl : {0.0, 0.4})
        for (double rr : {0.0, 0.9}) {
          const LineParams lp(lambda, rl, rr);
          worst = std::max(worst, std::fabs(lp.cumulative(1.0) - lambda));
          const double rel = std::fabs(lp.discriminant() - lp.discriminant_product()) /
                             std::max(1.0, lp.discriminant_product());
          worst = std::max(worst, rel);
        }
    bat.check("line_profile_normalization", worst < 1e-7, fmt(worst));
  });

  bat.guarded("mean_density_identity", [&] {
    const ShapeParams sp(1, 1, 1);
    const double avg = average_density(sp);
    bat.check("mean_density_identity", std::fabs(avg - 1.0 / 3) < 1e-4, fmt(avg));
  });

  bat.guarded("bilinear_form_reference_value", [&] {
    const PiecewiseLinear ramp({0.0, 1.0}, {0.0, 1.0});
    const double v = inner_product(ramp, ramp);
    bat.check("bilinear_form_reference_value", std::fabs(v + 1.5) < 1e-12, fmt(v));
  });

  bat.guarded("riemann_mirror_pair_cancels", [&] {
    const HexDims d(6, 6, 6);
    const int k = 3;
    const LinePositions p1{k, {2, 4, 6}};
    const LinePositions p2{k, mirror_positions(d, k, p1.positions)};
    const RiemannCheck rc = riemann_check(d, k, p1, p2);
    bat.check("riemann_mirror_pair_cancels", std::fabs(rc.lhs) < 1e-10 && rc.gap < 1e-9,
              fmt(rc.gap));
  });

  return bat.results;
}

}  // namespace hextile
