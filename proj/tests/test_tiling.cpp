#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "sampler.hpp"
#include "tiling_io.hpp"

using namespace hextile;

namespace {

PlanePartition figure_partition() {
  // pi_00 = pi_01 = pi_10 = 1, pi_11 = 0 in the 2x2x2 box
  return PlanePartition(HexDims(2, 2, 2), {{1, 1}, {1, 0}});
}

}  // namespace

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(PlanePartition(HexDims(2, 2, 2), {{1, 2}, {0, 0}}), validation_error);
  CHECK_THROWS_AS(PlanePartition(HexDims(2, 2, 2), {{1, 1}, {2, 0}}), validation_error);
  CHECK_THROWS_AS(PlanePartition(HexDims(2, 2, 2), {{3, 0}, {0, 0}}), validation_error);
  CHECK_THROWS_AS(PlanePartition(HexDims(2, 2, 2), {{1, 1}}), validation_error);
}

TEST_CASE("volume") {
  CHECK(volume(PlanePartition::zero(HexDims(2, 2, 2))) == 0);
  CHECK(volume(figure_partition()) == 3);
  CHECK(volume(PlanePartition::full(HexDims(2, 2, 2))) == 8);
}

TEST_CASE("the worked 2,2,2 example maps to its printed Gelfand pattern") {
  const LozengeTiling t = tiling_from_partition(figure_partition());
  CHECK(t.verticals[0].empty());
  CHECK(t.verticals[1] == std::vector<int>{1});
  CHECK(t.verticals[2] == std::vector<int>{1, 4});
  CHECK(t.verticals[3] == std::vector<int>{2});
  CHECK(t.verticals[4].empty());

  const GelfandPattern g = pattern_from_tiling(t);
  CHECK(g.rows[0] == std::vector<long long>{1, 2, 5, 6});
  CHECK(g.rows[1] == std::vector<long long>{1, 2, 5});
  CHECK(g.rows[2] == std::vector<long long>{1, 4});
  CHECK(g.rows[3] == std::vector<long long>{2});

  CHECK(tiling_from_pattern(g, t.dims) == t);
  CHECK(partition_from_tiling(t) == figure_partition());
}

TEST_CASE("empty and full partitions hug the walls") {
  const HexDims d(2, 2, 2);
  const LozengeTiling empty = tiling_from_partition(PlanePartition::zero(d));
  CHECK(empty.verticals[1] == std::vector<int>{1});
  CHECK(empty.verticals[2] == std::vector<int>{1, 2});
  CHECK(empty.verticals[3] == std::vector<int>{1});
  const GelfandPattern g = pattern_from_tiling(empty);
  CHECK(g.rows[2] == std::vector<long long>{1, 2});
  CHECK(g.rows[3] == std::vector<long long>{1});

  const LozengeTiling full = tiling_from_partition(PlanePartition::full(d));
  for (int k = 0; k <= d.lines(); k++) {
    CHECK(full.verticals[k] == mirror_positions(d, k, empty.verticals[k]));
  }
}

TEST_CASE("round trips over every tiling of small boxes") {
  for (const HexDims d : {HexDims(2, 2, 2), HexDims(1, 2, 3), HexDims(3, 2, 1)}) {
    long long n = 0;
    enumerate_all_tilings(d, 1 << 20, [&](const LozengeTiling& t) {
      n++;
      const PlanePartition pp = partition_from_tiling(t);
      CHECK(tiling_from_partition(pp) == t);
      const GelfandPattern g = pattern_from_tiling(t);
      CHECK(tiling_from_pattern(g, d) == t);
      const HeightField f = heights_from_tiling(t);
      CHECK(tiling_from_heights(f) == t);
    });
    CHECK(macmahon_count(d) == (unsigned long)n);
  }
}

TEST_CASE("partition enumeration and tiling enumeration agree") {
  const HexDims d(2, 3, 2);
  std::set<std::vector<std::vector<int>>> tilings;
  oracles::for_each_plane_partition(d, [&](const PlanePartition& pp) {
    tilings.insert(tiling_from_partition(pp).verticals);
  });
  long long n = 0;
  enumerate_all_tilings(d, 1 << 20, [&](const LozengeTiling& t) {
    n++;
    CHECK(tilings.count(t.verticals) == 1);
  });
  CHECK((long long)tilings.size() == n);
}

TEST_CASE("orientation counts are constant across all tilings") {
  for (const HexDims d : {HexDims(2, 2, 2), HexDims(1, 2, 3), HexDims(1, 1, 1)}) {
    enumerate_all_tilings(d, 1 << 20, [&](const LozengeTiling& t) {
      const OrientationCounts oc = orientation_counts(t);
      CHECK(oc.vertical == (long long)d.a * d.c);
      CHECK(oc.left == (long long)d.b * d.c);
      CHECK(oc.right == (long long)d.a * d.b);
    });
  }
}

TEST_CASE("height fields satisfy the edge rules and the boundary profile") {
  const HexDims d(1, 1, 1);
  const HeightField lo = min_heights(d);
  CHECK(lo.h[0] == std::vector<int>{1, 2});
  CHECK(lo.h[1] == std::vector<int>{2, 0, 1});
  CHECK(lo.h[2] == std::vector<int>{1, 2});
  const HeightField hi = max_heights(d);
  CHECK(hi.h[1] == std::vector<int>{2, 3, 1});

  for (const HexDims dd : {HexDims(2, 2, 2), HexDims(1, 3, 2)}) {
    const int bound = std::max({dd.a + dd.b, dd.b + dd.c, dd.a + dd.c});
    enumerate_all_tilings(dd, 1 << 20, [&](const LozengeTiling& t) {
      const HeightField f = heights_from_tiling(t);
      CHECK(heights_valid(f));
      int mn = 1 << 30, mx = -(1 << 30);
      for (const auto& row : f.h)
        for (int v : row) {
          mn = std::min(mn, v);
          mx = std::max(mx, v);
        }
      CHECK(mx - mn <= bound);
      // leftmost vertex of the hexagon carries a+c
      CHECK(f.h[dd.a][0] == dd.a + dd.c);
    });
  }
}

TEST_CASE("distinct height fields are in bijection with tilings") {
  const HexDims d(2, 2, 2);
  std::set<std::vector<std::vector<int>>> fields;
  enumerate_all_tilings(d, 1 << 20, [&](const LozengeTiling& t) {
    fields.insert(heights_from_tiling(t).h);
  });
  CHECK(fields.size() == 20);
}

TEST_CASE("line height profiles match the height field") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; trial++) {
    const HexDims d(1 + (int)(rng() % 3), 1 + (int)(rng() % 3), 1 + (int)(rng() % 3));
    const LozengeTiling t = cftp_sample(d, rng());
    const HeightField f = heights_from_tiling(t);
    for (int k = 0; k <= d.lines(); k++) CHECK(line_height_profile(t, k) == f.h[k]);
  }
  // k = 0 is the fixed top boundary
  const HexDims d(2, 3, 4);
  const LozengeTiling t = tiling_from_partition(PlanePartition::zero(d));
  const auto top = line_height_profile(t, 0);
  for (int i = 0; i <= line_slot_count(d, 0); i++) CHECK(top[i] == d.c + i);
  // minimal tiling: every line starts with its verticals flush left
  for (int k = 1; k < d.lines(); k++) {
    const auto prof = line_height_profile(t, k);
    const int l = line_vertical_count(d, k);
    for (int i = 1; i <= l; i++) CHECK(prof[i] == prof[i - 1] - 2);
  }
}

TEST_CASE("tiling json round trip and validation") {
  const LozengeTiling t = tiling_from_partition(figure_partition());
  const std::string j = tiling_to_json(t);
  CHECK(tiling_from_json(j) == t);
  CHECK(detect_kind(j) == ObjectKind::Tiling);

  const std::string pj = partition_to_json(figure_partition());
  CHECK(detect_kind(pj) == ObjectKind::Partition);
  CHECK(tiling_from_json(pj) == t);

  const std::string gj = pattern_to_json(pattern_from_tiling(t), t.dims);
  CHECK(detect_kind(gj) == ObjectKind::Pattern);
  CHECK(tiling_from_json(gj) == t);

  CHECK_THROWS_AS(
      tiling_from_json(R"({"a":2,"b":2,"c":2,"verticals":[[1],[1],[1,4],[2],[]]})"),
      validation_error);
  CHECK_THROWS_AS(tiling_from_json(R"({"a":2,"b":2,"c":2})"), validation_error);
}

TEST_CASE("svg render carries one polygon per lozenge, ac of them vertical") {
  const HexDims d(2, 3, 4);
  const LozengeTiling t = cftp_sample(d, 99);
  const std::string svg = tiling_to_svg(t);
  size_t polys = 0, verts = 0, pos = 0;
  while ((pos = svg.find("<polygon", pos)) != std::string::npos) {
    polys++;
    pos++;
  }
  pos = 0;
  while ((pos = svg.find("#b9b9b9", pos)) != std::string::npos) {
    verts++;
    pos++;
  }
  CHECK(polys == (size_t)d.lozenges());
  CHECK(verts == (size_t)(d.a * d.c));
}

TEST_CASE("ascii render has one strip per lozenge row") {
  const LozengeTiling t = tiling_from_partition(figure_partition());
  const std::string art = tiling_to_ascii(t);
  int rows = 0;
  for (char ch : art) rows += ch == '\n';
  CHECK(rows == t.dims.lines());
  int verticals = 0;
  for (char ch : art) verticals += ch == '|';
  CHECK(verticals == 2 * t.dims.a * t.dims.c);  // each vertical spans two strips
}

TEST_CASE("batch jsonl round trip") {
  const HexDims d(2, 2, 2);
  const SampleBatch b = sample_batch(d, 5, "cftp", 4242, 1);
  std::ostringstream os;
  write_batch_jsonl(os, b);
  std::istringstream is(os.str());
  const SampleBatch back = read_batch_jsonl(is);
  CHECK(back.tilings.size() == 5);
  CHECK(back.seed == 4242);
  CHECK(back.method == "cftp");
  for (int i = 0; i < 5; i++) CHECK(back.tilings[i] == b.tilings[i]);
}

TEST_CASE("arctic region: seeds, closure, and the frozen extremes") {
  const HexDims d(2, 2, 2);
  const LozengeTiling empty = tiling_from_partition(PlanePartition::zero(d));
  const LozengeSet ls = lozenges_of(empty);
  const auto mask = arctic_region_mask(empty, ls);
  for (char m : mask) CHECK(m == 1);  // wall-hugging tiling is entirely frozen

  enumerate_all_tilings(d, 64, [&](const LozengeTiling& t) {
    const LozengeSet set = lozenges_of(t);
    const auto m = arctic_region_mask(t, set);
    CHECK(m.size() == set.lozenges.size());
    const auto m2 = arctic_region_mask(t, set);
    CHECK(m == m2);
  });
}

TEST_CASE("lozenge reconstruction counts match the orientation identities") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; trial++) {
    const HexDims d(1 + (int)(rng() % 4), 1 + (int)(rng() % 4), 1 + (int)(rng() % 4));
    const LozengeTiling t = cftp_sample(d, rng());
    const LozengeSet ls = lozenges_of(t);
    long long nv = 0, nl = 0, nr = 0;
    for (const Lozenge& z : ls.lozenges) {
      if (z.o == Orientation::Vertical) nv++;
      if (z.o == Orientation::Left) nl++;
      if (z.o == Orientation::Right) nr++;
    }
    CHECK(nv == (long long)d.a * d.c);
    CHECK(nl == (long long)d.b * d.c);
    CHECK(nr == (long long)d.a * d.b);
  }
}
