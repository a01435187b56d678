#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "sampler.hpp"

using namespace hextile;

TEST_CASE("hex dims validation") {
  CHECK_THROWS_AS(HexDims(0, 1, 1), validation_error);
  CHECK_THROWS_AS(HexDims(1, -2, 1), validation_error);
  CHECK(HexDims(2, 3, 4).lozenges() == 2 * 3 + 3 * 4 + 2 * 4);
}

TEST_CASE("macmahon counts match brute-force plane partition enumeration") {
  CHECK(macmahon_count(HexDims(1, 1, 1)) == 2);
  CHECK(macmahon_count(HexDims(2, 2, 2)) == 20);
  CHECK(macmahon_count(HexDims(3, 3, 3)) == 980);
  for (int a = 1; a <= 3; a++)
    for (int b = 1; b <= 3; b++)
      for (int c = 1; c <= 3; c++) {
        const HexDims d(a, b, c);
        CHECK(macmahon_count(d) == (unsigned long)oracles::count_plane_partitions(d));
      }
}

TEST_CASE("macmahon is symmetric in the box sides") {
  const int s[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  const ExactInt v = macmahon_count(HexDims(1, 2, 3));
  for (const auto& p : s) CHECK(macmahon_count(HexDims(p[0], p[1], p[2])) == v);
  CHECK(macmahon_count(HexDims(4, 2, 3)) == macmahon_count(HexDims(3, 4, 2)));
}

TEST_CASE("v_count basics") {
  CHECK(v_count(TopRow({1, 2, 3, 4, 5})) == 1);
  CHECK(v_count(TopRow({1, 2, 5, 6})) == 20);
  CHECK(v_count(TopRow({1, 3, 5})) == 8);
  CHECK(v_count(TopRow({1, 3})) == 2);
  CHECK_THROWS_AS(TopRow({2, 2}), validation_error);
  CHECK_THROWS_AS(TopRow({3, 1}), validation_error);
  CHECK_THROWS_AS(TopRow({}), validation_error);
}

TEST_CASE("v_count of the hexagon top row equals the box count") {
  for (int a = 1; a <= 4; a++)
    for (int b = 1; b <= 4; b++)
      for (int c = 1; c <= 4; c++) {
        std::vector<long long> top;
        for (int i = 1; i <= a; i++) top.push_back(i);
        for (int i = 1; i <= c; i++) top.push_back(a + b + i);
        CHECK(v_count(TopRow(top)) == macmahon_count(HexDims(a, b, c)));
      }
}

TEST_CASE("v_count equals exhaustive pattern enumeration on random rows") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 50; trial++) {
    const int n = 1 + (int)(rng() % 5);
    std::vector<long long> row;
    std::vector<int> pool{1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::shuffle(pool.begin(), pool.end(), rng);
    row.assign(pool.begin(), pool.begin() + n);
    std::sort(row.begin(), row.end());
    CHECK(v_count(TopRow(row)) ==
          (unsigned long)gelfand_enumerate_count(row, 1ull << 32));
  }
}

TEST_CASE("gelfand enumeration basics") {
  CHECK(gelfand_enumerate_count({5}, 10) == 1);
  std::vector<std::vector<long long>> second_rows;
  gelfand_enumerate({1, 3}, 10, [&](const GelfandPattern& p) {
    second_rows.push_back(p.rows[1]);
  });
  CHECK(second_rows == std::vector<std::vector<long long>>{{1}, {2}});
  CHECK_THROWS_AS(gelfand_enumerate_count({1, 2, 5, 6}, 3), cap_exceeded_error);
}

TEST_CASE("line slot and vertical counts") {
  const HexDims d(2, 3, 4);
  CHECK(line_vertical_count(d, 0) == 0);
  CHECK(line_vertical_count(d, 1) == 1);
  CHECK(line_vertical_count(d, 2) == 2);
  CHECK(line_vertical_count(d, 3) == 2);
  CHECK(line_vertical_count(d, 5) == 1);
  CHECK(line_vertical_count(d, 6) == 0);
  for (int k = 0; k <= 6; k++)
    CHECK(line_slot_count(d, k) == 3 + line_vertical_count(d, k));
  CHECK_THROWS_AS(line_vertical_count(d, 7), validation_error);
}

TEST_CASE("line_count printed examples") {
  const HexDims d(2, 2, 2);
  CHECK(line_count(d, {1, {1}}) == 6);
  CHECK(line_count(d, {1, {2}}) == 8);
  CHECK(line_count(d, {1, {3}}) == 6);
  CHECK_THROWS_AS(line_count(d, {1, {0}}), validation_error);
  CHECK_THROWS_AS(line_count(d, {1, {1, 2}}), validation_error);
  CHECK_THROWS_AS(line_count(d, {2, {2, 2}}), validation_error);
}

TEST_CASE("line counts match direct tiling enumeration") {
  for (const HexDims d : {HexDims(2, 2, 2), HexDims(1, 2, 3), HexDims(3, 1, 2)}) {
    for (int k = 0; k <= d.lines(); k++) {
      std::map<std::vector<int>, long long> brute;
      enumerate_all_tilings(d, 1 << 20, [&](const LozengeTiling& t) {
        brute[t.verticals[k]]++;
      });
      enumerate_line_positions(d, k, [&](const LinePositions& lp) {
        const auto it = brute.find(lp.positions);
        const long long expect = it == brute.end() ? 0 : it->second;
        CHECK(line_count(d, lp) == (unsigned long)expect);
        return true;
      });
    }
  }
}

TEST_CASE("line counts sum to the total for all small boxes") {
  for (int a = 1; a <= 3; a++)
    for (int b = 1; b <= 3; b++)
      for (int c = 1; c <= 3; c++) {
        const HexDims d(a, b, c);
        const ExactInt total = macmahon_count(d);
        for (int k = 0; k <= d.lines(); k++) {
          ExactInt sum = 0;
          enumerate_line_positions(d, k, [&](const LinePositions& lp) {
            sum += line_count(d, lp);
            return true;
          });
          CHECK(sum == total);
        }
      }
}

TEST_CASE("line_count respects the half-turn symmetry") {
  for (const HexDims d : {HexDims(2, 3, 4), HexDims(3, 2, 1), HexDims(4, 1, 2)}) {
    for (int k = 0; k <= d.lines(); k++) {
      enumerate_line_positions(d, k, [&](const LinePositions& lp) {
        const LinePositions m{d.lines() - k, mirror_positions(d, k, lp.positions)};
        CHECK(line_count(d, lp) == line_count(d, m));
        return true;
      });
    }
  }
}

TEST_CASE("enumerate_line_positions is the lexicographic subset stream") {
  const HexDims d(2, 2, 2);
  std::vector<std::vector<int>> got;
  enumerate_line_positions(d, 1, [&](const LinePositions& lp) {
    got.push_back(lp.positions);
    return true;
  });
  CHECK(got == std::vector<std::vector<int>>{{1}, {2}, {3}});
  got.clear();
  enumerate_line_positions(d, 2, [&](const LinePositions& lp) {
    got.push_back(lp.positions);
    return true;
  });
  CHECK(got.size() == 6);
  CHECK(got.front() == std::vector<int>{1, 2});
  CHECK(got.back() == std::vector<int>{3, 4});
  got.clear();
  enumerate_line_positions(HexDims(1, 1, 1), 0, [&](const LinePositions& lp) {
    got.push_back(lp.positions);
    return true;
  });
  CHECK(got == std::vector<std::vector<int>>{{}});
}

TEST_CASE("line distribution") {
  const HexDims d(2, 2, 2);
  const auto dist = line_distribution(d, 1);
  REQUIRE(dist.size() == 3);
  CHECK(dist[0].second == ExactRat(3, 10));
  CHECK(dist[1].second == ExactRat(2, 5));
  CHECK(dist[2].second == ExactRat(3, 10));
  ExactRat sum = 0;
  for (const auto& [lp, p] : dist) sum += p;
  CHECK(sum == 1);

  const auto trivial = line_distribution(d, 0);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].second == 1);

  const auto mirror = line_distribution(d, 3);
  REQUIRE(mirror.size() == 3);
  for (int i = 0; i < 3; i++) CHECK(mirror[i].second == dist[2 - i].second);
}

TEST_CASE("exact value formatting") {
  CHECK(to_string(macmahon_count(HexDims(3, 3, 3))) == "980");
  ExactRat q(6, 4);
  q.canonicalize();
  CHECK(to_string(q) == "3/2");
  CHECK(log_of(macmahon_count(HexDims(2, 2, 2))) == doctest::Approx(std::log(20.0)));
}
