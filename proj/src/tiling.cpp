#include "tiling.hpp"

#include <algorithm>
#include <cmath>

namespace hextile {

PlanePartition::PlanePartition(HexDims d, std::vector<std::vector<int>> p)
    : dims(d), parts(std::move(p)) {
  if ((int)parts.size() != dims.a) throw validation_error("partition needs a rows");
  for (const auto& row : parts)
    if ((int)row.size() != dims.b) throw validation_error("partition rows need b entries");
  for (int x = 0; x < dims.a; x++)
    for (int y = 0; y < dims.b; y++) {
      const int v = parts[x][y];
      if (v < 0 || v > dims.c) throw validation_error("partition entry outside [0, c]");
      if (x + 1 < dims.a && parts[x + 1][y] > v)
        throw validation_error("partition must decrease weakly along columns");
      if (y + 1 < dims.b && parts[x][y + 1] > v)
        throw validation_error("partition must decrease weakly along rows");
    }
}

PlanePartition PlanePartition::zero(const HexDims& d) {
  return PlanePartition(d, std::vector<std::vector<int>>(d.a, std::vector<int>(d.b, 0)));
}

PlanePartition PlanePartition::full(const HexDims& d) {
  return PlanePartition(d, std::vector<std::vector<int>>(d.a, std::vector<int>(d.b, d.c)));
}

long long volume(const PlanePartition& pp) {
  long long s = 0;
  for (const auto& row : pp.parts)
    for (int v : row) s += v;
  return s;
}

LozengeTiling::LozengeTiling(HexDims d, std::vector<std::vector<int>> v)
    : dims(d), verticals(std::move(v)) {
  validate();
}

void LozengeTiling::validate() const {
  if ((int)verticals.size() != dims.lines() + 1)
    throw validation_error("tiling needs a+c+1 vertical-position rows");
  // sizes, ranges and interlacing are checked by the pattern conversion
  pattern_from_tiling(*this);
}

LozengeTiling tiling_from_partition(const PlanePartition& pp) {
  const int a = pp.dims.a, b = pp.dims.b, c = pp.dims.c;
  std::vector<std::vector<int>> verts(a + c + 1);
  for (int x = 0; x < a; x++)
    for (int z = 0; z < c; z++) {
      const int k = c - z + x;
      int ystar = 0;
      while (ystar < b && pp.parts[x][ystar] > z) ystar++;
      verts[k].push_back(ystar + (c - z) - std::max(0, k - a));
    }
  for (auto& row : verts) std::sort(row.begin(), row.end());
  return LozengeTiling(pp.dims, std::move(verts));
}

PlanePartition partition_from_tiling(const LozengeTiling& t) {
  const int a = t.dims.a, b = t.dims.b, c = t.dims.c;
  // ystar[x][z]: depth at which the stack over column x drops to level z
  std::vector<std::vector<int>> ystar(a, std::vector<int>(c, -1));
  for (int k = 1; k < a + c; k++) {
    const auto& pos = t.verticals[k];
    // positions sorted ascending correspond to stack cells in descending x
    const int xmax = std::min(a - 1, k - 1);
    for (size_t j = 0; j < pos.size(); j++) {
      const int x = xmax - (int)j;
      const int z = c - k + x;
      const int ys = pos[j] - (k - x) + std::max(0, k - a);
      if (ys < 0 || ys > b)
        throw validation_error("tiling does not come from a plane partition");
      ystar[x][z] = ys;
    }
  }
  std::vector<std::vector<int>> parts(a, std::vector<int>(b, 0));
  for (int x = 0; x < a; x++)
    for (int y = 0; y < b; y++) {
      int v = 0;
      while (v < c && ystar[x][v] > y) v++;
      parts[x][y] = v;
    }
  PlanePartition pp(t.dims, std::move(parts));
  if (!(tiling_from_partition(pp) == t))
    throw validation_error("tiling is not consistent with any plane partition");
  return pp;
}

GelfandPattern pattern_from_tiling(const LozengeTiling& t) {
  const int a = t.dims.a, b = t.dims.b, c = t.dims.c;
  GelfandPattern p;
  p.rows.resize(a + c);
  for (int k = 0; k < a + c; k++) {
    const int la = left_aug(t.dims, k), ra = right_aug(t.dims, k);
    const auto& hex = t.verticals[k];
    const int l = line_vertical_count(t.dims, k);
    const int n = line_slot_count(t.dims, k);
    if ((int)hex.size() != l)
      throw validation_error("line " + std::to_string(k) + " must carry " +
                             std::to_string(l) + " vertical lozenges");
    auto& row = p.rows[k];
    row.reserve(la + l + ra);
    for (int i = 1; i <= la; i++) row.push_back(i);
    for (int h : hex) {
      if (h < 1 || h > n) throw validation_error("vertical position out of range");
      row.push_back(h + la);
    }
    for (int i = 0; i < ra; i++) row.push_back(a + b + 1 + i);
  }
  if (!t.verticals[a + c].empty())
    throw validation_error("bottom edge cannot carry vertical lozenges");
  p.validate();
  return p;
}

LozengeTiling tiling_from_pattern(const GelfandPattern& p, const HexDims& dims) {
  p.validate();
  const int a = dims.a, b = dims.b, c = dims.c;
  if (p.top_size() != a + c)
    throw validation_error("pattern top row must have a+c entries");
  for (int i = 0; i < a; i++)
    if (p.rows[0][i] != i + 1)
      throw validation_error("pattern top row must start 1..a");
  for (int i = 0; i < c; i++)
    if (p.rows[0][a + i] != a + b + 1 + i)
      throw validation_error("pattern top row must end a+b+1..a+b+c");
  std::vector<std::vector<int>> verts(a + c + 1);
  for (int k = 0; k < a + c; k++) {
    const int la = left_aug(dims, k), ra = right_aug(dims, k);
    const auto& row = p.rows[k];
    for (int i = 0; i < la; i++)
      if (row[i] != i + 1) throw validation_error("forced left entries corrupted");
    for (int i = 0; i < ra; i++)
      if (row[row.size() - ra + i] != a + b + 1 + i)
        throw validation_error("forced right entries corrupted");
    for (size_t i = la; i < row.size() - ra; i++) verts[k].push_back((int)(row[i] - la));
  }
  return LozengeTiling(dims, std::move(verts));
}

std::vector<int> line_height_profile(const LozengeTiling& t, int k) {
  const int n = line_slot_count(t.dims, k);
  const int a = t.dims.a, c = t.dims.c;
  const int h_left = k <= a ? c + k : 2 * a + c - k;
  std::vector<int> h(n + 1);
  h[0] = h_left;
  size_t next = 0;
  const auto& pos = t.verticals[k];
  for (int i = 1; i <= n; i++) {
    const bool crossed = next < pos.size() && pos[next] == i;
    if (crossed) next++;
    h[i] = h[i - 1] + (crossed ? -2 : 1);
  }
  return h;
}

double vertex_x(const HexDims& d, int k, int i) {
  return -0.5 * (d.c + k) + std::max(0, k - d.a) + i;
}

double vertex_y(const HexDims& d, int k) { return (d.c - k) * (std::sqrt(3.0) / 2.0); }

NormalizedFrame frame_of(const HexDims& d) {
  NormalizedFrame f;
  f.sigma = (d.a + d.b + d.c) / 3.0;
  f.alpha = d.a / f.sigma;
  f.beta = d.b / f.sigma;
  f.gamma = d.c / f.sigma;
  f.cx = (2.0 * d.b - d.a - d.c) / 4.0;
  f.cy = (d.c - d.a) * (std::sqrt(3.0) / 4.0);
  return f;
}

}  // namespace hextile
