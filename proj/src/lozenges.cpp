#include "lozenges.hpp"

#include <cstdint>
#include <deque>
#include <unordered_map>

namespace hextile {

namespace {

// flat vertex ids for edge keys
struct VertexIndex {
  std::vector<int> offset;
  explicit VertexIndex(const HexDims& d) {
    offset.resize(d.lines() + 2, 0);
    for (int k = 0; k <= d.lines(); k++)
      offset[k + 1] = offset[k] + line_slot_count(d, k) + 1;
  }
  std::int64_t id(std::pair<int, int> v) const { return offset[v.first] + v.second; }
  std::int64_t edge_key(std::pair<int, int> u, std::pair<int, int> v) const {
    std::int64_t a = id(u), b = id(v);
    if (a > b) std::swap(a, b);
    return a * (std::int64_t)1e9 + b;
  }
};

}  // namespace

LozengeSet lozenges_of(const LozengeTiling& t) {
  const HeightField f = heights_from_tiling(t);
  const HexDims& d = t.dims;
  LozengeSet ls{d, {}};
  for (int k = 0; k <= d.lines(); k++) {
    const int off_up = k > 0 ? row_shift(d, k - 1) : 0;
    const int off_dn = k < d.lines() ? row_shift(d, k) : 0;
    for (size_t i = 1; i < f.h[k].size(); i++)
      if (f.h[k][i] - f.h[k][i - 1] == -2) {
        Lozenge z;
        z.o = Orientation::Vertical;
        z.k = k;
        z.i = (int)i;
        z.corners = {std::pair{k, (int)i - 1},
                     std::pair{k - 1, (int)i - 1 + off_up},
                     std::pair{k, (int)i},
                     std::pair{k + 1, (int)i - off_dn}};
        ls.lozenges.push_back(z);
      }
  }
  for (int k = 0; k < d.lines(); k++) {
    const int n = line_slot_count(d, k);
    const int nn = line_slot_count(d, k + 1);
    const int off = row_shift(d, k);
    for (int i = 0; i <= n; i++) {
      const int jl = i - off;
      if (jl >= 0 && jl <= nn && f.h[k + 1][jl] - f.h[k][i] == -2) {
        Lozenge z;
        z.o = Orientation::Left;
        z.k = k;
        z.i = i;
        z.corners = {std::pair{k, i}, std::pair{k + 1, jl + 1}, std::pair{k + 1, jl},
                     std::pair{k, i - 1}};
        ls.lozenges.push_back(z);
      }
      const int jr = i + 1 - off;
      if (jr >= 0 && jr <= nn && f.h[k + 1][jr] - f.h[k][i] == 2) {
        Lozenge z;
        z.o = Orientation::Right;
        z.k = k;
        z.i = i;
        z.corners = {std::pair{k, i}, std::pair{k, i + 1}, std::pair{k + 1, jr},
                     std::pair{k + 1, jr - 1}};
        ls.lozenges.push_back(z);
      }
    }
  }
  return ls;
}

std::vector<char> arctic_region_mask(const LozengeTiling& t, const LozengeSet& ls) {
  const VertexIndex vi(t.dims);
  // side edge -> lozenges using it (1 = hexagon boundary edge, 2 = interior)
  std::unordered_map<std::int64_t, std::pair<int, int>> uses;
  uses.reserve(ls.lozenges.size() * 4);
  for (int j = 0; j < (int)ls.lozenges.size(); j++) {
    const auto& z = ls.lozenges[j];
    for (int e = 0; e < 4; e++) {
      const auto key = vi.edge_key(z.corners[e], z.corners[(e + 1) % 4]);
      auto it = uses.find(key);
      if (it == uses.end())
        uses.emplace(key, std::pair{j, -1});
      else
        it->second.second = j;
    }
  }
  std::vector<char> mask(ls.lozenges.size(), 0);
  std::deque<int> queue;
  for (const auto& [key, pr] : uses)
    if (pr.second < 0 && !mask[pr.first]) {
      mask[pr.first] = 1;
      queue.push_back(pr.first);
    }
  // grow through shared edges between equal orientations
  std::unordered_map<std::int64_t, std::pair<int, int>>& adj = uses;
  while (!queue.empty()) {
    const int j = queue.front();
    queue.pop_front();
    const auto& z = ls.lozenges[j];
    for (int e = 0; e < 4; e++) {
      const auto key = vi.edge_key(z.corners[e], z.corners[(e + 1) % 4]);
      const auto& pr = adj[key];
      const int other = pr.first == j ? pr.second : pr.first;
      if (other >= 0 && !mask[other] && ls.lozenges[other].o == z.o) {
        mask[other] = 1;
        queue.push_back(other);
      }
    }
  }
  return mask;
}

std::vector<char> arctic_region_mask(const LozengeTiling& t) {
  return arctic_region_mask(t, lozenges_of(t));
}

}  // namespace hextile
