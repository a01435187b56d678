#include "heights.hpp"

namespace hextile {

int boundary_left_height(const HexDims& d, int k) {
  return k <= d.a ? d.c + k : 2 * d.a + d.c - k;
}

int boundary_right_height(const HexDims& d, int k) {
  return k <= d.c ? d.b + d.c - k : d.b - d.c + k;
}

HeightField heights_from_tiling(const LozengeTiling& t) {
  t.validate();
  HeightField f{t.dims, {}};
  f.h.resize(t.dims.lines() + 1);
  for (int k = 0; k <= t.dims.lines(); k++) f.h[k] = line_height_profile(t, k);
  std::string why;
  if (!heights_valid(f, &why)) throw std::logic_error("height field inconsistent: " + why);
  return f;
}

LozengeTiling tiling_from_heights(const HeightField& f) {
  std::string why;
  if (!heights_valid(f, &why)) throw validation_error("invalid height field: " + why);
  std::vector<std::vector<int>> verts(f.dims.lines() + 1);
  for (int k = 0; k <= f.dims.lines(); k++)
    for (size_t i = 1; i < f.h[k].size(); i++)
      if (f.h[k][i] - f.h[k][i - 1] == -2) verts[k].push_back((int)i);
  return LozengeTiling(f.dims, std::move(verts));
}

bool heights_valid(const HeightField& f, std::string* why) {
  const HexDims& d = f.dims;
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if ((int)f.h.size() != d.lines() + 1) return fail("wrong number of rows");
  for (int k = 0; k <= d.lines(); k++) {
    const int n = line_slot_count(d, k);
    if ((int)f.h[k].size() != n + 1)
      return fail("row " + std::to_string(k) + " has wrong length");
    if (f.h[k][0] != boundary_left_height(d, k) || f.h[k][n] != boundary_right_height(d, k))
      return fail("boundary profile violated on row " + std::to_string(k));
    for (int i = 1; i <= n; i++) {
      const int dd = f.h[k][i] - f.h[k][i - 1];
      if (dd != 1 && dd != -2)
        return fail("bad rightward step at (" + std::to_string(k) + "," + std::to_string(i) + ")");
    }
  }
  for (int k = 0; k < d.lines(); k++) {
    const int n = line_slot_count(d, k);
    const int nn = line_slot_count(d, k + 1);
    const int off = row_shift(d, k);
    for (int i = 0; i <= n; i++) {
      const int jr = i + 1 - off;  // down-right neighbor
      if (jr >= 0 && jr <= nn) {
        const int dd = f.h[k + 1][jr] - f.h[k][i];
        if (dd != -1 && dd != 2)
          return fail("bad down-right step at (" + std::to_string(k) + "," + std::to_string(i) + ")");
      }
      const int jl = i - off;  // down-left neighbor
      if (jl >= 0 && jl <= nn) {
        const int dd = f.h[k + 1][jl] - f.h[k][i];
        if (dd != 1 && dd != -2)
          return fail("bad down-left step at (" + std::to_string(k) + "," + std::to_string(i) + ")");
      }
    }
  }
  if (why) why->clear();
  return true;
}

HeightField min_heights(const HexDims& d) {
  return heights_from_tiling(tiling_from_partition(PlanePartition::zero(d)));
}

HeightField max_heights(const HexDims& d) {
  return heights_from_tiling(tiling_from_partition(PlanePartition::full(d)));
}

OrientationCounts orientation_counts(const LozengeTiling& t) {
  const HeightField f = heights_from_tiling(t);
  const HexDims& d = t.dims;
  OrientationCounts oc;
  for (int k = 0; k <= d.lines(); k++)
    for (size_t i = 1; i < f.h[k].size(); i++)
      if (f.h[k][i] - f.h[k][i - 1] == -2) oc.vertical++;
  for (int k = 0; k < d.lines(); k++) {
    const int n = line_slot_count(d, k);
    const int nn = line_slot_count(d, k + 1);
    const int off = row_shift(d, k);
    for (int i = 0; i <= n; i++) {
      const int jr = i + 1 - off;
      if (jr >= 0 && jr <= nn && f.h[k + 1][jr] - f.h[k][i] == 2) oc.right++;
      const int jl = i - off;
      if (jl >= 0 && jl <= nn && f.h[k + 1][jl] - f.h[k][i] == -2) oc.left++;
    }
  }
  return oc;
}

}  // namespace hextile
