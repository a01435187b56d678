#pragma once
// Data model and bijections: plane partitions <-> lozenge tilings <->
// semi-strict Gelfand patterns.  Height functions live in heights.hpp.
//
// Lattice conventions used throughout the project:
//   * Horizontal lattice lines are k = 0 (top edge of the hexagon) .. a+c
//     (bottom edge).  Line k holds min(k,a,c,a+c-k) bisected vertical
//     lozenges at hexagonal positions 1 .. b+min(k,a,c,a+c-k), counted from
//     the hexagon's left border.
//   * Vertex (k,i) sits on line k, i = 0 .. line_slot_count(k).  Its 2D
//     coordinates (lattice units, x rightward, y upward) are
//       x = -(c+k)/2 + max(0, k-a) + i,   y = (c-k) * sqrt(3)/2,
//     so the hexagon's top-left vertex is (-c/2, c*sqrt(3)/2).
//   * Trapezoidal positions prepend max(a-k,0) forced left entries and
//     append max(c-k,0) forced right entries to a line's hexagonal
//     positions; they are the coordinates Gelfand pattern rows are written
//     in and exist only inside the conversions in this file.
//   * In the solid-stack picture a vertical lozenge is a face of constant
//     box coordinate y; the face over stack cell (x, z) at depth
//     ystar = #{y : pi[x][y] > z} lands on line k = c - z + x at hexagonal
//     position ystar + (c - z) - max(0, k - a).

#include <vector>

#include "exact.hpp"
#include "gelfand.hpp"

namespace hextile {

// pi[x][y], 0 <= x < a, 0 <= y < b, values in [0, c], weakly decreasing in
// both indices.
struct PlanePartition {
  HexDims dims;
  std::vector<std::vector<int>> parts;

  PlanePartition(HexDims d, std::vector<std::vector<int>> p);
  static PlanePartition zero(const HexDims& d);
  static PlanePartition full(const HexDims& d);
  bool operator==(const PlanePartition& o) const {
    return dims == o.dims && parts == o.parts;
  }
};

long long volume(const PlanePartition& pp);

// A tiling stored as the sorted hexagonal positions of the vertical lozenges
// bisected by each line k = 0..a+c.  This determines the whole tiling; the
// other two lozenge orientations are reconstructed on demand (lozenges.hpp).
struct LozengeTiling {
  HexDims dims;
  std::vector<std::vector<int>> verticals;

  LozengeTiling(HexDims d, std::vector<std::vector<int>> v);
  void validate() const;
  bool operator==(const LozengeTiling& o) const {
    return dims == o.dims && verticals == o.verticals;
  }
  bool operator<(const LozengeTiling& o) const { return verticals < o.verticals; }
};

LozengeTiling tiling_from_partition(const PlanePartition& pp);
PlanePartition partition_from_tiling(const LozengeTiling& t);

GelfandPattern pattern_from_tiling(const LozengeTiling& t);
// p's top row must be 1..a, a+b+1..a+b+c for the given dims.
LozengeTiling tiling_from_pattern(const GelfandPattern& p, const HexDims& dims);

struct OrientationCounts {
  long long vertical = 0;  // box faces normal to y; always a*c
  long long left = 0;      // faces normal to x (major axis up-right); always b*c
  long long right = 0;     // faces normal to z (major axis down-right); always a*b
};
// Counted from the tiling itself, not from the identities.
OrientationCounts orientation_counts(const LozengeTiling& t);

// Heights along line k at vertices i = 0..slot_count: starting from the
// boundary value at the line's left endpoint, +1 per step, -2 when the step
// crosses a bisected vertical lozenge.
std::vector<int> line_height_profile(const LozengeTiling& t, int k);

// Forced left offsets shared by the conversions and by heights.hpp.
inline int left_aug(const HexDims& d, int k) { return std::max(d.a - k, 0); }
inline int right_aug(const HexDims& d, int k) { return std::max(d.c - k, 0); }
// Left border shift between consecutive lines: line k+1 starts half a unit
// left of line k while k < a, half a unit right afterwards.
inline int row_shift(const HexDims& d, int k) { return k < d.a ? 0 : 1; }

// Lattice 2D coordinates of vertex (k, i), in units of the lozenge side.
double vertex_x(const HexDims& d, int k, int i);
double vertex_y(const HexDims& d, int k);

// Normalized coordinates: origin at the hexagon center, lengths divided by
// sigma = (a+b+c)/3, so the rescaled sides (alpha, beta, gamma) sum to 3 and
// the 1,1,1 hexagon maps to the regular unit one.
struct NormalizedFrame {
  double sigma = 1, alpha = 1, beta = 1, gamma = 1;
  double cx = 0, cy = 0;  // hexagon center in lattice coordinates
  double nx(double X) const { return (X - cx) / sigma; }
  double ny(double Y) const { return (Y - cy) / sigma; }
};
NormalizedFrame frame_of(const HexDims& d);

}  // namespace hextile
