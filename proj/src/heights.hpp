#pragma once
// Thurston height functions on the triangular lattice of the a,b,c hexagon.
//
// h(v) is the 3D coordinate sum x+y+z of the surface point over vertex v, so
// the hexagon's leftmost vertex carries a+c and the box corner hidden from
// view carries 0.  Along an edge of the tiling the height changes by +1
// stepping right, -1 stepping up-right or down-right; across the short
// diagonal of a lozenge it changes by -2 / +2 instead.  Equivalently, for a
// step in direction dir the difference h(to)-h(from) takes one of exactly
// two values three apart:
//
//     right: {+1,-2}   down-right: {-1,+2}   down-left: {+1,-2}
//
// (and the reverses for leftward steps).  Valid height fields with the fixed
// boundary profile are in bijection with tilings.

#include <string>
#include <vector>

#include "tiling.hpp"

namespace hextile {

struct HeightField {
  HexDims dims;
  // h[k][i], k = 0..a+c, i = 0..line_slot_count(k)
  std::vector<std::vector<int>> h;

  bool operator==(const HeightField& o) const { return dims == o.dims && h == o.h; }
};

int boundary_left_height(const HexDims& d, int k);
int boundary_right_height(const HexDims& d, int k);

HeightField heights_from_tiling(const LozengeTiling& t);
LozengeTiling tiling_from_heights(const HeightField& f);

// Full check of the boundary profile and every edge rule; on failure *why
// (if given) receives a description.
bool heights_valid(const HeightField& f, std::string* why = nullptr);

// Pointwise-minimal / maximal height fields = empty / full plane partition.
HeightField min_heights(const HexDims& d);
HeightField max_heights(const HexDims& d);

}  // namespace hextile
