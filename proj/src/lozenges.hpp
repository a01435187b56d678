#pragma once
// Reconstruction of all three lozenge orientations of a tiling from its
// vertical-lozenge positions, plus the frozen ("arctic") region: lozenges
// connected to the hexagon boundary through shared edges between lozenges of
// equal orientation.

#include <array>
#include <vector>

#include "heights.hpp"

namespace hextile {

enum class Orientation { Vertical, Left, Right };

// A lozenge is identified by the lattice edge that forms its short diagonal:
//   Vertical: (k, i-1)-(k, i) with i the hexagonal position (rightward step)
//   Left:     (k, i)-(k+1, i-shift)   (down-left step, faces normal to x)
//   Right:    (k, i)-(k+1, i+1-shift) (down-right step, faces normal to z)
struct Lozenge {
  Orientation o;
  int k, i;
  // corner vertices (k, i) in cyclic order
  std::array<std::pair<int, int>, 4> corners;
};

struct LozengeSet {
  HexDims dims;
  std::vector<Lozenge> lozenges;
};

LozengeSet lozenges_of(const LozengeTiling& t);

// mask[j] == 1 iff lozenges[j] belongs to the arctic region of t.
std::vector<char> arctic_region_mask(const LozengeTiling& t, const LozengeSet& ls);
std::vector<char> arctic_region_mask(const LozengeTiling& t);

}  // namespace hextile
