#pragma once
// Exact enumeration of boxed plane partitions / lozenge tilings of a,b,c
// hexagons: MacMahon's box product, the Gelfand top-row product V, and
// counts of tilings with a prescribed set of vertical lozenges on one
// horizontal line.  Everything here is exact integer/rational arithmetic.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hextile {

using ExactInt = mpz_class;
using ExactRat = mpq_class;

// Structurally invalid input (non-increasing rows, out-of-range positions,
// degenerate dimensions, malformed files).  CLI maps this to exit code 1.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration would exceed its configured cap.
class cap_exceeded_error : public std::runtime_error {
 public:
  explicit cap_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

// Side lengths of the a,b,c hexagon (equivalently the box for the plane
// partitions).  Horizontal sides have length b; the upper-left side has
// length a and the upper-right side has length c.
struct HexDims {
  int a = 1, b = 1, c = 1;
  HexDims(int a_, int b_, int c_);
  // horizontal lattice lines are indexed k = 0 (top edge) .. a+c (bottom edge)
  int lines() const { return a + c; }
  long long lozenges() const {
    return (long long)a * b + (long long)b * c + (long long)a * c;
  }
  bool operator==(const HexDims& o) const { return a == o.a && b == o.b && c == o.c; }
};

// Number of vertical lozenges bisected by line k: min(k, a, c, a+c-k).
int line_vertical_count(const HexDims& d, int k);

// Number of positions on line k that can hold a bisected vertical lozenge,
// counted from the hexagon's left border: b + min(k, a, c, a+c-k).
int line_slot_count(const HexDims& d, int k);

// Strictly increasing integer row; top row of a semi-strict Gelfand pattern.
struct TopRow {
  std::vector<long long> entries;
  explicit TopRow(std::vector<long long> e);
  int size() const { return (int)entries.size(); }
};

// The hexagonal positions (1-based, strictly increasing) of the vertical
// lozenges bisected by line k.
struct LinePositions {
  int k = 0;
  std::vector<int> positions;
  bool operator==(const LinePositions& o) const {
    return k == o.k && positions == o.positions;
  }
  bool operator<(const LinePositions& o) const {
    return std::tie(k, positions) < std::tie(o.k, o.positions);
  }
};

void validate_line_positions(const HexDims& d, const LinePositions& lp);

// Reflect positions within line k: p -> n+1-p with n = line_slot_count, order
// reversed.  Composed with k -> a+c-k this is the 180-degree rotation of the
// hexagon, which maps tilings to tilings.
std::vector<int> mirror_positions(const HexDims& d, int k, const std::vector<int>& p);

// prod_{i<j<k in boxes} (i+j+k+2)/(i+j+k+1): the number of plane partitions
// in an a x b x c box, i.e. of lozenge tilings of the a,b,c hexagon.
ExactInt macmahon_count(const HexDims& d);

// prod_{i<j} (x_j-x_i)/(j-i) for a strictly increasing row: the number of
// semi-strict Gelfand patterns with that top row.  Evaluated as an exact
// rational with reduction after every factor; integrality is asserted at the
// end rather than assumed.
ExactInt v_count(const TopRow& row);

// Same product for a raw row; an empty row yields 1.  Used internally where
// empty rows legitimately occur (lines carrying no vertical lozenges).
ExactInt v_product(const std::vector<long long>& row);

// Number of tilings with vertical lozenges exactly at lp.positions on line
// lp.k.  Lines below the horizontal midline are handled by the rotation
// symmetry, and the c < a half of the case split by the left-right mirror.
ExactInt line_count(const HexDims& d, const LinePositions& lp);

// Call fn for every admissible LinePositions on line k, in lexicographic
// order.  fn returning false stops the stream.  Memory use is O(l).
void enumerate_line_positions(const HexDims& d, int k,
                              const std::function<bool(const LinePositions&)>& fn);

// Exact distribution of the vertical-lozenge positions on line k under the
// uniform measure on tilings.  Probabilities sum to exactly 1.
std::vector<std::pair<LinePositions, ExactRat>> line_distribution(const HexDims& d, int k);

std::string to_string(const ExactInt& v);
std::string to_string(const ExactRat& v);

// Natural log of a positive ExactInt, accurate to double precision.
double log_of(const ExactInt& v);

}  // namespace hextile
