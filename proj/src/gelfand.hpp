#pragma once
// Semi-strict Gelfand patterns: triangular integer arrays whose entries
// increase weakly along down-right diagonals and strictly along up-right
// diagonals.  Row r+1 interlaces row r as x_i <= y_i < x_{i+1}.  Patterns
// with top row 1..a, a+b+1..a+b+c are in bijection with tilings of the
// a,b,c hexagon (see tiling.hpp for the conversions).

#include <cstdint>
#include <functional>
#include <vector>

#include "exact.hpp"

namespace hextile {

struct GelfandPattern {
  // rows[0] is the top (longest) row; each following row is one shorter and
  // the last row has a single entry.
  std::vector<std::vector<long long>> rows;

  void validate() const;  // throws validation_error
  int top_size() const { return rows.empty() ? 0 : (int)rows[0].size(); }
};

// Enumerate every semi-strict pattern with the given top row, each exactly
// once, in lexicographic order of the row sequence.  Throws
// cap_exceeded_error after emitting `cap` patterns: this enumerator is a
// desk-scale oracle, not a production path.
void gelfand_enumerate(const std::vector<long long>& top, std::uint64_t cap,
                       const std::function<void(const GelfandPattern&)>& fn);

// Count of the above without materializing patterns (same cap behavior).
std::uint64_t gelfand_enumerate_count(const std::vector<long long>& top, std::uint64_t cap);

}  // namespace hextile
