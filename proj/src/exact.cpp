#include "exact.hpp"

#include <algorithm>
#include <cmath>

namespace hextile {

namespace {
// mpq_class(n, d) does not canonicalize; every rational we build goes
// through here so arithmetic stays on reduced representations.
ExactRat rat(long num, long den) {
  ExactRat q(num, den);
  q.canonicalize();
  return q;
}
}  // namespace

HexDims::HexDims(int a_, int b_, int c_) : a(a_), b(b_), c(c_) {
  if (a < 1 || b < 1 || c < 1)
    throw validation_error("hexagon sides must be >= 1, got " + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c));
}

int line_vertical_count(const HexDims& d, int k) {
  if (k < 0 || k > d.a + d.c)
    throw validation_error("line index out of range: " + std::to_string(k));
  return std::min(std::min(k, d.a + d.c - k), std::min(d.a, d.c));
}

int line_slot_count(const HexDims& d, int k) { return d.b + line_vertical_count(d, k); }

TopRow::TopRow(std::vector<long long> e) : entries(std::move(e)) {
  if (entries.empty()) throw validation_error("top row must be non-empty");
  for (size_t i = 1; i < entries.size(); i++)
    if (entries[i - 1] >= entries[i])
      throw validation_error("top row must be strictly increasing");
}

void validate_line_positions(const HexDims& d, const LinePositions& lp) {
  const int l = line_vertical_count(d, lp.k);
  const int n = line_slot_count(d, lp.k);
  if ((int)lp.positions.size() != l)
    throw validation_error("line " + std::to_string(lp.k) + " needs exactly " +
                           std::to_string(l) + " positions, got " +
                           std::to_string(lp.positions.size()));
  for (int i = 0; i < l; i++) {
    if (lp.positions[i] < 1 || lp.positions[i] > n)
      throw validation_error("position " + std::to_string(lp.positions[i]) +
                             " outside [1," + std::to_string(n) + "]");
    if (i > 0 && lp.positions[i - 1] >= lp.positions[i])
      throw validation_error("positions must be strictly increasing");
  }
}

std::vector<int> mirror_positions(const HexDims& d, int k, const std::vector<int>& p) {
  const int n = line_slot_count(d, k);
  std::vector<int> m(p.size());
  for (size_t i = 0; i < p.size(); i++) m[i] = n + 1 - p[p.size() - 1 - i];
  return m;
}

ExactInt macmahon_count(const HexDims& d) {
  ExactRat acc(1);
  for (int i = 0; i < d.a; i++)
    for (int j = 0; j < d.b; j++)
      for (int k = 0; k < d.c; k++) {
        acc *= rat(i + j + k + 2, i + j + k + 1);
      }
  if (acc.get_den() != 1) throw std::logic_error("macmahon product not integral");
  return acc.get_num();
}

ExactInt v_product(const std::vector<long long>& row) {
  const int n = (int)row.size();
  ExactRat acc(1);
  for (int j = 1; j < n; j++)
    for (int i = 0; i < j; i++) {
      // reduce as we go so intermediates stay small
      acc *= rat((long)(row[j] - row[i]), j - i);
    }
  if (acc.get_den() != 1) throw std::logic_error("V product not integral");
  if (n > 0 && acc <= 0) throw std::logic_error("V product not positive");
  return acc.get_num();
}

ExactInt v_count(const TopRow& row) { return v_product(row.entries); }

namespace {

// Builds the concatenation prefix ++ (shift + positions) ++ suffix used by
// the two printed branches of the line-count formula.
std::vector<long long> assemble_row(int prefix_len, long long shift,
                                    const std::vector<int>& positions,
                                    long long suffix_from, int suffix_len) {
  std::vector<long long> row;
  row.reserve(prefix_len + positions.size() + suffix_len);
  for (int i = 1; i <= prefix_len; i++) row.push_back(i);
  for (int p : positions) row.push_back(shift + p);
  for (int i = 0; i < suffix_len; i++) row.push_back(suffix_from + i);
  return row;
}

}  // namespace

ExactInt line_count(const HexDims& d, const LinePositions& lp) {
  validate_line_positions(d, lp);
  const int a = d.a, b = d.b, c = d.c, k = lp.k;

  if (2 * k > a + c) {
    // rotate the hexagon 180 degrees: line k -> line a+c-k, positions mirrored
    LinePositions r{a + c - k, mirror_positions(d, k, lp.positions)};
    return line_count(d, r);
  }
  if (c < a && k >= c) {
    // mirror left-right into the a <= c branch below
    HexDims m(c, b, a);
    LinePositions r{k, mirror_positions(d, k, lp.positions)};
    return line_count(m, r);
  }

  if (k < std::min(a, c)) {
    // V(a_1..a_l) * V(1..a-k, a-k+a_1, .., a-k+a_l, a+b+1, .., a+b+c-k)
    std::vector<long long> below(lp.positions.begin(), lp.positions.end());
    std::vector<long long> above =
        assemble_row(a - k, a - k, lp.positions, a + b + 1, c - k);
    return v_product(below) * v_product(above);
  }

  // a <= k <= (a+c)/2 with a <= c:
  // V(1..k-a, k-a+a_1, .., k-a+a_l) * V(a_1, .., a_l, a+b+1, .., a+b+c-k)
  std::vector<long long> above = assemble_row(k - a, k - a, lp.positions, 0, 0);
  std::vector<long long> below = assemble_row(0, 0, lp.positions, a + b + 1, c - k);
  return v_product(above) * v_product(below);
}

void enumerate_line_positions(const HexDims& d, int k,
                              const std::function<bool(const LinePositions&)>& fn) {
  const int l = line_vertical_count(d, k);
  const int n = line_slot_count(d, k);
  LinePositions lp;
  lp.k = k;
  lp.positions.resize(l);
  for (int i = 0; i < l; i++) lp.positions[i] = i + 1;
  while (true) {
    if (!fn(lp)) return;
    // next l-subset of [1, n] in lexicographic order
    int i = l - 1;
    while (i >= 0 && lp.positions[i] == n - (l - 1 - i)) i--;
    if (i < 0) return;
    lp.positions[i]++;
    for (int j = i + 1; j < l; j++) lp.positions[j] = lp.positions[j - 1] + 1;
  }
}

std::vector<std::pair<LinePositions, ExactRat>> line_distribution(const HexDims& d, int k) {
  const ExactInt total = macmahon_count(d);
  std::vector<std::pair<LinePositions, ExactRat>> out;
  enumerate_line_positions(d, k, [&](const LinePositions& lp) {
    ExactRat p(line_count(d, lp), total);
    p.canonicalize();
    out.emplace_back(lp, p);
    return true;
  });
  return out;
}

std::string to_string(const ExactInt& v) { return v.get_str(); }

std::string to_string(const ExactRat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

double log_of(const ExactInt& v) {
  if (v <= 0) throw validation_error("log of non-positive integer");
  signed long exp2;
  const double m = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(m) + (double)exp2 * M_LN2;
}

}  // namespace hextile
