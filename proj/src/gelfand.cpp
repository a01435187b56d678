#include "gelfand.hpp"

namespace hextile {

void GelfandPattern::validate() const {
  if (rows.empty()) throw validation_error("empty pattern");
  const int n = (int)rows[0].size();
  if ((int)rows.size() != n) throw validation_error("pattern must have as many rows as top entries");
  for (int r = 0; r < n; r++)
    if ((int)rows[r].size() != n - r)
      throw validation_error("row " + std::to_string(r) + " must have " +
                             std::to_string(n - r) + " entries");
  for (int i = 0; i + 1 < n; i++)
    if (rows[0][i] >= rows[0][i + 1])
      throw validation_error("top row must be strictly increasing");
  for (int r = 0; r + 1 < n; r++) {
    const auto& x = rows[r];
    const auto& y = rows[r + 1];
    for (size_t i = 0; i < y.size(); i++)
      if (!(x[i] <= y[i] && y[i] < x[i + 1]))
        throw validation_error("interlacing violated between rows " + std::to_string(r) +
                               " and " + std::to_string(r + 1));
  }
}

namespace {

struct Enumerator {
  std::uint64_t cap;
  std::uint64_t emitted = 0;
  const std::function<void(const GelfandPattern&)>* fn;
  GelfandPattern work;

  void dfs(int r) {
    const auto& x = work.rows[r];
    if (x.size() == 1) {
      if (emitted == cap) throw cap_exceeded_error("pattern enumeration cap exceeded");
      emitted++;
      if (fn) (*fn)(work);
      return;
    }
    const int m = (int)x.size() - 1;
    auto& y = work.rows[r + 1];
    y.resize(m);
    for (int i = 0; i < m; i++) y[i] = x[i];
    while (true) {
      dfs(r + 1);
      // odometer step over x_i <= y_i < x_{i+1}
      int i = m - 1;
      while (i >= 0 && y[i] + 1 >= x[i + 1]) i--;
      if (i < 0) break;
      y[i]++;
      for (int j = i + 1; j < m; j++) y[j] = x[j];
    }
    y.clear();
  }
};

}  // namespace

void gelfand_enumerate(const std::vector<long long>& top, std::uint64_t cap,
                       const std::function<void(const GelfandPattern&)>& fn) {
  TopRow check(top);  // validates strictly increasing, non-empty
  Enumerator e;
  e.cap = cap;
  e.fn = &fn;
  e.work.rows.assign(top.size(), {});
  e.work.rows[0] = top;
  e.dfs(0);
}

std::uint64_t gelfand_enumerate_count(const std::vector<long long>& top, std::uint64_t cap) {
  std::uint64_t n = 0;
  gelfand_enumerate(top, cap, [&](const GelfandPattern&) { n++; });
  return n;
}

}  // namespace hextile
