#include "sampler.hpp"

#include <algorithm>
#include <cmath>
#include <atomic>
#include <thread>

#include "shape.hpp"

namespace hextile {

bool glauber_step(HeightField& s, int k, int i, bool up) {
  const HexDims& d = s.dims;
  if (k <= 0 || k >= d.lines() || i <= 0 || i >= line_slot_count(d, k))
    throw validation_error("glauber vertex must be interior");
  const int base = s.h[k][i];
  const int target = base + (up ? 3 : -3);
  const int offk = row_shift(d, k);
  const int offu = row_shift(d, k - 1);
  // neighbor heights and the low option of h(nbr)-h(v) per direction
  const std::pair<int, int> nbrs[6] = {
      {s.h[k][i + 1], -2},              // right
      {s.h[k][i - 1], -1},              // left
      {s.h[k + 1][i + 1 - offk], -1},   // down-right
      {s.h[k + 1][i - offk], -2},       // down-left
      {s.h[k - 1][i + offu], -1},       // up-right
      {s.h[k - 1][i - 1 + offu], -2},   // up-left
  };
  for (const auto& [hn, lo] : nbrs) {
    const int dd = hn - target;
    if (dd != lo && dd != lo + 3) return false;
  }
  s.h[k][i] = target;
  return true;
}

GlauberLattice::GlauberLattice(const HexDims& d) : dims_(d) {
  row_offset_.resize(d.lines() + 2, 0);
  for (int k = 0; k <= d.lines(); k++)
    row_offset_[k + 1] = row_offset_[k] + line_slot_count(d, k) + 1;
  for (int k = 1; k < d.lines(); k++) {
    const int n = line_slot_count(d, k);
    const int offk = row_shift(d, k);
    const int offu = row_shift(d, k - 1);
    for (int i = 1; i < n; i++) {
      Nbrs nb;
      nb.self = row_offset_[k] + i;
      const int at[6] = {row_offset_[k] + i + 1,
                         row_offset_[k] + i - 1,
                         row_offset_[k + 1] + i + 1 - offk,
                         row_offset_[k + 1] + i - offk,
                         row_offset_[k - 1] + i + offu,
                         row_offset_[k - 1] + i - 1 + offu};
      std::copy(at, at + 6, nb.at);
      nbr_.push_back(nb);
    }
  }
}

std::vector<int> GlauberLattice::flatten(const HeightField& f) const {
  std::vector<int> h(row_offset_.back());
  for (int k = 0; k <= dims_.lines(); k++)
    for (size_t i = 0; i < f.h[k].size(); i++) h[row_offset_[k] + i] = f.h[k][i];
  return h;
}

HeightField GlauberLattice::unflatten(const std::vector<int>& h) const {
  HeightField f{dims_, {}};
  f.h.resize(dims_.lines() + 1);
  for (int k = 0; k <= dims_.lines(); k++) {
    const int n = line_slot_count(dims_, k);
    f.h[k].assign(h.begin() + row_offset_[k], h.begin() + row_offset_[k] + n + 1);
  }
  return f;
}

namespace {

inline int pick_vertex(std::uint64_t u, int n) {
  return (int)(((unsigned __int128)u * (unsigned)n) >> 64);
}

// One CFTP run over a prebuilt lattice.  minflat/maxflat are the flattened
// extremal height fields.
std::vector<int> cftp_run(const GlauberLattice& lat, const std::vector<int>& minflat,
                          const std::vector<int>& maxflat, std::uint64_t seed,
                          const CftpOptions& opt) {
  const int nv = lat.interior_count();
  const std::uint64_t seedh = mix64(seed ^ 0x0ddc0ffee0ddba11ULL);
  // deterministic warm start for the doubling schedule; any coalesced
  // horizon yields the same sample, so this only skips doomed short runs
  std::uint64_t start = 1;
  const std::uint64_t guess =
      (std::uint64_t)nv * (std::uint64_t)(lat.dims().lines() * lat.dims().lines()) / 8;
  while (start * 2 <= guess) start *= 2;
  std::vector<int> lo, hi;
  for (std::uint64_t horizon = start;; horizon *= 2) {
    if (horizon > opt.max_horizon)
      throw std::runtime_error("coupling horizon cap exceeded");
    lo = minflat;
    hi = maxflat;
    long long ndiff = 0;
    for (size_t j = 0; j < lo.size(); j++) ndiff += lo[j] != hi[j];
    std::int64_t t = -(std::int64_t)horizon;
    for (; t < 0 && ndiff; t++) {
      const std::uint64_t u = mix64(seedh ^ (std::uint64_t)t);
      const int v = pick_vertex(u, nv);
      const bool up = u & 1;
      const int sj = lat.self_of(v);
      const bool eq_before = lo[sj] == hi[sj];
      lat.try_move(lo, v, up);
      lat.try_move(hi, v, up);
      ndiff += (int)(lo[sj] != hi[sj]) - (int)!eq_before;
    }
    for (; t < 0; t++) {  // chains agree; evolve one copy to time 0
      const std::uint64_t u = mix64(seedh ^ (std::uint64_t)t);
      lat.try_move(lo, pick_vertex(u, nv), u & 1);
    }
    if (!ndiff) return lo;
  }
}

}  // namespace

LozengeTiling cftp_sample(const HexDims& d, std::uint64_t seed, const CftpOptions& opt) {
  const GlauberLattice lat(d);
  const auto lo = lat.flatten(min_heights(d));
  const auto hi = lat.flatten(max_heights(d));
  return tiling_from_heights(lat.unflatten(cftp_run(lat, lo, hi, seed, opt)));
}

LozengeTiling mcmc_sample(const HexDims& d, long long sweeps, std::uint64_t seed,
                          bool start_max) {
  const GlauberLattice lat(d);
  std::vector<int> h = lat.flatten(start_max ? max_heights(d) : min_heights(d));
  const std::uint64_t seedh = mix64(seed ^ 0x5ca1ab1e0ddba11ULL);
  const int nv = lat.interior_count();
  for (long long s = 0; s < sweeps; s++) {
    const std::uint64_t sweep_key = mix64(seedh + (std::uint64_t)s);
    for (int v = 0; v < nv; v++) {
      const std::uint64_t u = mix64(sweep_key ^ (0x9e3779b97f4a7c15ULL * (std::uint64_t)(v + 1)));
      lat.try_move(h, v, u >> 63);
    }
  }
  return tiling_from_heights(lat.unflatten(h));
}

void enumerate_all_tilings(const HexDims& d, std::uint64_t cap,
                           const std::function<void(const LozengeTiling&)>& fn) {
  const ExactInt total = macmahon_count(d);
  if (total > (unsigned long)cap)
    throw cap_exceeded_error("tiling count " + to_string(total) + " exceeds cap");
  std::vector<long long> top;
  for (int i = 1; i <= d.a; i++) top.push_back(i);
  for (int i = 1; i <= d.c; i++) top.push_back(d.a + d.b + i);
  gelfand_enumerate(top, cap, [&](const GelfandPattern& p) {
    fn(tiling_from_pattern(p, d));
  });
}

SampleBatch sample_batch(const HexDims& d, int n, const std::string& method,
                         std::uint64_t seed, int threads, long long sweeps,
                         bool mcmc_start_max) {
  SampleBatch batch{d, seed, method, {}};
  if (method == "enum") {
    enumerate_all_tilings(d, (std::uint64_t)n, [&](const LozengeTiling& t) {
      batch.tilings.push_back(t);
    });
    return batch;
  }
  if (method != "cftp" && method != "mcmc")
    throw validation_error("unknown sampling method: " + method);
  batch.tilings.reserve(n);
  struct Slot {
    std::vector<std::vector<int>> verts;
  };
  std::vector<Slot> slots(n);
  const GlauberLattice lat(d);
  const auto lo = lat.flatten(min_heights(d));
  const auto hi = lat.flatten(max_heights(d));
  const int nthreads = std::max(1, threads);
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= n) return;
      const std::uint64_t si = mix64(seed ^ (0x9e3779b97f4a7c15ULL * (std::uint64_t)(i + 1)));
      LozengeTiling t = method == "cftp"
                            ? tiling_from_heights(lat.unflatten(cftp_run(lat, lo, hi, si, {})))
                            : mcmc_sample(d, sweeps, si, mcmc_start_max);
      slots[i].verts = t.verticals;
    }
  };
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; i++) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (int i = 0; i < n; i++) batch.tilings.emplace_back(d, std::move(slots[i].verts));
  return batch;
}

DensityGrid density_map(const SampleBatch& batch, double bin_frac) {
  if (batch.tilings.empty()) throw validation_error("density map needs at least one sample");
  const NormalizedFrame fr = frame_of(batch.dims);
  const ShapeParams sp(fr.alpha, fr.beta, fr.gamma);
  DensityGrid g;
  g.bin_w = bin_frac * sp.total();
  const auto verts = hex_vertices(sp);
  double xmax = 0, ymax = 0;
  for (const auto& v : verts) {
    xmax = std::max(xmax, std::fabs(v.x));
    ymax = std::max(ymax, std::fabs(v.y));
  }
  const int hx = (int)std::ceil(xmax / g.bin_w);
  const int hy = (int)std::ceil(ymax / g.bin_w);
  g.nx = 2 * hx;
  g.ny = 2 * hy;
  g.x0 = -hx * g.bin_w;
  g.y0 = -hy * g.bin_w;
  g.vertical.assign((size_t)g.nx * g.ny, 0);
  g.total.assign((size_t)g.nx * g.ny, 0);
  g.area.assign((size_t)g.nx * g.ny, 0.0);
  // clipped bin areas
  for (int by = 0; by < g.ny; by++)
    for (int bx = 0; bx < g.nx; bx++) {
      std::vector<HexPoint> poly(verts.begin(), verts.end());
      const double x0 = g.x0 + bx * g.bin_w, x1 = x0 + g.bin_w;
      const double y0 = g.y0 + by * g.bin_w, y1 = y0 + g.bin_w;
      auto clip = [&poly](auto inside, auto intersect) {
        std::vector<HexPoint> out;
        for (size_t i = 0; i < poly.size(); i++) {
          const HexPoint& p = poly[i];
          const HexPoint& q = poly[(i + 1) % poly.size()];
          const bool pi = inside(p), qi = inside(q);
          if (pi) out.push_back(p);
          if (pi != qi) out.push_back(intersect(p, q));
        }
        poly = out;
      };
      auto xcut = [](const HexPoint& p, const HexPoint& q, double x) {
        const double t = (x - p.x) / (q.x - p.x);
        return HexPoint{x, p.y + t * (q.y - p.y)};
      };
      auto ycut = [](const HexPoint& p, const HexPoint& q, double y) {
        const double t = (y - p.y) / (q.y - p.y);
        return HexPoint{p.x + t * (q.x - p.x), y};
      };
      clip([&](const HexPoint& p) { return p.x >= x0; },
           [&](const HexPoint& p, const HexPoint& q) { return xcut(p, q, x0); });
      clip([&](const HexPoint& p) { return p.x <= x1; },
           [&](const HexPoint& p, const HexPoint& q) { return xcut(p, q, x1); });
      clip([&](const HexPoint& p) { return p.y >= y0; },
           [&](const HexPoint& p, const HexPoint& q) { return ycut(p, q, y0); });
      clip([&](const HexPoint& p) { return p.y <= y1; },
           [&](const HexPoint& p, const HexPoint& q) { return ycut(p, q, y1); });
      double area2 = 0;
      for (size_t i = 0; i < poly.size(); i++) {
        const HexPoint& p = poly[i];
        const HexPoint& q = poly[(i + 1) % poly.size()];
        area2 += p.x * q.y - q.x * p.y;
      }
      g.area[g.idx(bx, by)] = std::fabs(area2) / 2;
    }
  // lozenge counts
  for (const LozengeTiling& t : batch.tilings) {
    const LozengeSet ls = lozenges_of(t);
    for (const Lozenge& z : ls.lozenges) {
      double X = 0, Y = 0;
      for (const auto& [k, i] : z.corners) {
        X += vertex_x(batch.dims, k, i);
        Y += vertex_y(batch.dims, k);
      }
      const double x = fr.nx(X / 4), y = fr.ny(Y / 4);
      const int bx = (int)std::floor((x - g.x0) / g.bin_w);
      const int by = (int)std::floor((y - g.y0) / g.bin_w);
      if (bx < 0 || bx >= g.nx || by < 0 || by >= g.ny) continue;
      g.total[g.idx(bx, by)]++;
      if (z.o == Orientation::Vertical) g.vertical[g.idx(bx, by)]++;
    }
  }
  return g;
}

}  // namespace hextile
