#pragma once
// Uniform random tilings: exact sampling by monotone coupling from the past
// over the single-site height dynamics, approximate sampling by plain
// Glauber sweeps, exhaustive enumeration for desk-scale oracles, and the
// empirical vertical-lozenge density grid.
//
// Randomness is counter-based: the update at time step t of a chain with a
// given seed is a pure hash of (seed, t), so extending a run further into
// the past replays identical updates without storing them, and independent
// sample indices are independent streams.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "heights.hpp"
#include "lozenges.hpp"

namespace hextile {

// splitmix64 finalizer; the basis of all randomness in this module.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Single-site move at interior vertex (k,i): raise (up) or lower the height
// by 3 if the result is still a valid height field, else do nothing.
// Returns whether the height changed.
bool glauber_step(HeightField& s, int k, int i, bool up);

// Flattened lattice with precomputed neighbor tables; shared by the CFTP
// and sweep samplers.
class GlauberLattice {
 public:
  explicit GlauberLattice(const HexDims& d);

  int interior_count() const { return (int)nbr_.size(); }
  std::vector<int> flatten(const HeightField& f) const;
  HeightField unflatten(const std::vector<int>& h) const;

  // coin: false = down, true = up.  The low option of h(nbr)-h(self) is
  // -2,-1,-1,-2,-1,-2 in the fixed neighbor order (right, left, down-right,
  // down-left, up-right, up-left); a move is legal iff every neighbor sits
  // at the high (up move) resp. low (down move) option.
  inline bool try_move(std::vector<int>& h, int v, bool up) const {
    const Nbrs& nb = nbr_[v];
    const int base = h[nb.self];
    if (up) {
      if (h[nb.at[0]] == base + 1 && h[nb.at[1]] == base + 2 && h[nb.at[2]] == base + 2 &&
          h[nb.at[3]] == base + 1 && h[nb.at[4]] == base + 2 && h[nb.at[5]] == base + 1) {
        h[nb.self] = base + 3;
        return true;
      }
    } else {
      if (h[nb.at[0]] == base - 2 && h[nb.at[1]] == base - 1 && h[nb.at[2]] == base - 1 &&
          h[nb.at[3]] == base - 2 && h[nb.at[4]] == base - 1 && h[nb.at[5]] == base - 2) {
        h[nb.self] = base - 3;
        return true;
      }
    }
    return false;
  }

  const HexDims& dims() const { return dims_; }
  // flat height-array index of interior vertex v
  int self_of(int v) const { return nbr_[v].self; }

 private:
  struct Nbrs {
    int self;
    int at[6];
  };
  HexDims dims_;
  std::vector<int> row_offset_;
  std::vector<Nbrs> nbr_;  // one entry per interior vertex
};

struct CftpOptions {
  std::uint64_t max_horizon = 1ULL << 44;  // updates; exceeding this throws
};

// Exactly uniform tiling, a deterministic function of (dims, seed).
LozengeTiling cftp_sample(const HexDims& d, std::uint64_t seed,
                          const CftpOptions& opt = {});

// `sweeps` systematic passes over all interior vertices with fresh coins,
// started from the minimal (default) or maximal height field.  Approximate.
LozengeTiling mcmc_sample(const HexDims& d, long long sweeps, std::uint64_t seed,
                          bool start_max = false);

// Every tiling of the hexagon exactly once (depth-first over interlacing
// pattern rows).  Throws cap_exceeded_error if macmahon_count(d) > cap.
void enumerate_all_tilings(const HexDims& d, std::uint64_t cap,
                           const std::function<void(const LozengeTiling&)>& fn);

struct SampleBatch {
  HexDims dims;
  std::uint64_t seed = 0;
  std::string method;  // "cftp", "mcmc", "enum"
  std::vector<LozengeTiling> tilings;
};

// n samples; sample i is an independent chain keyed by mix64(seed)+i.
// threads > 1 parallelizes over samples without changing the result.
SampleBatch sample_batch(const HexDims& d, int n, const std::string& method,
                         std::uint64_t seed, int threads = 1, long long sweeps = 1000,
                         bool mcmc_start_max = false);

// Square bins over normalized coordinates (frame_of), clipped to the
// hexagon.  freq = vertical lozenges / all lozenges with centers in the bin,
// so the lozenge-count-weighted mean over bins is exactly ac/(ab+bc+ca).
struct DensityGrid {
  double bin_w = 0;  // bin side, normalized units
  int nx = 0, ny = 0;
  double x0 = 0, y0 = 0;  // lower-left corner of bin (0,0)
  std::vector<long long> vertical, total;  // per bin, row-major, ny rows
  std::vector<double> area;                // bin-and-hexagon overlap area

  int idx(int bx, int by) const { return by * nx + bx; }
  double freq(int bx, int by) const {
    const long long n = total[idx(bx, by)];
    return n ? (double)vertical[idx(bx, by)] / (double)n : 0.0;
  }
};

// bin_frac: bin side as a fraction of the alpha+beta+gamma scale (0.05 means
// each bin spans 5% of the rescaled side-length sum, i.e. 0.15 normalized
// units).
DensityGrid density_map(const SampleBatch& batch, double bin_frac);

}  // namespace hextile
