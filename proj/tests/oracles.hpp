#pragma once
// Brute-force and quadrature oracles used by the test suites.  Everything
// here is deliberately independent of the closed forms it is used to check:
// plane partitions are enumerated as monotone matrices, and the log-kernel
// bilinear form is integrated numerically.

#include <functional>

#include "functional.hpp"
#include "tiling.hpp"

namespace hextile::oracles {

// Enumerate every plane partition in the a x b x c box (monotone matrix
// enumeration, no tiling machinery involved).
void for_each_plane_partition(const HexDims& d,
                              const std::function<void(const PlanePartition&)>& fn);
long long count_plane_partitions(const HexDims& d);

// Numerical evaluation of the bilinear form by nested adaptive quadrature
// with the inner integral split at the log singularity.
double quad_inner_product(const PiecewiseLinear& f, const PiecewiseLinear& g,
                          double abs_tol = 1e-9);

// 0.999 quantile of the chi-squared distribution (exact small table plus the
// Wilson-Hilferty approximation).
double chi2_quantile_999(int df);

}  // namespace hextile::oracles
