#ifndef DEPTHCHART_DEPTH_HPP
#define DEPTHCHART_DEPTH_HPP

#include <cstdint>
#include <vector>

#include "depthchart/types.hpp"

// Tukey half-space depth kernels. Exact in one and two dimensions, randomized
// upper-bound approximation in general dimension. All half-spaces are closed:
// points on the boundary line always count, including points coincident with
// the query.

namespace depthchart {

struct DepthOptions {
  int approx_dirs = 2000;       // directions sampled when p >= 3
  std::uint64_t seed = 0;       // stream seed for the sampled directions
};

// Exact 1-D depth: min of the two closed half-line counts.
Depth depth_exact_1d(double x, const Sample& s);

// Exact 2-D depth by angular sweep over the critical directions, O(n log n).
// Ties (collinear points, duplicates, query on a sample point) are resolved
// with exact sign predicates.
Depth depth_exact_2d(const Point& q, const Sample& s);

// Independent 2-D oracle: enumerates the boundary directions through every
// sample point and both perturbations around each, O(n^2). Exact arithmetic
// throughout; kept for testing the sweep kernel.
Depth depth_brute(const Point& q, const Sample& s);

// Randomized bound: min closed-side count over n_dirs sampled directions.
// Deterministic given the seed and never below the true depth.
Depth depth_approx(const Point& q, const Sample& s, int n_dirs, std::uint64_t seed);

// Depth of one point against a sample, dispatching on dimension:
// exact for p in {1,2}, depth_approx otherwise.
Depth point_depth(const Point& q, const Sample& s, const DepthOptions& opt = {});

// Depth of every sample point against the full sample (itself included).
// Parallel over points; results are identical to depth_all_serial.
std::vector<Depth> depth_all(const Sample& s, const DepthOptions& opt = {});
std::vector<Depth> depth_all_serial(const Sample& s, const DepthOptions& opt = {});

}  // namespace depthchart

#endif  // DEPTHCHART_DEPTH_HPP
