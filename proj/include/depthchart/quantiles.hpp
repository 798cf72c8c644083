#ifndef DEPTHCHART_QUANTILES_HPP
#define DEPTHCHART_QUANTILES_HPP

#include <vector>

#include "depthchart/depth.hpp"
#include "depthchart/types.hpp"

// Depth-rank quantiles: a point's centrality is the fraction of reference
// points whose own depth is at most the point's depth (weak inequality, so
// the deepest point maps to 1 and ties are counted in full).

namespace depthchart {

struct QuantileProfile {
  std::vector<double> times;
  std::vector<double> q;       // depth-rank quantile per time, in [0,1]
  std::vector<Depth> depths;   // the patient's depth per time
};

enum class PointClass { Extreme, Central, Ordinary };

struct DepthRegion {
  double gamma = 0.0;               // largest realized depth with coverage >= p_level
  std::vector<int> member_indices;  // points with depth >= gamma
  double coverage = 0.0;            // |member_indices| / n
};

// Depths of all reference points plus a sorted copy for rank queries.
class RefDepths {
 public:
  RefDepths(const Sample& ref, const DepthOptions& opt = {});

  const std::vector<Depth>& depths() const { return depths_; }
  int n() const { return static_cast<int>(depths_.size()); }

  // #{j : depth_j <= d} / n
  double rank(const Depth& d) const;

 private:
  std::vector<Depth> depths_;
  std::vector<int> sorted_counts_;
};

// Rank quantile of x against ref; x need not belong to ref.
double depth_quantile(const Point& x, const Sample& ref, const DepthOptions& opt = {});

// 1-D special case on raw values; the workhorse behind projected quantiles.
double depth_quantile_1d(std::vector<double> values, double x);

// Per-point labels: extreme iff rank < low, central iff rank > high.
std::vector<PointClass> classify_extremes(const Sample& ref, double low = 0.05,
                                          double high = 0.95, const DepthOptions& opt = {});

// Largest realized depth threshold whose region still covers p_level of ref.
DepthRegion depth_region(const Sample& ref, double p_level, const DepthOptions& opt = {});

// Per-time rank quantiles of a trajectory against its reference series.
QuantileProfile profile(const Trajectory& traj, const ReferenceSeries& refs,
                        const DepthOptions& opt = {});

}  // namespace depthchart

#endif  // DEPTHCHART_QUANTILES_HPP
