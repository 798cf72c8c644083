#include "depthchart/quantiles.hpp"

#include <algorithm>

namespace depthchart {

RefDepths::RefDepths(const Sample& ref, const DepthOptions& opt)
    : depths_(depth_all(ref, opt)) {
  sorted_counts_.reserve(depths_.size());
  for (const Depth& d : depths_) sorted_counts_.push_back(d.count);
  std::sort(sorted_counts_.begin(), sorted_counts_.end());
}

double RefDepths::rank(const Depth& d) const {
  const auto it = std::upper_bound(sorted_counts_.begin(), sorted_counts_.end(), d.count);
  return static_cast<double>(it - sorted_counts_.begin()) / n();
}

double depth_quantile(const Point& x, const Sample& ref, const DepthOptions& opt) {
  RefDepths rd(ref, opt);
  return rd.rank(point_depth(x, ref, opt));
}

double depth_quantile_1d(std::vector<double> values, double x) {
  const int n = static_cast<int>(values.size());
  if (n == 0) throw ConfigError("depth_quantile_1d needs a nonempty sample");
  std::sort(values.begin(), values.end());

  const int le = static_cast<int>(std::upper_bound(values.begin(), values.end(), x) -
                                  values.begin());
  const int ge = n - static_cast<int>(std::lower_bound(values.begin(), values.end(), x) -
                                      values.begin());
  const int dx = std::min(le, ge);

  // Sample depths run by run: a run [i,j) of one value has le=j and ge=n-i.
  int below = 0;
  for (int i = 0; i < n;) {
    int j = i + 1;
    while (j < n && values[static_cast<size_t>(j)] == values[static_cast<size_t>(i)]) ++j;
    if (std::min(j, n - i) <= dx) below += j - i;
    i = j;
  }
  return static_cast<double>(below) / n;
}

std::vector<PointClass> classify_extremes(const Sample& ref, double low, double high,
                                          const DepthOptions& opt) {
  if (!(low >= 0.0 && low < high && high <= 1.0))
    throw ConfigError("classify_extremes needs 0 <= low < high <= 1");
  RefDepths rd(ref, opt);
  std::vector<PointClass> out;
  out.reserve(rd.depths().size());
  for (const Depth& d : rd.depths()) {
    const double q = rd.rank(d);
    if (q < low)
      out.push_back(PointClass::Extreme);
    else if (q > high)
      out.push_back(PointClass::Central);
    else
      out.push_back(PointClass::Ordinary);
  }
  return out;
}

DepthRegion depth_region(const Sample& ref, double p_level, const DepthOptions& opt) {
  if (!(p_level > 0.0 && p_level <= 1.0))
    throw ConfigError("depth_region needs p_level in (0,1]");
  const std::vector<Depth> depths = depth_all(ref, opt);
  const int n = static_cast<int>(depths.size());

  std::vector<int> counts;
  counts.reserve(depths.size());
  for (const Depth& d : depths) counts.push_back(d.count);
  std::sort(counts.begin(), counts.end());

  // Walk realized depth values from the largest; the first one whose region
  // still covers p_level is the supremum gamma.
  int gamma_count = counts.front();
  for (int i = n - 1; i >= 0;) {
    const int c = counts[static_cast<size_t>(i)];
    const int first = static_cast<int>(std::lower_bound(counts.begin(), counts.end(), c) -
                                       counts.begin());
    const int covered = n - first;
    if (static_cast<double>(covered) / n >= p_level) {
      gamma_count = c;
      break;
    }
    i = first - 1;
  }

  DepthRegion region;
  region.gamma = static_cast<double>(gamma_count) / n;
  for (int j = 0; j < n; ++j)
    if (depths[static_cast<size_t>(j)].count >= gamma_count) region.member_indices.push_back(j);
  region.coverage = static_cast<double>(region.member_indices.size()) / n;
  return region;
}

QuantileProfile profile(const Trajectory& traj, const ReferenceSeries& refs,
                        const DepthOptions& opt) {
  traj.validate();
  refs.validate();
  QuantileProfile prof;
  prof.times = traj.times;
  prof.q.reserve(traj.times.size());
  prof.depths.reserve(traj.times.size());
  for (int i = 0; i < traj.size(); ++i) {
    const int t = refs.index_of_time(traj.times[static_cast<size_t>(i)]);
    const Sample& ref = refs.samples[static_cast<size_t>(t)];
    RefDepths rd(ref, opt);
    const Depth dx = point_depth(traj.points[static_cast<size_t>(i)], ref, opt);
    prof.q.push_back(rd.rank(dx));
    prof.depths.push_back(dx);
  }
  return prof;
}

}  // namespace depthchart
