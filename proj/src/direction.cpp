#include "depthchart/direction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "depthchart/rng.hpp"

namespace depthchart {

UnitDirection::UnitDirection(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw ConfigError("direction needs at least one coordinate");
  double norm2 = 0.0;
  for (double c : coords_) {
    if (!std::isfinite(c)) throw ConfigError("direction coordinates must be finite");
    norm2 += c * c;
  }
  if (norm2 == 0.0) throw ConfigError("direction must be nonzero");
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& c : coords_) c *= inv;
  for (double c : coords_) {
    if (c != 0.0) {
      if (c < 0.0)
        for (double& v : coords_) v = -v;
      break;
    }
  }
}

UnitDirection UnitDirection::from_angle(double phi) {
  return UnitDirection({std::cos(phi), std::sin(phi)});
}

double UnitDirection::dot(std::span<const double> v) const {
  double acc = 0.0;
  for (size_t c = 0; c < coords_.size(); ++c) acc += coords_[c] * v[c];
  return acc;
}

Sample project(const Sample& s, const UnitDirection& a) {
  if (a.dim() != s.dim())
    throw DimensionError("direction dimension does not match sample dimension");
  std::vector<double> flat;
  flat.reserve(static_cast<size_t>(s.size()));
  for (int i = 0; i < s.size(); ++i) flat.push_back(a.dot(s.row(i)));
  return Sample(1, std::move(flat));
}

double projected_quantile(const Point& x, const Sample& ref, const UnitDirection& a) {
  if (a.dim() != ref.dim() || x.dim() != ref.dim())
    throw DimensionError("projected_quantile needs matching dimensions");
  std::vector<double> proj;
  proj.reserve(static_cast<size_t>(ref.size()));
  for (int i = 0; i < ref.size(); ++i) proj.push_back(a.dot(ref.row(i)));
  return depth_quantile_1d(std::move(proj), a.dot(x.coords));
}

double sum_squared_gap(std::span<const double> q, std::span<const double> q_tilde) {
  if (q.size() != q_tilde.size())
    throw AlignmentError("quantile vectors must share one length");
  double acc = 0.0;
  for (size_t j = 0; j < q.size(); ++j) {
    const double gap = q[j] - q_tilde[j];
    acc += gap * gap;
  }
  return acc;
}

namespace {

// Trajectory aligned against its per-time reference samples.
struct AlignedSeries {
  std::vector<const Sample*> refs;
  std::vector<const Point*> points;

  AlignedSeries(const Trajectory& traj, const ReferenceSeries& series,
                const QuantileProfile& q) {
    traj.validate();
    series.validate();
    if (q.q.size() != traj.times.size() || q.times != traj.times)
      throw AlignmentError("profile does not match the trajectory times");
    refs.reserve(traj.times.size());
    points.reserve(traj.times.size());
    for (int i = 0; i < traj.size(); ++i) {
      const int t = series.index_of_time(traj.times[static_cast<size_t>(i)]);
      refs.push_back(&series.samples[static_cast<size_t>(t)]);
      points.push_back(&traj.points[static_cast<size_t>(i)]);
    }
  }

  std::vector<double> projected_quantiles(const UnitDirection& a) const {
    std::vector<double> qt;
    qt.reserve(refs.size());
    for (size_t i = 0; i < refs.size(); ++i)
      qt.push_back(projected_quantile(*points[i], *refs[i], a));
    return qt;
  }

  double objective_at(const UnitDirection& a, std::span<const double> q) const {
    return sum_squared_gap(q, projected_quantiles(a));
  }
};

DirectionFit make_fit(const AlignedSeries& aligned, const QuantileProfile& q,
                      UnitDirection dir, std::optional<int> grid_index) {
  std::vector<double> qt = aligned.projected_quantiles(dir);
  DirectionFit fit{std::move(dir), sum_squared_gap(q.q, qt), std::move(qt), q.q, grid_index};
  return fit;
}

template <bool Parallel>
DirectionFit grid_2d_impl(const Trajectory& traj, const ReferenceSeries& refs,
                          const QuantileProfile& q, int n_angles) {
  if (refs.dim() != 2) throw DimensionError("grid search is specific to two dimensions");
  if (n_angles < 1) throw ConfigError("grid search needs at least one angle");
  const AlignedSeries aligned(traj, refs, q);
  constexpr double pi = 3.14159265358979323846;

  double best_obj = std::numeric_limits<double>::infinity();
  int best_idx = n_angles;
#pragma omp parallel if (Parallel)
  {
    double local_obj = std::numeric_limits<double>::infinity();
    int local_idx = n_angles;
#pragma omp for schedule(static) nowait
    for (int i = 0; i < n_angles; ++i) {
      const double obj = aligned.objective_at(UnitDirection::from_angle(i * pi / n_angles), q.q);
      if (obj < local_obj || (obj == local_obj && i < local_idx)) {
        local_obj = obj;
        local_idx = i;
      }
    }
#pragma omp critical
    if (local_obj < best_obj || (local_obj == best_obj && local_idx < best_idx)) {
      best_obj = local_obj;
      best_idx = local_idx;
    }
  }
  return make_fit(aligned, q, UnitDirection::from_angle(best_idx * pi / n_angles), best_idx);
}

}  // namespace

DirectionFit optimize_grid_2d(const Trajectory& traj, const ReferenceSeries& refs,
                              const QuantileProfile& q, int n_angles) {
  return grid_2d_impl<true>(traj, refs, q, n_angles);
}

DirectionFit optimize_grid_2d_serial(const Trajectory& traj, const ReferenceSeries& refs,
                                     const QuantileProfile& q, int n_angles) {
  return grid_2d_impl<false>(traj, refs, q, n_angles);
}

DirectionFit optimize_sphere(const Trajectory& traj, const ReferenceSeries& refs,
                             const QuantileProfile& q, int n_dirs, std::uint64_t seed) {
  if (refs.dim() < 2) throw DimensionError("sphere search needs dimension >= 2");
  if (n_dirs < 1) throw ConfigError("sphere search needs at least one direction");
  const AlignedSeries aligned(traj, refs, q);
  const int p = refs.dim();

  double best_obj = std::numeric_limits<double>::infinity();
  int best_idx = n_dirs;
#pragma omp parallel
  {
    double local_obj = std::numeric_limits<double>::infinity();
    int local_idx = n_dirs;
#pragma omp for schedule(static) nowait
    for (int d = 0; d < n_dirs; ++d) {
      const UnitDirection a(rng::unit_vector(p, seed, static_cast<std::uint64_t>(d)));
      const double obj = aligned.objective_at(a, q.q);
      if (obj < local_obj || (obj == local_obj && d < local_idx)) {
        local_obj = obj;
        local_idx = d;
      }
    }
#pragma omp critical
    if (local_obj < best_obj || (local_obj == best_obj && local_idx < best_idx)) {
      best_obj = local_obj;
      best_idx = local_idx;
    }
  }
  UnitDirection winner(rng::unit_vector(p, seed, static_cast<std::uint64_t>(best_idx)));
  return make_fit(aligned, q, std::move(winner), std::nullopt);
}

double objective(const Trajectory& traj, const ReferenceSeries& refs,
                 const QuantileProfile& q, const UnitDirection& a) {
  const AlignedSeries aligned(traj, refs, q);
  return aligned.objective_at(a, q.q);
}

}  // namespace depthchart
