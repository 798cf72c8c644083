#ifndef DEPTHCHART_DIRECTION_HPP
#define DEPTHCHART_DIRECTION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "depthchart/quantiles.hpp"
#include "depthchart/types.hpp"

// Patient-specific direction search: find the unit vector whose projected
// 1-D rank quantiles track the multivariate ones across all time points.
// The objective is rank-based and piecewise constant, so the search is
// derivative-free: a fixed angular grid in 2-D, seeded random directions on
// the half-sphere otherwise.

namespace depthchart {

// Unit vector with canonical sign: the first nonzero coordinate is positive.
class UnitDirection {
 public:
  explicit UnitDirection(std::vector<double> coords);
  static UnitDirection from_angle(double phi);  // (cos phi, sin phi), canonicalized

  const std::vector<double>& coords() const { return coords_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](int c) const { return coords_[static_cast<size_t>(c)]; }

  double dot(std::span<const double> v) const;

 private:
  std::vector<double> coords_;
};

struct DirectionFit {
  UnitDirection direction;
  double objective = 0.0;
  std::vector<double> q_tilde;     // projected quantiles at the fit direction
  std::vector<double> q;           // the multivariate profile it was fit to
  std::optional<int> grid_index;   // grid argmin index; empty for sphere search
};

// Projection of every sample point onto a, as a 1-D sample in input order.
Sample project(const Sample& s, const UnitDirection& a);

// 1-D rank quantile of the projected query against the projected reference.
double projected_quantile(const Point& x, const Sample& ref, const UnitDirection& a);

double sum_squared_gap(std::span<const double> q, std::span<const double> q_tilde);

// Objective at one direction: sum of squared gaps between the multivariate
// profile q and the projected quantiles of the trajectory.
double objective(const Trajectory& traj, const ReferenceSeries& refs,
                 const QuantileProfile& q, const UnitDirection& a);

// Argmin over the half-circle grid phi_i = i*pi/n_angles, i = 0..n_angles-1.
// Ties break toward the smallest index. The multivariate profile is reused
// across all directions. Parallel over grid points; identical to the serial
// twin by (objective, index) reduction.
DirectionFit optimize_grid_2d(const Trajectory& traj, const ReferenceSeries& refs,
                              const QuantileProfile& q, int n_angles = 500);
DirectionFit optimize_grid_2d_serial(const Trajectory& traj, const ReferenceSeries& refs,
                                     const QuantileProfile& q, int n_angles = 500);

// Argmin over n_dirs seeded directions on the half-sphere, any p >= 2.
// Deterministic given the seed; ties break toward the earliest draw.
DirectionFit optimize_sphere(const Trajectory& traj, const ReferenceSeries& refs,
                             const QuantileProfile& q, int n_dirs, std::uint64_t seed);

}  // namespace depthchart

#endif  // DEPTHCHART_DIRECTION_HPP
