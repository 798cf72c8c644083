#include "depthchart/synthetic.hpp"

#include <cmath>

#include "depthchart/rng.hpp"

namespace depthchart {

void validate(const GenSpec& spec) {
  if (spec.k < 1) throw ConfigError("spec needs k >= 1 time points");
  if (spec.n < 1) throw ConfigError("spec needs n >= 1 points per time");
  if (!(std::fabs(spec.correlation) < 1.0))
    throw ConfigError("spec needs |correlation| < 1");
  if (!(spec.variances[0] > 0.0 && spec.variances[1] > 0.0))
    throw ConfigError("spec needs positive variances");
}

std::array<double, 2> mean_at(const GenSpec& spec, int i) {
  if (spec.k == 1) return spec.mean_start;
  const double w = static_cast<double>(i) / (spec.k - 1);
  return {spec.mean_start[0] + w * (spec.mean_end[0] - spec.mean_start[0]),
          spec.mean_start[1] + w * (spec.mean_end[1] - spec.mean_start[1])};
}

namespace {

template <bool Parallel>
ReferenceSeries gen_reference_impl(const GenSpec& spec) {
  validate(spec);
  // Cholesky factor of [[v1, rho*sqrt(v1*v2)], [rho*sqrt(v1*v2), v2]]
  const double l11 = std::sqrt(spec.variances[0]);
  const double l21 = spec.correlation * std::sqrt(spec.variances[1]);
  const double l22 = std::sqrt(spec.variances[1] * (1.0 - spec.correlation * spec.correlation));

  ReferenceSeries series;
  series.times.reserve(static_cast<size_t>(spec.k));
  series.samples.reserve(static_cast<size_t>(spec.k));
  for (int t = 0; t < spec.k; ++t) {
    const std::array<double, 2> mean = mean_at(spec, t);
    std::vector<double> flat(2 * static_cast<size_t>(spec.n));
#pragma omp parallel for schedule(static) if (Parallel)
    for (int j = 0; j < spec.n; ++j) {
      const double g1 = rng::normal(spec.seed, static_cast<std::uint64_t>(t),
                                    static_cast<std::uint64_t>(j), 0);
      const double g2 = rng::normal(spec.seed, static_cast<std::uint64_t>(t),
                                    static_cast<std::uint64_t>(j), 1);
      flat[2 * static_cast<size_t>(j)] = mean[0] + l11 * g1;
      flat[2 * static_cast<size_t>(j) + 1] = mean[1] + l21 * g1 + l22 * g2;
    }
    series.times.push_back(static_cast<double>(t + 1));
    series.samples.emplace_back(2, std::move(flat));
  }
  return series;
}

}  // namespace

ReferenceSeries gen_reference(const GenSpec& spec) { return gen_reference_impl<true>(spec); }

ReferenceSeries gen_reference_serial(const GenSpec& spec) {
  return gen_reference_impl<false>(spec);
}

Trajectory gen_patient(const GenSpec& spec) {
  validate(spec);
  Trajectory traj;
  traj.times.reserve(static_cast<size_t>(spec.k));
  traj.points.reserve(static_cast<size_t>(spec.k));
  for (int i = 0; i < spec.k; ++i) {
    const std::array<double, 2> mean = mean_at(spec, i);
    traj.times.push_back(static_cast<double>(i + 1));
    traj.points.push_back(Point{{mean[0] + i * spec.patient_drift[0],
                                 mean[1] + i * spec.patient_drift[1]}});
  }
  return traj;
}

}  // namespace depthchart
