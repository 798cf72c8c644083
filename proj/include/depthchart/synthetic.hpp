#ifndef DEPTHCHART_SYNTHETIC_HPP
#define DEPTHCHART_SYNTHETIC_HPP

#include <array>
#include <cstdint>

#include "depthchart/types.hpp"

// Seedable bivariate demo data: k Gaussian reference populations whose mean
// drifts linearly over time, plus a deterministic patient trajectory that
// walks away from the per-time means along a fixed contrast direction.

namespace depthchart {

// Demo defaults pinned for reproducible runs (simulate subcommand, examples).
inline constexpr std::uint64_t kDemoSeed = 11;

struct GenSpec {
  int k = 4;                                   // time points
  int n = 1000;                                // per-time sample size
  std::array<double, 2> mean_start{5.0, 5.0};
  std::array<double, 2> mean_end{10.5, 9.0};
  std::array<double, 2> variances{1.0, 2.44};
  double correlation = 0.77;
  std::uint64_t seed = kDemoSeed;
  std::array<double, 2> patient_drift{0.48, -0.63};  // per unit time step
};

inline GenSpec demo_spec() { return {}; }

void validate(const GenSpec& spec);

// Population mean at 0-based time index i (linear interpolation; k = 1 stays
// at mean_start).
std::array<double, 2> mean_at(const GenSpec& spec, int i);

// k samples of size n via the Cholesky factor of the specified covariance,
// fed by counter-based normals keyed (seed, time, point, coordinate).
// Parallel fill; bit-identical to gen_reference_serial.
ReferenceSeries gen_reference(const GenSpec& spec);
ReferenceSeries gen_reference_serial(const GenSpec& spec);

// Deterministic patient: x(t_i) = mean_at(i) + i * patient_drift.
Trajectory gen_patient(const GenSpec& spec);

}  // namespace depthchart

#endif  // DEPTHCHART_SYNTHETIC_HPP
