// Timing comparison of the OpenMP kernels against their serial references.
// Results must match exactly; speedup is reported per kernel.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "depthchart/depth.hpp"
#include "depthchart/direction.hpp"
#include "depthchart/quantiles.hpp"
#include "depthchart/synthetic.hpp"

using namespace depthchart;

namespace {

double now() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

void report(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-28s serial %8.3f s   openmp %8.3f s   speedup %5.2fx   %s\n", name, serial,
              parallel, serial / parallel, equal ? "results equal" : "RESULTS DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("built without openmp; both columns run serially\n");
#endif

  GenSpec spec = demo_spec();
  spec.n = 400000;
  spec.k = 2;

  double t0 = now();
  const ReferenceSeries serial_refs = gen_reference_serial(spec);
  const double gen_serial = now() - t0;
  t0 = now();
  const ReferenceSeries parallel_refs = gen_reference(spec);
  const double gen_parallel = now() - t0;
  bool gen_equal = true;
  for (int t = 0; t < spec.k; ++t)
    gen_equal = gen_equal && serial_refs.samples[static_cast<size_t>(t)].flat() ==
                                 parallel_refs.samples[static_cast<size_t>(t)].flat();
  report("gen_reference", gen_serial, gen_parallel, gen_equal);

  GenSpec depth_spec = demo_spec();
  depth_spec.n = 2500;
  depth_spec.k = 1;
  const Sample big = gen_reference(depth_spec).samples.front();
  t0 = now();
  const auto depths_serial = depth_all_serial(big);
  const double depth_serial = now() - t0;
  t0 = now();
  const auto depths_parallel = depth_all(big);
  const double depth_parallel = now() - t0;
  report("depth_all (n=2500, p=2)", depth_serial, depth_parallel,
         depths_serial == depths_parallel);

  GenSpec fit_spec = demo_spec();
  fit_spec.n = 600;
  const ReferenceSeries refs = gen_reference(fit_spec);
  const Trajectory traj = gen_patient(fit_spec);
  const QuantileProfile prof = profile(traj, refs);
  t0 = now();
  const DirectionFit fs = optimize_grid_2d_serial(traj, refs, prof, 2000);
  const double grid_serial = now() - t0;
  t0 = now();
  const DirectionFit fp = optimize_grid_2d(traj, refs, prof, 2000);
  const double grid_parallel = now() - t0;
  report("optimize_grid_2d (2000)", grid_serial, grid_parallel,
         fs.grid_index == fp.grid_index && fs.objective == fp.objective);

  return 0;
}
