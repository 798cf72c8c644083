// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Runs everything from the pinned demo configuration.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "depthchart/chartkit.hpp"
#include "depthchart/cli.hpp"
#include "depthchart/csv.hpp"
#include "depthchart/direction.hpp"
#include "depthchart/quantiles.hpp"
#include "depthchart/synthetic.hpp"
#include "svg_checks.hpp"
#include "test_util.hpp"

using namespace depthchart;
using testutil::Stream;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

// Angular distance between two directions modulo sign.
double axis_distance(double a, double b) {
  constexpr double pi = 3.14159265358979323846;
  double d = std::fmod(std::fabs(a - b), pi);
  return std::min(d, pi - d);
}

double angle_of(const UnitDirection& a) { return std::atan2(a[1], a[0]); }

// ---------------------------------------------------------------------------
// criterion 1: exact 2-D kernel == exact-arithmetic oracle on 200 seeded
// configurations with duplicates and collinear triples
Check criterion_oracle_equivalence() {
  Check c;
  Stream stream{20061};
  int worst_n = 0;
  for (int rep = 0; rep < 200 && c.ok; ++rep) {
    const int n = stream.uniform_int(3, 200);
    worst_n = std::max(worst_n, n);
    std::vector<std::pair<double, double>> pts;
    pts.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      const int kind = stream.uniform_int(0, 9);
      if (kind == 0 && !pts.empty()) {  // duplicate
        pts.push_back(pts[static_cast<size_t>(
            stream.uniform_int(0, static_cast<int>(pts.size()) - 1))]);
      } else if (kind <= 2 && pts.size() >= 2) {  // collinear triple member
        const auto a = pts[static_cast<size_t>(
            stream.uniform_int(0, static_cast<int>(pts.size()) - 1))];
        const auto b = pts[static_cast<size_t>(
            stream.uniform_int(0, static_cast<int>(pts.size()) - 1))];
        const double w = stream.uniform_int(-2, 3);
        pts.emplace_back(a.first + w * (b.first - a.first),
                         a.second + w * (b.second - a.second));
      } else if (kind <= 5) {  // integer lattice
        pts.emplace_back(stream.uniform_int(-10, 10), stream.uniform_int(-10, 10));
      } else {  // gaussian cloud
        pts.emplace_back(2.5 * stream.normal(), 2.5 * stream.normal());
      }
    }
    const Sample s = testutil::make_2d(pts);

    Point q{{0.0, 0.0}};
    switch (stream.uniform_int(0, 3)) {
      case 0:
        q = s.point(stream.uniform_int(0, n - 1));
        break;
      case 1: {  // midpoint, often on a sample segment
        const Point a = s.point(stream.uniform_int(0, n - 1));
        const Point b = s.point(stream.uniform_int(0, n - 1));
        q = Point{{(a[0] + b[0]) / 2, (a[1] + b[1]) / 2}};
        break;
      }
      case 2:  // outside the hull
        q = Point{{static_cast<double>(stream.uniform_int(25, 80)),
                   static_cast<double>(stream.uniform_int(25, 80))}};
        break;
      default:
        q = Point{{2.5 * stream.normal(), 2.5 * stream.normal()}};
        break;
    }

    const Depth fast = depth_exact_2d(q, s);
    const Depth slow = depth_brute(q, s);
    c.expect(fast.count == slow.count,
             "config " + std::to_string(rep) + ": sweep " + std::to_string(fast.count) +
                 " != oracle " + std::to_string(slow.count));
  }
  return c;
}

// criterion 2: affine invariance, centerpoint bound, zero outside the hull
Check criterion_depth_invariants() {
  Check c;
  Stream stream{20062};

  for (int rep = 0; rep < 50; ++rep) {
    const int n = stream.uniform_int(5, 60);
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < n; ++i)
      pts.emplace_back(stream.uniform_int(-9, 9), stream.uniform_int(-9, 9));
    const Sample s = testutil::make_2d(pts);
    const Point q = s.point(stream.uniform_int(0, n - 1));

    int m00, m01, m10, m11;
    do {
      m00 = stream.uniform_int(-3, 3);
      m01 = stream.uniform_int(-3, 3);
      m10 = stream.uniform_int(-3, 3);
      m11 = stream.uniform_int(-3, 3);
    } while (m00 * m11 - m01 * m10 == 0);
    const double b0 = stream.uniform_int(-6, 6), b1 = stream.uniform_int(-6, 6);

    std::vector<std::pair<double, double>> mapped;
    for (auto& [x, y] : pts)
      mapped.emplace_back(m00 * x + m01 * y + b0, m10 * x + m11 * y + b1);
    const Point tq{{m00 * q[0] + m01 * q[1] + b0, m10 * q[0] + m11 * q[1] + b1}};

    const int before = depth_exact_2d(q, s).count;
    const int after = depth_exact_2d(tq, testutil::make_2d(mapped)).count;
    c.expect(before == after, "affine map " + std::to_string(rep) + ": " +
                                  std::to_string(before) + " -> " + std::to_string(after));
  }

  for (int rep = 0; rep < 50; ++rep) {
    const int n = stream.uniform_int(20, 120);
    const Sample s = testutil::gaussian_2d(n, stream);
    // The bound promises a point of the plane, not a sample point; witness
    // it by an exact-depth search over sample points plus a refined grid.
    const int deepest = testutil::max_depth_witness(s);
    const int bound = (n + 2) / 3;  // ceil(n/3)
    c.expect(deepest >= bound, "centerpoint bound violated: max depth " +
                                   std::to_string(deepest) + " < ceil(n/3) = " +
                                   std::to_string(bound) + " at n = " + std::to_string(n));
  }

  const Sample square = testutil::make_2d({{0, 0}, {6, 0}, {0, 6}, {6, 6}, {3, 3}, {2, 4}});
  for (const auto& [qx, qy] :
       std::vector<std::pair<double, double>>{{7, 3}, {-0.5, -0.5}, {3, 6.001}, {100, 100}})
    c.expect(depth_exact_2d(Point{{qx, qy}}, square).count == 0,
             "nonzero depth outside the hull at (" + fmt(qx) + "," + fmt(qy) + ")");
  return c;
}

// criterion 3: 1-D two-sided law
Check criterion_two_sided_law() {
  Check c;
  const Sample ref = testutil::iota_1d(100);
  for (int x = 1; x <= 100; ++x) {
    const double got = depth_quantile(Point{{static_cast<double>(x)}}, ref);
    if (x != 50 && x != 51) {
      // exact two-sided law, with the tails as closed half-line fractions
      const double hd = std::min(x, 101 - x) / 100.0;
      c.expect(got == 2.0 * hd, "exact 2*HD failed at x=" + std::to_string(x));
      // the open-tail form agrees within the rank granularity
      const double fhat = x / 100.0;
      c.expect(std::fabs(got - 2.0 * std::min(fhat, 1.0 - fhat)) <= 0.02 + 1e-12,
               "integer line x=" + std::to_string(x) + ": got " + fmt(got));
    }
  }

  Stream stream{20063};
  for (int rep = 0; rep < 5; ++rep) {
    const int n = 500;
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(stream.normal());
    for (int k = 0; k < 40; ++k) {
      const double x = 2.5 * stream.normal();
      int le = 0;
      for (double w : v) le += w <= x;
      const double fhat = static_cast<double>(le) / n;
      const double law = 2.0 * std::min(fhat, 1.0 - fhat);
      const double got = depth_quantile_1d(v, x);
      c.expect(std::fabs(got - law) <= 2.0 / n + 1e-12,
               "continuous sample: |" + fmt(got) + " - " + fmt(law) + "| > 2/n");
    }
  }
  return c;
}

// criterion 4: seeded example, strictly decreasing profile ending below 0.05
Check criterion_example_profile(const QuantileProfile& prof) {
  Check c;
  c.expect(prof.q.size() == 4, "expected four time points");
  for (size_t i = 1; i < prof.q.size(); ++i)
    c.expect(prof.q[i] < prof.q[i - 1],
             "profile not strictly decreasing at step " + std::to_string(i) + " (" +
                 fmt(prof.q[i - 1]) + " -> " + fmt(prof.q[i]) + ")");
  c.expect(prof.q.back() < 0.05, "final quantile " + fmt(prof.q.back()) + " >= 0.05");
  return c;
}

// criterion 5: grid direction fit against the drift axis and the fine grid
Check criterion_direction_fit(const ReferenceSeries& refs, const Trajectory& traj,
                              const QuantileProfile& prof, const GenSpec& spec) {
  Check c;
  const DirectionFit coarse = optimize_grid_2d(traj, refs, prof, 500);
  const DirectionFit fine = optimize_grid_2d(traj, refs, prof, 5000);

  c.expect(fine.objective <= coarse.objective + 1e-15,
           "fine grid objective " + fmt(fine.objective) + " above coarse " +
               fmt(coarse.objective));

  const double coarse_angle = angle_of(coarse.direction);
  const double fine_angle = angle_of(fine.direction);
  const double grid_gap = axis_distance(coarse_angle, fine_angle);
  c.expect(grid_gap <= 0.05,
           "coarse argmin " + fmt(grid_gap) + " rad from the fine argmin (> 0.05)");

  const double drift_angle = std::atan2(spec.patient_drift[1], spec.patient_drift[0]);
  const double axis_gap = axis_distance(coarse_angle, drift_angle);
  c.expect(axis_gap <= 0.20,
           "fit " + fmt(axis_gap) + " rad from the drift axis (> 0.20)");

  double gap_sum = 0.0;
  for (size_t j = 0; j < coarse.q.size(); ++j)
    gap_sum += std::fabs(coarse.q[j] - coarse.q_tilde[j]);
  const double mean_gap = gap_sum / coarse.q.size();
  c.expect(mean_gap <= 0.05, "mean |q - q~| = " + fmt(mean_gap) + " > 0.05");
  return c;
}

// criterion 6: univariate blindness of the per-coordinate charts
Check criterion_univariate_blindness(const ReferenceSeries& refs, const Trajectory& traj,
                                     const QuantileProfile& prof) {
  Check c;
  for (int t = 0; t < traj.size(); ++t) {
    const Sample& s = refs.samples[static_cast<size_t>(refs.index_of_time(
        traj.times[static_cast<size_t>(t)]))];
    for (int coord = 0; coord < 2; ++coord) {
      std::vector<double> column;
      column.reserve(static_cast<size_t>(s.size()));
      for (int i = 0; i < s.size(); ++i) column.push_back(s.at(i, coord));
      const double q1d =
          depth_quantile_1d(column, traj.points[static_cast<size_t>(t)][coord]);
      c.expect(q1d > 0.05, "coordinate " + std::to_string(coord + 1) + " at time index " +
                               std::to_string(t) + " has 1-D quantile " + fmt(q1d));
    }
  }
  c.expect(prof.q.back() < 0.05,
           "multivariate quantile at the last time is " + fmt(prof.q.back()));
  return c;
}

// criterion 7: randomized depth bound against the exact kernel
Check criterion_approx_sanity() {
  Check c;
  Stream stream{20067};
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 200;
    const Sample s = testutil::gaussian_2d(n, stream, 1.0 + stream.uniform(), 1.0);
    const Point q{{1.5 * stream.normal(), 1.5 * stream.normal()}};
    const int exact = depth_exact_2d(q, s).count;
    const int rough = depth_approx(q, s, 64, 7 + static_cast<std::uint64_t>(rep)).count;
    const int dense = depth_approx(q, s, 10000, 7 + static_cast<std::uint64_t>(rep)).count;
    c.expect(rough >= exact, "64-direction bound fell below exact");
    c.expect(dense >= exact, "10000-direction bound fell below exact");
    c.expect(static_cast<double>(dense - exact) / n <= 0.02,
             "gap " + fmt(static_cast<double>(dense - exact) / n) + " > 0.02 at rep " +
                 std::to_string(rep));
  }
  return c;
}

// criterion 8: rendering plus the CLI contracts on the demo
Check criterion_rendering_cli(const ReferenceSeries& refs, const Trajectory& traj) {
  namespace fs = std::filesystem;
  Check c;

  // chart invariants straight from the library
  const Sample& first = refs.samples.front();
  const auto labels = classify_extremes(first, 0.05, 0.95);
  int extreme = 0, central = 0, ordinary = 0;
  for (PointClass pc : labels) {
    extreme += pc == PointClass::Extreme;
    central += pc == PointClass::Central;
    ordinary += pc == PointClass::Ordinary;
  }
  const ChartDoc sc = scatter_extremes(first, labels);
  c.expect(svgcheck::xml_well_formed(sc.svg_text), "extreme scatter is not valid XML");
  c.expect(svgcheck::count_class(sc.svg_text, "glyph-extreme") == extreme,
           "extreme glyph count mismatch");
  c.expect(svgcheck::count_class(sc.svg_text, "glyph-central") == central,
           "central glyph count mismatch");
  c.expect(svgcheck::count_class(sc.svg_text, "glyph-ordinary") == ordinary,
           "ordinary glyph count mismatch");
  c.expect(scatter_extremes(first, labels).svg_text == sc.svg_text,
           "extreme scatter is not byte stable");

  const ChartDoc tp = trajectory_panels(refs, traj);
  c.expect(svgcheck::xml_well_formed(tp.svg_text), "trajectory panels are not valid XML");
  c.expect(svgcheck::count_class(tp.svg_text, "glyph-patient") == traj.size(),
           "trajectory patient glyph count mismatch");
  c.expect(svgcheck::count_class(tp.svg_text, "glyph-ordinary") ==
               refs.samples.front().size() * traj.size(),
           "trajectory reference glyph count mismatch");

  const QuantileProfile prof = profile(traj, refs);
  const DirectionFit fit = optimize_grid_2d(traj, refs, prof, 500);
  const ChartDoc pb = projected_boxplots(refs, traj, fit.direction);
  c.expect(svgcheck::xml_well_formed(pb.svg_text), "projected boxplots are not valid XML");
  c.expect(svgcheck::count_class(pb.svg_text, "glyph-patient") == traj.size(),
           "projected patient glyph count mismatch");
  c.expect(svgcheck::count_class(pb.svg_text, "box") == traj.size(),
           "projected box count mismatch");

  const ChartDoc cb = coordinate_boxplots(refs, traj);
  c.expect(svgcheck::xml_well_formed(cb.svg_text), "coordinate boxplots are not valid XML");
  c.expect(cb.panel_count == 2 * traj.size(), "coordinate panel count mismatch");
  c.expect(svgcheck::count_class(cb.svg_text, "glyph-patient") == 2 * traj.size(),
           "coordinate patient glyph count mismatch");

  // CLI end to end in a scratch directory
  const fs::path tmp = fs::temp_directory_path() / "depthchart_acceptance";
  fs::remove_all(tmp);
  fs::create_directories(tmp);
  auto at = [&](const std::string& name) { return (tmp / name).string(); };

  auto run = [&](const std::vector<std::string>& args, int expect_code,
                 const std::string& what) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    c.expect(code == expect_code, what + ": exit " + std::to_string(code) + " != " +
                                      std::to_string(expect_code));
    return out.str();
  };

  const std::string sim1 =
      run({"simulate", "--seed", std::to_string(kDemoSeed), "--out", at("demo")}, 0, "simulate");
  const std::string sim_ref = [&] {
    std::ifstream in(at("demo_ref.csv"), std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }();
  run({"simulate", "--seed", std::to_string(kDemoSeed), "--out", at("demo2")}, 0, "simulate2");
  {
    std::ifstream in(at("demo2_ref.csv"), std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    c.expect(buf.str() == sim_ref, "simulate runs are not byte identical");
  }
  c.expect(nlohmann::json::parse(sim1).at("command") == "simulate", "simulate envelope");

  // CSV round trip through the library types
  const ReferenceSeries parsed = csv::parse_reference(sim_ref);
  c.expect(csv::write_reference(parsed) == sim_ref, "reference CSV round trip not lossless");

  // stdout determinism of an analysis command
  const std::vector<std::string> prof_cmd{"profile", "--ref", at("demo_ref.csv"),
                                          "--patient", at("demo_patient.csv")};
  const std::string p1 = run(prof_cmd, 0, "profile");
  const std::string p2 = run(prof_cmd, 0, "profile again");
  c.expect(p1 == p2, "profile stdout is not deterministic");
  {
    const nlohmann::json env = nlohmann::json::parse(p1);
    c.expect(env.at("payload").at("q").size() == 4, "profile payload size");
  }

  // chart determinism through the CLI
  const std::vector<std::string> chart_cmd{
      "chart", "--ref", at("demo_ref.csv"), "--patient", at("demo_patient.csv"),
      "--chart", "trajectory", "--out", at("t.svg")};
  run(chart_cmd, 0, "chart");
  const std::string svg1 = [&] {
    std::ifstream in(at("t.svg"), std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }();
  run({"chart", "--ref", at("demo_ref.csv"), "--patient", at("demo_patient.csv"), "--chart",
       "trajectory", "--out", at("t2.svg")},
      0, "chart2");
  {
    std::ifstream in(at("t2.svg"), std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    c.expect(buf.str() == svg1, "chart bytes differ between runs");
  }
  c.expect(svgcheck::xml_well_formed(svg1), "CLI chart is not valid XML");

  // exit-code contract
  run({"bogus"}, 2, "unknown subcommand");
  run({"profile", "--ref", at("no_such.csv"), "--patient", at("demo_patient.csv")}, 2,
      "missing file");
  {
    std::ofstream bad(at("bad.csv"));
    bad << "time,x1\n1,oops\n";
  }
  run({"profile", "--ref", at("bad.csv"), "--patient", at("demo_patient.csv")}, 2,
      "malformed csv");
  run({"region", "--ref", at("demo_ref.csv"), "--p-level", "7"}, 2, "bad p-level");

  fs::remove_all(tmp);
  return c;
}

}  // namespace

int main() {
  struct Row {
    int id;
    std::string name;
    Check check;
    double seconds;
    double budget;  // 0 = untimed
  };
  std::vector<Row> rows;

  auto timed = [&](int id, const std::string& name, double budget,
                   const std::function<Check()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c = fn();
    const double secs = seconds_since(t0);
    if (budget > 0.0 && secs >= budget)
      c.expect(false, "runtime " + fmt(secs) + " s exceeded " + fmt(budget) + " s");
    rows.push_back({id, name, std::move(c), secs, budget});
  };

  timed(1, "oracle equivalence of the exact 2-D kernels", 10.0, criterion_oracle_equivalence);
  timed(2, "depth invariants (affine, centerpoint, hull)", 0.0, criterion_depth_invariants);
  timed(3, "1-D two-sided rank law", 0.0, criterion_two_sided_law);

  const GenSpec spec = demo_spec();
  ReferenceSeries refs;
  Trajectory traj;
  QuantileProfile prof;

  timed(4, "seeded example: strictly decreasing profile", 5.0, [&] {
    refs = gen_reference(spec);
    traj = gen_patient(spec);
    prof = profile(traj, refs);
    return criterion_example_profile(prof);
  });
  timed(5, "seeded example: patient-specific direction fit", 30.0,
        [&] { return criterion_direction_fit(refs, traj, prof, spec); });
  timed(6, "univariate blindness of per-coordinate ranks", 0.0,
        [&] { return criterion_univariate_blindness(refs, traj, prof); });
  timed(7, "randomized depth bound sanity", 0.0, criterion_approx_sanity);
  timed(8, "rendering and CLI contracts", 0.0,
        [&] { return criterion_rendering_cli(refs, traj); });

  int failures = 0;
  for (const Row& row : rows) {
    const bool pass = row.check.ok;
    failures += !pass;
    std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", pass ? "PASS" : "FAIL", row.id,
                row.name.c_str(), row.seconds, pass ? "" : " -- ",
                pass ? "" : row.check.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(rows.size()) - failures,
              rows.size());
  return failures == 0 ? 0 : 1;
}
