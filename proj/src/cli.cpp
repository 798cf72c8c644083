#include "depthchart/cli.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "depthchart/chartkit.hpp"
#include "depthchart/csv.hpp"
#include "depthchart/direction.hpp"
#include "depthchart/quantiles.hpp"
#include "depthchart/synthetic.hpp"

namespace depthchart::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write file '" + path + "'");
  out << text;
  if (!out) throw ConfigError("failed writing file '" + path + "'");
}

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json depth_json(const Depth& d) {
  return json{{"count", d.count}, {"n", d.n}, {"value", d.value()}};
}

struct Invocation {
  std::string ref_path;
  std::string patient_path;
  int angles = 500;
  int dirs = 2000;
  std::uint64_t seed = kDemoSeed;
  double low = 0.05;
  double high = 0.95;
  double p_level = 0.5;
  std::string out_path;
  std::string chart_kind;

  json inputs = json::object();
  bool used_seed = false;

  ReferenceSeries load_reference() {
    if (ref_path.empty()) throw ConfigError("--ref is required for this command");
    const std::string text = read_file(ref_path);
    inputs["ref"] = fnv1a_digest(text);
    return csv::parse_reference(text);
  }

  Trajectory load_patient() {
    if (patient_path.empty()) throw ConfigError("--patient is required for this command");
    const std::string text = read_file(patient_path);
    inputs["patient"] = fnv1a_digest(text);
    return csv::parse_patient(text);
  }

  DepthOptions depth_options() { return {dirs, seed}; }
};

json run_simulate(Invocation& inv) {
  GenSpec spec = demo_spec();
  spec.seed = inv.seed;
  inv.used_seed = true;
  const std::string prefix = inv.out_path.empty() ? "demo" : inv.out_path;
  const std::string ref_file = prefix + "_ref.csv";
  const std::string patient_file = prefix + "_patient.csv";
  write_file(ref_file, csv::write_reference(gen_reference(spec)));
  write_file(patient_file, csv::write_patient(gen_patient(spec)));
  return json{{"files", {{"ref", ref_file}, {"patient", patient_file}}},
              {"k", spec.k},
              {"n", spec.n},
              {"mean_start", spec.mean_start},
              {"mean_end", spec.mean_end},
              {"variances", spec.variances},
              {"correlation", spec.correlation},
              {"patient_drift", spec.patient_drift}};
}

json run_depth(Invocation& inv) {
  const ReferenceSeries refs = inv.load_reference();
  const Trajectory traj = inv.load_patient();
  inv.used_seed = refs.dim() > 2;
  json per_time = json::array();
  for (int i = 0; i < traj.size(); ++i) {
    const int t = refs.index_of_time(traj.times[static_cast<size_t>(i)]);
    const Depth d = point_depth(traj.points[static_cast<size_t>(i)],
                                refs.samples[static_cast<size_t>(t)], inv.depth_options());
    json entry = depth_json(d);
    entry["time"] = traj.times[static_cast<size_t>(i)];
    per_time.push_back(std::move(entry));
  }
  return json{{"per_time", std::move(per_time)}};
}

json run_profile(Invocation& inv) {
  const ReferenceSeries refs = inv.load_reference();
  const Trajectory traj = inv.load_patient();
  inv.used_seed = refs.dim() > 2;
  const QuantileProfile prof = profile(traj, refs, inv.depth_options());
  json depths = json::array();
  for (const Depth& d : prof.depths) depths.push_back(depth_json(d));
  return json{{"times", prof.times}, {"q", prof.q}, {"depths", std::move(depths)}};
}

json run_region(Invocation& inv) {
  const ReferenceSeries refs = inv.load_reference();
  inv.used_seed = refs.dim() > 2;
  json regions = json::array();
  for (int t = 0; t < refs.size(); ++t) {
    const DepthRegion r =
        depth_region(refs.samples[static_cast<size_t>(t)], inv.p_level, inv.depth_options());
    regions.push_back(json{{"time", refs.times[static_cast<size_t>(t)]},
                           {"gamma", r.gamma},
                           {"coverage", r.coverage},
                           {"member_indices", r.member_indices}});
  }
  return json{{"p_level", inv.p_level}, {"regions", std::move(regions)}};
}

DirectionFit fit_direction(Invocation& inv, const ReferenceSeries& refs,
                           const Trajectory& traj) {
  const QuantileProfile prof = profile(traj, refs, inv.depth_options());
  if (refs.dim() == 2) return optimize_grid_2d(traj, refs, prof, inv.angles);
  inv.used_seed = true;
  return optimize_sphere(traj, refs, prof, inv.dirs, inv.seed);
}

json run_direction(Invocation& inv) {
  const ReferenceSeries refs = inv.load_reference();
  const Trajectory traj = inv.load_patient();
  inv.used_seed = refs.dim() > 2;
  const DirectionFit fit = fit_direction(inv, refs, traj);
  json payload{{"direction", fit.direction.coords()},
               {"objective", fit.objective},
               {"q", fit.q},
               {"q_tilde", fit.q_tilde}};
  if (fit.grid_index) {
    payload["grid_index"] = *fit.grid_index;
    payload["angles"] = inv.angles;
  } else {
    payload["grid_index"] = nullptr;
    payload["dirs"] = inv.dirs;
  }
  return payload;
}

json run_chart(Invocation& inv) {
  const ReferenceSeries refs = inv.load_reference();
  inv.used_seed = refs.dim() > 2;
  const std::string out_file = inv.out_path.empty() ? "chart.svg" : inv.out_path;

  ChartDoc doc;
  json extra = json::object();
  if (inv.chart_kind == "extremes") {
    const Sample& first = refs.samples.front();
    doc = scatter_extremes(first,
                           classify_extremes(first, inv.low, inv.high, inv.depth_options()));
    extra["time"] = refs.times.front();
  } else if (inv.chart_kind == "trajectory") {
    doc = trajectory_panels(refs, inv.load_patient());
  } else if (inv.chart_kind == "projected") {
    const Trajectory traj = inv.load_patient();
    const DirectionFit fit = fit_direction(inv, refs, traj);
    doc = projected_boxplots(refs, traj, fit.direction);
    extra["direction"] = fit.direction.coords();
  } else if (inv.chart_kind == "coordinates") {
    doc = coordinate_boxplots(refs, inv.load_patient());
  } else {
    throw ConfigError("--chart must be one of extremes|trajectory|projected|coordinates");
  }

  write_file(out_file, doc.svg_text);
  json payload{{"chart", inv.chart_kind},
               {"file", out_file},
               {"width", doc.width},
               {"height", doc.height},
               {"panel_count", doc.panel_count}};
  payload.update(extra);
  return payload;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Depth-based multivariate growth charts"};
  app.require_subcommand(1);

  Invocation inv;

  auto add_common = [&](CLI::App* cmd, bool with_patient) {
    cmd->add_option("--ref", inv.ref_path, "reference series CSV");
    if (with_patient) cmd->add_option("--patient", inv.patient_path, "patient trajectory CSV");
    cmd->add_option("--dirs", inv.dirs, "sampled directions for dimension > 2");
    cmd->add_option("--seed", inv.seed, "seed for sampled directions");
  };

  CLI::App* sim = app.add_subcommand("simulate", "write a seeded demo dataset");
  sim->add_option("--seed", inv.seed, "generator seed");
  sim->add_option("--out", inv.out_path, "output file prefix");

  CLI::App* dep = app.add_subcommand("depth", "half-space depth of patient points");
  add_common(dep, true);

  CLI::App* prof = app.add_subcommand("profile", "per-time depth-rank quantiles");
  add_common(prof, true);

  CLI::App* dir = app.add_subcommand("direction", "fit the patient-specific direction");
  add_common(dir, true);
  dir->add_option("--angles", inv.angles, "grid angles on [0,pi) for 2-D");

  CLI::App* reg = app.add_subcommand("region", "depth region per time");
  add_common(reg, false);
  reg->add_option("--p-level", inv.p_level, "coverage level in (0,1]");

  CLI::App* cha = app.add_subcommand("chart", "render an SVG chart");
  add_common(cha, true);
  cha->add_option("--chart", inv.chart_kind, "extremes|trajectory|projected|coordinates")
      ->required();
  cha->add_option("--angles", inv.angles, "grid angles for the projected chart");
  cha->add_option("--low", inv.low, "extreme threshold");
  cha->add_option("--high", inv.high, "central threshold");
  cha->add_option("--out", inv.out_path, "output SVG path");

  std::vector<const char*> argv;
  argv.push_back("depthchart");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    json payload;
    std::string command;
    if (sim->parsed()) {
      command = "simulate";
      payload = run_simulate(inv);
    } else if (dep->parsed()) {
      command = "depth";
      payload = run_depth(inv);
    } else if (prof->parsed()) {
      command = "profile";
      payload = run_profile(inv);
    } else if (dir->parsed()) {
      command = "direction";
      payload = run_direction(inv);
    } else if (reg->parsed()) {
      command = "region";
      payload = run_region(inv);
    } else {
      command = "chart";
      payload = run_chart(inv);
    }

    json envelope{{"command", command}, {"version", kVersion}, {"inputs", inv.inputs}};
    if (inv.used_seed) envelope["seed"] = inv.seed;
    envelope["payload"] = std::move(payload);
    out << envelope.dump(2) << "\n";
    return 0;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace depthchart::cli
