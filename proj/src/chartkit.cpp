#include "depthchart/chartkit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace depthchart {

double quantile_type7(const std::vector<double>& sorted, double p) {
  const int n = static_cast<int>(sorted.size());
  if (n == 0) throw ConfigError("quantile of an empty set");
  if (n == 1) return sorted[0];
  const double h = (n - 1) * p;
  const int i = static_cast<int>(std::floor(h));
  if (i + 1 >= n) return sorted[static_cast<size_t>(n - 1)];
  const double frac = h - i;
  return sorted[static_cast<size_t>(i)] +
         frac * (sorted[static_cast<size_t>(i + 1)] - sorted[static_cast<size_t>(i)]);
}

BoxStats box_stats(std::vector<double> values) {
  if (values.empty()) throw ConfigError("box_stats needs at least one value");
  std::sort(values.begin(), values.end());
  BoxStats b;
  b.q1 = quantile_type7(values, 0.25);
  b.median = quantile_type7(values, 0.5);
  b.q3 = quantile_type7(values, 0.75);
  const double iqr = b.q3 - b.q1;
  const double lo_fence = b.q1 - 1.5 * iqr;
  const double hi_fence = b.q3 + 1.5 * iqr;
  b.whisker_lo = b.q1;
  b.whisker_hi = b.q3;
  for (double v : values)
    if (v >= lo_fence) {
      b.whisker_lo = v;
      break;
    }
  for (auto it = values.rbegin(); it != values.rend(); ++it)
    if (*it <= hi_fence) {
      b.whisker_hi = *it;
      break;
    }
  for (double v : values)
    if (v < b.whisker_lo || v > b.whisker_hi) b.outliers.push_back(v);
  return b;
}

namespace {

constexpr int kPanel = 250;
constexpr int kMargin = 10;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string fmt_label(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (!(hi > lo)) {
      lo -= 0.5;
      hi += 0.5;
    } else {
      const double p = 0.04 * (hi - lo);
      lo -= p;
      hi += p;
    }
  }
};

// Maps data coordinates into one panel's plot rectangle (y axis flipped).
struct PanelMap {
  int x0, y0;
  Range xr, yr;

  double px(double x) const {
    return x0 + kMargin + (x - xr.lo) / (xr.hi - xr.lo) * (kPanel - 2 * kMargin);
  }
  double py(double y) const {
    return y0 + kMargin + (yr.hi - y) / (yr.hi - yr.lo) * (kPanel - 2 * kMargin);
  }
};

void open_doc(std::string& svg, int width, int height) {
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " + std::to_string(height) + "\">\n";
}

void panel_frame(std::string& svg, int x0, int y0, const std::string& caption) {
  svg += "<rect class=\"panel\" x=\"" + std::to_string(x0) + "\" y=\"" + std::to_string(y0) +
         "\" width=\"" + std::to_string(kPanel) + "\" height=\"" + std::to_string(kPanel) +
         "\" fill=\"#ffffff\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  svg += "<rect class=\"plot\" x=\"" + std::to_string(x0 + kMargin) + "\" y=\"" +
         std::to_string(y0 + kMargin) + "\" width=\"" + std::to_string(kPanel - 2 * kMargin) +
         "\" height=\"" + std::to_string(kPanel - 2 * kMargin) +
         "\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  if (!caption.empty())
    svg += "<text class=\"caption\" x=\"" + std::to_string(x0 + kMargin + 4) + "\" y=\"" +
           std::to_string(y0 + kMargin + 14) + "\" font-family=\"sans-serif\" font-size=\"11\">" +
           caption + "</text>\n";
}

void dot(std::string& svg, const char* cls, double cx, double cy, const char* r,
         const char* fill) {
  svg += "<circle class=\"";
  svg += cls;
  svg += "\" cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) + "\" r=\"";
  svg += r;
  svg += "\" fill=\"";
  svg += fill;
  svg += "\"/>\n";
}

void open_circle(std::string& svg, const char* cls, double cx, double cy, const char* r,
                 const char* stroke) {
  svg += "<circle class=\"";
  svg += cls;
  svg += "\" cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) + "\" r=\"";
  svg += r;
  svg += "\" fill=\"none\" stroke=\"";
  svg += stroke;
  svg += "\" stroke-width=\"1\"/>\n";
}

void cross(std::string& svg, const char* cls, double cx, double cy, double arm,
           const char* stroke) {
  svg += "<path class=\"";
  svg += cls;
  svg += "\" d=\"M" + fmt(cx - arm) + " " + fmt(cy - arm) + " L" + fmt(cx + arm) + " " +
         fmt(cy + arm) + " M" + fmt(cx - arm) + " " + fmt(cy + arm) + " L" + fmt(cx + arm) +
         " " + fmt(cy - arm) + "\" stroke=\"";
  svg += stroke;
  svg += "\" stroke-width=\"1\" fill=\"none\"/>\n";
}

void vline(std::string& svg, const char* cls, double x, double y1, double y2) {
  svg += "<line class=\"";
  svg += cls;
  svg += "\" x1=\"" + fmt(x) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x) + "\" y2=\"" +
         fmt(y2) + "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
}

void hline(std::string& svg, const char* cls, double x1, double x2, double y,
           const char* stroke) {
  svg += "<line class=\"";
  svg += cls;
  svg += "\" x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y) + "\" x2=\"" + fmt(x2) + "\" y2=\"" +
         fmt(y) + "\" stroke=\"";
  svg += stroke;
  svg += "\" stroke-width=\"1\"/>\n";
}

// Vertical Tukey boxplot centered at x_mid, plus the patient's value.
void draw_box(std::string& svg, const PanelMap& map, double x_mid, const BoxStats& b,
              double patient_value) {
  const double half = 40.0;
  const double y_q1 = map.py(b.q1), y_q3 = map.py(b.q3), y_med = map.py(b.median);
  const double y_wlo = map.py(b.whisker_lo), y_whi = map.py(b.whisker_hi);
  svg += "<rect class=\"box\" x=\"" + fmt(x_mid - half) + "\" y=\"" + fmt(y_q3) +
         "\" width=\"" + fmt(2 * half) + "\" height=\"" + fmt(y_q1 - y_q3) +
         "\" fill=\"#f0f0f0\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  hline(svg, "median", x_mid - half, x_mid + half, y_med, "#333333");
  vline(svg, "whisker", x_mid, y_q1, y_wlo);
  vline(svg, "whisker", x_mid, y_q3, y_whi);
  hline(svg, "whisker-cap", x_mid - half / 2, x_mid + half / 2, y_wlo, "#333333");
  hline(svg, "whisker-cap", x_mid - half / 2, x_mid + half / 2, y_whi, "#333333");
  for (double v : b.outliers) dot(svg, "box-outlier", x_mid, map.py(v), "1.5", "#777777");
  dot(svg, "glyph-patient", x_mid, map.py(patient_value), "4", "#000000");
}

// Per-time reference samples aligned to the trajectory.
std::vector<const Sample*> aligned_refs(const ReferenceSeries& refs, const Trajectory& traj) {
  traj.validate();
  refs.validate();
  std::vector<const Sample*> out;
  out.reserve(traj.times.size());
  for (double t : traj.times)
    out.push_back(&refs.samples[static_cast<size_t>(refs.index_of_time(t))]);
  return out;
}

}  // namespace

ChartDoc scatter_extremes(const Sample& ref, const std::vector<PointClass>& labels) {
  if (ref.dim() != 2) throw DimensionError("scatter_extremes needs a bivariate sample");
  if (static_cast<int>(labels.size()) != ref.size())
    throw ConfigError("one label per sample point required");

  PanelMap map{0, 0, {}, {}};
  for (int i = 0; i < ref.size(); ++i) {
    map.xr.add(ref.at(i, 0));
    map.yr.add(ref.at(i, 1));
  }
  map.xr.pad();
  map.yr.pad();

  std::string svg;
  open_doc(svg, kPanel, kPanel);
  panel_frame(svg, 0, 0, "");
  for (int i = 0; i < ref.size(); ++i) {
    const double cx = map.px(ref.at(i, 0));
    const double cy = map.py(ref.at(i, 1));
    switch (labels[static_cast<size_t>(i)]) {
      case PointClass::Extreme:
        open_circle(svg, "glyph-extreme", cx, cy, "3", "#d62728");
        break;
      case PointClass::Central:
        cross(svg, "glyph-central", cx, cy, 3.0, "#1f77b4");
        break;
      case PointClass::Ordinary:
        dot(svg, "glyph-ordinary", cx, cy, "1.5", "#555555");
        break;
    }
  }
  svg += "</svg>\n";
  return {std::move(svg), kPanel, kPanel, 1};
}

ChartDoc trajectory_panels(const ReferenceSeries& refs, const Trajectory& traj) {
  if (refs.dim() != 2) throw DimensionError("trajectory_panels needs bivariate samples");
  const std::vector<const Sample*> samples = aligned_refs(refs, traj);
  const int k = traj.size();

  Range xr, yr;
  for (const Sample* s : samples)
    for (int i = 0; i < s->size(); ++i) {
      xr.add(s->at(i, 0));
      yr.add(s->at(i, 1));
    }
  for (const Point& p : traj.points) {
    xr.add(p[0]);
    yr.add(p[1]);
  }
  xr.pad();
  yr.pad();

  std::string svg;
  open_doc(svg, k * kPanel, kPanel);
  for (int t = 0; t < k; ++t) {
    PanelMap map{t * kPanel, 0, xr, yr};
    panel_frame(svg, map.x0, 0, "t=" + fmt_label(traj.times[static_cast<size_t>(t)]));
    const Sample* s = samples[static_cast<size_t>(t)];
    for (int i = 0; i < s->size(); ++i)
      dot(svg, "glyph-ordinary", map.px(s->at(i, 0)), map.py(s->at(i, 1)), "1.5", "#555555");
    const Point& p = traj.points[static_cast<size_t>(t)];
    dot(svg, "glyph-patient", map.px(p[0]), map.py(p[1]), "4", "#000000");
  }
  svg += "</svg>\n";
  return {std::move(svg), k * kPanel, kPanel, k};
}

ChartDoc projected_boxplots(const ReferenceSeries& refs, const Trajectory& traj,
                            const UnitDirection& a) {
  const std::vector<const Sample*> samples = aligned_refs(refs, traj);
  if (a.dim() != refs.dim())
    throw DimensionError("direction dimension does not match the references");
  const int k = traj.size();

  std::vector<std::vector<double>> proj(static_cast<size_t>(k));
  std::vector<double> patient(static_cast<size_t>(k));
  Range yr;
  for (int t = 0; t < k; ++t) {
    const Sample* s = samples[static_cast<size_t>(t)];
    auto& column = proj[static_cast<size_t>(t)];
    column.reserve(static_cast<size_t>(s->size()));
    for (int i = 0; i < s->size(); ++i) {
      column.push_back(a.dot(s->row(i)));
      yr.add(column.back());
    }
    patient[static_cast<size_t>(t)] = a.dot(traj.points[static_cast<size_t>(t)].coords);
    yr.add(patient[static_cast<size_t>(t)]);
  }
  yr.pad();

  std::string svg;
  open_doc(svg, k * kPanel, kPanel);
  for (int t = 0; t < k; ++t) {
    PanelMap map{t * kPanel, 0, {}, yr};
    panel_frame(svg, map.x0, 0, "t=" + fmt_label(traj.times[static_cast<size_t>(t)]));
    const double x_mid = map.x0 + kPanel / 2.0;
    draw_box(svg, map, x_mid, box_stats(proj[static_cast<size_t>(t)]),
             patient[static_cast<size_t>(t)]);
  }
  svg += "</svg>\n";
  return {std::move(svg), k * kPanel, kPanel, k};
}

ChartDoc coordinate_boxplots(const ReferenceSeries& refs, const Trajectory& traj) {
  const std::vector<const Sample*> samples = aligned_refs(refs, traj);
  const int k = traj.size();
  const int p = refs.dim();

  // One shared range per coordinate row.
  std::vector<Range> rows(static_cast<size_t>(p));
  for (int c = 0; c < p; ++c) {
    for (const Sample* s : samples)
      for (int i = 0; i < s->size(); ++i) rows[static_cast<size_t>(c)].add(s->at(i, c));
    for (const Point& pt : traj.points) rows[static_cast<size_t>(c)].add(pt[c]);
    rows[static_cast<size_t>(c)].pad();
  }

  std::string svg;
  open_doc(svg, k * kPanel, p * kPanel);
  for (int c = 0; c < p; ++c) {
    for (int t = 0; t < k; ++t) {
      PanelMap map{t * kPanel, c * kPanel, {}, rows[static_cast<size_t>(c)]};
      panel_frame(svg, map.x0, map.y0,
                  "x" + std::to_string(c + 1) +
                      " t=" + fmt_label(traj.times[static_cast<size_t>(t)]));
      const Sample* s = samples[static_cast<size_t>(t)];
      std::vector<double> column;
      column.reserve(static_cast<size_t>(s->size()));
      for (int i = 0; i < s->size(); ++i) column.push_back(s->at(i, c));
      const double x_mid = map.x0 + kPanel / 2.0;
      draw_box(svg, map, x_mid, box_stats(std::move(column)),
               traj.points[static_cast<size_t>(t)][c]);
    }
  }
  svg += "</svg>\n";
  return {std::move(svg), k * kPanel, p * kPanel, p * k};
}

}  // namespace depthchart
