#ifndef DEPTHCHART_CHARTKIT_HPP
#define DEPTHCHART_CHARTKIT_HPP

#include <string>
#include <vector>

#include "depthchart/direction.hpp"
#include "depthchart/quantiles.hpp"
#include "depthchart/types.hpp"

// Standalone SVG 1.1 charts. Rendering is a pure function of the inputs:
// fixed 250x250 panels, 10 px plot margins, inline styling, two-decimal
// coordinates, so identical inputs give byte-identical documents.

namespace depthchart {

struct ChartDoc {
  std::string svg_text;
  int width = 0;
  int height = 0;
  int panel_count = 0;
};

// Tukey boxplot statistics: type-7 quartiles, whiskers at the most extreme
// values within 1.5*IQR of the box, everything beyond listed as outliers.
struct BoxStats {
  double q1 = 0.0, median = 0.0, q3 = 0.0;
  double whisker_lo = 0.0, whisker_hi = 0.0;
  std::vector<double> outliers;
};

double quantile_type7(const std::vector<double>& sorted, double p);
BoxStats box_stats(std::vector<double> values);

// One scatter panel; extremes as open circles, central points as crosses,
// the rest as dots.
ChartDoc scatter_extremes(const Sample& ref, const std::vector<PointClass>& labels);

// One scatter panel per trajectory time with shared axes and the patient
// point as a filled circle.
ChartDoc trajectory_panels(const ReferenceSeries& refs, const Trajectory& traj);

// Per-time boxplots of the references projected onto a, with the projected
// patient value as a filled circle.
ChartDoc projected_boxplots(const ReferenceSeries& refs, const Trajectory& traj,
                            const UnitDirection& a);

// p rows by k columns of raw-coordinate boxplots with patient dots.
ChartDoc coordinate_boxplots(const ReferenceSeries& refs, const Trajectory& traj);

}  // namespace depthchart

#endif  // DEPTHCHART_CHARTKIT_HPP
