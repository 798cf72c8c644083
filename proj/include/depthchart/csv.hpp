#ifndef DEPTHCHART_CSV_HPP
#define DEPTHCHART_CSV_HPP

#include <string>

#include "depthchart/types.hpp"

// CSV exchange format: header `time,x1,...,xp`, numeric rows, `.` decimal
// separator, LF or CRLF line endings. Values are written with shortest
// round-trip formatting, so a write/parse cycle is lossless.

namespace depthchart::csv {

// Rows grouped by exact time label, within-time order preserved; times
// ascending in the result.
ReferenceSeries parse_reference(const std::string& text);

// At most one row per time; rows sorted by time in the result.
Trajectory parse_patient(const std::string& text);

std::string write_reference(const ReferenceSeries& series);
std::string write_patient(const Trajectory& traj);

}  // namespace depthchart::csv

#endif  // DEPTHCHART_CSV_HPP
