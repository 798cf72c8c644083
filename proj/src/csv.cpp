#include "depthchart/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <vector>

namespace depthchart::csv {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

double parse_number(const std::string& field, int line_no) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value))
    throw FormatError("line " + std::to_string(line_no) + ": invalid number '" + field + "'");
  return value;
}

// Returns the dimension p declared by the header `time,x1,...,xp`.
int parse_header(const std::vector<std::string>& lines) {
  if (lines.empty()) throw FormatError("missing header line");
  const std::vector<std::string> cols = split_fields(lines.front());
  if (cols.size() < 2 || cols.front() != "time")
    throw FormatError("header must be 'time,x1,...,xp'");
  for (size_t i = 1; i < cols.size(); ++i)
    if (cols[i] != "x" + std::to_string(i))
      throw FormatError("header must be 'time,x1,...,xp'");
  return static_cast<int>(cols.size()) - 1;
}

struct Row {
  double time;
  std::vector<double> coords;
};

std::vector<Row> parse_rows(const std::vector<std::string>& lines, int p) {
  std::vector<Row> rows;
  for (size_t i = 1; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    const std::vector<std::string> fields = split_fields(lines[i]);
    if (static_cast<int>(fields.size()) != p + 1)
      throw FormatError("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(p + 1) + " fields, got " +
                        std::to_string(fields.size()));
    Row row;
    row.time = parse_number(fields[0], line_no);
    row.coords.reserve(static_cast<size_t>(p));
    for (int c = 0; c < p; ++c)
      row.coords.push_back(parse_number(fields[static_cast<size_t>(c) + 1], line_no));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw FormatError("no data rows");
  return rows;
}

std::string fmt(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return {buf, ptr};
}

}  // namespace

ReferenceSeries parse_reference(const std::string& text) {
  const std::vector<std::string> lines = split_lines(text);
  const int p = parse_header(lines);
  const std::vector<Row> rows = parse_rows(lines, p);

  std::map<double, std::vector<double>> groups;  // time -> flat coords, input order
  for (const Row& row : rows) {
    auto& flat = groups[row.time];
    flat.insert(flat.end(), row.coords.begin(), row.coords.end());
  }

  ReferenceSeries series;
  for (auto& [time, flat] : groups) {
    series.times.push_back(time);
    series.samples.emplace_back(p, std::move(flat));
  }
  series.validate();
  return series;
}

Trajectory parse_patient(const std::string& text) {
  const std::vector<std::string> lines = split_lines(text);
  const int p = parse_header(lines);
  std::vector<Row> rows = parse_rows(lines, p);

  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row& a, const Row& b) { return a.time < b.time; });
  for (size_t i = 1; i < rows.size(); ++i)
    if (rows[i].time == rows[i - 1].time)
      throw FormatError("duplicate time " + fmt(rows[i].time));

  Trajectory traj;
  for (Row& row : rows) {
    traj.times.push_back(row.time);
    traj.points.push_back(Point{std::move(row.coords)});
  }
  traj.validate();
  return traj;
}

std::string write_reference(const ReferenceSeries& series) {
  series.validate();
  const int p = series.dim();
  std::string out = "time";
  for (int c = 1; c <= p; ++c) out += ",x" + std::to_string(c);
  out += "\n";
  for (int t = 0; t < series.size(); ++t) {
    const Sample& s = series.samples[static_cast<size_t>(t)];
    for (int i = 0; i < s.size(); ++i) {
      out += fmt(series.times[static_cast<size_t>(t)]);
      for (int c = 0; c < p; ++c) out += "," + fmt(s.at(i, c));
      out += "\n";
    }
  }
  return out;
}

std::string write_patient(const Trajectory& traj) {
  traj.validate();
  const int p = traj.dim();
  std::string out = "time";
  for (int c = 1; c <= p; ++c) out += ",x" + std::to_string(c);
  out += "\n";
  for (int i = 0; i < traj.size(); ++i) {
    out += fmt(traj.times[static_cast<size_t>(i)]);
    for (int c = 0; c < p; ++c) out += "," + fmt(traj.points[static_cast<size_t>(i)][c]);
    out += "\n";
  }
  return out;
}

}  // namespace depthchart::csv
