#ifndef DEPTHCHART_TYPES_HPP
#define DEPTHCHART_TYPES_HPP

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace depthchart {

// Input or configuration problems surface as typed exceptions; the CLI maps
// all of them to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

class DimensionError : public InputError {
 public:
  explicit DimensionError(const std::string& what) : InputError(what) {}
};

class ConfigError : public InputError {
 public:
  explicit ConfigError(const std::string& what) : InputError(what) {}
};

class AlignmentError : public InputError {
 public:
  explicit AlignmentError(const std::string& what) : InputError(what) {}
};

class FormatError : public InputError {
 public:
  explicit FormatError(const std::string& what) : InputError(what) {}
};

// One p-dimensional observation vector.
struct Point {
  std::vector<double> coords;

  int dim() const { return static_cast<int>(coords.size()); }
  double operator[](int c) const { return coords[static_cast<size_t>(c)]; }
};

// An ordered set of n points sharing dimension p, stored row-major.
// Indices are stable identifiers; order is never changed after construction.
class Sample {
 public:
  Sample(int dim, std::vector<double> flat) : dim_(dim), flat_(std::move(flat)) {
    if (dim_ < 1) throw ConfigError("sample dimension must be >= 1");
    if (flat_.empty() || flat_.size() % static_cast<size_t>(dim_) != 0)
      throw ConfigError("sample data size is not a nonzero multiple of the dimension");
    for (double v : flat_)
      if (!std::isfinite(v)) throw ConfigError("sample coordinates must be finite");
  }

  static Sample from_points(const std::vector<Point>& pts) {
    if (pts.empty()) throw ConfigError("sample must contain at least one point");
    const int d = pts.front().dim();
    std::vector<double> flat;
    flat.reserve(pts.size() * static_cast<size_t>(d));
    for (const Point& p : pts) {
      if (p.dim() != d) throw DimensionError("points in a sample must share one dimension");
      flat.insert(flat.end(), p.coords.begin(), p.coords.end());
    }
    return Sample(d, std::move(flat));
  }

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(flat_.size() / static_cast<size_t>(dim_)); }

  std::span<const double> row(int i) const {
    return {flat_.data() + static_cast<size_t>(i) * dim_, static_cast<size_t>(dim_)};
  }
  double at(int i, int c) const { return flat_[static_cast<size_t>(i) * dim_ + c]; }

  Point point(int i) const {
    auto r = row(i);
    return Point{{r.begin(), r.end()}};
  }

  const std::vector<double>& flat() const { return flat_; }

 private:
  int dim_;
  std::vector<double> flat_;
};

// Half-space depth as an exact count over a sample of size n.
struct Depth {
  int count = 0;
  int n = 0;

  double value() const { return static_cast<double>(count) / n; }
};

inline bool operator==(const Depth& a, const Depth& b) {
  return a.count == b.count && a.n == b.n;
}

// One patient's time-indexed measurements.
struct Trajectory {
  std::vector<double> times;
  std::vector<Point> points;

  int size() const { return static_cast<int>(times.size()); }
  int dim() const { return points.empty() ? 0 : points.front().dim(); }

  void validate() const {
    if (times.empty() || times.size() != points.size())
      throw ConfigError("trajectory needs matching nonempty times and points");
    for (size_t i = 1; i < times.size(); ++i)
      if (!(times[i - 1] < times[i]))
        throw ConfigError("trajectory times must be strictly increasing");
    const int d = points.front().dim();
    for (const Point& p : points)
      if (p.dim() != d) throw DimensionError("trajectory points must share one dimension");
  }
};

// Time-indexed family of reference samples, all sharing dimension p.
struct ReferenceSeries {
  std::vector<double> times;
  std::vector<Sample> samples;

  int size() const { return static_cast<int>(times.size()); }
  int dim() const { return samples.empty() ? 0 : samples.front().dim(); }

  void validate() const {
    if (times.empty() || times.size() != samples.size())
      throw ConfigError("reference series needs matching nonempty times and samples");
    for (size_t i = 1; i < times.size(); ++i)
      if (!(times[i - 1] < times[i]))
        throw ConfigError("reference times must be strictly increasing");
    const int d = samples.front().dim();
    for (const Sample& s : samples)
      if (s.dim() != d) throw DimensionError("reference samples must share one dimension");
  }

  // Index of an exactly matching time label, or AlignmentError.
  int index_of_time(double t) const {
    for (size_t i = 0; i < times.size(); ++i)
      if (times[i] == t) return static_cast<int>(i);
    throw AlignmentError("no reference population at time " + std::to_string(t));
  }
};

}  // namespace depthchart

#endif  // DEPTHCHART_TYPES_HPP
