#include "depthchart/depth.hpp"

#include <algorithm>
#include <limits>

#include "depthchart/predicates.hpp"
#include "depthchart/rng.hpp"

namespace depthchart {

namespace {

void require_dim(const Point& q, const Sample& s, int want = 0) {
  if (want != 0 && s.dim() != want)
    throw DimensionError("sample dimension " + std::to_string(s.dim()) +
                         ", expected " + std::to_string(want));
  if (q.dim() != s.dim())
    throw DimensionError("query dimension " + std::to_string(q.dim()) +
                         " does not match sample dimension " + std::to_string(s.dim()));
}

struct Vec2 {
  double x, y;
};

// Ray order around the circle: half-plane index first (angle in [0,pi) vs
// [pi,2pi)), exact cross sign within a half. Equal rays compare equal.
inline int half_index(const Vec2& v) {
  return (v.y > 0.0 || (v.y == 0.0 && v.x > 0.0)) ? 0 : 1;
}

inline bool ray_less(const Vec2& a, const Vec2& b) {
  const int ha = half_index(a), hb = half_index(b);
  if (ha != hb) return ha < hb;
  return pred::cross_sign(a.x, a.y, b.x, b.y) > 0;
}

inline bool ray_equal(const Vec2& a, const Vec2& b) {
  return half_index(a) == half_index(b) && pred::cross_sign(a.x, a.y, b.x, b.y) == 0;
}

// Splits s - q into nonzero offsets; returns the number of coincident points.
int offsets(const Point& q, const Sample& s, std::vector<Vec2>& z) {
  const int n = s.size();
  z.clear();
  z.reserve(static_cast<size_t>(n));
  int coincident = 0;
  for (int i = 0; i < n; ++i) {
    const double zx = s.at(i, 0) - q[0];
    const double zy = s.at(i, 1) - q[1];
    if (zx == 0.0 && zy == 0.0)
      ++coincident;
    else
      z.push_back({zx, zy});
  }
  return coincident;
}

}  // namespace

Depth depth_exact_1d(double x, const Sample& s) {
  if (s.dim() != 1) throw DimensionError("depth_exact_1d needs a one-dimensional sample");
  int le = 0, ge = 0;
  const int n = s.size();
  for (int i = 0; i < n; ++i) {
    const double v = s.at(i, 0);
    if (v <= x) ++le;
    if (v >= x) ++ge;
  }
  return {std::min(le, ge), n};
}

namespace {
struct SweepEvent {
  Vec2 ray;
  int delta;
};
}  // namespace

Depth depth_exact_2d(const Point& q, const Sample& s) {
  require_dim(q, s, 2);
  const int n = s.size();

  // Scratch reused across calls; each OpenMP thread owns its own copy.
  thread_local std::vector<Vec2> z;
  thread_local std::vector<SweepEvent> ev;

  const int coincident = offsets(q, s, z);
  const int m = static_cast<int>(z.size());
  if (m == 0) return {n, n};

  // Sweep the open half-circle window (beta, beta+pi). A point at angle
  // theta exits as beta passes theta and enters as beta passes theta - pi,
  // so each offset contributes an exit event at its own ray and an enter
  // event at the opposite ray.
  ev.clear();
  ev.reserve(2 * static_cast<size_t>(m));
  for (const Vec2& v : z) {
    ev.push_back({{v.x, v.y}, -1});
    ev.push_back({{-v.x, -v.y}, +1});
  }
  std::sort(ev.begin(), ev.end(),
            [](const SweepEvent& a, const SweepEvent& b) { return ray_less(a.ray, b.ray); });

  // Count for the window just past the first event ray: strictly
  // counterclockwise of it, or exactly antipodal to it.
  const Vec2 a0 = ev.front().ray;
  int count = 0;
  for (const Vec2& v : z) {
    const int cs = pred::cross_sign(a0.x, a0.y, v.x, v.y);
    if (cs > 0)
      ++count;
    else if (cs == 0 && pred::dot_sign(a0.x, a0.y, v.x, v.y) < 0)
      ++count;
  }

  int best = count;
  size_t i = 0;
  while (i < ev.size() && ray_equal(ev[i].ray, a0)) ++i;  // start group already applied
  while (i < ev.size()) {
    int delta = ev[i].delta;
    size_t j = i + 1;
    while (j < ev.size() && ray_equal(ev[j].ray, ev[i].ray)) delta += ev[j++].delta;
    count += delta;
    best = std::min(best, count);
    i = j;
  }
  return {coincident + best, n};
}

Depth depth_brute(const Point& q, const Sample& s) {
  require_dim(q, s, 2);
  const int n = s.size();

  thread_local std::vector<Vec2> z;
  const int coincident = offsets(q, s, z);
  const int m = static_cast<int>(z.size());
  if (m == 0) return {n, n};

  // The minimum over closed half-planes is attained on an open angular
  // interval adjacent to some boundary line through a sample offset, so it
  // suffices to perturb the line through each offset to both sides and take
  // the smaller closed side.
  int best = std::numeric_limits<int>::max();
  for (int k = 0; k < m; ++k) {
    int pos = 0, neg = 0, ray_fwd = 0, ray_back = 0;
    for (int j = 0; j < m; ++j) {
      const int cs = pred::cross_sign(z[k].x, z[k].y, z[j].x, z[j].y);
      if (cs > 0)
        ++pos;
      else if (cs < 0)
        ++neg;
      else if (pred::dot_sign(z[k].x, z[k].y, z[j].x, z[j].y) > 0)
        ++ray_fwd;
      else
        ++ray_back;
    }
    best = std::min({best, pos + ray_fwd, pos + ray_back, neg + ray_fwd, neg + ray_back});
  }
  return {coincident + best, n};
}

Depth depth_approx(const Point& q, const Sample& s, int n_dirs, std::uint64_t seed) {
  require_dim(q, s);
  if (n_dirs < 1) throw ConfigError("depth_approx needs at least one direction");
  const int n = s.size();
  const int p = s.dim();

  int best = n;
#pragma omp parallel for reduction(min : best) schedule(static)
  for (int d = 0; d < n_dirs; ++d) {
    const std::vector<double> u = rng::unit_vector(p, seed, static_cast<std::uint64_t>(d));
    int ge = 0, le = 0;
    for (int j = 0; j < n; ++j) {
      double dot = 0.0;
      const auto row = s.row(j);
      for (int c = 0; c < p; ++c) dot += u[static_cast<size_t>(c)] * (row[static_cast<size_t>(c)] - q[c]);
      if (dot >= 0.0) ++ge;
      if (dot <= 0.0) ++le;
    }
    best = std::min(best, std::min(ge, le));
  }
  return {best, n};
}

Depth point_depth(const Point& q, const Sample& s, const DepthOptions& opt) {
  require_dim(q, s);
  switch (s.dim()) {
    case 1:
      return depth_exact_1d(q[0], s);
    case 2:
      return depth_exact_2d(q, s);
    default:
      return depth_approx(q, s, opt.approx_dirs, opt.seed);
  }
}

namespace {

// All 1-D depths from one sort: with r points <= x and g points >= x the
// depth of x is min(r, g).
std::vector<Depth> depth_all_1d(const Sample& s) {
  const int n = s.size();
  std::vector<double> sorted(s.flat());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Depth> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = s.at(i, 0);
    const auto lo = std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
    const auto hi = std::upper_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
    const int le = static_cast<int>(hi);
    const int ge = n - static_cast<int>(lo);
    out[static_cast<size_t>(i)] = {std::min(le, ge), n};
  }
  return out;
}

template <bool Parallel>
std::vector<Depth> depth_all_impl(const Sample& s, const DepthOptions& opt) {
  if (s.dim() == 1) return depth_all_1d(s);
  const int n = s.size();
  std::vector<Depth> out(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic, 8) if (Parallel)
  for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = point_depth(s.point(i), s, opt);
  return out;
}

}  // namespace

std::vector<Depth> depth_all(const Sample& s, const DepthOptions& opt) {
  return depth_all_impl<true>(s, opt);
}

std::vector<Depth> depth_all_serial(const Sample& s, const DepthOptions& opt) {
  return depth_all_impl<false>(s, opt);
}

}  // namespace depthchart
