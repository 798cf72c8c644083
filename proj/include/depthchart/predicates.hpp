#ifndef DEPTHCHART_PREDICATES_HPP
#define DEPTHCHART_PREDICATES_HPP

#include <cmath>

// Exact sign tests for 2x2 determinants and dot products of doubles.
// A cheap floating-point filter answers the generic case; near-degenerate
// inputs fall through to an error-free expansion (two_sum / two_prod
// transformations), so collinear and duplicate configurations get exact
// signs with no epsilon thresholds.

namespace depthchart::pred {

namespace detail {

inline void two_sum(double a, double b, double& x, double& y) {
  x = a + b;
  double bv = x - a;
  double av = x - bv;
  y = (a - av) + (b - bv);
}

inline void two_diff(double a, double b, double& x, double& y) {
  x = a - b;
  double bv = a - x;
  double av = x + bv;
  y = (a - av) + (bv - b);
}

inline void two_prod(double a, double b, double& x, double& y) {
  x = a * b;
  y = std::fma(a, b, -x);
}

// Sign of the exact sum (p1 + p0) + s*(q1 + q0) where (p1,p0) and (q1,q0)
// are two_prod pairs and s is +1 or -1. Produces a four-component
// nonoverlapping expansion; its leading nonzero component carries the sign.
inline int expansion_sign(double p1, double p0, double q1, double q0, double s) {
  q1 *= s;
  q0 *= s;
  double i0, j0, t0, x0, x1, x2, x3;
  two_sum(p0, q0, i0, x0);
  two_sum(p1, i0, j0, t0);
  two_sum(t0, q1, i0, x1);
  two_sum(j0, i0, x3, x2);
  if (x3 != 0.0) return x3 > 0.0 ? 1 : -1;
  if (x2 != 0.0) return x2 > 0.0 ? 1 : -1;
  if (x1 != 0.0) return x1 > 0.0 ? 1 : -1;
  if (x0 != 0.0) return x0 > 0.0 ? 1 : -1;
  return 0;
}

inline int filtered_sign(double a, double b, double c, double d, double s) {
  double p = a * b;
  double q = s * (c * d);
  double est = p + q;
  double mag = std::fabs(p) + std::fabs(q);
  // 9 ulp-level slack; anything larger cannot change sign under rounding
  if (std::fabs(est) > 1e-15 * mag) return est > 0.0 ? 1 : -1;
  double p1, p0, q1, q0;
  two_prod(a, b, p1, p0);
  two_prod(c, d, q1, q0);
  return expansion_sign(p1, p0, q1, q0, s);
}

}  // namespace detail

// Exact sign of the cross product ax*by - ay*bx.
inline int cross_sign(double ax, double ay, double bx, double by) {
  return detail::filtered_sign(ax, by, ay, bx, -1.0);
}

// Exact sign of the dot product ax*bx + ay*by.
inline int dot_sign(double ax, double ay, double bx, double by) {
  return detail::filtered_sign(ax, bx, ay, by, +1.0);
}

}  // namespace depthchart::pred

#endif  // DEPTHCHART_PREDICATES_HPP
