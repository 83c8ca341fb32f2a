#ifndef INEQCERT_INTERVAL_HPP
#define INEQCERT_INTERVAL_HPP

#include <algorithm>
#include <cmath>
#include <limits>

#include "ineqcert/poly.hpp"  // Mode

namespace ineqcert {

/// Closed real interval [lo, hi] with outward rounding: every operation
/// returns an interval containing the exact image of its inputs. Endpoints
/// may be infinite. Rounding is done by one-ulp nudging after each basic
/// operation and a wider safety nudge after libm calls (the mechanism is
/// stamped into certificates as "outward-nudge").
struct Interval {
  double lo = 0, hi = 0;

  Interval() = default;
  Interval(double v) : lo(v), hi(v) {}
  Interval(double l, double h) : lo(l), hi(h) {}

  static Interval empty() {
    return {std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  }
  static Interval entire() {
    return {-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  }
  bool is_empty() const { return lo > hi; }
  bool contains(double v) const { return lo <= v && v <= hi; }
  bool contains(const Interval& o) const { return o.is_empty() || (lo <= o.lo && o.hi <= hi); }
  bool strictly_contains(const Interval& o) const {
    return !o.is_empty() && lo < o.lo && o.hi < hi;
  }
  double width() const { return is_empty() ? 0 : hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
};

namespace rnd {
inline double down(double v) {
  return std::nextafter(v, -std::numeric_limits<double>::infinity());
}
inline double up(double v) { return std::nextafter(v, std::numeric_limits<double>::infinity()); }
/// Safety margin after libm calls (glibc elementary functions are
/// faithfully rounded to ~1 ulp; 4 ulps of slack absorbs that).
inline double down4(double v) { return down(down(down(down(v)))); }
inline double up4(double v) { return up(up(up(up(v)))); }
}  // namespace rnd

/// Enclosure of pi, width 2 ulps.
Interval ival_pi();

Interval operator-(const Interval& a);
Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);
inline Interval operator+(const Interval& a, double b) { return a + Interval(b); }
inline Interval operator-(const Interval& a, double b) { return a - Interval(b); }
inline Interval operator*(double a, const Interval& b) { return Interval(a) * b; }
inline Interval operator+(double a, const Interval& b) { return Interval(a) + b; }
inline Interval operator-(double a, const Interval& b) { return Interval(a) - b; }

Interval intersect(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);
Interval sqr(const Interval& a);
Interval cube(const Interval& a);
Interval pow_int(const Interval& a, int n);
Interval inv(const Interval& a);

Interval ival_sin(const Interval& a);
Interval ival_cos(const Interval& a);
Interval ival_arctan(const Interval& a);
/// tan on [0, pi/2]; arguments reaching pi/2 give hi = +inf.
Interval ival_tan(const Interval& a);
Interval ival_exp(const Interval& a);
Interval ival_sinh(const Interval& a);
Interval ival_cosh(const Interval& a);
/// requires a within (-1, 1); strict=false clamps, strict=true throws.
Interval ival_arctanh(const Interval& a, bool strict = false);
/// coth on (0, inf); arguments reaching 0 give hi = +inf.
Interval ival_coth(const Interval& a);

/// 3-dimensional box (t, x, y) with a mode tag; clipped to the domain
/// invariants of EvalPoint at construction.
struct Box3 {
  Mode mode = Mode::trig;
  Interval t, x, y;

  static Box3 make(Mode mode, Interval t, Interval x, Interval y);
};

/// Enclosures are over box-intersect-domain (Box3::make already clips), so
/// domain facts (sin t >= 0 in trig mode, cosh t >= 1 in hyp mode) are used
/// to sharpen them.
Interval eval_G_interval(const Box3& b);
Interval eval_F_interval(const Box3& b);

/// Mean-value form centered at the box midpoint, intersected with the
/// naive enclosure; falls back to naive when the box or gradient is
/// unbounded.
Interval eval_G_mv(const Box3& b);
Interval eval_F_mv(const Box3& b);

struct GradientBox {
  Interval d_t, d_x, d_y;
};
GradientBox eval_gradG_interval(const Box3& b);
GradientBox eval_gradF_interval(const Box3& b);

struct HessBox2 {
  Interval xx, xy, yy;
};
HessBox2 eval_hess_xy_interval(const Box3& b);

/// 16 z^3/(1+z^2)^3 (trig) or 16 z^3/(z^2-1)^3 (hyp): the diagonal Hessian
/// entry in x; monotone evaluation (tight) where the interval allows it.
Interval hess_diag_interval(Mode mode, const Interval& z);

}  // namespace ineqcert

#endif
