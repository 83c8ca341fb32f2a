// Tube geometry and per-slice certification of the equality manifold
// neighborhood. A slice is the tube cross-section over a short t-interval;
// it is certified by (1) an interval diagonal-dominance bound making the
// objective strictly convex in (x, y) on the capped cross-section, so the
// gradient has at most one zero there, (2) a Krawczyk contraction proving a
// stationary point exists in a tight enclosure of the manifold point, and
// (3) the exact ledger identity that the objective vanishes on the
// manifold. Convexity + interior stationary minimum with value 0 gives
// nonnegativity on the whole cross-section. Near t = pi (trig) the Hessian
// degenerates quartically and dominance must fail; those slices fall back
// to the scaled near-pi certificate, which covers the full quadrant for
// t within [pi - 0.9, pi].

#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "certifier_internal.hpp"
#include "ineqcert/corner.hpp"
#include "ineqcert/identities.hpp"
#include "ineqcert/scalar.hpp"

namespace ineqcert {
namespace detail_cert {

Interval s3_over(Mode mode, const Interval& t) {
  if (mode == Mode::trig) return cube(intersect(ival_sin(t), {0, 1}));
  return cube(intersect(ival_sinh(t), {0, std::numeric_limits<double>::infinity()}));
}

double hess_diag_double(Mode mode, double x) {
  double w = (mode == Mode::trig) ? 1 + x * x : x * x - 1;
  return 16 * x * x * x / (w * w * w);
}

namespace {

// Bisection for hess_diag_double(x) == level on a bracket where the
// function is monotone. Deterministic (fixed iteration count).
double bisect_h(Mode mode, double lo, double hi, double level, bool increasing) {
  for (int i = 0; i < 200; ++i) {
    double m = 0.5 * (lo + hi);
    if (m <= lo || m >= hi) break;
    bool below = hess_diag_double(mode, m) < level;
    if (below == increasing)
      lo = m;
    else
      hi = m;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

CapWindow cap_window(Mode mode, double s3_hi) {
  double level = kCapMargin * s3_hi;
  const double inf = std::numeric_limits<double>::infinity();
  if (!(level > 0)) return {0, inf};
  if (mode == Mode::trig) {
    // Unimodal with peak 2 at x = 1.
    if (level >= 2) return {1, 0};  // empty (cannot happen for s^3 <= 1)
    double xhi = 2 * std::cbrt(16 / level) + 2;
    return {bisect_h(mode, 0, 1, level, true), bisect_h(mode, 1, xhi, level, false)};
  }
  // Strictly decreasing from +inf on (1, inf).
  double xhi = 2 * std::cbrt(16 / level) + 2;
  return {1.0, bisect_h(mode, 1 + 1e-13, xhi, level, false)};
}

Interval inner_band(Mode mode, const Interval& t, double rho) {
  Interval us = manifold_u(mode, t);
  return {us.hi - rho, us.lo + rho};
}

Interval outer_band(Mode mode, const Interval& t, double rho) {
  Interval us = manifold_u(mode, t);
  return {us.lo - rho, us.hi + rho};
}

bool box_in_tube(const CompactBox& b, const TubeSpec& tube) {
  if (tube.rho <= 0) return false;
  Interval band = inner_band(b.mode, b.t, tube.rho);
  if (band.is_empty()) return false;
  if (!band.contains(b.u) || !band.contains(b.v)) return false;
  // Cap shrunk inward so dropped boxes stay strictly inside what the
  // slices certify even under bisection rounding noise.
  CapWindow cw = cap_window(b.mode, s3_over(b.mode, b.t).hi);
  double xlo = cw.xlo + 1e-9 * (1 + std::abs(cw.xlo));
  double xhi = cw.xhi - 1e-9 * (1 + std::abs(cw.xhi));
  Interval window(xlo, xhi);
  return window.contains(uncompact_x(b.mode, b.u)) && window.contains(uncompact_x(b.mode, b.v));
}

bool box_meets_tube(const CompactBox& b, const TubeSpec& tube) {
  if (tube.rho <= 0) return false;
  Interval band = outer_band(b.mode, b.t, tube.rho);
  return !intersect(b.u, band).is_empty() && !intersect(b.v, band).is_empty();
}

bool box_in_basin(const CompactBox& b) {
  return b.mode == Mode::trig && b.t.lo >= ival_pi().hi - kBasinT && b.u.hi <= kBasinU &&
         b.v.hi <= kBasinU;
}

}  // namespace detail_cert

namespace {

using detail_cert::cap_window;
using detail_cert::CapWindow;
using detail_cert::s3_over;

const corner::Outcome& near_pi_certificate() {
  static corner::Outcome out = corner::certify_near_pi();
  return out;
}

bool manifold_zero_ledger(Mode mode) {
  static std::mutex mu;
  static bool done[2] = {false, false};
  static bool ok[2] = {false, false};
  std::lock_guard<std::mutex> lock(mu);
  int i = (mode == Mode::trig) ? 0 : 1;
  if (!done[i]) {
    ok[i] = verify_step(mode, mode == Mode::trig ? "G_manifold_zero" : "F_manifold_zero").passed;
    done[i] = true;
  }
  return ok[i];
}

struct Mat2 {
  double a, b, c, d;
};

bool invert2(const Mat2& m, Mat2& out) {
  double det = m.a * m.d - m.b * m.c;
  if (!std::isfinite(det) || std::abs(det) < 1e-300) return false;
  out = {m.d / det, -m.b / det, -m.c / det, m.a / det};
  return true;
}

// Manifold u-enclosure clamped to the compact domain (t.hi may poke just
// past pi, where pi/2 - t/2 dips below 0).
Interval manifold_u_clamped(Mode mode, const Interval& t) {
  Interval dom = (mode == Mode::trig) ? Interval(0, (ival_pi() * Interval(0.5)).hi)
                                      : Interval(0, std::numeric_limits<double>::infinity());
  return intersect(manifold_u(mode, t), dom);
}

// One Krawczyk attempt over the t-subinterval: box sized from the manifold
// enclosure plus the Newton correction |C g(m)| so the root's drift across
// the subinterval fits inside the contraction basin.
bool kraw_once(Mode mode, const Interval& t, const Interval& x_used, Interval& out_box) {
  Interval x_star = uncompact_x(mode, manifold_u_clamped(mode, t));
  double mx = x_star.mid(), my = mx;
  double tm = t.mid();
  Mat2 hm, c;
  if (mode == Mode::trig)
    hm = {raw::g_dxx(tm, mx, my), raw::g_dxy(tm), raw::g_dxy(tm), raw::g_dxx(tm, my, mx)};
  else
    hm = {raw::f_dxx(tm, mx, my), raw::f_dxy(tm), raw::f_dxy(tm), raw::f_dxx(tm, my, mx)};
  if (!invert2(hm, c)) return false;

  Box3 mid_box = Box3::make(mode, t, Interval(mx), Interval(my));
  GradientBox gm = (mode == Mode::trig) ? eval_gradG_interval(mid_box) : eval_gradF_interval(mid_box);
  Interval cgx = Interval(c.a) * gm.d_x + Interval(c.b) * gm.d_y;
  Interval cgy = Interval(c.c) * gm.d_x + Interval(c.d) * gm.d_y;
  double r0 = std::max(std::max(std::abs(cgx.lo), std::abs(cgx.hi)),
                       std::max(std::abs(cgy.lo), std::abs(cgy.hi)));
  double hw = 2 * (r0 + x_star.width()) + 1e-9;

  Interval kx = intersect(Interval(mx - hw, mx + hw), x_used);
  Interval ky = kx;
  if (kx.is_empty() || !kx.contains(x_star)) return false;

  Box3 big = Box3::make(mode, t, kx, ky);
  HessBox2 hx = eval_hess_xy_interval(big);
  Interval rxx = 1 - (Interval(c.a) * hx.xx + Interval(c.b) * hx.xy);
  Interval rxy = -(Interval(c.a) * hx.xy + Interval(c.b) * hx.yy);
  Interval ryx = -(Interval(c.c) * hx.xx + Interval(c.d) * hx.xy);
  Interval ryy = 1 - (Interval(c.c) * hx.xy + Interval(c.d) * hx.yy);
  Interval dx = kx - mx, dy = ky - my;
  Interval Kx = mx - cgx + rxx * dx + rxy * dy;
  Interval Ky = my - cgy + ryx * dx + ryy * dy;
  if (kx.strictly_contains(Kx) && ky.strictly_contains(Ky)) {
    out_box = hull(out_box, intersect(Kx, kx));
    return true;
  }
  return false;
}

// Bisect in t until every subinterval contracts (the root moves with t, so
// narrow slices are needed where |dx*/dt| is large).
bool kraw_adaptive(Mode mode, const Interval& t, const Interval& x_used, int depth, int& attempts,
                   Interval& out_box) {
  ++attempts;
  if (kraw_once(mode, t, x_used, out_box)) return true;
  if (depth >= 14 || attempts > 40000) return false;
  double m = t.mid();
  return kraw_adaptive(mode, {t.lo, m}, x_used, depth + 1, attempts, out_box) &&
         kraw_adaptive(mode, {m, t.hi}, x_used, depth + 1, attempts, out_box);
}

SliceResult fail_or_fallback(Mode mode, const Interval& t, const std::string& why) {
  SliceResult r;
  if (mode == Mode::trig && t.lo >= ival_pi().hi - 0.9 && near_pi_certificate().proved) {
    r.verdict = SliceVerdict::fallback_used;
    r.detail = why + "; covered by the scaled near-pi certificate (t within [pi-0.9, pi])";
    return r;
  }
  r.verdict = SliceVerdict::failed;
  r.detail = why;
  return r;
}

}  // namespace

namespace detail_cert {
bool near_pi_proved() { return near_pi_certificate().proved; }
}  // namespace detail_cert

bool point_excluded(Mode mode, const TubeSpec& tube, double t, double u, double v) {
  if (mode == Mode::trig && t >= ival_pi().hi - detail_cert::kBasinT &&
      u <= detail_cert::kBasinU && v <= detail_cert::kBasinU)
    return true;
  if (tube.rho <= 0) return false;
  double us = manifold_u(mode, t);
  if (std::abs(u - us) > tube.rho || std::abs(v - us) > tube.rho) return false;
  detail_cert::CapWindow cw =
      cap_window(mode, s3_over(mode, Interval(t)).hi);
  double xu = uncompact_x(mode, u), xv = uncompact_x(mode, v);
  return xu >= cw.xlo && xu <= cw.xhi && xv >= cw.xlo && xv <= cw.xhi;
}

const char* slice_verdict_name(SliceVerdict v) {
  switch (v) {
    case SliceVerdict::certified: return "certified";
    case SliceVerdict::fallback_used: return "fallback_used";
    case SliceVerdict::failed: return "failed";
  }
  return "?";
}

SliceResult certify_tube_slice(Mode mode, const Interval& t, const TubeSpec& tube) {
  if (tube.rho <= 0) return {SliceVerdict::failed, 0, "tube disabled (rho <= 0)"};
  if (t.is_empty() || t.lo <= 0) return {SliceVerdict::failed, 0, "invalid t interval"};

  Interval half_pi = ival_pi() * Interval(0.5);
  Interval ustar = manifold_u_clamped(mode, t);
  Interval band = detail_cert::outer_band(mode, t, tube.rho);
  if (mode == Mode::trig) band = intersect(band, {0, half_pi.hi});
  else band = intersect(band, {0, std::numeric_limits<double>::infinity()});

  // Capped cross-section in x: dominance window around the manifold.
  Interval s3 = s3_over(mode, t);
  CapWindow cw = cap_window(mode, s3.hi);
  Interval x_full = uncompact_x(mode, band);
  Interval x_used = intersect(x_full, {cw.xlo, cw.xhi});
  Interval x_star = uncompact_x(mode, ustar);
  if (x_used.is_empty() || !x_used.contains(x_star))
    return fail_or_fallback(mode, t, "dominance window does not cover the manifold enclosure");

  // (1) Convexity: both Hessian diagonal entries exceed |off-diagonal| = s^3
  // on the capped square cross-section, so the objective is strictly convex
  // there and its gradient has at most one zero.
  Interval hd = hess_diag_interval(mode, x_used);
  if (!(hd.lo > s3.hi))
    return fail_or_fallback(mode, t, "diagonal dominance failed on the cross-section");

  // (2) Krawczyk: a stationary point exists in a tight box around the
  // manifold enclosure, uniformly over the t-slice (adaptively subdivided
  // in t where the root drifts fast).
  int iters = 0;
  Interval kx = Interval::empty();
  if (!kraw_adaptive(mode, t, x_used, 0, iters, kx))
    return fail_or_fallback(mode, t, "Krawczyk contraction failed on the cross-section");

  // (3) Exact vanishing on the manifold, from the identity ledger (never a
  // floating-point fact).
  if (!manifold_zero_ledger(mode))
    return {SliceVerdict::failed, iters, "ledger manifold-vanishing step failed"};

  std::ostringstream os;
  os << "convexity margin " << hd.lo << " > " << s3.hi << "; Krawczyk box x,y within [" << kx.lo
     << ", " << kx.hi << "]; manifold value exactly 0 (ledger)";
  return {SliceVerdict::certified, iters, os.str()};
}

}  // namespace ineqcert
