#include "ineqcert/interval.hpp"

namespace ineqcert {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// c^3 - 3c + 2 = (1-c)^2 (2+c); both forms evaluated and intersected.
// Nonnegative on c >= -1 (trig range [0,4], hyp range [0,inf)).
Interval coef_K(Mode mode, const Interval& c) {
  Interval naive = cube(c) - 3 * c + 2;
  Interval factored = sqr(1 - c) * (2 + c);
  Interval r = intersect(naive, factored);
  r.lo = std::max(r.lo, 0.0);
  if (mode == Mode::trig) r.hi = std::min(r.hi, 4.0);
  return r;
}

// 2x/(1+x^2) on x >= 0: unimodal with maximum 1 at x = 1, limit 0.
Interval h_trig(const Interval& x) {
  auto at = [](double v) -> Interval {
    if (std::isinf(v)) return Interval(0.0);
    Interval iv(v);
    return 2 * iv / (1 + sqr(iv));
  };
  Interval r = hull(at(x.lo), at(x.hi));
  if (x.contains(1.0)) r.hi = 1;
  return intersect(r, {0, 1});
}

// 4x^4/(1+x^2)^2 on x >= 0: increasing, limit 4.
Interval q_trig(const Interval& x) {
  auto at = [](double v) -> Interval {
    if (std::isinf(v)) return Interval(4.0);
    Interval iv2 = sqr(Interval(v));
    return 4 * sqr(iv2 / (1 + iv2));
  };
  return intersect({at(x.lo).lo, at(x.hi).hi}, {0, 4});
}

// 2x/(x^2-1) on x > 1: decreasing, +inf at 1, limit 0.
Interval h_hyp(const Interval& x) {
  auto at = [](double v) -> Interval {
    if (std::isinf(v)) return Interval(0.0);
    Interval iv(v);
    return 2 * iv / (sqr(iv) - 1);
  };
  double hi = x.lo <= 1 ? kInf : at(x.lo).hi;
  return {std::max(0.0, at(x.hi).lo), hi};
}

// 4x^4/(x^2-1)^2 on x > 1: decreasing, +inf at 1, limit 4.
Interval q_hyp(const Interval& x) {
  auto at = [](double v) -> Interval {
    if (std::isinf(v)) return Interval(4.0);
    Interval iv2 = sqr(Interval(v));
    return 4 * sqr(iv2 / (iv2 - 1));
  };
  double hi = x.lo <= 1 ? kInf : at(x.lo).hi;
  return {std::max(4.0, at(x.hi).lo), hi};
}

// atanh(1/x) on x > 1: decreasing, +inf at 1, limit 0.
Interval w_hyp(const Interval& x) {
  auto at = [](double v) -> Interval {
    if (std::isinf(v)) return Interval(0.0);
    return ival_arctanh(inv(Interval(v)), /*strict=*/false);
  };
  double hi = x.lo <= 1 ? kInf : at(x.lo).hi;
  return {std::max(0.0, at(x.hi).lo), hi};
}

Interval sin_dom(const Interval& t) {
  // t within [0, pi] in the domain, so sin t >= 0.
  return intersect(ival_sin(t), {0, 1});
}

struct TrigSC {
  Interval s, c, s2, s3;
};
TrigSC sc_trig(const Interval& t) {
  TrigSC r;
  r.s = sin_dom(t);
  r.c = ival_cos(t);
  r.s2 = intersect(sqr(r.s), 1 - sqr(r.c));
  r.s3 = r.s2 * r.s;
  return r;
}
TrigSC sc_hyp(const Interval& t) {
  TrigSC r;
  r.s = intersect(ival_sinh(t), {0, kInf});
  r.c = ival_cosh(t);
  r.s2 = intersect(sqr(r.s), sqr(r.c) - 1);
  r.s3 = r.s2 * r.s;
  return r;
}

}  // namespace

Interval eval_G_interval(const Box3& b) {
  TrigSC m = sc_trig(b.t);
  Interval K = coef_K(Mode::trig, m.c);
  return m.s3 * b.x * b.y + K * (b.x + b.y) - m.s3 - 6 * m.s - 6 * b.t + 6 * ival_pi() -
         6 * ival_arctan(b.x) + h_trig(b.x) - 6 * ival_arctan(b.y) + h_trig(b.y);
}

Interval eval_F_interval(const Box3& b) {
  TrigSC m = sc_hyp(b.t);
  Interval K = coef_K(Mode::hyp, m.c);
  return m.s3 * b.x * b.y - K * (b.x + b.y) + m.s3 - 6 * m.s - 6 * b.t + 6 * w_hyp(b.x) +
         h_hyp(b.x) + 6 * w_hyp(b.y) + h_hyp(b.y);
}

GradientBox eval_gradG_interval(const Box3& b) {
  TrigSC m = sc_trig(b.t);
  Interval s2c = m.s2 * m.c;
  Interval opc = 1 + m.c;  // within [0, 2]
  opc = intersect(opc, {0, 2});
  Interval bc = -sqr(opc) - m.s2 * opc;
  GradientBox g;
  g.d_t = 3 * s2c * b.x * b.y + 3 * m.s3 * (b.x + b.y) - 3 * s2c - 6 * m.c - 6;
  g.d_x = m.s3 * b.y + q_trig(b.x) + bc;
  g.d_y = m.s3 * b.x + q_trig(b.y) + bc;
  return g;
}

GradientBox eval_gradF_interval(const Box3& b) {
  TrigSC m = sc_hyp(b.t);
  Interval s2c = m.s2 * m.c;
  Interval opc = 1 + m.c;  // >= 2
  opc.lo = std::max(opc.lo, 2.0);
  Interval bc = sqr(opc) - m.s2 * opc;
  GradientBox g;
  g.d_t = 3 * s2c * b.x * b.y - 3 * m.s3 * (b.x + b.y) + 3 * s2c - 6 * m.c - 6;
  g.d_x = m.s3 * b.y - q_hyp(b.x) + bc;
  g.d_y = m.s3 * b.x - q_hyp(b.y) + bc;
  return g;
}

HessBox2 eval_hess_xy_interval(const Box3& b) {
  HessBox2 h;
  h.xx = hess_diag_interval(b.mode, b.x);
  h.yy = hess_diag_interval(b.mode, b.y);
  h.xy = (b.mode == Mode::trig) ? sc_trig(b.t).s3 : sc_hyp(b.t).s3;
  return h;
}

namespace {

template <typename EvalFn, typename GradFn>
Interval mv_refine(const Box3& b, EvalFn eval, GradFn grad) {
  Interval naive = eval(b);
  if (std::isinf(b.t.lo) || std::isinf(b.t.hi) || std::isinf(b.x.hi) || std::isinf(b.y.hi))
    return naive;
  GradientBox g = grad(b);
  for (const Interval& gi : {g.d_t, g.d_x, g.d_y})
    if (std::isinf(gi.lo) || std::isinf(gi.hi)) return naive;
  double tm = b.t.mid(), xm = b.x.mid(), ym = b.y.mid();
  Box3 mb = Box3::make(b.mode, Interval(tm), Interval(xm), Interval(ym));
  Interval mv = eval(mb) + g.d_t * (b.t - tm) + g.d_x * (b.x - xm) + g.d_y * (b.y - ym);
  return intersect(naive, mv);
}

}  // namespace

Interval eval_G_mv(const Box3& b) {
  return mv_refine(
      b, [](const Box3& bx) { return eval_G_interval(bx); },
      [](const Box3& bx) { return eval_gradG_interval(bx); });
}

Interval eval_F_mv(const Box3& b) {
  return mv_refine(
      b, [](const Box3& bx) { return eval_F_interval(bx); },
      [](const Box3& bx) { return eval_gradF_interval(bx); });
}

}  // namespace ineqcert
