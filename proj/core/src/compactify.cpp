#include "ineqcert/compactify.hpp"

namespace ineqcert {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Interval coef_K_compact(Mode mode, const Interval& c) {
  Interval r = intersect(cube(c) - 3 * c + 2, sqr(1 - c) * (2 + c));
  r.lo = std::max(r.lo, 0.0);
  if (mode == Mode::trig) r.hi = std::min(r.hi, 4.0);
  return r;
}

}  // namespace

CompactBox CompactBox::make(Mode mode, Interval t, Interval u, Interval v) {
  CompactBox b{mode, t, u, v};
  if (mode == Mode::trig) {
    Interval half_pi = ival_pi() * Interval(0.5);
    b.t = intersect(t, {0, ival_pi().hi});
    b.u = intersect(u, {0, half_pi.hi});
    b.v = intersect(v, {0, half_pi.hi});
  } else {
    b.t = intersect(t, {0, kInf});
    b.u = intersect(u, {0, kInf});
    b.v = intersect(v, {0, kInf});
  }
  return b;
}

double compact_x(Mode mode, double x) {
  if (mode == Mode::trig) return std::isinf(x) ? 2 * std::atan(1.0) : std::atan(x);
  return std::isinf(x) ? 0.0 : std::atanh(1.0 / x);
}

double uncompact_x(Mode mode, double u) {
  if (mode == Mode::trig) return u >= 2 * std::atan(1.0) ? kInf : std::tan(u);
  return u <= 0 ? kInf : 1.0 / std::tanh(u);
}

Interval uncompact_x(Mode mode, const Interval& u) {
  return mode == Mode::trig ? ival_tan(u) : ival_coth(u);
}

Box3 to_box(const CompactBox& b) {
  return Box3::make(b.mode, b.t, uncompact_x(b.mode, b.u), uncompact_x(b.mode, b.v));
}

Interval eval_compact(const CompactBox& b) {
  Interval r;
  if (b.mode == Mode::trig) {
    Interval s = intersect(ival_sin(b.t), {0, 1});
    Interval c = ival_cos(b.t);
    Interval s3 = intersect(sqr(s), 1 - sqr(c)) * s;
    Interval K = coef_K_compact(b.mode, c);
    Interval Tu = ival_tan(b.u), Tv = ival_tan(b.v);
    r = s3 * Tu * Tv + K * (Tu + Tv) - s3 - 6 * s - 6 * b.t + 6 * ival_pi() - 6 * b.u +
        ival_sin(2 * b.u) - 6 * b.v + ival_sin(2 * b.v);
  } else {
    Interval s = intersect(ival_sinh(b.t), {0, kInf});
    Interval c = ival_cosh(b.t);
    Interval s3 = intersect(sqr(s), sqr(c) - 1) * s;
    Interval K = coef_K_compact(b.mode, c);
    Interval Cu = ival_coth(b.u), Cv = ival_coth(b.v);
    r = s3 * Cu * Cv - K * (Cu + Cv) + s3 - 6 * s - 6 * b.t + 6 * b.u + ival_sinh(2 * b.u) +
        6 * b.v + ival_sinh(2 * b.v);
  }
  Interval direct = (b.mode == Mode::trig) ? eval_G_interval(to_box(b)) : eval_F_interval(to_box(b));
  return intersect(r, direct);
}

GradientBox eval_grad_compact(const CompactBox& b) {
  Box3 box = to_box(b);
  GradientBox g =
      (b.mode == Mode::trig) ? eval_gradG_interval(box) : eval_gradF_interval(box);
  GradientBox r;
  r.d_t = g.d_t;
  if (b.mode == Mode::trig) {
    // dx/du = sec^2 u = 1 + tan^2 u
    r.d_x = g.d_x * (1 + sqr(ival_tan(b.u)));
    r.d_y = g.d_y * (1 + sqr(ival_tan(b.v)));
  } else {
    // dx/du = 1 - coth^2 u (negative)
    r.d_x = g.d_x * (1 - sqr(ival_coth(b.u)));
    r.d_y = g.d_y * (1 - sqr(ival_coth(b.v)));
  }
  return r;
}

Interval eval_compact_mv(const CompactBox& b) {
  Interval naive = eval_compact(b);
  if (std::isinf(b.t.hi) || std::isinf(b.u.hi) || std::isinf(b.v.hi)) return naive;
  GradientBox g = eval_grad_compact(b);
  for (const Interval& gi : {g.d_t, g.d_x, g.d_y})
    if (std::isinf(gi.lo) || std::isinf(gi.hi)) return naive;
  double tm = b.t.mid(), um = b.u.mid(), vm = b.v.mid();
  CompactBox mb = CompactBox::make(b.mode, Interval(tm), Interval(um), Interval(vm));
  Interval mv =
      eval_compact(mb) + g.d_t * (b.t - tm) + g.d_x * (b.u - um) + g.d_y * (b.v - vm);
  return intersect(naive, mv);
}

namespace {

// Shared pieces of the scaled hyp form over a (possibly degenerate) box.
struct ScaledTerms {
  Interval s, c, s3, em, Cu, Cv, N, B;
};

ScaledTerms scaled_terms(const CompactBox& b) {
  ScaledTerms p;
  p.s = intersect(ival_sinh(b.t), {0, std::numeric_limits<double>::infinity()});
  p.c = ival_cosh(b.t);
  p.s3 = cube(p.s);
  p.em = ival_exp(-b.t);
  p.Cu = ival_coth(b.u);
  p.Cv = ival_coth(b.v);
  // s^3 - K with K = c^3 - 3c + 2: c^3 - s^3 = e^{-t}(c^2 + cs + s^2) and
  // c^2 + cs + s^2 = c^2 + s e^t, so s^3 - K = 3c - 2 - s - e^{-t} c^2.
  p.N = 3 * p.c - 2 - p.s - p.em * sqr(p.c);
  p.B = 6 * b.u + ival_sinh(2 * b.u) + 6 * b.v + ival_sinh(2 * b.v) - 6 * b.t - 6 * p.s;
  return p;
}

Interval scaled_hyp_value(const CompactBox& b) {
  ScaledTerms p = scaled_terms(b);
  return (p.Cu - 1) * (p.Cv - 1) + (p.N / p.s3) * (p.Cu + p.Cv) + p.B / p.s3;
}

}  // namespace

Interval eval_scaled_hyp(const CompactBox& b) {
  Interval naive = scaled_hyp_value(b);
  if (b.t.lo <= 0 || std::isinf(b.t.hi) || std::isinf(b.u.hi) || std::isinf(b.v.hi)) return naive;

  // Mean-value refinement.
  ScaledTerms p = scaled_terms(b);
  Interval cs = p.c / p.s;  // coth t
  Interval Np = 3 * p.s - p.c + p.em * sqr(p.c) - 2 * p.em * p.c * p.s;
  Interval g_t = ((Np - 3 * cs * p.N) / p.s3) * (p.Cu + p.Cv) +
                 (-6 - 6 * p.c - 3 * cs * p.B) / p.s3;
  Interval dCu = 1 - sqr(p.Cu), dCv = 1 - sqr(p.Cv);
  Interval g_u = dCu * (p.Cv - 1) + (p.N / p.s3) * dCu + (6 + 2 * ival_cosh(2 * b.u)) / p.s3;
  Interval g_v = dCv * (p.Cu - 1) + (p.N / p.s3) * dCv + (6 + 2 * ival_cosh(2 * b.v)) / p.s3;
  for (const Interval& gi : {g_t, g_u, g_v})
    if (std::isinf(gi.lo) || std::isinf(gi.hi)) return naive;

  double tm = b.t.mid(), um = b.u.mid(), vm = b.v.mid();
  Interval mid = scaled_hyp_value(CompactBox::make(b.mode, Interval(tm), Interval(um), Interval(vm)));
  Interval mv = mid + g_t * (b.t - tm) + g_u * (b.u - um) + g_v * (b.v - vm);
  return intersect(naive, mv);
}

double manifold_u(Mode mode, double t) {
  return mode == Mode::trig ? 2 * std::atan(1.0) - 0.5 * t : 0.5 * t;
}

Interval manifold_u(Mode mode, const Interval& t) {
  if (mode == Mode::trig) return ival_pi() * Interval(0.5) - Interval(0.5) * t;
  return Interval(0.5) * t;
}

}  // namespace ineqcert
