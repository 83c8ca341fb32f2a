#include "ineqcert/scalar.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace ineqcert {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

EvalPoint EvalPoint::trig(double theta, double x, double y) {
  EvalPoint p{Mode::trig, theta, x, y};
  p.validate();
  return p;
}

EvalPoint EvalPoint::hyp(double ell, double x, double y) {
  EvalPoint p{Mode::hyp, ell, x, y};
  p.validate();
  return p;
}

void EvalPoint::validate() const {
  if (!std::isfinite(t) || !std::isfinite(x) || !std::isfinite(y))
    throw domain_violation("non-finite coordinate");
  if (mode == Mode::trig) {
    if (t < 0 || t > kPi || x < 0 || y < 0)
      throw domain_violation("trig point outside [0,pi] x [0,inf)^2");
  } else {
    if (t < 0 || x < 1 || y < 1)
      throw domain_violation("hyp point outside [0,inf) x [1,inf)^2");
  }
}

bool EvalPoint::interior() const {
  if (mode == Mode::trig) return t > 0 && t < kPi;
  return t > 0 && x > 1 && y > 1;
}

ScalarResult eval_G(const EvalPoint& p, GForm form) {
  p.validate();
  if (p.mode != Mode::trig) throw domain_violation("eval_G requires trig mode");
  double v = (form == GForm::direct) ? raw::g_direct(p.t, p.x, p.y) : raw::g_integral(p.t, p.x, p.y);
  return {v, Condition::regular};
}

ScalarResult eval_F(const EvalPoint& p) {
  p.validate();
  if (p.mode != Mode::hyp) throw domain_violation("eval_F requires hyp mode");
  if (p.x == 1.0 || p.y == 1.0)
    return {std::numeric_limits<double>::infinity(), Condition::at_infinity};
  ScalarResult r{raw::f_value(p.t, p.x, p.y), Condition::regular};
  if (p.x - 1 < kSingularCutoff || p.y - 1 < kSingularCutoff) r.condition = Condition::near_singular;
  return r;
}

Gradient3 grad_G(const EvalPoint& p) {
  p.validate();
  if (p.mode != Mode::trig) throw domain_violation("grad_G requires trig mode");
  Gradient3 g;
  g.d_t = raw::g_dt(p.t, p.x, p.y);
  g.d_x = raw::g_dx(p.t, p.x, p.y);
  g.d_y = raw::g_dx(p.t, p.y, p.x);
  g.one_sided = !p.interior() || p.x == 0 || p.y == 0;
  return g;
}

Gradient3 grad_F(const EvalPoint& p) {
  p.validate();
  if (p.mode != Mode::hyp) throw domain_violation("grad_F requires hyp mode");
  if (p.x == 1.0 || p.y == 1.0) throw domain_violation("grad_F at singular boundary");
  Gradient3 g;
  g.d_t = raw::f_dt(p.t, p.x, p.y);
  g.d_x = raw::f_dx(p.t, p.x, p.y);
  g.d_y = raw::f_dx(p.t, p.y, p.x);
  g.one_sided = !p.interior();
  return g;
}

SymMatrix2 hessian_xy_G(const EvalPoint& p) {
  p.validate();
  if (p.mode != Mode::trig) throw domain_violation("hessian_xy_G requires trig mode");
  return {raw::g_dxx(p.t, p.x, p.y), raw::g_dxy(p.t), raw::g_dxx(p.t, p.y, p.x)};
}

SymMatrix2 hessian_xy_F(const EvalPoint& p) {
  p.validate();
  if (p.mode != Mode::hyp) throw domain_violation("hessian_xy_F requires hyp mode");
  return {raw::f_dxx(p.t, p.x, p.y), raw::f_dxy(p.t), raw::f_dxx(p.t, p.y, p.x)};
}

ManifoldPoint manifold_point(Mode mode, double t) {
  if (t < 0) throw domain_violation("manifold_point: negative t");
  if (mode == Mode::trig && t > kPi) throw domain_violation("manifold_point: t > pi");
  if (t == 0) return {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(), true};
  double v = (mode == Mode::trig) ? 1.0 / std::tan(t / 2) : 1.0 / std::tanh(t / 2);
  return {v, v, false};
}

ManifoldResidual manifold_residual(Mode mode, double t) {
  using big = boost::multiprecision::cpp_bin_float_50;
  if (t <= 0) throw domain_violation("manifold_residual: t must be positive");
  if (mode == Mode::trig && t > kPi) throw domain_violation("manifold_residual: t > pi");
  const big tt = t, half = tt / 2;
  const big m = mode == Mode::trig ? cos(half) / sin(half) : cosh(half) / sinh(half);
  ManifoldResidual r;
  if (mode == Mode::trig) {
    r.value = static_cast<double>(raw::g_direct(tt, m, m));
    r.grad_t = static_cast<double>(raw::g_dt(tt, m, m));
    r.grad_x = static_cast<double>(raw::g_dx(tt, m, m));
  } else {
    r.value = static_cast<double>(raw::f_value(tt, m, m));
    r.grad_t = static_cast<double>(raw::f_dt(tt, m, m));
    r.grad_x = static_cast<double>(raw::f_dx(tt, m, m));
  }
  r.grad_y = r.grad_x;
  return r;
}

}  // namespace ineqcert
