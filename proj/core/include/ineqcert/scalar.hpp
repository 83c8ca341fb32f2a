#ifndef INEQCERT_SCALAR_HPP
#define INEQCERT_SCALAR_HPP

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ineqcert/poly.hpp"  // Mode

namespace ineqcert {

/// A point (t, x, y): trig mode t = theta in [0, pi], x, y >= 0;
/// hyp mode t = ell >= 0, x, y >= 1 (x = 1 or y = 1 is the singular
/// boundary where F = +inf).
struct EvalPoint {
  Mode mode = Mode::trig;
  double t = 0, x = 0, y = 0;

  static EvalPoint trig(double theta, double x, double y);
  static EvalPoint hyp(double ell, double x, double y);
  /// Throws domain_violation if the mode invariants fail.
  void validate() const;
  bool interior() const;
};

struct domain_violation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Condition { regular, near_singular, at_infinity };

struct ScalarResult {
  double value = 0;  // +inf when at_infinity
  Condition condition = Condition::regular;
};

struct Gradient3 {
  double d_t = 0, d_x = 0, d_y = 0;
  bool one_sided = false;  // set when the point sits on a domain boundary
};

struct SymMatrix2 {
  double xx = 0, xy = 0, yy = 0;
};

enum class GForm { direct, integral };

/// Proximity to the hyp singular boundary that flags near_singular.
inline constexpr double kSingularCutoff = 1e-12;

ScalarResult eval_G(const EvalPoint& p, GForm form = GForm::direct);
ScalarResult eval_F(const EvalPoint& p);
Gradient3 grad_G(const EvalPoint& p);
Gradient3 grad_F(const EvalPoint& p);
SymMatrix2 hessian_xy_G(const EvalPoint& p);
SymMatrix2 hessian_xy_F(const EvalPoint& p);

/// Equality-manifold parametrization: (cot(t/2), cot(t/2)) in trig mode,
/// (coth(t/2), coth(t/2)) in hyp mode. t = 0 is the point at infinity.
struct ManifoldPoint {
  double x = 0, y = 0;
  bool at_infinity = false;
};
ManifoldPoint manifold_point(Mode mode, double t);

/// Residuals of the equality-manifold identity, evaluated on the composed
/// function t -> (G or F)(t, m(t), m(t)) with m = cot(t/2) resp. coth(t/2).
/// The composition is identically zero; these residuals measure the
/// implemented formulas (the same templated evaluators as the double path)
/// at 50-digit precision, where the check is meaningful. A plain double
/// evaluation at the rounded manifold point cannot witness the identity at
/// large ell: the x-y Hessian grows like sinh^3(ell), so rounding x alone
/// contributes ~ sinh^3(ell) * ulp^2 to the value.
struct ManifoldResidual {
  double value = 0;
  double grad_t = 0, grad_x = 0, grad_y = 0;
};
ManifoldResidual manifold_residual(Mode mode, double t);

/// Closed-form raw evaluators shared by double paths, the high-precision
/// oracle and the finite-difference tests. T is any ordered field type
/// with sin/cos/atan/sinh/cosh/atanh found by ADL.
namespace raw {

using std::atan;
using std::atanh;
using std::cos;
using std::cosh;
using std::sin;
using std::sinh;

template <typename T>
T pi_of() {
  return 4 * atan(T(1));
}

/// 4*int_0^x s^4/(1+s^2)^2 ds = 4x - 6*atan(x) + 2x/(1+x^2)
template <typename T>
T four_A(const T& x) {
  return 4 * x - 6 * atan(x) + 2 * x / (1 + x * x);
}

template <typename T>
T g_direct(const T& t, const T& x, const T& y) {
  T s = sin(t), c = cos(t);
  return s * s * s * x * y + (c * c * c - 3 * c + 2) * (x + y) - s * s * s - 6 * s - 6 * t +
         6 * pi_of<T>() - 6 * atan(x) + 2 * x / (1 + x * x) - 6 * atan(y) + 2 * y / (1 + y * y);
}

template <typename T>
T g_integral(const T& t, const T& x, const T& y) {
  T s = sin(t), c = cos(t);
  return s * s * s * x * y + (c * c * c - 3 * c - 2) * (x + y) - s * s * s - 6 * s - 6 * t +
         6 * pi_of<T>() + four_A(x) + four_A(y);
}

template <typename T>
T f_value(const T& t, const T& x, const T& y) {
  T s = sinh(t), c = cosh(t);
  return s * s * s * x * y - (c * c * c - 3 * c + 2) * (x + y) + s * s * s - 6 * s - 6 * t +
         6 * atanh(1 / x) + 2 * x / (x * x - 1) + 6 * atanh(1 / y) + 2 * y / (y * y - 1);
}

template <typename T>
T g_dt(const T& t, const T& x, const T& y) {
  T s = sin(t), c = cos(t);
  return 3 * s * s * c * x * y + 3 * s * s * s * (x + y) - 3 * s * s * c - 6 * c - 6;
}

template <typename T>
T g_dx(const T& t, const T& x, const T& y) {
  T s = sin(t), c = cos(t);
  T w = 1 + x * x;
  return s * s * s * y + 4 * x * x * x * x / (w * w) - (1 + c) * (1 + c) - s * s * (1 + c);
}

template <typename T>
T f_dt(const T& t, const T& x, const T& y) {
  T s = sinh(t), c = cosh(t);
  return 3 * s * s * c * x * y - 3 * s * s * s * (x + y) + 3 * s * s * c - 6 * c - 6;
}

template <typename T>
T f_dx(const T& t, const T& x, const T& y) {
  T s = sinh(t), c = cosh(t);
  T w = x * x - 1;
  return s * s * s * y - 4 * x * x * x * x / (w * w) + (1 + c) * (1 + c) - s * s * (1 + c);
}

// Full Hessian entries (t, x, y order), used by the Newton solver.
template <typename T>
T g_dtt(const T& t, const T& x, const T& y) {
  T s = sin(t), c = cos(t);
  return (6 * s * c * c - 3 * s * s * s) * x * y + 9 * s * s * c * (x + y) - 6 * s * c * c +
         3 * s * s * s + 6 * s;
}
template <typename T>
T g_dtx(const T& t, const T& /*x*/, const T& y) {
  T s = sin(t), c = cos(t);
  return 3 * s * s * c * y + 3 * s * s * s;
}
template <typename T>
T g_dxx(const T& /*t*/, const T& x, const T& /*y*/) {
  T w = 1 + x * x;
  return 16 * x * x * x / (w * w * w);
}
template <typename T>
T g_dxy(const T& t) {
  T s = sin(t);
  return s * s * s;
}

template <typename T>
T f_dtt(const T& t, const T& x, const T& y) {
  T s = sinh(t), c = cosh(t);
  return (6 * s * c * c + 3 * s * s * s) * x * y - 9 * s * s * c * (x + y) + 6 * s * c * c +
         3 * s * s * s - 6 * s;
}
template <typename T>
T f_dtx(const T& t, const T& /*x*/, const T& y) {
  T s = sinh(t), c = cosh(t);
  return 3 * s * s * c * y - 3 * s * s * s;
}
template <typename T>
T f_dxx(const T& /*t*/, const T& x, const T& /*y*/) {
  T w = x * x - 1;
  return 16 * x * x * x / (w * w * w);
}
template <typename T>
T f_dxy(const T& t) {
  T s = sinh(t);
  return s * s * s;
}

}  // namespace raw

}  // namespace ineqcert

#endif
