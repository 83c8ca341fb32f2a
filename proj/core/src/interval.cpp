#include "ineqcert/interval.hpp"

#include <stdexcept>

namespace ineqcert {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPiLo = 3.1415926535897931;  // < pi
// nextafter(kPiLo, inf) > pi; computed at runtime for the upper endpoint.

double mul_lo(double a, double b) {
  if (a == 0 || b == 0) return 0;  // endpoint convention: 0 * inf = 0
  return rnd::down(a * b);
}
double mul_hi(double a, double b) {
  if (a == 0 || b == 0) return 0;
  return rnd::up(a * b);
}

}  // namespace

Interval ival_pi() { return {kPiLo, rnd::up(kPiLo)}; }

Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator+(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  return {rnd::down(a.lo + b.lo), rnd::up(a.hi + b.hi)};
}

Interval operator-(const Interval& a, const Interval& b) { return a + (-b); }

Interval operator*(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  double lo = std::min(std::min(mul_lo(a.lo, b.lo), mul_lo(a.lo, b.hi)),
                       std::min(mul_lo(a.hi, b.lo), mul_lo(a.hi, b.hi)));
  double hi = std::max(std::max(mul_hi(a.lo, b.lo), mul_hi(a.lo, b.hi)),
                       std::max(mul_hi(a.hi, b.lo), mul_hi(a.hi, b.hi)));
  return {lo, hi};
}

Interval inv(const Interval& a) {
  if (a.is_empty()) return Interval::empty();
  if (a.lo <= 0 && a.hi >= 0) {
    if (a.lo == 0 && a.hi == 0) throw std::domain_error("interval division by exact zero");
    if (a.lo == 0) return {rnd::down(1 / a.hi), kInf};
    if (a.hi == 0) return {-kInf, rnd::up(1 / a.lo)};
    return Interval::entire();
  }
  double lo = std::isinf(a.hi) ? (a.hi > 0 ? 0.0 : -0.0) : rnd::down(1 / a.hi);
  double hi = std::isinf(a.lo) ? (a.lo > 0 ? 0.0 : -0.0) : rnd::up(1 / a.lo);
  return {lo, hi};
}

Interval operator/(const Interval& a, const Interval& b) { return a * inv(b); }

Interval intersect(const Interval& a, const Interval& b) {
  Interval r{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
  return r;
}

Interval hull(const Interval& a, const Interval& b) {
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Interval sqr(const Interval& a) {
  if (a.is_empty()) return Interval::empty();
  double l0 = std::abs(a.lo), h0 = std::abs(a.hi);
  double m = std::max(l0, h0);
  double hi = std::isinf(m) ? kInf : rnd::up(m * m);
  if (a.lo <= 0 && a.hi >= 0) return {0, hi};
  double mn = std::min(l0, h0);
  return {rnd::down(mn * mn), hi};
}

Interval cube(const Interval& a) {
  if (a.is_empty()) return Interval::empty();
  auto c = [](double v) { return v * v * v; };
  double lo = std::isinf(a.lo) ? a.lo : rnd::down(rnd::down(c(a.lo)));
  double hi = std::isinf(a.hi) ? a.hi : rnd::up(rnd::up(c(a.hi)));
  return {lo, hi};
}

Interval pow_int(const Interval& a, int n) {
  if (n == 0) return Interval(1);
  if (n % 2 == 1) {
    Interval r = a;
    for (int i = 1; i < n; i += 2) r = r * sqr(a);
    return r;
  }
  Interval r = sqr(a);
  for (int i = 2; i < n; i += 2) r = r * sqr(a);
  return r;
}

namespace {

// Does [a] possibly contain crit + k*period for some integer k in [-2, 2]?
bool possibly_hits(const Interval& a, double crit_factor_of_pi) {
  Interval pi = ival_pi();
  for (int k = -2; k <= 2; ++k) {
    Interval crit = pi * Interval(crit_factor_of_pi + 2.0 * k);
    if (a.hi >= crit.lo && a.lo <= crit.hi) return true;
  }
  return false;
}

Interval lib_point(double v, double (*f)(double)) {
  double y = f(v);
  return {rnd::down4(y), rnd::up4(y)};
}

}  // namespace

Interval ival_sin(const Interval& a) {
  if (a.is_empty()) return Interval::empty();
  if (std::isinf(a.lo) || std::isinf(a.hi) || a.width() > 6.4) return {-1, 1};
  Interval r = hull(lib_point(a.lo, std::sin), lib_point(a.hi, std::sin));
  if (possibly_hits(a, 0.5)) r.hi = 1;
  if (possibly_hits(a, -0.5)) r.lo = -1;
  r.lo = std::max(r.lo, -1.0);
  r.hi = std::min(r.hi, 1.0);
  return r;
}

Interval ival_cos(const Interval& a) {
  if (a.is_empty()) return Interval::empty();
  if (std::isinf(a.lo) || std::isinf(a.hi) || a.width() > 6.4) return {-1, 1};
  Interval r = hull(lib_point(a.lo, std::cos), lib_point(a.hi, std::cos));
  if (possibly_hits(a, 0.0)) r.hi = 1;
  if (possibly_hits(a, 1.0)) r.lo = -1;
  r.lo = std::max(r.lo, -1.0);
  r.hi = std::min(r.hi, 1.0);
  return r;
}

Interval ival_arctan(const Interval& a) {
  if (a.is_empty()) return Interval::empty();
  double lo = std::isinf(a.lo) ? (a.lo < 0 ? -ival_pi().hi / 2 : kInf) : rnd::down4(std::atan(a.lo));
  double hi = std::isinf(a.hi) ? (a.hi > 0 ? ival_pi().hi / 2 : -kInf) : rnd::up4(std::atan(a.hi));
  return {lo, hi};
}

Interval ival_tan(const Interval& a) {
  if (a.is_empty()) return Interval::empty();
  if (a.lo < 0) throw std::domain_error("ival_tan: argument below 0");
  Interval half_pi = ival_pi() * Interval(0.5);
  if (a.hi > half_pi.hi) throw std::domain_error("ival_tan: argument beyond pi/2");
  double lo = rnd::down4(std::tan(a.lo));
  double hi = (a.hi >= half_pi.lo) ? kInf : rnd::up4(std::tan(a.hi));
  return {std::max(lo, 0.0), hi};
}

Interval ival_exp(const Interval& a) {
  if (a.is_empty()) return Interval::empty();
  double lo = std::isinf(a.lo) ? (a.lo < 0 ? 0.0 : kInf) : rnd::down4(std::exp(a.lo));
  double hi = std::isinf(a.hi) ? (a.hi < 0 ? 0.0 : kInf) : rnd::up4(std::exp(a.hi));
  return {std::max(lo, 0.0), hi};
}

Interval ival_sinh(const Interval& a) {
  if (a.is_empty()) return Interval::empty();
  double lo = std::isinf(a.lo) ? a.lo : rnd::down4(std::sinh(a.lo));
  double hi = std::isinf(a.hi) ? a.hi : rnd::up4(std::sinh(a.hi));
  return {lo, hi};
}

Interval ival_cosh(const Interval& a) {
  if (a.is_empty()) return Interval::empty();
  double m = std::max(std::abs(a.lo), std::abs(a.hi));
  double hi = std::isinf(m) ? kInf : rnd::up4(std::cosh(m));
  if (a.lo <= 0 && a.hi >= 0) return {1, hi};
  double mn = std::min(std::abs(a.lo), std::abs(a.hi));
  return {std::max(1.0, rnd::down4(std::cosh(mn))), hi};
}

Interval ival_arctanh(const Interval& a, bool strict) {
  if (a.is_empty()) return Interval::empty();
  Interval b = a;
  if (b.lo <= -1 || b.hi >= 1) {
    if (strict) throw std::domain_error("ival_arctanh: argument outside (-1,1)");
    b = intersect(b, {-1, 1});
    if (b.is_empty()) return Interval::empty();
  }
  double lo = b.lo <= -1 ? -kInf : rnd::down4(std::atanh(b.lo));
  double hi = b.hi >= 1 ? kInf : rnd::up4(std::atanh(b.hi));
  return {lo, hi};
}

Interval ival_coth(const Interval& a) {
  if (a.is_empty()) return Interval::empty();
  if (a.lo < 0) throw std::domain_error("ival_coth: argument below 0");
  auto coth = [](double v) { return 1.0 / std::tanh(v); };
  double hi = (a.lo == 0) ? kInf : rnd::up4(coth(a.lo));
  double lo = std::isinf(a.hi) ? 1.0 : rnd::down4(coth(a.hi));
  return {std::max(lo, 1.0), hi};
}

Box3 Box3::make(Mode mode, Interval t, Interval x, Interval y) {
  Box3 b{mode, t, x, y};
  if (mode == Mode::trig) {
    b.t = intersect(t, {0, ival_pi().hi});
    b.x = intersect(x, {0, kInf});
    b.y = intersect(y, {0, kInf});
  } else {
    b.t = intersect(t, {0, kInf});
    b.x = intersect(x, {1, kInf});
    b.y = intersect(y, {1, kInf});
  }
  return b;
}

Interval hess_diag_interval(Mode mode, const Interval& z) {
  if (z.is_empty()) return Interval::empty();
  if (mode == Mode::trig) {
    // m(z) = z/(1+z^2) on z >= 0: increasing to 1/2 at z = 1, then decreasing.
    auto m = [](double v) {
      if (std::isinf(v)) return Interval(0.0, 0.0);
      Interval iv(v);
      return iv / (1 + sqr(iv));
    };
    Interval r = hull(m(z.lo), m(z.hi));
    if (z.contains(1.0)) r.hi = 0.5;
    r.lo = std::max(r.lo, 0.0);
    return 16 * cube(r);
  }
  // m(z) = z/(z^2-1) on z > 1: decreasing.
  auto m = [](double v) -> Interval {
    if (std::isinf(v)) return Interval(0.0, 0.0);
    if (v <= 1) return Interval(kInf);  // endpoint at singular boundary
    Interval iv(v);
    return iv / (sqr(iv) - 1);
  };
  Interval mz = {m(z.hi).lo, z.lo <= 1 ? kInf : m(z.lo).hi};
  mz.lo = std::max(mz.lo, 0.0);
  return 16 * cube(mz);
}

}  // namespace ineqcert
