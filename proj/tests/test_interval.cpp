#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "ineqcert/interval.hpp"
#include "ineqcert/scalar.hpp"

using namespace ineqcert;
using std::numbers::pi;

namespace {

std::mt19937 rng(17);

Interval random_interval(double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  double a = d(rng), b = d(rng);
  if (a > b) std::swap(a, b);
  return {a, b};
}

double sample(const Interval& iv, int i, int n) {
  double v = iv.lo + (iv.hi - iv.lo) * i / double(n - 1);
  return std::min(std::max(v, iv.lo), iv.hi);
}

}  // namespace

TEST_CASE("basic interval predicates") {
  Interval e = Interval::empty();
  CHECK(e.is_empty());
  CHECK(Interval::entire().contains(0.0));
  Interval a(1, 3);
  CHECK(a.contains(2.0));
  CHECK(a.contains(Interval(1.5, 2.5)));
  CHECK(a.strictly_contains(Interval(1.5, 2.5)));
  CHECK_FALSE(a.strictly_contains(Interval(1, 2)));
  CHECK(a.width() == 2);
  CHECK(intersect(a, Interval(2, 5)).lo == 2);
  CHECK(hull(a, Interval(5, 6)).hi == 6);
}

TEST_CASE("pi enclosure") {
  Interval p = ival_pi();
  CHECK(p.lo <= pi);
  CHECK(p.hi >= pi);
  CHECK(p.width() <= 1e-15);
}

TEST_CASE("arithmetic soundness by sampling") {
  for (int trial = 0; trial < 500; ++trial) {
    Interval a = random_interval(-5, 5), b = random_interval(-5, 5);
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        double x = sample(a, i, 8), y = sample(b, j, 8);
        CHECK((a + b).contains(x + y));
        CHECK((a - b).contains(x - y));
        CHECK((a * b).contains(x * y));
        CHECK(sqr(a).contains(x * x));
        CHECK(cube(a).contains(x * x * x));
        CHECK(pow_int(a, 5).contains(std::pow(x, 5)));
        if (b.lo > 0.1 || b.hi < -0.1) CHECK((a / b).contains(x / y));
      }
    }
  }
}

TEST_CASE("elementary function soundness by sampling") {
  for (int trial = 0; trial < 300; ++trial) {
    Interval a = random_interval(0.01, 3.1);
    Interval h = random_interval(0.01, 5.0);
    Interval w = random_interval(-0.95, 0.95);
    for (int i = 0; i < 10; ++i) {
      double x = sample(a, i, 10), z = sample(h, i, 10), u = sample(w, i, 10);
      CHECK(ival_sin(a).contains(std::sin(x)));
      CHECK(ival_cos(a).contains(std::cos(x)));
      CHECK(ival_arctan(a).contains(std::atan(x)));
      CHECK(ival_exp(h).contains(std::exp(z)));
      CHECK(ival_sinh(h).contains(std::sinh(z)));
      CHECK(ival_cosh(h).contains(std::cosh(z)));
      CHECK(ival_arctanh(w).contains(std::atanh(u)));
      CHECK(ival_coth(h).contains(1.0 / std::tanh(z)));
      if (a.hi < pi / 2) CHECK(ival_tan(a).contains(std::tan(x)));
    }
  }
  // negative exp argument
  Interval m(-3.0, -0.5);
  CHECK(ival_exp(m).contains(std::exp(-1.0)));
  CHECK(ival_exp(m).lo >= 0);
}

TEST_CASE("boundary behavior of tan and coth") {
  CHECK_THROWS(ival_tan(Interval(-0.1, 0.5)));
  Interval t = ival_tan(Interval(1.0, pi / 2));
  CHECK(std::isinf(t.hi));
  Interval c = ival_coth(Interval(0.0, 1.0));
  CHECK(std::isinf(c.hi));
  CHECK(c.lo <= 1.0 / std::tanh(1.0));
}

TEST_CASE("Box3 clips to the domain") {
  Box3 b = Box3::make(Mode::trig, Interval(-1, 4), Interval(-2, 3), Interval(0.5, 2));
  CHECK(b.t.lo >= 0);
  CHECK(b.t.hi <= ival_pi().hi);
  CHECK(b.x.lo >= 0);
  Box3 h = Box3::make(Mode::hyp, Interval(0.5, 1), Interval(0.2, 3), Interval(1.5, 2));
  CHECK(h.x.lo >= 1);
}

TEST_CASE("objective enclosures contain sampled values") {
  for (int trial = 0; trial < 200; ++trial) {
    Interval t = random_interval(0.2, 3.0), x = random_interval(0, 4), y = random_interval(0, 4);
    Box3 b = Box3::make(Mode::trig, t, x, y);
    Interval naive = eval_G_interval(b);
    Interval mv = eval_G_mv(b);
    CHECK(naive.contains(mv));
    for (int i = 0; i < 5; ++i) {
      EvalPoint p{Mode::trig, sample(t, i, 5), sample(x, i, 5), sample(y, i, 5)};
      double v = eval_G(p).value;
      CHECK(naive.contains(v));
      CHECK(mv.contains(v));
      Gradient3 g = grad_G(p);
      GradientBox gb = eval_gradG_interval(b);
      CHECK(gb.d_t.contains(g.d_t));
      CHECK(gb.d_x.contains(g.d_x));
      CHECK(gb.d_y.contains(g.d_y));
      SymMatrix2 hm = hessian_xy_G(p);
      HessBox2 hb = eval_hess_xy_interval(b);
      CHECK(hb.xx.contains(hm.xx));
      CHECK(hb.xy.contains(hm.xy));
      CHECK(hb.yy.contains(hm.yy));
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    Interval t = random_interval(0.3, 4.0), x = random_interval(1.05, 4), y = random_interval(1.05, 4);
    Box3 b = Box3::make(Mode::hyp, t, x, y);
    Interval naive = eval_F_interval(b);
    Interval mv = eval_F_mv(b);
    CHECK(naive.contains(mv));
    for (int i = 0; i < 5; ++i) {
      EvalPoint p{Mode::hyp, sample(t, i, 5), sample(x, i, 5), sample(y, i, 5)};
      double v = eval_F(p).value;
      CHECK(naive.contains(v));
      CHECK(mv.contains(v));
      Gradient3 g = grad_F(p);
      GradientBox gb = eval_gradF_interval(b);
      CHECK(gb.d_t.contains(g.d_t));
      CHECK(gb.d_x.contains(g.d_x));
      CHECK(gb.d_y.contains(g.d_y));
    }
  }
}

TEST_CASE("Hessian diagonal form is sound and tight") {
  for (int trial = 0; trial < 200; ++trial) {
    Interval z = random_interval(0.1, 5);
    Interval hd = hess_diag_interval(Mode::trig, z);
    Interval zh = random_interval(1.05, 5);
    Interval hh = hess_diag_interval(Mode::hyp, zh);
    for (int i = 0; i < 10; ++i) {
      double a = sample(z, i, 10);
      CHECK(hd.contains(16 * std::pow(a, 3) / std::pow(1 + a * a, 3)));
      double b = sample(zh, i, 10);
      CHECK(hh.contains(16 * std::pow(b, 3) / std::pow(b * b - 1, 3)));
    }
    // tightness: endpoints within a few ulps of the true extrema on a
    // monotone stretch
    Interval mono(2.0, 3.0);
    Interval hv = hess_diag_interval(Mode::trig, mono);
    double f2 = 16 * 8 / std::pow(5, 3), f3 = 16 * 27 / std::pow(10, 3);
    CHECK(hv.lo <= f3);
    CHECK(hv.hi >= f2);
    CHECK(hv.width() <= (f2 - f3) + 1e-12);
  }
}
