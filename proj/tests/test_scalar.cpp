#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "ineqcert/scalar.hpp"

using namespace ineqcert;
using std::numbers::pi;

namespace {

EvalPoint random_point(Mode m, std::mt19937& rng) {
  std::uniform_real_distribution<double> dt(0.3, m == Mode::trig ? 2.8 : 4.0);
  std::uniform_real_distribution<double> dx(m == Mode::trig ? 0.1 : 1.1, 5.0);
  return {m, dt(rng), dx(rng), dx(rng)};
}

double value(const EvalPoint& p) {
  return (p.mode == Mode::trig ? eval_G(p) : eval_F(p)).value;
}

}  // namespace

TEST_CASE("frozen reference values") {
  // Independently computed in 100-digit arithmetic and frozen.
  const double g_pi_11 = 0.57522203923062028461206985016149;   // 10 - 3 pi
  const double g_hpi_00 = 2.4247779607693797153879301498385;   // 3 pi - 7
  const double f_0_22 = 9.2583403986753248150381380882018;     // 12 atanh(1/2) + 8/3

  CHECK(std::abs(eval_G(EvalPoint::trig(pi, 1, 1)).value - g_pi_11) <= 1e-12);
  CHECK(std::abs(eval_G(EvalPoint::trig(pi / 2, 0, 0)).value - g_hpi_00) <= 1e-12);
  CHECK(std::abs(eval_F(EvalPoint::hyp(0, 2, 2)).value - f_0_22) <= 1e-12);

  // agreement with the closed-form constants
  CHECK(std::abs(g_pi_11 - (10 - 3 * pi)) <= 1e-15);
  CHECK(std::abs(g_hpi_00 - (3 * pi - 7)) <= 1e-15);
  CHECK(std::abs(f_0_22 - (12 * std::atanh(0.5) + 8.0 / 3.0)) <= 1e-14);
}

TEST_CASE("x-y symmetry") {
  for (Mode m : {Mode::trig, Mode::hyp}) {
    std::mt19937 rng(m == Mode::trig ? 5 : 6);
    for (int i = 0; i < 200; ++i) {
      EvalPoint p = random_point(m, rng);
      EvalPoint q{m, p.t, p.y, p.x};
      CHECK(std::abs(value(p) - value(q)) <= 1e-12 * (1 + std::abs(value(p))));
    }
  }
}

TEST_CASE("both G forms agree") {
  std::mt19937 rng(9);
  for (int i = 0; i < 200; ++i) {
    EvalPoint p = random_point(Mode::trig, rng);
    double a = eval_G(p, GForm::direct).value;
    double b = eval_G(p, GForm::integral).value;
    CHECK(std::abs(a - b) <= 1e-11 * (1 + std::abs(a)));
  }
}

TEST_CASE("manifold vanishing: value and gradient") {
  // manifold_residual evaluates the composed identity at 50 digits; the
  // thresholds are far below anything a coincidence could produce.
  for (int i = 0; i <= 1000; ++i) {
    double t = 0.05 + (pi - 0.05) * i / 1000.0;
    ManifoldResidual r = manifold_residual(Mode::trig, t);
    CHECK(std::abs(r.value) <= 1e-12);
    CHECK(std::abs(r.grad_t) <= 1e-10);
    CHECK(std::abs(r.grad_x) <= 1e-10);
    CHECK(std::abs(r.grad_y) <= 1e-10);
  }
  for (int i = 0; i <= 1000; ++i) {
    double t = 0.05 + (20.0 - 0.05) * i / 1000.0;
    ManifoldResidual r = manifold_residual(Mode::hyp, t);
    CHECK(std::abs(r.value) <= 1e-12);
    CHECK(std::abs(r.grad_t) <= 1e-10);
    CHECK(std::abs(r.grad_x) <= 1e-10);
    CHECK(std::abs(r.grad_y) <= 1e-10);
  }
}

TEST_CASE("manifold vanishing in plain double at moderate scale") {
  // The double path is limited by sinh^3(t)-scale cancellation; check it
  // where that scale is small enough for an absolute tolerance to bind.
  for (int i = 0; i <= 200; ++i) {
    double t = 0.1 + (pi - 0.2) * i / 200.0;
    ManifoldPoint mp = manifold_point(Mode::trig, t);
    CHECK(std::abs(eval_G(EvalPoint::trig(t, mp.x, mp.y)).value) <= 1e-11);
  }
  for (int i = 0; i <= 200; ++i) {
    double t = 0.1 + (5.0 - 0.1) * i / 200.0;
    ManifoldPoint mp = manifold_point(Mode::hyp, t);
    CHECK(std::abs(eval_F(EvalPoint::hyp(t, mp.x, mp.y)).value) <= 1e-9);
  }
}

TEST_CASE("gradients match central finite differences") {
  for (Mode m : {Mode::trig, Mode::hyp}) {
    std::mt19937 rng(m == Mode::trig ? 13 : 14);
    for (int i = 0; i < 200; ++i) {
      EvalPoint p = random_point(m, rng);
      Gradient3 g = m == Mode::trig ? grad_G(p) : grad_F(p);
      double h = 1e-6;
      auto at = [&](double dt, double dx, double dy) {
        return value({m, p.t + dt, p.x + dx, p.y + dy});
      };
      double fd_t = (at(h, 0, 0) - at(-h, 0, 0)) / (2 * h);
      double fd_x = (at(0, h, 0) - at(0, -h, 0)) / (2 * h);
      double fd_y = (at(0, 0, h) - at(0, 0, -h)) / (2 * h);
      double scale = 1 + std::abs(g.d_t) + std::abs(g.d_x) + std::abs(g.d_y);
      CHECK(std::abs(g.d_t - fd_t) <= 1e-6 * scale);
      CHECK(std::abs(g.d_x - fd_x) <= 1e-6 * scale);
      CHECK(std::abs(g.d_y - fd_y) <= 1e-6 * scale);
    }
  }
}

TEST_CASE("Hessian in (x, y) at manifold points") {
  // At x = y = cot(t/2) (resp. coth) the x-y Hessian is
  // sin^3 t * [[2, 1], [1, 2]] (resp. sinh^3 t scaled the same way).
  for (int i = 1; i < 40; ++i) {
    double t = 0.2 + (pi - 0.4) * i / 40.0;
    ManifoldPoint mp = manifold_point(Mode::trig, t);
    SymMatrix2 h = hessian_xy_G(EvalPoint::trig(t, mp.x, mp.y));
    double s3 = std::pow(std::sin(t), 3);
    CHECK(std::abs(h.xx - 2 * s3) <= 1e-8);
    CHECK(std::abs(h.xy - s3) <= 1e-8);
    CHECK(std::abs(h.yy - 2 * s3) <= 1e-8);
  }
  for (int i = 1; i < 40; ++i) {
    double t = 0.3 + 4.0 * i / 40.0;
    ManifoldPoint mp = manifold_point(Mode::hyp, t);
    SymMatrix2 h = hessian_xy_F(EvalPoint::hyp(t, mp.x, mp.y));
    double s3 = std::pow(std::sinh(t), 3);
    CHECK(std::abs(h.xx - 2 * s3) <= 1e-8 * (1 + s3));
    CHECK(std::abs(h.xy - s3) <= 1e-8 * (1 + s3));
    CHECK(std::abs(h.yy - 2 * s3) <= 1e-8 * (1 + s3));
  }
}

TEST_CASE("t = pi face of G is 4A(x) + 4A(y)") {
  for (double x : {0.0, 0.3, 1.0, 4.0}) {
    for (double y : {0.0, 0.7, 2.5}) {
      double g = eval_G(EvalPoint::trig(pi, x, y)).value;
      double expect = raw::four_A(x) + raw::four_A(y);
      CHECK(std::abs(g - expect) <= 1e-11 * (1 + expect));
      CHECK(g >= -1e-12);
    }
  }
}

TEST_CASE("domain violations throw") {
  CHECK_THROWS_AS(EvalPoint::trig(-0.1, 1, 1).validate(), domain_violation);
  CHECK_THROWS_AS(EvalPoint::trig(1, -0.5, 1).validate(), domain_violation);
  CHECK_THROWS_AS(EvalPoint::hyp(1, 0.5, 2).validate(), domain_violation);
  CHECK_NOTHROW(EvalPoint::trig(1, 0, 0).validate());
  CHECK_NOTHROW(EvalPoint::hyp(1, 1.5, 1.5).validate());
}

TEST_CASE("condition flags") {
  // hyp boundary x -> 1+ is singular (arctanh(1/x) blows up)
  ScalarResult near = eval_F(EvalPoint::hyp(1.0, 1.0 + 1e-13, 2.0));
  CHECK(near.condition == Condition::near_singular);
  ScalarResult reg = eval_F(EvalPoint::hyp(1.0, 2.0, 2.0));
  CHECK(reg.condition == Condition::regular);
}
