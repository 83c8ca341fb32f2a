#include <array>
#include <cmath>
#include <random>

#include "doctest.h"
#include "ineqcert/poly.hpp"

using namespace ineqcert;

namespace {

Poly random_poly(Mode m, std::mt19937& rng, int terms = 6) {
  std::uniform_int_distribution<int> exp(0, 3), coef(-5, 5);
  Poly p(m);
  for (int i = 0; i < terms; ++i) {
    p += Poly::term(m, coef(rng), exp(rng), exp(rng), exp(rng), exp(rng), exp(rng), exp(rng));
  }
  return p;
}

std::array<double, kNumVars> consistent_point(Mode m, std::mt19937& rng) {
  std::uniform_real_distribution<double> d(0.3, 1.4);
  double t = d(rng);
  std::array<double, kNumVars> at{};
  at[VS] = m == Mode::trig ? std::sin(t) : std::sinh(t);
  at[VC] = m == Mode::trig ? std::cos(t) : std::cosh(t);
  at[VA] = d(rng);
  at[VB] = d(rng);
  at[VX] = d(rng);
  at[VY] = d(rng);
  return at;
}

}  // namespace

TEST_CASE("constants and variables") {
  Poly zero = Poly::constant(Mode::trig, 0);
  CHECK(zero.is_zero());
  Poly one = Poly::constant(Mode::trig, 1);
  CHECK(one.size() == 1);
  Poly x = Poly::variable(Mode::trig, VX);
  CHECK((x * x).size() == 1);
  CHECK(x.deriv(VX) == one);
  CHECK(x.deriv(VY).is_zero());
}

TEST_CASE("normal form keeps s-degree at most 1") {
  for (Mode m : {Mode::trig, Mode::hyp}) {
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
      Poly p = random_poly(m, rng);
      for (const auto& [mono, coef] : p.terms()) {
        CHECK(mono.e[VS] <= 1);
        CHECK(coef != 0);
      }
    }
  }
}

TEST_CASE("Pythagorean reduction per mode") {
  Poly s2_trig = Poly::variable(Mode::trig, VS, 2);
  Poly c_trig = Poly::variable(Mode::trig, VC);
  CHECK(s2_trig == Poly::constant(Mode::trig, 1) - c_trig * c_trig);

  Poly s2_hyp = Poly::variable(Mode::hyp, VS, 2);
  Poly c_hyp = Poly::variable(Mode::hyp, VC);
  CHECK(s2_hyp == c_hyp * c_hyp - Poly::constant(Mode::hyp, 1));

  // s^3 reduces to s * (relation), still linear in s.
  Poly s3 = Poly::variable(Mode::trig, VS, 3);
  Poly s = Poly::variable(Mode::trig, VS);
  CHECK(s3 == s * (Poly::constant(Mode::trig, 1) - c_trig * c_trig));
}

TEST_CASE("ring axioms on random polynomials") {
  for (Mode m : {Mode::trig, Mode::hyp}) {
    std::mt19937 rng(m == Mode::trig ? 7 : 8);
    for (int i = 0; i < 25; ++i) {
      Poly p = random_poly(m, rng), q = random_poly(m, rng), r = random_poly(m, rng);
      CHECK(p + q == q + p);
      CHECK(p * q == q * p);
      CHECK((p + q) + r == p + (q + r));
      CHECK((p * q) * r == p * (q * r));
      CHECK(p * (q + r) == p * q + p * r);
      CHECK((p - p).is_zero());
      CHECK(p + Poly::constant(m, 0) == p);
      CHECK(p * Poly::constant(m, 1) == p);
      CHECK(-(-p) == p);
      CHECK(p.pow(3) == p * p * p);
    }
  }
}

TEST_CASE("evaluation respects the relation") {
  for (Mode m : {Mode::trig, Mode::hyp}) {
    std::mt19937 rng(m == Mode::trig ? 21 : 22);
    for (int i = 0; i < 20; ++i) {
      Poly p = random_poly(m, rng), q = random_poly(m, rng);
      auto at = consistent_point(m, rng);
      // Reduction changes the terms but not the value at relation-consistent
      // points.
      double lhs = (p * q).eval(at);
      double rhs = p.eval(at) * q.eval(at);
      CHECK(std::abs(lhs - rhs) <= 1e-9 * (1 + std::abs(rhs)));
    }
  }
}

TEST_CASE("parse/str round trip") {
  for (Mode m : {Mode::trig, Mode::hyp}) {
    std::mt19937 rng(m == Mode::trig ? 31 : 32);
    for (int i = 0; i < 25; ++i) {
      Poly p = random_poly(m, rng);
      CHECK(Poly::parse(m, p.str()) == p);
    }
    CHECK(Poly::parse(m, Poly::constant(m, 0).str()).is_zero());
  }
}

TEST_CASE("derivatives") {
  for (Mode m : {Mode::trig, Mode::hyp}) {
    std::mt19937 rng(m == Mode::trig ? 41 : 42);
    for (int i = 0; i < 20; ++i) {
      Poly p = random_poly(m, rng), q = random_poly(m, rng);
      // product rule, plain variable and t
      CHECK((p * q).deriv(VX) == p.deriv(VX) * q + p * q.deriv(VX));
      CHECK((p * q).deriv_t() == p.deriv_t() * q + p * q.deriv_t());
    }
    // chain rule base cases
    Poly s = Poly::variable(m, VS), c = Poly::variable(m, VC);
    CHECK(s.deriv_t() == c);
    CHECK(c.deriv_t() == (m == Mode::trig ? -s : s));
  }
}

TEST_CASE("subst_sc and swap_ab") {
  Poly p = Poly::term(Mode::trig, 3, 1, 1, 2, 0, 0, 0) +
           Poly::term(Mode::trig, -1, 0, 2, 0, 1, 0, 0);
  // s = 0, c = -1 (the t = pi face)
  Poly q = p.subst_sc(0, -1);
  for (const auto& [mono, coef] : q.terms()) {
    CHECK(mono.e[VS] == 0);
    CHECK(mono.e[VC] == 0);
  }
  Poly ab = Poly::term(Mode::trig, 1, 0, 0, 2, 1, 0, 0);
  CHECK(ab.swap_ab() == Poly::term(Mode::trig, 1, 0, 0, 1, 2, 0, 0));
  CHECK(ab.swap_ab().swap_ab() == ab);
}

TEST_CASE("with_mode re-reduces") {
  Poly s2 = Poly::variable(Mode::trig, VS) * Poly::variable(Mode::trig, VS);
  Poly h = s2.with_mode(Mode::hyp);
  CHECK(h.mode() == Mode::hyp);
  // 1 - c^2 re-read in hyp mode stays 1 - c^2 (no s to reduce), which is
  // NOT the hyp reduction of s^2; the two relations genuinely differ.
  Poly s2_hyp = Poly::variable(Mode::hyp, VS, 2);
  CHECK(h != s2_hyp);
}

TEST_CASE("mode mismatch throws") {
  Poly p = Poly::variable(Mode::trig, VX);
  Poly q = Poly::variable(Mode::hyp, VX);
  CHECK_THROWS_AS((void)(p + q), mode_mismatch);
  CHECK_THROWS_AS((void)(p * q), mode_mismatch);
}
