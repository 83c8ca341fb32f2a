#include "doctest.h"
#include "ineqcert/fraction.hpp"

using namespace ineqcert;

TEST_CASE("field arithmetic and exact zero test") {
  Mode m = Mode::trig;
  Poly s = Poly::variable(m, VS), c = Poly::variable(m, VC);
  Poly one = Poly::constant(m, 1);

  // (1 - c^2)/s equals s wherever s != 0: the classic cross-multiplied check.
  Fraction f(one - c * c, {s});
  Fraction g(s);
  CHECK(f.difference_numerator(g).is_zero());
  CHECK((f - g).is_zero());

  // (1-c)/s + s/(1+c) = 2(1-c)/s  (half-angle doubling)
  Fraction lhs = Fraction(one - c, {s}) + Fraction(s, {one + c});
  Fraction rhs = Fraction(Rational(2) * (one - c), {s});
  CHECK(lhs.difference_numerator(rhs).is_zero());

  // division round trip
  Fraction q = lhs / rhs;
  CHECK(q.difference_numerator(Fraction(one)).is_zero());
  CHECK((f * g - g * f).is_zero());
  CHECK((-f + f).is_zero());
  CHECK(f.pow(2).difference_numerator(f * f).is_zero());
}

TEST_CASE("nonzero difference is detected") {
  Mode m = Mode::trig;
  Poly s = Poly::variable(m, VS), c = Poly::variable(m, VC);
  Fraction f(Poly::constant(m, 1) - c * c, {s});
  Fraction g(s + Poly::constant(m, 1));
  CHECK_FALSE(f.difference_numerator(g).is_zero());
}

TEST_CASE("derivatives follow the quotient rule") {
  for (Mode m : {Mode::trig, Mode::hyp}) {
    Poly s = Poly::variable(m, VS), c = Poly::variable(m, VC);
    Poly x = Poly::variable(m, VX);
    Fraction f(x * s, {Poly::constant(m, 1) + c});

    // d/dx ((x s)/(1+c)) = s/(1+c)
    Fraction expect_dx(s, {Poly::constant(m, 1) + c});
    CHECK(f.deriv(VX).difference_numerator(expect_dx).is_zero());

    // d/dt via quotient rule: ((x c')(1+c) - x s c') / (1+c)^2 with the
    // mode's chain rule; cross-check against a hand expansion.
    Poly cp = m == Mode::trig ? -s : s;  // c' per mode
    Fraction expect_dt(x * c * (Poly::constant(m, 1) + c) - x * s * cp,
                       {(Poly::constant(m, 1) + c) * (Poly::constant(m, 1) + c)});
    CHECK(f.deriv_t().difference_numerator(expect_dt).is_zero());
  }
}

TEST_CASE("substitution is exact") {
  Mode m = Mode::trig;
  // Substitute x = (1+c)/s (the manifold value cot(t/2)) into
  // s x - (1 + c): must clear to zero.
  Poly s = Poly::variable(m, VS), c = Poly::variable(m, VC);
  Poly p = Poly::term(m, 1, 1, 0, 0, 0, 1, 0) - (Poly::constant(m, 1) + c);
  Fraction manifold(Poly::constant(m, 1) + c, {s});
  CHECK(subst(p, VX, manifold).is_zero());
}

TEST_CASE("clear_denominators records side conditions") {
  Mode m = Mode::trig;
  Poly s = Poly::variable(m, VS), c = Poly::variable(m, VC);
  Fraction f(Poly::constant(m, 1) - c * c, {s, Poly::constant(m, 1) + c});
  Cleared cl = clear_denominators(f);
  CHECK_FALSE(cl.factors.empty());
  // (1 - c^2)/(s(1+c)) clears to (1 - c^2) with conditions s != 0, 1+c != 0.
  CHECK(cl.numerator == Poly::constant(m, 1) - c * c);
}
