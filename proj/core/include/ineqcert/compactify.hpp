#ifndef INEQCERT_COMPACTIFY_HPP
#define INEQCERT_COMPACTIFY_HPP

#include "ineqcert/interval.hpp"

namespace ineqcert {

/// Compactified coordinates: trig mode u = atan x within [0, pi/2]
/// (u = pi/2 is x = +inf); hyp mode u = acoth x within (0, inf)
/// (u -> 0 is x -> +inf, u -> inf is x -> 1).
/// In both modes the transcendental tail of the objective collapses:
///   -6 atan x + 2x/(1+x^2)   = -6u + sin 2u      (trig)
///   +6 atanh(1/x) + 2x/(x^2-1) = +6u + sinh 2u   (hyp)
/// so the compact forms stay finite (trig) or explicit (hyp) where the
/// direct forms lose all precision.
struct CompactBox {
  Mode mode = Mode::trig;
  Interval t, u, v;

  static CompactBox make(Mode mode, Interval t, Interval u, Interval v);
};

double compact_x(Mode mode, double x);
double uncompact_x(Mode mode, double u);
Interval uncompact_x(Mode mode, const Interval& u);

/// The (t, x, y) box covering the compact box (x = tan u / coth u).
Box3 to_box(const CompactBox& b);

/// Enclosure of G (trig) or F (hyp) over the compact box, intersected
/// with the direct-coordinate enclosure when that is finite.
Interval eval_compact(const CompactBox& b);

/// Gradient with respect to (t, u, v). The u/v entries pick up the chain
/// factor sec^2 u (trig) or 1 - coth^2 u (hyp) and may be unbounded at
/// the compact boundary.
GradientBox eval_grad_compact(const CompactBox& b);

/// Mean-value refinement in compact coordinates; naive fallback when the
/// gradient is unbounded.
Interval eval_compact_mv(const CompactBox& b);

/// Hyp mode only: enclosure of F / sinh^3(t) over the compact box, in the
/// exactly regrouped form
///   (Cu - 1)(Cv - 1) + ((s^3 - K)/s^3)(Cu + Cv) + B/s^3,
///   s^3 - K = 3c - 2 - s - e^{-t} c^2,
///   B = 6u + sinh 2u + 6v + sinh 2v - 6t - 6s,
/// whose pieces have bounded relative slack where the direct form loses
/// everything to e^{3t}-scale cancellation. Mean-value refined. Requires
/// t.lo > 0.
Interval eval_scaled_hyp(const CompactBox& b);

/// Equality manifold in compact coordinates: u*(t) = pi/2 - t/2 (trig,
/// from x* = cot(t/2)), u*(t) = t/2 (hyp, from x* = coth(t/2)).
double manifold_u(Mode mode, double t);
Interval manifold_u(Mode mode, const Interval& t);

}  // namespace ineqcert

#endif
