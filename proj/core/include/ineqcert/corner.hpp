#ifndef INEQCERT_CORNER_HPP
#define INEQCERT_CORNER_HPP

#include <string>

#include "ineqcert/interval.hpp"

namespace ineqcert {
namespace corner {

/// Scaled form of G near theta = pi. With t = pi - theta and x = t*u,
/// y = t*v, the objective factors as G = t^5 * Ghat(t, u, v) where
///   Ghat = sigma^3 uv - kappa^2 (2 + cos t)(u + v) + beta(t)
///          + u^5 alpha(tu) + v^5 alpha(tv),
///   sigma = sin(t)/t,  kappa = (1 - cos t)/t^2,
///   beta(t) = (6t - 6 sin t - sin^3 t)/t^5,
///   alpha(z) = (4z - 6 atan z + 2z/(1+z^2))/z^5.
/// beta and alpha extend analytically through 0 (values 9/20 and 4/5),
/// which is what makes this form usable where the direct form of G is
/// pure cancellation. The equality manifold straightens to
/// u = v = ustar(t) = tan(t/2)/t, close to 1/2 throughout.

Interval sigma_iv(const Interval& t);   // t within [0, pi]
Interval kappa_iv(const Interval& t);   // t within [0, pi]
Interval beta_iv(const Interval& t);    // t within [0, 1]
Interval alpha_iv(const Interval& z);   // z >= 0
Interval ustar_iv(const Interval& t);   // t within [0, 1]

/// 4x - 6 atan x + 2x/(1+x^2): nonnegative, increasing, convex on x >= 0.
Interval four_A_iv(const Interval& x);

Interval eval_Ghat(const Interval& t, const Interval& u, const Interval& v);

struct Outcome {
  bool proved = false;
  double t_max = 0;
  int chunks = 0;
  long boxes = 0;          // interval boxes spent in the strip/1-D searches
  std::string detail;      // failure description when proved is false
};

/// Proves G(theta, x, y) >= 0 on the full quadrant x, y >= 0 for
/// theta within [pi - t_max, pi]. Per t-chunk the quadrant splits into
///   (1) a convexity box around the manifold: Ghat is jointly convex in
///       (u, v) there and the manifold point is an interior stationary
///       point with value exactly 0 (the exact identities are checked by
///       the identity ledger), so Ghat >= 0 on the box;
///   (2) boundary strips, closed by a small branch-and-bound showing
///       Ghat strictly positive;
///   (3) the per-variable tail u >= lambda: 4A(z)/z is increasing (4A is
///       convex with 4A(0) = 0), so lambda^4 alpha(lambda t) >= K(t)
///       makes the u-terms of Ghat nonnegative on their own, and a 1-D
///       search shows beta - K v + v^5 alpha(tv) > 0 for the remaining
///       v within [0, lambda]. Here K = kappa^2 (2 + cos t).
/// The theta = pi face itself is G = 4A(x) + 4A(y) >= 0.
Outcome certify_near_pi(double t_max = 0.9, double chunk_width = 0.02,
                        long max_boxes_per_chunk = 60000);

}  // namespace corner
}  // namespace ineqcert

#endif
