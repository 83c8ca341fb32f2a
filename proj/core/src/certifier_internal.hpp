#ifndef INEQCERT_CERTIFIER_INTERNAL_HPP
#define INEQCERT_CERTIFIER_INTERNAL_HPP

#include "ineqcert/certifier.hpp"

namespace ineqcert {
namespace detail_cert {

/// Dominance margin: the tube cross-section is capped to the x-window where
/// 16x^3/w^3 >= kCapMargin * s^3. At the manifold the diagonal equals 2 s^3,
/// so the window always contains it.
inline constexpr double kCapMargin = 1.3;

/// cube(sin t) resp. cube(sinh t).
Interval s3_over(Mode mode, const Interval& t);

/// Hessian diagonal 16x^3/(1+x^2)^3 resp. 16x^3/(x^2-1)^3 in doubles.
double hess_diag_double(Mode mode, double x);

struct CapWindow {
  double xlo = 0, xhi = 0;  // empty when xlo > xhi
};

/// The x-window where hess_diag >= kCapMargin * s3_hi. Deterministic; the
/// window shrinks as s3_hi grows, which is what the drop-test / slice
/// containment argument needs.
CapWindow cap_window(Mode mode, double s3_hi);

/// u-values within rho of the manifold for EVERY t in the interval
/// (possibly empty). Safe-to-drop band.
Interval inner_band(Mode mode, const Interval& t, double rho);

/// u-values within rho of the manifold for SOME t in the interval.
Interval outer_band(Mode mode, const Interval& t, double rho);

/// True when the whole compact box lies inside the (capped) tube; such
/// boxes may be dropped by the branch-and-bound because the tube slices
/// certify strictly more than this region.
bool box_in_tube(const CompactBox& b, const TubeSpec& tube);

/// Conservative overlap test (used only to pick clip-split coordinates).
bool box_meets_tube(const CompactBox& b, const TubeSpec& tube);

/// Degenerate corner basin near (t, x, y) = (pi, 0, 0), trig mode only:
/// t >= pi - kBasinT, u, v <= kBasinU. Covered by the scaled near-pi
/// certificate, whose t-range (0.9) comfortably contains kBasinT.
inline constexpr double kBasinT = 0.35;
inline constexpr double kBasinU = 0.1;

/// True when the whole box lies inside the basin (uses the outward pi
/// bound, so containment is sound).
bool box_in_basin(const CompactBox& b);

/// The near-pi certificate, computed once and cached.
bool near_pi_proved();

}  // namespace detail_cert
}  // namespace ineqcert

#endif
