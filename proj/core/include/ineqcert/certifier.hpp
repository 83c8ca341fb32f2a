#ifndef INEQCERT_CERTIFIER_HPP
#define INEQCERT_CERTIFIER_HPP

#include <string>
#include <vector>

#include "ineqcert/compactify.hpp"

namespace ineqcert {

inline constexpr const char* kVersion = "1.0.0";

/// Manifold tube in compactified coordinates: |u - u*(t)| <= rho and
/// |v - u*(t)| <= rho, further capped to the x-window where the Hessian
/// diagonal dominance 16x^3/w^3 > s^3 holds with margin (the convexity
/// argument needs it; beyond the cap values are large and the plain
/// branch-and-bound covers them). rho = 0 disables the tube.
struct TubeSpec {
  double rho = 0.1;
  double slice_width = 0.01;  // t-width of per-slice certification
};

enum class CertStatus { proved_strict, proved_up_to_epsilon, inconclusive };
const char* status_name(CertStatus s);

/// Outer box in compactified coordinates (u = arctan x resp. arccoth x).
struct RegionSpec {
  double t0 = 0, t1 = 0, u0 = 0, u1 = 0, v0 = 0, v1 = 0;
};
RegionSpec default_region(Mode mode);

enum class SliceVerdict { certified, fallback_used, failed };
const char* slice_verdict_name(SliceVerdict v);

struct SliceResult {
  SliceVerdict verdict = SliceVerdict::failed;
  int krawczyk_iters = 0;
  std::string detail;
};

/// Certifies the tube cross-section over the t-slice: diagonal-dominance
/// convexity margin (at most one stationary point), Krawczyk contraction
/// (existence, onto the manifold point), and the exact vanishing imported
/// from the identity ledger. Near t = pi (trig) dominance degenerates and
/// the scaled near-pi certificate is used instead (fallback_used).
SliceResult certify_tube_slice(Mode mode, const Interval& t, const TubeSpec& tube);

struct CertStats {
  long boxes = 0;
  int max_depth = 0;
  long slices = 0;
  long fallback_slices = 0;
  long corner_samples = 0;
  double wall_seconds = 0;
};

struct Certificate {
  int lemma = 1;  // 1 = trig, 2 = hyp
  Mode mode = Mode::trig;
  CertStatus status = CertStatus::inconclusive;         // overall verdict
  CertStatus region_status = CertStatus::inconclusive;  // rigorous part only
  // Min accepted positive lower bound over the region minus the excluded
  // zone (tube, and in trig mode the near-pi basin; see point_excluded).
  double delta = 0;
  RegionSpec region;
  TubeSpec tube;
  std::string corner_policy;
  double epsilon = 1e-9;  // tolerance stamped on sampled (epsilon-grade) parts
  CertStats stats;
  std::vector<std::string> residual_boxes;  // offending boxes when inconclusive
  std::string rounding = "outward-nudge";
  std::string version = kVersion;
};

/// True when the compact-coordinate point lies in a zone excluded from the
/// branch-and-bound claim: the manifold tube (certified by slices) or, in
/// trig mode, the degenerate corner basin t >= pi - 0.35, u, v <= 0.1
/// (certified by the scaled near-pi argument; values there scale like
/// max(u, pi - t)^5, beyond any direct interval subdivision).
bool point_excluded(Mode mode, const TubeSpec& tube, double t, double u, double v);

struct CertifyConfig {
  RegionSpec region;
  TubeSpec tube;
  long budget = 4'000'000;  // max boxes processed
  int workers = 1;
  double offset = 0;  // certify (G or F) + offset; negative offsets are controls
  /// trig corner near t = 0, u,v -> pi/2: "sample" = quasi-random check at
  /// epsilon grade, "exclude" = region-only claim.
  std::string corner_policy = "sample";
  unsigned seed = 1;
};
CertifyConfig default_config(Mode mode);

/// Branch-and-bound over region minus tube (tube boxes dropped, slices NOT
/// run here); proved_strict iff every leaf gets a positive lower bound.
Certificate certify_region(Mode mode, const CertifyConfig& cfg);

/// Full composition: region branch-and-bound + tube slices + boundary
/// faces + corner policy.
Certificate certify_lemma(Mode mode, const CertifyConfig& cfg);

}  // namespace ineqcert

#endif
