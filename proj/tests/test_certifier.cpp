#include <cmath>
#include <numbers>

#include "doctest.h"
#include "ineqcert/certifier.hpp"
#include "ineqcert/critical.hpp"

using namespace ineqcert;
using std::numbers::pi;

namespace {

bool same_certificate(const Certificate& a, const Certificate& b) {
  return a.lemma == b.lemma && a.status == b.status && a.region_status == b.region_status &&
         a.delta == b.delta && a.corner_policy == b.corner_policy &&
         a.stats.boxes == b.stats.boxes && a.stats.max_depth == b.stats.max_depth &&
         a.stats.slices == b.stats.slices && a.stats.fallback_slices == b.stats.fallback_slices &&
         a.stats.corner_samples == b.stats.corner_samples &&
         a.residual_boxes == b.residual_boxes;
}

}  // namespace

TEST_CASE("tube slices certify across the t range") {
  for (double t : {0.3, 1.0, 2.0, 2.9}) {
    SliceResult r = certify_tube_slice(Mode::trig, Interval(t, t + 0.01), TubeSpec{});
    CHECK(r.verdict == SliceVerdict::certified);
    CHECK_FALSE(r.detail.empty());
  }
  for (double t : {0.3, 1.5, 3.0, 5.5}) {
    SliceResult r = certify_tube_slice(Mode::hyp, Interval(t, t + 0.01), TubeSpec{});
    CHECK(r.verdict == SliceVerdict::certified);
  }
}

TEST_CASE("near the degenerate trig corner the slice falls back to the scaled form") {
  SliceResult r = certify_tube_slice(Mode::trig, Interval(3.13, 3.14), TubeSpec{});
  CHECK(r.verdict == SliceVerdict::fallback_used);
}

TEST_CASE("an off-manifold region certifies in one box") {
  CertifyConfig cfg = default_config(Mode::trig);
  cfg.region = {1.0, 1.2, std::atan(5.0), std::atan(6.0), std::atan(5.0), std::atan(6.0)};
  Certificate c = certify_region(Mode::trig, cfg);
  CHECK(c.status == CertStatus::proved_strict);
  CHECK(c.delta > 1.0);
  CHECK(c.stats.boxes == 1);
}

TEST_CASE("a manifold-crossing region needs the tube and still certifies") {
  CertifyConfig cfg = default_config(Mode::hyp);
  cfg.region = {1.0, 1.1, 0.3, 0.9, 0.3, 0.9};  // u* = t/2 = 0.5..0.55 inside
  Certificate c = certify_lemma(Mode::hyp, cfg);
  CHECK(c.status == CertStatus::proved_strict);
  CHECK(c.delta > 0);
  CHECK(c.stats.slices > 0);
}

TEST_CASE("rho = 0 on a manifold-crossing region is inconclusive") {
  CertifyConfig cfg = default_config(Mode::hyp);
  cfg.region = {1.0, 1.02, 0.4, 0.7, 0.4, 0.7};
  cfg.tube.rho = 0;
  cfg.budget = 30000;
  Certificate c = certify_region(Mode::hyp, cfg);
  CHECK(c.status == CertStatus::inconclusive);
  CHECK(c.delta == 0);
  CHECK_FALSE(c.residual_boxes.empty());
}

TEST_CASE("budget 1 stops immediately and is inconclusive") {
  CertifyConfig cfg = default_config(Mode::trig);
  cfg.budget = 1;
  Certificate c = certify_region(Mode::trig, cfg);
  CHECK(c.status == CertStatus::inconclusive);
  CHECK(c.stats.boxes <= 1);
}

TEST_CASE("a negative offset is never proved strict") {
  CertifyConfig cfg = default_config(Mode::hyp);
  cfg.region = {1.0, 1.05, 0.4, 0.7, 0.4, 0.7};
  cfg.offset = -0.01;
  cfg.budget = 50000;
  Certificate c = certify_lemma(Mode::hyp, cfg);
  CHECK(c.status != CertStatus::proved_strict);
  CHECK(c.region_status != CertStatus::proved_strict);
}

TEST_CASE("a positive offset still never claims strictness for the lemma") {
  CertifyConfig cfg = default_config(Mode::hyp);
  cfg.region = {1.0, 1.05, 0.4, 0.7, 0.4, 0.7};
  cfg.offset = 0.5;
  cfg.budget = 50000;
  Certificate c = certify_lemma(Mode::hyp, cfg);
  CHECK(c.status != CertStatus::proved_strict);
}

TEST_CASE("certificates are identical across runs and worker counts") {
  CertifyConfig cfg = default_config(Mode::hyp);
  cfg.region = {1.0, 1.3, 0.3, 1.0, 0.3, 1.0};
  Certificate a = certify_lemma(Mode::hyp, cfg);
  Certificate b = certify_lemma(Mode::hyp, cfg);
  cfg.workers = 4;
  Certificate c = certify_lemma(Mode::hyp, cfg);
  CHECK(same_certificate(a, b));
  CHECK(same_certificate(a, c));
}

TEST_CASE("point_excluded matches the tube geometry") {
  TubeSpec tube;
  // manifold points are excluded
  for (double t : {0.5, 1.5, 2.5}) {
    double us = manifold_u(Mode::trig, t);
    CHECK(point_excluded(Mode::trig, tube, t, us, us));
  }
  for (double t : {0.5, 2.0, 4.0}) {
    double us = manifold_u(Mode::hyp, t);
    CHECK(point_excluded(Mode::hyp, tube, t, us, us));
  }
  // far off-manifold points are not
  CHECK_FALSE(point_excluded(Mode::trig, tube, 1.0, 0.2, 1.4));
  CHECK_FALSE(point_excluded(Mode::hyp, tube, 2.0, 0.2, 2.5));
  // just outside the band in u: not excluded
  double us = manifold_u(Mode::trig, 1.5);
  CHECK_FALSE(point_excluded(Mode::trig, tube, 1.5, us + tube.rho + 0.01, us));
  // the degenerate trig corner basin is excluded
  CHECK(point_excluded(Mode::trig, tube, pi - 0.01, 0.05, 0.05));
  // rho = 0 keeps only the basin
  TubeSpec none{0.0, 0.01};
  CHECK_FALSE(point_excluded(Mode::trig, none, 1.5, us, us));
}

TEST_CASE("default regions span the advertised ranges") {
  RegionSpec rt = default_region(Mode::trig);
  CHECK(rt.t0 == doctest::Approx(0.2));
  CHECK(rt.t1 >= pi);
  CHECK(rt.u1 >= pi / 2);
  RegionSpec rh = default_region(Mode::hyp);
  CHECK(rh.t0 == doctest::Approx(0.2));
  CHECK(rh.t1 == doctest::Approx(6.0));
}
