// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Everything runs single-threaded unless a criterion is
// explicitly about worker counts.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "ineqcert/certifier.hpp"
#include "ineqcert/critical.hpp"
#include "ineqcert/identities.hpp"
#include "ineqcert/scalar.hpp"

using namespace ineqcert;
using std::numbers::pi;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& name, const std::string& detail) {
  std::printf("criterion %2d: %s — %s (%s)\n", n, ok ? "PASS" : "FAIL", name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const clock::time_point t0 = clock::now();
  return std::chrono::duration<double>(clock::now() - t0).count();
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

// ---------------------------------------------------------------- criteria

void criterion_1_ledger() {
  double t0 = now_seconds();
  LedgerReport r = verify_all();
  bool ok = r.all_passed && r.steps.size() == 44;
  for (const StepResult& s : r.steps) ok = ok && s.passed;
  double res_t = reduction_axiom_residual(Mode::trig);
  double res_h = reduction_axiom_residual(Mode::hyp);
  ok = ok && res_t <= 1e-30 && res_h <= 1e-30;
  double secs = now_seconds() - t0;
  ok = ok && secs < 10.0;
  report(1, ok, "identity ledger",
         fmt("%zu/44 steps, axiom residuals %.1e / %.1e, %.2f s", r.steps.size(), res_t,
             res_h, secs));
}

void criterion_2_manifold() {
  // Evaluated through the extended-precision composed form: at large scale
  // the curvature along the manifold (~sinh^3) amplifies the rounding of the
  // manifold coordinates themselves, so a plain double evaluation at the
  // rounded point cannot witness the vanishing to 1e-12.
  double worst_v = 0, worst_g = 0;
  for (int i = 0; i <= 1000; ++i) {
    double t = 0.05 + (pi - 0.05) * i / 1000.0;
    ManifoldResidual r = manifold_residual(Mode::trig, t);
    worst_v = std::max(worst_v, std::abs(r.value));
    worst_g = std::max({worst_g, std::abs(r.grad_t), std::abs(r.grad_x), std::abs(r.grad_y)});
  }
  for (int i = 0; i <= 1000; ++i) {
    double t = 0.05 + (20.0 - 0.05) * i / 1000.0;
    ManifoldResidual r = manifold_residual(Mode::hyp, t);
    worst_v = std::max(worst_v, std::abs(r.value));
    worst_g = std::max({worst_g, std::abs(r.grad_t), std::abs(r.grad_x), std::abs(r.grad_y)});
  }
  bool ok = worst_v <= 1e-12 && worst_g <= 1e-10;
  report(2, ok, "manifold vanishing",
         fmt("max |value| %.2e (<= 1e-12), max |grad| %.2e (<= 1e-10)", worst_v, worst_g));
}

void criterion_3_reference_values() {
  // Frozen from an independent 100-digit computation.
  const double g_pi_11 = 0.57522203923062028461206985016149;   // 10 - 3 pi
  const double g_hpi_00 = 2.4247779607693797153879301498385;   // 3 pi - 7
  const double f_0_22 = 9.2583403986753248150381380882018;     // 12 atanh(1/2) + 8/3
  double e1 = std::abs(eval_G(EvalPoint::trig(pi, 1, 1)).value - g_pi_11);
  double e2 = std::abs(eval_G(EvalPoint::trig(pi / 2, 0, 0)).value - g_hpi_00);
  double e3 = std::abs(eval_F(EvalPoint::hyp(0, 2, 2)).value - f_0_22);
  bool ok = e1 <= 1e-12 && e2 <= 1e-12 && e3 <= 1e-12;
  report(3, ok, "reference values", fmt("errors %.2e, %.2e, %.2e (<= 1e-12)", e1, e2, e3));
}

void criterion_4_derivatives() {
  double worst_rel = 0;
  for (Mode m : {Mode::trig, Mode::hyp}) {
    std::mt19937 rng(m == Mode::trig ? 101 : 102);
    std::uniform_real_distribution<double> dt(0.3, m == Mode::trig ? 2.8 : 4.0);
    std::uniform_real_distribution<double> dx(m == Mode::trig ? 0.1 : 1.1, 5.0);
    for (int i = 0; i < 1000; ++i) {
      EvalPoint p{m, dt(rng), dx(rng), dx(rng)};
      Gradient3 g = m == Mode::trig ? grad_G(p) : grad_F(p);
      double h = 1e-6;
      auto val = [&](double ddt, double ddx, double ddy) {
        EvalPoint q{m, p.t + ddt, p.x + ddx, p.y + ddy};
        return (m == Mode::trig ? eval_G(q) : eval_F(q)).value;
      };
      double scale = 1 + std::abs(g.d_t) + std::abs(g.d_x) + std::abs(g.d_y);
      worst_rel = std::max(
          {worst_rel, std::abs(g.d_t - (val(h, 0, 0) - val(-h, 0, 0)) / (2 * h)) / scale,
           std::abs(g.d_x - (val(0, h, 0) - val(0, -h, 0)) / (2 * h)) / scale,
           std::abs(g.d_y - (val(0, 0, h) - val(0, 0, -h)) / (2 * h)) / scale});
    }
  }
  double worst_hess = 0;
  for (int i = 1; i < 100; ++i) {
    double t = 0.2 + (pi - 0.4) * i / 100.0;
    ManifoldPoint mp = manifold_point(Mode::trig, t);
    SymMatrix2 hm = hessian_xy_G(EvalPoint::trig(t, mp.x, mp.y));
    double s3 = std::pow(std::sin(t), 3);
    worst_hess = std::max({worst_hess, std::abs(hm.xx - 2 * s3), std::abs(hm.xy - s3),
                           std::abs(hm.yy - 2 * s3)});
  }
  bool ok = worst_rel <= 1e-6 && worst_hess <= 1e-8;
  report(4, ok, "gradient/Hessian checks",
         fmt("max FD rel err %.2e (<= 1e-6), Hessian err %.2e (<= 1e-8)", worst_rel,
             worst_hess));
}

void criterion_5_interval_soundness() {
  long violations = 0;
  long checks = 0;
  for (Mode m : {Mode::trig, Mode::hyp}) {
    std::mt19937 rng(m == Mode::trig ? 201 : 202);
    std::uniform_real_distribution<double> dt(0.2, m == Mode::trig ? 3.1 : 5.0);
    std::uniform_real_distribution<double> dx(m == Mode::trig ? 0.0 : 1.05, 5.0);
    std::uniform_real_distribution<double> un(0, 1);
    for (int b = 0; b < 500; ++b) {
      double t1 = dt(rng), t2 = dt(rng);
      double x1 = dx(rng), x2 = dx(rng);
      double y1 = dx(rng), y2 = dx(rng);
      Box3 box = Box3::make(m, {std::min(t1, t2), std::max(t1, t2)},
                            {std::min(x1, x2), std::max(x1, x2)},
                            {std::min(y1, y2), std::max(y1, y2)});
      Interval naive = m == Mode::trig ? eval_G_interval(box) : eval_F_interval(box);
      Interval mv = m == Mode::trig ? eval_G_mv(box) : eval_F_mv(box);
      GradientBox gb = m == Mode::trig ? eval_gradG_interval(box) : eval_gradF_interval(box);
      for (int s = 0; s < 100; ++s) {
        EvalPoint p{m, box.t.lo + box.t.width() * un(rng),
                    box.x.lo + box.x.width() * un(rng),
                    box.y.lo + box.y.width() * un(rng)};
        double v = (m == Mode::trig ? eval_G(p) : eval_F(p)).value;
        Gradient3 g = m == Mode::trig ? grad_G(p) : grad_F(p);
        checks += 5;
        if (!naive.contains(v)) ++violations;
        if (!mv.contains(v)) ++violations;
        if (!gb.d_t.contains(g.d_t)) ++violations;
        if (!gb.d_x.contains(g.d_x)) ++violations;
        if (!gb.d_y.contains(g.d_y)) ++violations;
      }
    }
  }
  report(5, violations == 0, "interval soundness",
         fmt("%ld containment checks over 1000 boxes, %ld violations", checks, violations));
}

// Brute-force grid minimum over the compact region, skipping the certified
// exclusion zone (the certificate's own geometry via point_excluded).
double excluded_grid_min(Mode m, const Certificate& cert, int n) {
  double min_v = std::numeric_limits<double>::infinity();
  const RegionSpec& r = cert.region;
  double u_cap = m == Mode::trig ? pi / 2 - 1e-9 : r.u1;
  for (int i = 0; i <= n; ++i) {
    double t = r.t0 + (r.t1 - r.t0) * i / n;
    for (int j = 0; j <= n; ++j) {
      double u = std::min(r.u0 + (r.u1 - r.u0) * j / n, u_cap);
      for (int k = 0; k <= n; ++k) {
        double v = std::min(r.v0 + (r.v1 - r.v0) * k / n, u_cap);
        if (point_excluded(m, cert.tube, t, u, v)) continue;
        EvalPoint p{m, std::min(t, m == Mode::trig ? pi : t),
                    uncompact_x(m, u), uncompact_x(m, v)};
        double val = (m == Mode::trig ? eval_G(p) : eval_F(p)).value;
        if (std::isfinite(val)) min_v = std::min(min_v, val);
      }
    }
  }
  return min_v;
}

Certificate cert_trig, cert_hyp;  // reused by criterion 10

void criterion_6_lemma_trig() {
  double t0 = now_seconds();
  cert_trig = certify_lemma(Mode::trig, default_config(Mode::trig));
  double secs = now_seconds() - t0;
  double grid_min = excluded_grid_min(Mode::trig, cert_trig, 64);
  bool ok = cert_trig.region_status == CertStatus::proved_strict && cert_trig.delta > 0 &&
            grid_min >= cert_trig.delta - 1e-9 && secs < 600.0 &&
            cert_trig.status != CertStatus::inconclusive;
  report(6, ok, "certification, lemma 1",
         fmt("region %s, delta %.3e, grid min %.3e, %.1f s (< 600)",
             status_name(cert_trig.region_status), cert_trig.delta, grid_min, secs));
}

void criterion_7_lemma_hyp() {
  double t0 = now_seconds();
  cert_hyp = certify_lemma(Mode::hyp, default_config(Mode::hyp));
  double secs = now_seconds() - t0;
  double grid_min = excluded_grid_min(Mode::hyp, cert_hyp, 64);
  bool ok = cert_hyp.status == CertStatus::proved_strict && cert_hyp.delta > 0 &&
            grid_min >= cert_hyp.delta - 1e-9 && secs < 600.0;
  report(7, ok, "certification, lemma 2",
         fmt("%s, delta %.3e, grid min %.3e, %.1f s (< 600)", status_name(cert_hyp.status),
             cert_hyp.delta, grid_min, secs));
}

void criterion_8_negative_controls() {
  CertifyConfig no_tube = default_config(Mode::trig);
  no_tube.tube.rho = 0;
  no_tube.budget = 300000;
  Certificate a = certify_lemma(Mode::trig, no_tube);
  bool rho0_ok = a.status == CertStatus::inconclusive;

  CertifyConfig shifted = default_config(Mode::trig);
  shifted.offset = -0.01;
  shifted.budget = 200000;
  Certificate b = certify_lemma(Mode::trig, shifted);
  bool offset_ok =
      b.status != CertStatus::proved_strict && b.region_status != CertStatus::proved_strict;

  bool tamper_ok = true;
  for (const std::string& id : {std::string("G3"), std::string("F3")}) {
    StepResult s = detail::verify_step_tampered(id[0] == 'G' ? Mode::trig : Mode::hyp, id);
    tamper_ok = tamper_ok && !s.passed && !s.note.empty();
  }
  bool ok = rho0_ok && offset_ok && tamper_ok;
  report(8, ok, "negative controls",
         fmt("rho=0 -> %s, offset -0.01 -> %s, tampered ledger fails: %s", status_name(a.status),
             status_name(b.status), tamper_ok ? "yes" : "no"));
}

void criterion_9_stationary_probe() {
  long manifold_hits = 0, boundary_hits = 0, spurious_hits = 0;
  double worst = 0;
  bool ok = true;
  for (Mode m : {Mode::trig, Mode::hyp}) {
    for (const EvalPoint& s : quasi_random_starts(m, 1000, 1)) {
      StationaryPoint r = newton_stationary(m, s);
      if (!r.converged) continue;
      switch (r.classification) {
        case PointClass::manifold: {
          ++manifold_hits;
          double d = manifold_distance(r.point);
          worst = std::max(worst, d);
          if (d > 1e-6) ok = false;
          break;
        }
        case PointClass::boundary:
          // Stalls into the degenerate domain corner are boundary artifacts,
          // not interior stationary points.
          ++boundary_hits;
          break;
        case PointClass::spurious:
          ++spurious_hits;
          ok = false;
          break;
      }
    }
    std::vector<AlphaBetaState> st = solve_alpha_beta(m);
    int admissible = 0;
    bool branches_ok = st.size() == 3;
    for (const AlphaBetaState& s : st) {
      if (s.consistent) ++admissible;
      if (s.branch == "alpha=0") branches_ok = branches_ok && s.c == 2.0 && !s.consistent;
      if (s.branch == "alpha*beta=1") branches_ok = branches_ok && s.c == 1.0 && !s.consistent;
      if (s.branch == "alpha=beta")
        branches_ok = branches_ok && s.alpha == 1.0 && s.beta == 1.0 && s.consistent;
    }
    ok = ok && branches_ok && admissible == 1;
  }
  report(9, ok, "stationary-point probe",
         fmt("%ld manifold / %ld boundary / %ld spurious convergents, "
             "max manifold distance %.2e (<= 1e-6); "
             "case split: only alpha = beta = 1 admissible",
             manifold_hits, boundary_hits, spurious_hits, worst));
}

bool same_certificate(const Certificate& a, const Certificate& b) {
  return a.lemma == b.lemma && a.status == b.status && a.region_status == b.region_status &&
         a.delta == b.delta && a.corner_policy == b.corner_policy &&
         a.epsilon == b.epsilon && a.stats.boxes == b.stats.boxes &&
         a.stats.max_depth == b.stats.max_depth && a.stats.slices == b.stats.slices &&
         a.stats.fallback_slices == b.stats.fallback_slices &&
         a.stats.corner_samples == b.stats.corner_samples &&
         a.residual_boxes == b.residual_boxes;
}

void criterion_10_determinism() {
  bool ok = true;
  std::string detail;
  for (Mode m : {Mode::trig, Mode::hyp}) {
    const Certificate& first = m == Mode::trig ? cert_trig : cert_hyp;
    CertifyConfig cfg = default_config(m);
    Certificate rerun = certify_lemma(m, cfg);
    cfg.workers = 4;
    Certificate parallel = certify_lemma(m, cfg);
    bool same = same_certificate(first, rerun) && same_certificate(first, parallel);
    ok = ok && same;
    detail += fmt("%s: rerun %s, 4 workers %s; ", m == Mode::trig ? "trig" : "hyp",
                  same_certificate(first, rerun) ? "identical" : "DIFFERS",
                  same_certificate(first, parallel) ? "identical" : "DIFFERS");
  }
  LedgerReport r1 = verify_all(), r2 = verify_all();
  bool ledger_same = r1.all_passed == r2.all_passed && r1.steps.size() == r2.steps.size();
  for (size_t i = 0; ledger_same && i < r1.steps.size(); ++i) {
    ledger_same = r1.steps[i].id == r2.steps[i].id && r1.steps[i].passed == r2.steps[i].passed &&
                  r1.steps[i].note == r2.steps[i].note;
  }
  ok = ok && ledger_same;
  detail += ledger_same ? "ledger reports identical" : "ledger reports DIFFER";
  report(10, ok, "determinism", detail);
}

}  // namespace

int main() {
  std::printf("acceptance suite (library version %s)\n", kVersion);
  criterion_1_ledger();
  criterion_2_manifold();
  criterion_3_reference_values();
  criterion_4_derivatives();
  criterion_5_interval_soundness();
  criterion_6_lemma_trig();
  criterion_7_lemma_hyp();
  criterion_8_negative_controls();
  criterion_9_stationary_probe();
  criterion_10_determinism();
  std::printf("%s\n", failures == 0 ? "all criteria passed" : "SOME CRITERIA FAILED");
  return failures;
}
