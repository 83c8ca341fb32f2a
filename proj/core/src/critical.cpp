#include "ineqcert/critical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace ineqcert {
namespace {

constexpr double kResidualTol = 1e-12;
constexpr double kStepTol = 1e-14;
constexpr double kManifoldTol = 1e-6;
constexpr double kBoundaryTol = 1e-7;

struct Vec3 {
  double t, x, y;
};

Vec3 gradient(Mode m, double t, double x, double y) {
  if (m == Mode::trig)
    return {raw::g_dt(t, x, y), raw::g_dx(t, x, y), raw::g_dx(t, y, x)};
  return {raw::f_dt(t, x, y), raw::f_dx(t, x, y), raw::f_dx(t, y, x)};
}

double res_norm(const Vec3& g) {
  return std::max({std::fabs(g.t), std::fabs(g.x), std::fabs(g.y)});
}

// progress measure for damping: squared 2-norm (steepest descent is a
// descent direction for this, not for the max norm)
double res2(const Vec3& g) { return g.t * g.t + g.x * g.x + g.y * g.y; }

// Solve H d = -g for the full 3x3 Hessian via Gaussian elimination with
// partial pivoting; returns false when H is numerically singular.
bool newton_dir(Mode m, double t, double x, double y, const Vec3& g, Vec3* d) {
  double htt, htx, hty, hxx, hxy, hyy;
  if (m == Mode::trig) {
    htt = raw::g_dtt(t, x, y);
    htx = raw::g_dtx(t, x, y);
    hty = raw::g_dtx(t, y, x);
    hxx = raw::g_dxx(t, x, y);
    hyy = raw::g_dxx(t, y, x);
    hxy = raw::g_dxy(t);
  } else {
    htt = raw::f_dtt(t, x, y);
    htx = raw::f_dtx(t, x, y);
    hty = raw::f_dtx(t, y, x);
    hxx = raw::f_dxx(t, x, y);
    hyy = raw::f_dxx(t, y, x);
    hxy = raw::f_dxy(t);
  }
  double a[3][4] = {{htt, htx, hty, -g.t}, {htx, hxx, hxy, -g.x}, {hty, hxy, hyy, -g.y}};
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    if (std::fabs(a[piv][col]) < 1e-300) return false;
    if (piv != col)
      for (int k = 0; k < 4; ++k) std::swap(a[piv][k], a[col][k]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      double f = a[r][col] / a[col][col];
      for (int k = col; k < 4; ++k) a[r][k] -= f * a[col][k];
    }
  }
  d->t = a[0][3] / a[0][0];
  d->x = a[1][3] / a[1][1];
  d->y = a[2][3] / a[2][2];
  return std::isfinite(d->t) && std::isfinite(d->x) && std::isfinite(d->y);
}

void clip(Mode m, double* t, double* x, double* y) {
  if (m == Mode::trig) {
    double pi = raw::pi_of<double>();
    *t = std::clamp(*t, 1e-9, pi);
    *x = std::max(*x, 0.0);
    *y = std::max(*y, 0.0);
  } else {
    *t = std::clamp(*t, 1e-9, 40.0);
    *x = std::max(*x, 1.0 + 1e-9);
    *y = std::max(*y, 1.0 + 1e-9);
  }
}

bool on_boundary(Mode m, double t, double x, double y) {
  if (m == Mode::trig) {
    double pi = raw::pi_of<double>();
    // the (pi, 0, 0) corner is a quartic-degenerate boundary minimum: the
    // gradient flattens out, so iterates stall anywhere in its basin
    if (t >= pi - 0.05 && x <= 0.05 && y <= 0.05) return true;
    return t >= pi - kBoundaryTol || t <= 1e-8 || x <= kBoundaryTol || y <= kBoundaryTol;
  }
  return t <= 1e-8 || x <= 1 + 2e-9 + kBoundaryTol || y <= 1 + 2e-9 + kBoundaryTol;
}

double halton(unsigned long long i, int base) {
  double f = 1.0, r = 0.0;
  while (i > 0) {
    f /= base;
    r += f * double(i % base);
    i /= base;
  }
  return r;
}

double eval_point(Mode m, double t, double x, double y) {
  return m == Mode::trig ? raw::g_direct(t, x, y) : raw::f_value(t, x, y);
}

}  // namespace

const char* point_class_name(PointClass c) {
  switch (c) {
    case PointClass::manifold: return "manifold";
    case PointClass::boundary: return "boundary";
    case PointClass::spurious: return "spurious";
  }
  return "?";
}

double manifold_distance(const EvalPoint& p) {
  if (p.mode == Mode::trig) {
    double target = raw::pi_of<double>() / 2 - p.t / 2;
    return std::max(std::fabs(std::atan(p.x) - target), std::fabs(std::atan(p.y) - target));
  }
  if (p.x <= 1 || p.y <= 1) return std::numeric_limits<double>::infinity();
  double target = p.t / 2;
  return std::max(std::fabs(std::atanh(1 / p.x) - target), std::fabs(std::atanh(1 / p.y) - target));
}

StationaryPoint newton_stationary(Mode mode, const EvalPoint& start, int max_iter) {
  double t = start.t, x = start.x, y = start.y;
  clip(mode, &t, &x, &y);
  Vec3 g = gradient(mode, t, x, y);
  double res = res_norm(g), r2 = res2(g);
  StationaryPoint out;
  out.point.mode = mode;
  bool stalled = false;
  int it = 0;
  auto damped_try = [&](const Vec3& d) {
    // damping: halve until the residual decreases (clipped to the domain)
    double lambda = 1.0;
    for (int h = 0; h < 40; ++h, lambda /= 2) {
      double nt = t + lambda * d.t, nx = x + lambda * d.x, ny = y + lambda * d.y;
      clip(mode, &nt, &nx, &ny);
      Vec3 ng = gradient(mode, nt, nx, ny);
      if (!std::isfinite(res2(ng))) continue;
      if (res2(ng) < r2) {
        double step = std::max({std::fabs(nt - t), std::fabs(nx - x), std::fabs(ny - y)});
        t = nt;
        x = nx;
        y = ny;
        g = ng;
        res = res_norm(g);
        r2 = res2(g);
        if (step <= kStepTol) stalled = true;
        return true;
      }
    }
    return false;
  };
  for (; it < max_iter && res > kResidualTol; ++it) {
    Vec3 d;
    bool improved = newton_dir(mode, t, x, y, g, &d) && damped_try(d);
    if (!improved) {
      // singular Hessian or uphill Newton direction: scaled steepest descent
      double scale = 1.0 / std::max(1.0, res);
      improved = damped_try({-g.t * scale, -g.x * scale, -g.y * scale});
    }
    if (!improved) {
      stalled = true;
      break;
    }
    if (stalled) break;
  }
  out.point.t = t;
  out.point.x = x;
  out.point.y = y;
  out.residual = res;
  out.iterations = it;
  // a stall on the boundary with vanished gradient counts as convergence
  out.converged = res <= 1e-10 || (stalled && res <= 1e-8 && on_boundary(mode, t, x, y));
  if (manifold_distance(out.point) <= kManifoldTol)
    out.classification = PointClass::manifold;
  else if (on_boundary(mode, t, x, y))
    out.classification = PointClass::boundary;
  else
    out.classification = PointClass::spurious;
  return out;
}

std::vector<AlphaBetaState> solve_alpha_beta(Mode mode) {
  std::vector<AlphaBetaState> out;
  const double nan = std::numeric_limits<double>::quiet_NaN();

  AlphaBetaState manifold;
  manifold.alpha = manifold.beta = 1;
  manifold.c = nan;  // any t on the open branch; x = y = half-angle value
  manifold.branch = "alpha=beta";
  manifold.consistent = true;
  manifold.note = "4a(1-a) = (a-1)(1+a^2)^2 factors as (1-a)(4a+(1+a^2)^2) = 0; "
                  "the second factor is positive for a >= 0, so a = 1";
  out.push_back(manifold);

  AlphaBetaState a0;
  a0.alpha = 0;
  a0.beta = 0;
  a0.c = 2;
  a0.branch = "alpha=0";
  a0.consistent = false;  // c = 2 outside (-1,1) resp. below is excluded anyway
  a0.note = mode == Mode::trig
                ? "b(3b+1) = 0 with b >= 0 gives b = 0, then c = 2 > 1: excluded"
                : "b(3b+1) = 0 gives b = 0, but x, y >= 1 forces a, b > 0: excluded";
  out.push_back(a0);

  AlphaBetaState ab1;
  ab1.alpha = nan;  // any a with b = 1/a
  ab1.beta = nan;
  ab1.c = 1;
  ab1.branch = "alpha*beta=1";
  ab1.consistent = false;
  ab1.note = mode == Mode::trig ? "c = (1-a)^{-1} + (1-1/a)^{-1} = 1 means t = 0: excluded"
                                : "c = 1 means t = 0 (cosh t > 1 for t > 0): excluded";
  out.push_back(ab1);
  return out;
}

GridMin brute_force_min(Mode mode, const ScanBox& box, int grid_n, int workers) {
  if (grid_n < 2) throw std::invalid_argument("grid_n must be >= 2");
  struct Best {
    double v = std::numeric_limits<double>::infinity();
    long idx = -1;
  };
  auto at = [&](int i, int n, double lo, double hi) { return lo + (hi - lo) * i / (n - 1); };
  long n = grid_n;
  auto run_slab = [&](int i0, int i1, Best* best) {
    for (int i = i0; i < i1; ++i) {
      double t = at(i, grid_n, box.t0, box.t1);
      for (int j = 0; j < grid_n; ++j) {
        double x = at(j, grid_n, box.x0, box.x1);
        for (int k = 0; k < grid_n; ++k) {
          double y = at(k, grid_n, box.y0, box.y1);
          double v = eval_point(mode, t, x, y);
          long idx = (long(i) * n + j) * n + k;
          if (v < best->v || (v == best->v && idx < best->idx)) {
            best->v = v;
            best->idx = idx;
          }
        }
      }
    }
  };
  int nw = std::max(1, std::min(workers, grid_n));
  std::vector<Best> bests(nw);
  if (nw == 1) {
    run_slab(0, grid_n, &bests[0]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < nw; ++w)
      pool.emplace_back(run_slab, grid_n * w / nw, grid_n * (w + 1) / nw, &bests[w]);
    for (auto& th : pool) th.join();
  }
  Best best;
  for (auto& b : bests)  // index-ordered merge: ties resolve identically
    if (b.v < best.v || (b.v == best.v && b.idx < best.idx)) best = b;
  GridMin out;
  out.value = best.v;
  out.argmin.mode = mode;
  out.argmin.t = at(int(best.idx / (n * n)), grid_n, box.t0, box.t1);
  out.argmin.x = at(int((best.idx / n) % n), grid_n, box.x0, box.x1);
  out.argmin.y = at(int(best.idx % n), grid_n, box.y0, box.y1);
  return out;
}

std::vector<EvalPoint> quasi_random_starts(Mode mode, int n, unsigned seed) {
  std::vector<EvalPoint> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    unsigned long long idx = 1ULL + seed + i;
    double u = halton(idx, 2), v = halton(idx, 3), w = halton(idx, 5);
    EvalPoint p;
    p.mode = mode;
    if (mode == Mode::trig) {
      p.t = 0.15 + u * (raw::pi_of<double>() - 0.3);
      p.x = 0.05 + 8 * v;
      p.y = 0.05 + 8 * w;
    } else {
      p.t = 0.15 + 5.5 * u;
      p.x = 1.05 + 8 * v;
      p.y = 1.05 + 8 * w;
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace ineqcert
