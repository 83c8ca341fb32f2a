#include "ineqcert/corner.hpp"

#include <cmath>
#include <deque>
#include <sstream>

namespace ineqcert {
namespace corner {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Interval ipow(const Interval& b, int n) { return pow_int(b, n); }

// Exact small-integer interval (integers below 2^53 are exact doubles).
Interval iexact(double v) { return Interval(v, v); }

// Alternating series sum_{k>=2} coef(k) * arg^(2k-4) with |coef| terms
// that keep the alternating-decreasing property on the stated argument
// range; the truncation error is bounded by the first omitted term.
template <typename CoefFn>
Interval alt_series(const Interval& arg, int k_max, CoefFn coef) {
  Interval z2 = sqr(arg);
  Interval sum(0.0);
  Interval power(1.0);
  for (int k = 2; k <= k_max; ++k) {
    sum = sum + coef(k) * power;
    power = power * z2;
  }
  Interval tail = coef(k_max + 1) * power;
  double t = std::max(std::abs(tail.lo), std::abs(tail.hi));
  return sum + Interval(-t, t);
}

// (-1)^k (3^(2k+1) - 27) / (4 (2k+1)!)
Interval beta_coef(int k) {
  Interval p3(1.0), fact(1.0);
  for (int i = 0; i < 2 * k + 1; ++i) p3 = p3 * iexact(3);
  for (int i = 2; i <= 2 * k + 1; ++i) fact = fact * iexact(i);
  Interval c = (p3 - iexact(27)) / (iexact(4) * fact);
  return (k % 2 == 0) ? c : -c;
}

// (-1)^k (4k-4)/(2k+1)
Interval alpha_coef(int k) {
  Interval c = iexact(4 * k - 4) / iexact(2 * k + 1);
  return (k % 2 == 0) ? c : -c;
}

Interval four_A_pt(double x) {
  if (std::isinf(x)) return Interval(kInf);
  Interval ix(x);
  return 4 * ix - 6 * ival_arctan(ix) + 2 * ix / (1 + sqr(ix));
}

Interval sigma_pt(double t) {
  if (t == 0) return Interval(1.0);
  if (t < 0.1) {
    // 1 - t^2/6 + t^4/120 - t^6/5040 +- t^8/362880 (alternating)
    Interval t2 = sqr(Interval(t));
    Interval s = 1 - t2 / 6 + sqr(t2) / 120 - t2 * sqr(t2) / 5040;
    double tail = 1e-13;  // t^8/9! at t <= 0.1 is far below this
    return s + Interval(-tail, tail);
  }
  return ival_sin(Interval(t)) / Interval(t);
}

Interval kappa_pt(double t) {
  if (t == 0) return Interval(0.5);
  if (t < 0.1) {
    // 1/2 - t^2/24 + t^4/720 - t^6/40320 (alternating)
    Interval t2 = sqr(Interval(t));
    Interval s = Interval(0.5) - t2 / 24 + sqr(t2) / 720;
    double tail = 1e-12;
    return s + Interval(-tail, tail);
  }
  return (1 - ival_cos(Interval(t))) / sqr(Interval(t));
}

}  // namespace

Interval sigma_iv(const Interval& t) {
  // sin(t)/t is decreasing on [0, pi].
  Interval r = {sigma_pt(t.hi).lo, sigma_pt(t.lo).hi};
  return intersect(r, {0, 1});
}

Interval kappa_iv(const Interval& t) {
  // (1 - cos t)/t^2 is decreasing on [0, pi].
  Interval r = {kappa_pt(t.hi).lo, kappa_pt(t.lo).hi};
  return intersect(r, {0, 0.5});
}

Interval beta_iv(const Interval& t) {
  if (t.hi <= 1.0) return alt_series(t, 14, beta_coef);
  // fall back to the direct formula (only sound away from 0)
  Interval s = ival_sin(t);
  return (6 * t - 6 * s - cube(s)) / ipow(t, 5);
}

Interval four_A_iv(const Interval& x) {
  Interval r = {four_A_pt(x.lo).lo, four_A_pt(x.hi).hi};  // increasing
  r.lo = std::max(r.lo, 0.0);
  return r;
}

Interval alpha_iv(const Interval& z) {
  if (z.hi <= 0.45) return alt_series(z, 24, alpha_coef);
  if (z.lo >= 0.35) return four_A_iv(z) / ipow(z, 5);
  return hull(alpha_iv({z.lo, 0.4}), alpha_iv({0.4, z.hi}));
}

Interval ustar_iv(const Interval& t) {
  // tan(t/2)/t is increasing on (0, pi) with limit 1/2 at 0.
  auto pt_hi = [](double t1) { return (ival_tan(Interval(0.5) * Interval(t1)) / Interval(t1)).hi; };
  double lo = (t.lo < 1e-2) ? 0.5
                            : (ival_tan(Interval(0.5) * Interval(t.lo)) / Interval(t.lo)).lo;
  return {std::max(lo, 0.5), pt_hi(t.hi)};
}

Interval eval_Ghat(const Interval& t, const Interval& u, const Interval& v) {
  Interval sig3 = cube(sigma_iv(t));
  Interval K = sqr(kappa_iv(t)) * (2 + ival_cos(t));
  return sig3 * u * v - K * (u + v) + beta_iv(t) + ipow(u, 5) * alpha_iv(t * u) +
         ipow(v, 5) * alpha_iv(t * v);
}

namespace {

struct Rect {
  Interval u, v;
};

// Per-chunk constants of Ghat: only the alpha(t u) factors still depend
// on (u, v) inside a chunk.
struct ChunkForm {
  Interval t, sig3, K, beta;

  explicit ChunkForm(const Interval& tc)
      : t(tc),
        sig3(cube(sigma_iv(tc))),
        K(sqr(kappa_iv(tc)) * (2 + ival_cos(tc))),
        beta(beta_iv(tc)) {}

  Interval ghat(const Interval& u, const Interval& v) const {
    return sig3 * u * v - K * (u + v) + beta + ipow(u, 5) * alpha_iv(t * u) +
           ipow(v, 5) * alpha_iv(t * v);
  }
};

// Branch-and-bound: Ghat > 0 on the chunk x rect? Splits (u, v) only.
bool bnb_positive(const ChunkForm& f, Rect r0, long budget, long* used) {
  std::deque<Rect> work{r0};
  while (!work.empty()) {
    if (++*used > budget) return false;
    Rect r = work.front();
    work.pop_front();
    if (f.ghat(r.u, r.v).lo > 0) continue;
    // a box this small that is still not positive means the chunk's
    // t-slack dominates: give up so the caller splits in t instead
    if (r.u.width() < 2e-4 && r.v.width() < 2e-4) return false;
    if (r.u.width() >= r.v.width()) {
      double m = r.u.mid();
      work.push_back({{r.u.lo, m}, r.v});
      work.push_back({{m, r.u.hi}, r.v});
    } else {
      double m = r.v.mid();
      work.push_back({r.u, {r.v.lo, m}});
      work.push_back({r.u, {m, r.v.hi}});
    }
  }
  return true;
}

// 1-D search: beta - K v + v^5 alpha(t v) > 0 on v in [0, lambda]?
bool onedim_positive(const ChunkForm& f, double lambda, long budget, long* used) {
  std::deque<Interval> work{Interval(0, lambda)};
  while (!work.empty()) {
    if (++*used > budget) return false;
    Interval v = work.front();
    work.pop_front();
    Interval m = f.beta - f.K * v + ipow(v, 5) * alpha_iv(f.t * v);
    if (m.lo > 0) continue;
    if (v.width() < 1e-6) return false;
    double mid = v.mid();
    work.push_back({v.lo, mid});
    work.push_back({mid, v.hi});
  }
  return true;
}

// One t-chunk, splitting itself in t (narrower chunks shed the slack the
// interval form accrues across the chunk) before giving up.
bool certify_chunk(double t0, double t1, long budget, int depth, Outcome* out) {
  Interval t(t0, t1);
  double lambda = std::max(1.2, 1.8 * t1);
  const double b0 = 0.40;

  // (3a) tail condition: lambda^4 alpha(lambda t) >= K(t), which by the
  // monotonicity of 4A(z)/z gives 4A(z) >= K t^4 z for all z >= lambda t.
  ChunkForm f(t);
  Interval alpha_tail = alpha_iv(Interval(lambda) * t);
  if (!((ipow(Interval(lambda), 4) * alpha_tail).lo >= f.K.hi)) {
    std::ostringstream os;
    os << "tail condition failed on chunk [" << t0 << ", " << t1 << "]";
    out->detail = os.str();
    return false;
  }

  // (1) convexity box [b0, lambda]^2 with the manifold strictly inside.
  Interval us = ustar_iv(t);
  if (!(us.lo > b0 && us.hi < lambda)) {
    out->detail = "manifold left the convexity box";
    return false;
  }
  // d^2 Ghat/du^2 = h(u) = 16u^3/(1+(tu)^2)^3: decreasing in t and
  // unimodal in u (h' has the sign of 1 - (tu)^2), so its minimum over
  // the box sits at a u-endpoint with t at the chunk top.
  auto h_pt = [&](double u) {
    Interval iu(u), it(t1);
    return 16 * cube(iu) / cube(1 + sqr(it * iu));
  };
  double huu_lo = std::min(h_pt(b0).lo, h_pt(lambda).lo);
  if (!(huu_lo > 0 && huu_lo * huu_lo >= f.sig3.hi * f.sig3.hi)) {
    std::ostringstream os;
    os << "convexity failed on chunk [" << t0 << ", " << t1 << "]";
    out->detail = os.str();
    return false;
  }

  // (2) boundary strip u in [0, b0], v in [0, lambda]; Ghat is symmetric
  // in (u, v), so this also covers the mirrored strip. The band
  // v in [b0, vmono] rides for free: there dGhat/du <= sig3 v - K + 4 b0^4
  // < 0, so Ghat(u, v) >= Ghat(b0, v) >= 0 from the convexity box. That
  // band contains the manifold shadow, which is exactly where a direct
  // search would grind. The two remaining pieces have healthy margins.
  double vmono = (f.K.lo - rnd::up(4 * b0 * b0 * b0 * b0)) / f.sig3.hi;
  vmono = rnd::down(rnd::down(vmono));
  long used = 0;
  bool ok = vmono > b0 && bnb_positive(f, {{0, b0}, {0, b0}}, budget, &used) &&
            bnb_positive(f, {{0, b0}, {vmono, lambda}}, budget, &used) &&
            onedim_positive(f, lambda, budget, &used);
  out->boxes += used;
  if (ok) {
    ++out->chunks;
    return true;
  }
  if (depth > 0) {
    double tm = 0.5 * (t0 + t1);
    return certify_chunk(t0, tm, budget, depth - 1, out) &&
           certify_chunk(tm, t1, budget, depth - 1, out);
  }
  std::ostringstream os;
  os << "strip search failed on chunk [" << t0 << ", " << t1 << "]";
  out->detail = os.str();
  return false;
}

}  // namespace

Outcome certify_near_pi(double t_max, double chunk_width, long max_boxes_per_chunk) {
  Outcome out;
  out.t_max = t_max;
  if (t_max <= 0 || t_max > 0.95) {
    out.detail = "t_max outside the supported range (0, 0.95]";
    return out;
  }
  int n_chunks = static_cast<int>(std::ceil(t_max / chunk_width));
  for (int i = 0; i < n_chunks; ++i) {
    double t0 = t_max * i / n_chunks;
    double t1 = t_max * (i + 1) / n_chunks;
    if (!certify_chunk(t0, t1, max_boxes_per_chunk, /*depth=*/6, &out)) return out;
  }
  out.proved = true;
  return out;
}

}  // namespace corner

}  // namespace ineqcert
