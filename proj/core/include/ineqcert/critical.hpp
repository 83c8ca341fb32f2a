#ifndef INEQCERT_CRITICAL_HPP
#define INEQCERT_CRITICAL_HPP

#include <string>
#include <vector>

#include "ineqcert/scalar.hpp"

namespace ineqcert {

/// Floating-point exploration of the stationarity systems. Nothing here is
/// rigorous; results cross-check the certifier and the ledger.

enum class PointClass { manifold, boundary, spurious };

const char* point_class_name(PointClass c);

struct StationaryPoint {
  EvalPoint point;
  double residual = 0;  // max |gradient component| at the final iterate
  PointClass classification = PointClass::spurious;
  bool converged = false;
  int iterations = 0;
};

/// Damped Newton on the 3-variable gradient system, steps clipped to the
/// domain. Divergence and domain exits are reported via converged = false.
StationaryPoint newton_stationary(Mode mode, const EvalPoint& start, int max_iter = 100);

/// One state per branch of the reduced alpha/beta case split:
///   manifold     alpha = beta = 1 (the only admissible solution)
///   alpha=0      forces beta = 0 and then the excluded value c = 2
///   alpha*beta=1 forces c = 1, excluded on the open branch
struct AlphaBetaState {
  double alpha = 0, beta = 0;
  double c = 0;  // branch value of cos t resp. cosh t (NaN when free)
  std::string branch;
  bool consistent = false;  // c lies in the mode's valid open range
  std::string note;
};
std::vector<AlphaBetaState> solve_alpha_beta(Mode mode);

/// Plain axis-aligned box for scans (not clipped, caller keeps it in-domain).
struct ScanBox {
  double t0 = 0, t1 = 0, x0 = 0, x1 = 0, y0 = 0, y1 = 0;
};

struct GridMin {
  EvalPoint argmin;
  double value = 0;
};

/// Exhaustive double-precision grid minimum, grid_n points per axis,
/// deterministic tie-break to the lexicographically smallest index.
/// workers > 1 parallelizes over t-slabs with an index-ordered merge.
GridMin brute_force_min(Mode mode, const ScanBox& box, int grid_n, int workers = 1);

/// Deterministic quasi-random (Halton bases 2, 3, 5) interior starting
/// points for the multistart probe; seed rotates the sequence.
std::vector<EvalPoint> quasi_random_starts(Mode mode, int n, unsigned seed);

/// Distance to the equality manifold in compactified coordinates
/// (arctan / arccoth straighten the manifold; scale-free near t = 0).
double manifold_distance(const EvalPoint& p);

}  // namespace ineqcert

#endif
