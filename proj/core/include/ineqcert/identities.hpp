#ifndef INEQCERT_IDENTITIES_HPP
#define INEQCERT_IDENTITIES_HPP

#include <string>
#include <vector>

#include "ineqcert/fraction.hpp"

namespace ineqcert {

/// How a ledger step is decided.
///  - exact_poly: the step clears to a polynomial identity over the
///    rationals, checked exactly (no floating point, no tolerance).
///  - transcendental_reduction: the step additionally leans on one of the
///    two admitted reduction axioms
///      R1: arctan(cot(t/2)) = pi/2 - t/2   on (0, pi)
///      R2: arctanh(1/coth(t/2)) = t/2      on (0, inf)
///    whose residuals are cross-checked at 100 points to 1e-30 in
///    100-digit arithmetic; the remaining content is exact_poly.
///  - boundary_constant: a domain fact (sign of a variable, an excluded
///    constant value like cos = 2) plus an exact evaluation.
enum class Method { exact_poly, transcendental_reduction, boundary_constant };

const char* method_name(Method m);

struct StepResult {
  std::string id;           // G01..G23 / F01..F21
  std::string description;
  Method method = Method::exact_poly;
  Mode lemma = Mode::trig;
  bool passed = false;
  std::vector<std::string> side_conditions;  // cleared nonvanishing factors
  std::string note;                          // failure detail
};

struct LedgerReport {
  bool all_passed = false;
  std::vector<StepResult> steps;
};

std::vector<std::string> step_ids(Mode lemma);
StepResult verify_step(Mode lemma, const std::string& id);
LedgerReport verify_ledger(Mode lemma);
LedgerReport verify_all();

/// The two proofs eliminate (alpha, beta, cos-like c) through the same
/// chain. mirror_check derives the three stationarity conditions of each
/// lemma mechanically under its own Pythagorean relation and asserts the
/// resulting (c, a, b) polynomials are literally equal; it also runs a
/// negative control confirming the derivations are NOT relation-agnostic
/// (reducing a hyp derivation with the trig relation must change it).
struct MirrorReport {
  bool passed = false;
  bool negative_control_passed = false;
  std::string detail;
};
MirrorReport mirror_check();

namespace detail {
/// Re-runs a step with one coefficient of its claim flipped; the step must
/// then fail and expose a nonzero witness. Mutation hook for negative
/// controls only.
StepResult verify_step_tampered(Mode lemma, const std::string& id);
}  // namespace detail

/// Direct numeric validation of one admitted axiom (R1 for trig, R2 for
/// hyp): max |residual| over n sample points in 100-digit arithmetic.
/// Passing threshold is 1e-30.
double reduction_axiom_residual(Mode lemma, int points = 100);

}  // namespace ineqcert

#endif
