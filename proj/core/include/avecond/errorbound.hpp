#pragma once

#include <cstdint>
#include <optional>

#include "avecond/ave.hpp"
#include "avecond/condnum.hpp"
#include "avecond/norms.hpp"
#include "avecond/settings.hpp"

namespace avecond {

// A posteriori certificate for a candidate x of Ax - b = |x|:
//   ||x - x*|| <= abs_bound = cond_used.value * ||phi(x)||
// and, when b != 0, the relative sandwich
//   rel_bound_lower <= ||x - x*|| / ||x*|| <= rel_bound_upper.
struct CertReport {
  double abs_bound = 0.0;
  std::optional<double> rel_bound_upper;
  std::optional<double> rel_bound_lower;
  double residual_norm = 0.0;
  CondResult cond_used;
  NormSpec norm;
};

// Uses the supplied condition estimate, which must be Exact or UpperBound for
// (p.A, ns). Throws NotApplicable, NotRegular (unbounded estimate) and
// InvalidArgument (norm mismatch). Relative bounds are filled when ||b|| > 0.
CertReport certify_abs(const AveProblem& p, std::span<const double> x, const NormSpec& ns,
                       const CondResult& cond, const Settings& s = {});

// Relative sandwich with c*(A) built from the exact condition number.
// Throws ZeroRightHandSide when ||b|| <= 1e-14, NotRegular.
CertReport certify_rel(const AveProblem& p, std::span<const double> x, const NormSpec& ns,
                       const Settings& s = {});
// Same, with a caller-supplied condition estimate.
CertReport certify_rel(const AveProblem& p, std::span<const double> x, const NormSpec& ns,
                       const CondResult& cond, const Settings& s = {});

// Solution-map stability in b: ||X(A,b1) - X(A,b2)|| <= c(A) ||b1 - b2||.
struct StabilityGap {
  double gap = 0.0;
  double bound = 0.0;
  bool holds(double slack = 1e-9) const noexcept { return gap <= bound + slack; }
};
StabilityGap stability_gap(const Matrix& a, std::span<const double> b1,
                           std::span<const double> b2, const NormSpec& ns,
                           const Settings& s = {});

// Weak sharp minimum of min e^T(Ax - b - |x|) s.t. (A +- I)x >= b:
//   ||x - x*||_2 / c_2(A) <= e^T(Ax - b - |x|)  for feasible x.
// Samples uniformly from x* + 2 max(||x*||_inf, 1) [-1, 1]^n, discards
// infeasible draws, and checks the inequality with slack 1e-9.
struct WeakSharpReport {
  bool all_passed = true;
  int drawn = 0;
  int feasible_tested = 0;
  // min over tested x of  e^T phi(x) - ||x - x*||_2 / c_2  (>= -1e-9 when passing)
  double worst_margin = 0.0;
};
WeakSharpReport weak_sharp_check(const AveProblem& p, int samples, std::uint64_t seed,
                                 const Settings& s = {});

}  // namespace avecond
