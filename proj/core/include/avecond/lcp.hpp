#pragma once

#include <cstddef>

#include "avecond/ave.hpp"
#include "avecond/condnum.hpp"
#include "avecond/matrix.hpp"
#include "avecond/norms.hpp"
#include "avecond/settings.hpp"

namespace avecond {

// Find z >= 0 with w = Mz + q >= 0 and z^T w = 0.
struct LcpProblem {
  Matrix M;
  Vector q;

  // Throws DimensionMismatch.
  LcpProblem(Matrix m, Vector rhs);
  std::size_t size() const noexcept { return q.size(); }
};

struct LcpSolution {
  Vector z;
  Vector w;
  double complementarity_gap = 0.0;  // z^T w
};

// AVE form of an LCP under the encoding x = w - z:
//   A = (M + I)(M - I)^{-1},  b = 2 (M - I)^{-1} q.
// x solves Ax - b = |x| iff z = (|x| - x)/2, w = (|x| + x)/2 solves the LCP.
// Throws OneIsEigenvalue when |det(M - I)| <= det_zero * ||M||_inf^n.
AveProblem lcp_to_ave(const LcpProblem& lp, const Settings& s = {});
Matrix lcp_transform_matrix(const Matrix& m, const Settings& s = {});

// Forward map x = w - z.
Vector lcp_to_ave_point(std::span<const double> z, std::span<const double> w);
// Backward map z = (|x| - x)/2, w = (|x| + x)/2.
LcpSolution ave_to_lcp_solution(std::span<const double> x);

// theta(x) = min(Mx + q, x).
Vector natural_residual(const LcpProblem& lp, std::span<const double> x);

// max_{0 <= D <= I} ||(I - D + DM)^{-1}||, computed over the 0/1 diagonal
// vertices D and, independently, as
//   2 max_{|d| = e} ||(I - M)^{-1} ((I + M)(I - M)^{-1} - diag(d))^{-1}||.
// Throws IdentityMismatch if the two disagree beyond identity_rel.
struct ChenXiang {
  double value = 0.0;        // route over D
  double value_via_ave = 0.0;  // route over d
  Vector argmax_D;           // diagonal of the maximizing D
};
ChenXiang chen_xiang_constant(const LcpProblem& lp, const NormSpec& ns, const Settings& s = {});

// M an M-matrix, Diag(M) <= e: c((M+I)(M-I)^{-1}) = ||I - M^{-1}|| / 2.
CondResult lcp_cond_M_matrix(const LcpProblem& lp, const NormSpec& ns, const Settings& s = {});

// M an H-matrix, 0 <= Diag(M) <= e: c((M+I)(M-I)^{-1}) <= ||<M>^{-1} - I|| / 2.
CondResult lcp_cond_H_matrix(const LcpProblem& lp, const NormSpec& ns, const Settings& s = {});

// M an M-matrix, Diag(M) <= e: ||B^||_inf with B^ = max(|B_lo|, |B_hi|) and
//   B_lo/hi_ij = sum_k min/max{ (I-M)^{-1}_ik (I-M)_kj, (I-M)^{-1}_ik (M^{-1}-I)_kj }.
// This is an upper bound on chen_xiang_constant(lp, inf); the two coincide on
// some instances (e.g. Diag(M) = e) but not in general. Throws NotApplicable.
double lcp_inf_enclosure(const LcpProblem& lp, const Settings& s = {});

// H-matrix M, 0 <= Diag(M) <= e: chen_xiang_constant <= ||<M>^{-1}||.
// Throws NotApplicable.
double lcp_chen_upper(const LcpProblem& lp, const NormSpec& ns, const Settings& s = {});

// M is a P-matrix iff [(M+I)(M-I)^{-1} - I, (M+I)(M-I)^{-1} + I] is regular.
// Returns whether both sides of that equivalence agree for this M.
// Throws OneIsEigenvalue, DimensionTooLarge.
bool pmatrix_equivalence_check(const Matrix& m, const Settings& s = {});

}  // namespace avecond
