#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "avecond/matrix.hpp"
#include "avecond/norms.hpp"
#include "avecond/settings.hpp"

namespace avecond {

// Computing routes for the AVE condition number
//   c(A) = max_{||d||_inf <= 1} ||(A - diag(d))^{-1}||.
enum class BoundMethod {
  VertexEnum,
  Symmetric2,
  DiagDom2,
  InvNonnegInf,
  MmatrixInf,
  HmatrixInf,
  NeumannMonotone,
  SigmaMin2,
  EnclosureInf,
  ScaledInfDiagDom,
  RowDiagDomInf,
  ColDiagDom1,
  ScaledOneNormGamma,
  Relative,
  // Condition numbers of LCP-derived matrices (lcp.hpp).
  LcpMmatrix,
  LcpHmatrix,
};

enum class CondKind { Exact, UpperBound, NotApplicable };

std::string_view to_string(BoundMethod m) noexcept;
std::string_view to_string(CondKind k) noexcept;
// Accepts the names produced by to_string; nullopt otherwise.
std::optional<BoundMethod> parse_bound_method(std::string_view name) noexcept;

struct BoundParams {
  std::optional<double> gamma;                  // ScaledOneNormGamma
  std::optional<Vector> r;                      // ScaledInfDiagDom
  std::optional<std::vector<std::size_t>> permutation;  // DiagDom2
  std::optional<double> alpha;                  // diagonal-dominance margin
  std::optional<Vector> weights;                // ScaledOneNormGamma: Perron vector v
};

struct CondResult {
  double value = 0.0;
  // +inf marker; only produced when regularity checking is skipped.
  bool unbounded = false;
  BoundMethod method = BoundMethod::VertexEnum;
  CondKind kind = CondKind::NotApplicable;
  std::optional<Vector> witness_d;  // Exact results: attaining vertex
  NormSpec norm;
  BoundParams params;
  std::string reason;  // why NotApplicable

  bool applicable() const noexcept { return kind != CondKind::NotApplicable; }
};

enum class RegularityCheck { Enforce, Skip };

// Vertex enumeration: max over d in {+-1}^n of ||(A - diag(d))^{-1}||, ties to
// the smallest mask. Throws NotRegular (under Enforce) and DimensionTooLarge.
CondResult cond_exact(const Matrix& a, const NormSpec& ns, const Settings& s = {},
                      RegularityCheck check = RegularityCheck::Enforce);

// Symmetric A with sigma_min(A) > 1: c_2 = 1 / (sigma_min(A) - 1).
CondResult cond_symmetric2(const Matrix& a, const Settings& s = {});

// sigma_min(A) > 1: c_2 <= 1 / (sigma_min(A) - 1).
CondResult cond_sigma_upper(const Matrix& a, const Settings& s = {});

// alpha(B) = min_i |b_ii| - (r_i(B) + cl_i(B)) / 2 > 1 with B = A P: the exact
// 2-norm condition number of B equals ||(B - diag(sgn(Diag B)))^{-1}||_2. With
// the default identity permutation B = A. A non-identity permutation gives the
// condition number of A P, which is in general not c_2(A).
// permutation[j] is the column of A that becomes column j of B.
CondResult cond_diagdom2(const Matrix& a,
                         const std::optional<std::vector<std::size_t>>& permutation = std::nullopt,
                         const Settings& s = {});
// Companion bound 1 / (alpha - 1) from the same margin.
CondResult cond_diagdom2_bound(const Matrix& a, const Settings& s = {});

// (A -+ I)^{-1} >= 0, or A an M-matrix with rho(A^{-1}) < 1:
// c_inf = ||(A - I)^{-1} e||_inf.
CondResult cond_inv_nonneg_inf(const Matrix& a, const Settings& s = {});

// H-matrix with rho(<A>^{-1}) < 1: c_inf <= ||(<A> - I)^{-1} e||_inf.
CondResult cond_hmatrix_inf(const Matrix& a, const Settings& s = {});

// Monotone norm with || |A^{-1}| || < 1: c <= ||A^{-1}|| / (1 - || |A^{-1}| ||).
CondResult cond_neumann_upper(const Matrix& a, const NormSpec& ns, const Settings& s = {});

// Interval-inverse enclosure [B1, B2] of [A - I, A + I]^{-1}; needs
// rho(|A^{-1}|) < 1. c_inf <= || max(|B1|, |B2|) ||_inf.
CondResult cond_enclosure_inf(const Matrix& a, const Settings& s = {});

// Scaled diagonal dominance, norm ||diag(r)^{-1} x||_inf:
// alpha = min_i |a_ii| - 1 - r_i^{-1} sum_{j!=i} r_j |a_ij| > 0  =>  c <= 1/alpha.
CondResult cond_scaled_dd(const Matrix& a, std::span<const double> r, const Settings& s = {});
// r = e: c_inf <= 1 / (min_i(|a_ii| - r_i(A)) - 1).
CondResult cond_row_dd_inf(const Matrix& a, const Settings& s = {});
// Column version through the transpose: c_1 <= 1 / (min_j(|a_jj| - cl_j(A)) - 1).
CondResult cond_col_dd_one(const Matrix& a, const Settings& s = {});

// rho(|A^{-1}|) < gamma < 1: builds B = |A^{-1}| + tau e e^T with rho(B) =
// gamma, takes the left Perron vector v of B (v_1 = 1) and returns the bound
// gamma / (1 - gamma) for the norm v^T |x|. The norm is returned in
// CondResult::norm, v in params.weights and tau in params.alpha.
CondResult cond_scaled1_gamma(const Matrix& a, double gamma, const Settings& s = {});

// max_{||d||_inf <= 1} ||A - diag(d)||: || |A| + I || for (scaled) 1- and
// inf-norms; ||A||_2 + 1 for the (scaled) 2-norm, exact when the scaled
// matrix is symmetric.
struct ShiftedNorm {
  double value = 0.0;
  bool exact = false;
};
ShiftedNorm max_shifted_norm(const Matrix& a, const NormSpec& ns, const Settings& s = {});

// c*(A) = c(A) * max_shifted_norm(A). Exact only when both factors are.
// Throws NotApplicable when base is.
CondResult cond_relative(const Matrix& a, const NormSpec& ns, const CondResult& base,
                         const Settings& s = {});

}  // namespace avecond
