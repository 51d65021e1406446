#pragma once

#include <optional>
#include <string_view>

#include "avecond/matrix.hpp"
#include "avecond/settings.hpp"

namespace avecond {

enum class Verdict { Regular, NotRegular, Unknown };
enum class RegularityMethod { VertexDeterminant, SigmaMin, SpectralRadiusInverse, SymmetricEigen };

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(RegularityMethod m) noexcept;

// Regularity of the interval matrix [A - I, A + I].
struct RegularityReport {
  Verdict verdict = Verdict::Unknown;
  RegularityMethod method = RegularityMethod::VertexDeterminant;
  // Set iff verdict == NotRegular: a vertex d (|d| = e) whose determinant
  // det(A - diag(d)) vanishes or differs in sign from det(A - I).
  std::optional<Vector> witness;
  // Value backing the decision: min vertex |det|, sigma_min(A),
  // rho(|A^{-1}|) or min |lambda_i(A)|, depending on method.
  double statistic = 0.0;
};

// All 2^n vertex determinants det(A - diag(d)) nonzero with a common sign.
// Throws DimensionTooLarge above max_enum_dim.
RegularityReport regularity_exact(const Matrix& a, const Settings& s = {});

// sigma_min(A) > 1 or rho(|A^{-1}|) < 1; Unknown otherwise, never NotRegular.
RegularityReport regularity_sufficient(const Matrix& a, const Settings& s = {});

// For symmetric A: regular iff min |lambda_i(A)| > 1. Throws NotSymmetric.
RegularityReport regularity_symmetric(const Matrix& a, const Settings& s = {});

// Threshold below which a vertex determinant counts as zero.
double vertex_det_threshold(const Matrix& a, const Settings& s);

}  // namespace avecond
