#pragma once

#include <optional>
#include <span>
#include <string>

#include "avecond/matrix.hpp"
#include "avecond/settings.hpp"

namespace avecond {

enum class NormKind { One, Two, Inf };

// A p-norm, optionally scaled: ||x|| = ||D x||_p with D = diag(scaling) > 0.
// The induced matrix norm is ||D A D^{-1}||_p.
struct NormSpec {
  NormKind p = NormKind::Inf;
  std::optional<Vector> scaling;

  static NormSpec one() { return {NormKind::One, std::nullopt}; }
  static NormSpec two() { return {NormKind::Two, std::nullopt}; }
  static NormSpec inf() { return {NormKind::Inf, std::nullopt}; }
  // Throws InvalidArgument unless every weight is finite and > 0.
  static NormSpec scaled(NormKind p, Vector weights);

  bool is_scaled() const noexcept { return scaling.has_value(); }
  friend bool operator==(const NormSpec&, const NormSpec&) = default;
};

std::string to_string(const NormSpec& ns);
std::string to_string(NormKind p);

double vector_norm(std::span<const double> x, const NormSpec& ns);

// Exact for p = 1 (column sums) and p = inf (row sums); largest singular
// value for p = 2.
double induced_norm(const Matrix& a, const NormSpec& ns);

// ||A^{-1}|| without forming the inverse for p = 2 (1 / sigma_min).
// Throws SingularMatrix.
double inverse_norm(const Matrix& a, const NormSpec& ns, const Settings& s = {});

// D A D^{-1} for the norm's scaling, or A itself when unscaled.
Matrix apply_scaling(const Matrix& a, const NormSpec& ns);

}  // namespace avecond
