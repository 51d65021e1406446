#include "avecond/classify.hpp"

#include <cmath>
#include <cstdint>
#include <optional>

#include "avecond/error.hpp"
#include "avecond/lu.hpp"
#include "avecond/norms.hpp"

namespace avecond {

namespace {

void require_square(const Matrix& a, const char* what) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": not square");
}

std::optional<Matrix> try_invert(const Matrix& a, const Settings& s) {
  const double floor = s.singular_pivot * induced_norm(a, NormSpec::inf());
  auto lu = LuFactorization::factor(a, floor);
  if (!lu) return std::nullopt;
  return lu->inverse();
}

}  // namespace

Matrix comparison_matrix(const Matrix& a) {
  require_square(a, "comparison_matrix");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c(i, j) = i == j ? std::fabs(a(i, j)) : -std::fabs(a(i, j));
  return c;
}

bool is_symmetric(const Matrix& a, const Settings& s) {
  if (!a.is_square()) return false;
  const double scale = std::max(1.0, induced_norm(a, NormSpec::inf()));
  return induced_norm(a - a.transpose(), NormSpec::inf()) <= s.symmetry * scale;
}

bool is_z_matrix(const Matrix& a, const Settings& s) {
  require_square(a, "is_z_matrix");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j && a(i, j) > s.nonneg_slack) return false;
  return true;
}

bool is_inverse_nonnegative(const Matrix& a, const Settings& s) {
  require_square(a, "is_inverse_nonnegative");
  const auto inv = try_invert(a, s);
  return inv && is_nonnegative(*inv, s.nonneg_slack);
}

bool is_m_matrix(const Matrix& a, const Settings& s) {
  return is_z_matrix(a, s) && is_inverse_nonnegative(a, s);
}

bool is_h_matrix(const Matrix& a, const Settings& s) {
  return is_m_matrix(comparison_matrix(a), s);
}

bool is_p_matrix(const Matrix& a, const Settings& s) {
  require_square(a, "is_p_matrix");
  const std::size_t n = a.rows();
  if (n > s.max_pmatrix_dim) {
    throw Error(ErrorCode::DimensionTooLarge,
                "P-matrix test enumerates 2^n minors; n = " + std::to_string(n));
  }
  std::vector<std::size_t> idx;
  idx.reserve(n);
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << n); ++subset) {
    idx.clear();
    for (std::size_t i = 0; i < n; ++i)
      if ((subset >> i) & 1U) idx.push_back(i);
    Matrix sub(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) sub(r, c) = a(idx[r], idx[c]);
    if (!(determinant(sub) > s.minor_positive)) return false;
  }
  return true;
}

MatrixClass classify(const Matrix& a, const Settings& s) {
  require_square(a, "classify");
  MatrixClass c;
  c.tolerance = s.nonneg_slack;
  c.is_symmetric = is_symmetric(a, s);
  c.is_inverse_nonnegative = is_inverse_nonnegative(a, s);
  c.is_M_matrix = is_z_matrix(a, s) && c.is_inverse_nonnegative;
  c.is_H_matrix = c.is_M_matrix || is_h_matrix(a, s);
  c.is_P_matrix = is_p_matrix(a, s);
  return c;
}

}  // namespace avecond
