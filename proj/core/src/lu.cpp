#include "avecond/lu.hpp"

#include <cmath>
#include <numeric>

#include "avecond/error.hpp"
#include "avecond/norms.hpp"

namespace avecond {

std::optional<LuFactorization> LuFactorization::factor(const Matrix& a, double pivot_floor) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "LU needs a square matrix");
  const std::size_t n = a.rows();
  Matrix lu = a;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  int sign = 1;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::fabs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::fabs(lu(i, k)) > best) {
        best = std::fabs(lu(i, k));
        p = i;
      }
    }
    if (!(best > pivot_floor)) return std::nullopt;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
      std::swap(perm[k], perm[p]);
      sign = -sign;
    }
    const double pivot = lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double l = lu(i, k) / pivot;
      lu(i, k) = l;
      if (l == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= l * lu(k, j);
    }
  }
  return LuFactorization(std::move(lu), std::move(perm), sign);
}

double LuFactorization::determinant() const {
  double det = sign_;
  for (std::size_t i = 0; i < lu_.rows(); ++i) det *= lu_(i, i);
  return det;
}

Vector LuFactorization::solve(std::span<const double> b) const {
  const std::size_t n = lu_.rows();
  if (b.size() != n) throw Error(ErrorCode::DimensionMismatch, "LU solve");
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = b[perm_[i]];
    for (std::size_t j = 0; j < i; ++j) acc -= lu_(i, j) * x[j];
    x[i] = acc;
  }
  for (std::size_t i = n; i-- > 0;) {
    double acc = x[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= lu_(i, j) * x[j];
    x[i] = acc / lu_(i, i);
  }
  return x;
}

Matrix LuFactorization::inverse() const {
  const std::size_t n = lu_.rows();
  Matrix inv(n, n);
  Vector e(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1.0;
    const Vector col = solve(e);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    e[j] = 0.0;
  }
  return inv;
}

Matrix invert(const Matrix& a, const Settings& s) {
  const double floor = s.singular_pivot * induced_norm(a, NormSpec::inf());
  auto lu = LuFactorization::factor(a, floor);
  if (!lu) throw Error(ErrorCode::SingularMatrix, "pivot below threshold");
  return lu->inverse();
}

Vector solve(const Matrix& a, std::span<const double> b, const Settings& s) {
  const double floor = s.singular_pivot * induced_norm(a, NormSpec::inf());
  auto lu = LuFactorization::factor(a, floor);
  if (!lu) throw Error(ErrorCode::SingularMatrix, "pivot below threshold");
  return lu->solve(b);
}

double determinant(const Matrix& a) {
  if (a.rows() == 0) return 1.0;
  auto lu = LuFactorization::factor(a, 0.0);
  return lu ? lu->determinant() : 0.0;
}

}  // namespace avecond
