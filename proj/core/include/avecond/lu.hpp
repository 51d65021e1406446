#pragma once

#include <optional>
#include <span>
#include <vector>

#include "avecond/matrix.hpp"
#include "avecond/settings.hpp"

namespace avecond {

// Gaussian elimination with partial pivoting, PA = LU stored in one matrix.
class LuFactorization {
 public:
  // Factors a square matrix. Returns nullopt when some pivot magnitude falls
  // to or below pivot_floor.
  static std::optional<LuFactorization> factor(const Matrix& a, double pivot_floor);

  std::size_t size() const noexcept { return lu_.rows(); }
  double determinant() const;
  Vector solve(std::span<const double> b) const;
  Matrix inverse() const;

 private:
  LuFactorization(Matrix lu, std::vector<std::size_t> perm, int sign)
      : lu_(std::move(lu)), perm_(std::move(perm)), sign_(sign) {}

  Matrix lu_;
  std::vector<std::size_t> perm_;
  int sign_ = 1;
};

// Throws SingularMatrix when a pivot falls below singular_pivot * ||A||_inf.
Matrix invert(const Matrix& a, const Settings& s = {});
Vector solve(const Matrix& a, std::span<const double> b, const Settings& s = {});

// Determinant via elimination; never throws on singular input (returns the
// product of pivots, possibly zero).
double determinant(const Matrix& a);

}  // namespace avecond
