#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace avecond {

using Vector = std::vector<double>;

// Dense real matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  // Throws DimensionMismatch on a size mismatch, InvalidArgument on NaN/Inf.
  static Matrix from_row_major(std::size_t rows, std::size_t cols,
                               std::vector<double> entries);
  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> d);
  static Matrix constant(std::size_t rows, std::size_t cols, double value);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const double> data() const noexcept { return data_; }

  Vector diag() const;
  Vector column(std::size_t j) const;
  Matrix transpose() const;
  Matrix abs() const;
  bool all_finite() const noexcept;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(double s);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(Matrix a, double s);
Matrix operator*(double s, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, std::span<const double> x);

// A - diag(d).
Matrix minus_diag(const Matrix& a, std::span<const double> d);
// Entrywise max / min of two equally sized matrices.
Matrix max(const Matrix& a, const Matrix& b);
Matrix min(const Matrix& a, const Matrix& b);
// Entrywise a >= -slack.
bool is_nonnegative(const Matrix& a, double slack = 0.0);

Vector add(std::span<const double> a, std::span<const double> b);
Vector subtract(std::span<const double> a, std::span<const double> b);
Vector scale(std::span<const double> a, double s);
Vector abs(std::span<const double> a);
double dot(std::span<const double> a, std::span<const double> b);
double max_abs(std::span<const double> a);
double max_abs_diff(std::span<const double> a, std::span<const double> b);
Vector ones(std::size_t n);

}  // namespace avecond
