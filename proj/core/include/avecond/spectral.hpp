#pragma once

#include "avecond/matrix.hpp"
#include "avecond/settings.hpp"

namespace avecond {

struct SymmetricEigen {
  Vector values;   // ascending
  Matrix vectors;  // column k belongs to values[k]
};

// Cyclic Jacobi on a symmetric matrix. Throws NotSymmetric.
SymmetricEigen symmetric_eigen(const Matrix& a, const Settings& s = {});

// Singular values, descending, from one-sided Jacobi rotations (the implicit
// form of Jacobi on A^T A).
Vector singular_values(const Matrix& a, const Settings& s = {});
double sigma_min(const Matrix& a, const Settings& s = {});
double sigma_max(const Matrix& a, const Settings& s = {});

struct PerronPair {
  double radius = 0.0;
  Vector vector;  // nonnegative, ||v||_1 = 1
  int iterations = 0;
};

// Spectral radius of an entrywise nonnegative matrix by power iteration from
// e. Iterates on B + I, which has the same Perron vector and radius shifted
// by one, so periodic matrices converge. Throws NoConvergence and
// InvalidArgument (negative entries).
PerronPair spectral_radius_nonneg(const Matrix& b, const Settings& s = {});

}  // namespace avecond
