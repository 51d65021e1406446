#pragma once

#include "avecond/matrix.hpp"
#include "avecond/settings.hpp"

namespace avecond {

// <A>: |a_ii| on the diagonal, -|a_ij| off it.
Matrix comparison_matrix(const Matrix& a);

bool is_symmetric(const Matrix& a, const Settings& s = {});
bool is_z_matrix(const Matrix& a, const Settings& s = {});
bool is_inverse_nonnegative(const Matrix& a, const Settings& s = {});
bool is_m_matrix(const Matrix& a, const Settings& s = {});
bool is_h_matrix(const Matrix& a, const Settings& s = {});
// Exhaustive principal minors; throws DimensionTooLarge above max_pmatrix_dim.
bool is_p_matrix(const Matrix& a, const Settings& s = {});

struct MatrixClass {
  bool is_symmetric = false;
  bool is_M_matrix = false;
  bool is_H_matrix = false;
  bool is_P_matrix = false;
  bool is_inverse_nonnegative = false;
  double tolerance = 0.0;
};

// All predicates at once (includes the P-matrix test and its size cap).
MatrixClass classify(const Matrix& a, const Settings& s = {});

}  // namespace avecond
