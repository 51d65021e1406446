#pragma once

#include <cstddef>

namespace avecond {

// Every numerical threshold used by the library lives here. Operations take
// a `const Settings&` (defaulted) so a caller can tighten or loosen all of
// them in one place.
struct Settings {
  // Pivot magnitude below singular_pivot * ||A||_inf marks A as singular.
  double singular_pivot = 1e-12;
  // |det| <= det_zero * ||A||_inf^n counts as a vanishing determinant.
  double det_zero = 1e-12;
  // Entrywise nonnegativity accepts values >= -nonneg_slack.
  double nonneg_slack = 1e-12;
  // A principal minor is "positive" when it exceeds this.
  double minor_positive = 1e-12;
  // ||A - A^T||_inf <= symmetry * max(1, ||A||_inf).
  double symmetry = 1e-12;
  // Margin for strict inequalities such as sigma_min > 1 or rho < 1.
  double strict_margin = 1e-10;

  double perron_tol = 1e-12;
  int perron_max_iter = 10000;
  double jacobi_tol = 1e-15;
  int jacobi_max_sweeps = 100;

  // AVE oracle: s_i x_i >= -sign_consistency, duplicates closer than dedup.
  double sign_consistency = 1e-12;
  double dedup = 1e-10;
  double feasibility_slack = 1e-10;
  double picard_step = 1e-14;

  double bisection_tol = 1e-10;
  // Relative agreement demanded of dual-route computations.
  double identity_rel = 1e-8;

  std::size_t max_enum_dim = 20;
  std::size_t max_pmatrix_dim = 12;

  // Worker threads for 2^n vertex loops; reductions are order-deterministic.
  unsigned threads = 1;
};

}  // namespace avecond
