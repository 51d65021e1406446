#pragma once

#include <cstddef>
#include <vector>

#include "avecond/matrix.hpp"
#include "avecond/settings.hpp"

namespace avecond {

// Ax - b = |x|.
struct AveProblem {
  Matrix A;
  Vector b;

  // Throws DimensionMismatch.
  AveProblem(Matrix a, Vector rhs);
  std::size_t size() const noexcept { return b.size(); }
};

struct AveSolution {
  Vector x_star;
  Vector sign_vector;  // entries in {-1, 0, +1}
  double residual_norm_inf = 0.0;
};

struct AveSolutionSet {
  std::vector<AveSolution> solutions;  // ordered by the first sign pattern producing each
  std::size_t singular_branches = 0;   // sign patterns whose linear system was singular

  // Throws NoSolution / MultipleSolutions unless exactly one solution exists.
  const AveSolution& unique() const;
};

// phi(x) = Ax - b - |x|.
Vector residual(const AveProblem& p, std::span<const double> x);

// Sign enumeration oracle: for every s in {+-1}^n solve (A - diag(s))x = b and
// keep sign-consistent roots. Throws DimensionTooLarge above max_enum_dim.
AveSolutionSet solve_exact(const AveProblem& p, const Settings& s = {});

// (A + I)x >= b and (A - I)x >= b entrywise, up to feasibility_slack.
bool concave_feasible(const AveProblem& p, std::span<const double> x, const Settings& s = {});

// Fixed point x <- A^{-1}(|x| + b). Stops after max_iter steps or once
// successive iterates differ by less than picard_step in the inf-norm.
Vector picard_iterate(const AveProblem& p, std::span<const double> x0, int max_iter,
                      const Settings& s = {});

}  // namespace avecond
