#include <gtest/gtest.h>

#include "avecond/ave.hpp"
#include "avecond/error.hpp"
#include "avecond/lu.hpp"
#include "avecond/regularity.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace avecond {
namespace {

using testing::Rng;
namespace oracle = testing::oracle;

const Matrix kThreeI{{3, 0}, {0, 3}};

TEST(Residual, WorkedValues) {
  const AveProblem p(kThreeI, ones(2));
  EXPECT_EQ(residual(p, Vector{0.5, 0.5}), (Vector{0, 0}));
  EXPECT_EQ(residual(p, Vector{0, 0}), (Vector{-1, -1}));
  const AveProblem q(Matrix{{1, -4}, {-4, 1}}, Vector{0, 0});
  EXPECT_EQ(residual(q, Vector{1, 0}), (Vector{0, -4}));
}

TEST(AveProblem, RejectsMismatchedShapes) {
  EXPECT_THROW(AveProblem(kThreeI, Vector{1, 2, 3}), Error);
  EXPECT_THROW(AveProblem(Matrix(2, 3), Vector{1, 2}), Error);
}

TEST(SolveExact, WorkedValues) {
  const AveSolutionSet a = solve_exact(AveProblem(kThreeI, ones(2)));
  ASSERT_EQ(a.solutions.size(), 1U);
  EXPECT_NEAR(max_abs_diff(a.unique().x_star, Vector{0.5, 0.5}), 0.0, 1e-15);
  EXPECT_EQ(a.unique().sign_vector, (Vector{1, 1}));

  const AveSolutionSet b = solve_exact(AveProblem(kThreeI, Vector{1, -1}));
  ASSERT_EQ(b.solutions.size(), 1U);
  EXPECT_NEAR(max_abs_diff(b.unique().x_star, Vector{0.5, -0.25}), 0.0, 1e-15);
  EXPECT_EQ(b.unique().sign_vector, (Vector{1, -1}));
}

TEST(SolveExact, IdentityHasNoSolutionAndSingularBranches) {
  const AveSolutionSet s = solve_exact(AveProblem(Matrix::identity(2), ones(2)));
  EXPECT_TRUE(s.solutions.empty());
  EXPECT_GT(s.singular_branches, 0U);
  try {
    (void)s.unique();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoSolution);
  }
}

TEST(SolveExact, MultipleSolutionsAreReported) {
  // A = 0: -b = |x| with b = -e has the four solutions (+-1, +-1).
  const AveSolutionSet s = solve_exact(AveProblem(Matrix(2, 2), Vector{-1, -1}));
  EXPECT_EQ(s.solutions.size(), 4U);
  try {
    (void)s.unique();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MultipleSolutions);
  }
}

TEST(SolveExact, ZeroComponentIsNotDuplicated) {
  // x = 0 is consistent with every sign pattern; it must appear once.
  const AveSolutionSet s = solve_exact(AveProblem(kThreeI, Vector{0, 0}));
  ASSERT_EQ(s.solutions.size(), 1U);
  EXPECT_EQ(s.unique().sign_vector, (Vector{0, 0}));
}

TEST(SolveExact, DimensionCap) {
  EXPECT_THROW(solve_exact(AveProblem(Matrix::identity(21) * 3.0, ones(21))), Error);
}

TEST(SolveExact, AgreesWithOracleOnRegularInstances) {
  Rng rng(41);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = testing::dim(rng, 1, 5);
    const Matrix a = testing::random_regular(rng, n);
    const Vector b = testing::random_vector(rng, n, -3, 3);
    const AveProblem p(a, b);
    const AveSolutionSet s = solve_exact(p);
    ASSERT_EQ(s.solutions.size(), 1U);
    const AveSolution& sol = s.unique();
    EXPECT_LE(max_abs(residual(p, sol.x_star)), 1e-9);
    EXPECT_LE(sol.residual_norm_inf, 1e-9 * (1 + max_abs(b)));
    for (std::size_t i = 0; i < n; ++i) EXPECT_GE(sol.sign_vector[i] * sol.x_star[i], 0.0);

    const std::vector<Vector> ref = oracle::ave_solutions(a, b);
    ASSERT_EQ(ref.size(), 1U);
    EXPECT_LE(max_abs_diff(ref.front(), sol.x_star), 1e-9 * (1 + max_abs(ref.front())));
  }
}

TEST(SolveExact, SolutionCountMatchesOracleOnGeneralInstances) {
  Rng rng(42);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = testing::dim(rng, 1, 4);
    const Matrix a = testing::random_matrix(rng, n, -2, 2);
    const Vector b = testing::random_vector(rng, n, -2, 2);
    const AveSolutionSet s = solve_exact(AveProblem(a, b));
    const std::vector<Vector> ref = oracle::ave_solutions(a, b);
    EXPECT_EQ(s.solutions.size(), ref.size());
    for (const AveSolution& sol : s.solutions) {
      EXPECT_LE(max_abs(residual(AveProblem(a, b), sol.x_star)), 1e-8 * (1 + max_abs(sol.x_star)));
    }
  }
}

TEST(ConcaveFeasible, WorkedValues) {
  const AveProblem p(kThreeI, ones(2));
  EXPECT_TRUE(concave_feasible(p, Vector{1, 1}));
  EXPECT_FALSE(concave_feasible(p, Vector{0, 0}));
  EXPECT_TRUE(concave_feasible(p, Vector{0.5, 0.5}));
  EXPECT_FALSE(concave_feasible(p, Vector{0.5, 0.5 - 1e-6}));
}

TEST(ConcaveFeasible, SolutionIsFeasibleAndOnlyZeroObjectivePointsSolve) {
  Rng rng(43);
  int nonsolutions = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = testing::dim(rng, 1, 4);
    const AveProblem p(testing::random_regular(rng, n), testing::random_vector(rng, n, -3, 3));
    const Vector x_star = solve_exact(p).unique().x_star;
    EXPECT_TRUE(concave_feasible(p, x_star));
    double obj = 0.0;
    for (double v : residual(p, x_star)) obj += v;
    EXPECT_LE(std::fabs(obj), 1e-9);

    for (int k = 0; k < 20; ++k) {
      Vector x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = x_star[i] + testing::uniform(rng, -3, 3);
      if (!concave_feasible(p, x)) continue;
      if (max_abs_diff(x, x_star) < 1e-6) continue;
      ++nonsolutions;
      double f = 0.0;
      for (double v : residual(p, x)) f += v;
      EXPECT_GT(f, 0.0);
    }
  }
  EXPECT_GT(nonsolutions, 100);
}

TEST(PicardIterate, WorkedValues) {
  const AveProblem p(kThreeI, ones(2));
  const Vector one_step = picard_iterate(p, Vector{0, 0}, 1);
  EXPECT_NEAR(one_step[0], 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(one_step[1], 1.0 / 3.0, 1e-15);
  EXPECT_LE(max_abs_diff(picard_iterate(p, Vector{0, 0}, 200), Vector{0.5, 0.5}), 1e-12);

  const AveProblem q(kThreeI, Vector{1, -1});
  EXPECT_LE(max_abs_diff(picard_iterate(q, Vector{0, 0}, 200), Vector{0.5, -0.25}), 1e-12);
}

TEST(PicardIterate, SingularMatrixThrows) {
  try {
    picard_iterate(AveProblem(Matrix(2, 2), ones(2)), Vector{0, 0}, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularMatrix);
  }
}

TEST(PicardIterate, ConvergesToOracleWhenContractive) {
  Rng rng(44);
  int tested = 0;
  while (tested < 200) {
    const std::size_t n = testing::dim(rng, 1, 5);
    const Matrix a = testing::random_regular(rng, n);
    if (oracle::induced_norm(oracle::inverse(a), NormSpec::inf()) >= 0.9) continue;
    ++tested;
    const AveProblem p(a, testing::random_vector(rng, n, -3, 3));
    const Vector x = picard_iterate(p, Vector(n, 0.0), 200);
    const Vector x_star = solve_exact(p).unique().x_star;
    EXPECT_LE(max_abs_diff(x, x_star), 1e-8);
  }
}

}  // namespace
}  // namespace avecond
