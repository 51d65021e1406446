#include <gtest/gtest.h>

#include <functional>

#include "avecond/ave.hpp"
#include "avecond/classify.hpp"
#include "avecond/condnum.hpp"
#include "avecond/error.hpp"
#include "avecond/lcp.hpp"
#include "avecond/lu.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace avecond {
namespace {

using testing::Rng;
namespace oracle = testing::oracle;

const Matrix kWorkedM{{1, -0.5}, {-0.5, 1}};
const std::vector<NormSpec> kPlainNorms{NormSpec::one(), NormSpec::two(), NormSpec::inf()};

double rel_diff(double a, double b) { return std::fabs(a - b) / std::max(1.0, std::fabs(b)); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

// The max over D in {0,1}-diagonals of ||(I - D + D M)^{-1}||, via Eigen.
double oracle_chen_xiang(const Matrix& m, const NormSpec& ns) {
  const std::size_t n = m.rows();
  double best = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Matrix t = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!((mask >> i) & 1U)) continue;
      for (std::size_t j = 0; j < n; ++j) t(i, j) = m(i, j);
    }
    best = std::max(best, oracle::induced_norm(oracle::inverse(t), ns));
  }
  return best;
}

Matrix random_unit_m_matrix(Rng& rng, std::size_t n) {
  for (;;) {
    const Matrix m = testing::random_m_matrix_unit_diag(rng, n);
    if (testing::transform_well_posed(m)) return m;
  }
}

Matrix random_unit_h_matrix(Rng& rng, std::size_t n) {
  Matrix m = random_unit_m_matrix(rng, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) m(i, j) *= testing::random_sign(rng);
  return m;
}

TEST(LcpTransform, WorkedValues) {
  const Matrix a = lcp_transform_matrix(kWorkedM);
  EXPECT_LE(max_abs_diff(a.data(), Matrix{{1, -4}, {-4, 1}}.data()), 1e-14);

  const AveProblem p = lcp_to_ave(LcpProblem(Matrix{{2, 0}, {0, 2}}, Vector{-1, -1}));
  EXPECT_LE(max_abs_diff(p.A.data(), Matrix{{3, 0}, {0, 3}}.data()), 1e-15);
  EXPECT_LE(max_abs_diff(p.b, Vector{-2, -2}), 1e-15);
  const Vector x = lcp_to_ave_point(Vector{0.5, 0.5}, Vector{0, 0});
  EXPECT_EQ(x, (Vector{-0.5, -0.5}));
  EXPECT_LE(max_abs(residual(p, x)), 1e-15);

  EXPECT_EQ(code_of([] { lcp_transform_matrix(Matrix::identity(2)); }), ErrorCode::OneIsEigenvalue);
  EXPECT_EQ(code_of([] { lcp_transform_matrix(Matrix{{0, 1}, {1, 0}}); }),
            ErrorCode::OneIsEigenvalue);
  EXPECT_THROW(LcpProblem(kWorkedM, Vector{1}), Error);
}

TEST(LcpTransform, MatchesOracleFormula) {
  Rng rng(81);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = testing::dim(rng, 1, 5);
    const Matrix m = testing::random_transformable(rng, n);
    const Matrix expected = (m + Matrix::identity(n)) * oracle::inverse(m - Matrix::identity(n));
    const Matrix a = lcp_transform_matrix(m);
    EXPECT_LE(max_abs_diff(a.data(), expected.data()), 1e-9 * (1 + max_abs(expected.data())));
  }
}

TEST(AveToLcp, WorkedValues) {
  const LcpSolution a = ave_to_lcp_solution(Vector{-0.5, -0.5});
  EXPECT_EQ(a.z, (Vector{0.5, 0.5}));
  EXPECT_EQ(a.w, (Vector{0, 0}));
  const LcpSolution b = ave_to_lcp_solution(Vector{1, -1});
  EXPECT_EQ(b.z, (Vector{0, 1}));
  EXPECT_EQ(b.w, (Vector{1, 0}));
  EXPECT_EQ(b.complementarity_gap, 0.0);
  const LcpSolution c = ave_to_lcp_solution(Vector{0, 0});
  EXPECT_EQ(c.z, (Vector{0, 0}));
  EXPECT_EQ(c.w, (Vector{0, 0}));
}

TEST(NaturalResidual, WorkedValues) {
  const LcpProblem lp(Matrix{{2, 0}, {0, 2}}, Vector{-1, -1});
  EXPECT_EQ(natural_residual(lp, Vector{0.5, 0.5}), (Vector{0, 0}));
  EXPECT_EQ(natural_residual(lp, Vector{1, 1}), (Vector{1, 1}));
  const LcpProblem nonneg(kWorkedM, Vector{0.3, 2});
  EXPECT_EQ(natural_residual(nonneg, Vector{0, 0}), (Vector{0, 0}));
  EXPECT_THROW(natural_residual(lp, Vector{1}), Error);
}

TEST(LcpRoundTrip, PMatrixInstancesSolveThroughTheAve) {
  Rng rng(82);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = testing::dim(rng, 1, 4);
    const Matrix m = testing::random_p_matrix(rng, n);
    const LcpProblem lp(m, testing::random_vector(rng, n, -3, 3));
    const AveProblem ave = lcp_to_ave(lp);
    const AveSolutionSet set = solve_exact(ave);
    ASSERT_EQ(set.solutions.size(), 1U);
    const LcpSolution sol = ave_to_lcp_solution(set.unique().x_star);
    const Vector mzq = add(m * sol.z, lp.q);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_GE(sol.z[i], -1e-9);
      EXPECT_NEAR(sol.w[i], mzq[i], 1e-8);
    }
    EXPECT_LE(dot(sol.z, mzq), 1e-8);
    EXPECT_LE(max_abs(natural_residual(lp, sol.z)), 1e-8);
    EXPECT_LE(max_abs_diff(lcp_to_ave_point(sol.z, sol.w), set.unique().x_star), 1e-15);
  }
}

TEST(ChenXiang, WorkedValues) {
  const LcpProblem two(Matrix{{2, 0}, {0, 2}}, Vector{-1, -1});
  for (const NormSpec& ns : kPlainNorms) {
    const ChenXiang cx = chen_xiang_constant(two, ns);
    EXPECT_NEAR(cx.value, 1.0, 1e-14);
    EXPECT_NEAR(cx.value_via_ave, 1.0, 1e-12);
    EXPECT_EQ(cx.argmax_D, (Vector{0, 0}));
  }
  const LcpProblem lp(Matrix{{2, -0.5}, {-0.5, 2}}, Vector{1, 1});
  for (const NormSpec& ns : kPlainNorms) {
    const ChenXiang cx = chen_xiang_constant(lp, ns);
    EXPECT_LE(rel_diff(cx.value, cx.value_via_ave), 1e-8);
    EXPECT_LE(rel_diff(cx.value, oracle_chen_xiang(lp.M, ns)), 1e-10);
  }
}

TEST(ChenXiang, Errors) {
  const Vector q{1, 1};
  EXPECT_EQ(code_of([&] { chen_xiang_constant(LcpProblem(Matrix{{0, 1}, {1, 0}}, q), NormSpec::inf()); }),
            ErrorCode::NotPMatrix);
  EXPECT_EQ(code_of([&] { chen_xiang_constant(LcpProblem(Matrix::identity(2), q), NormSpec::inf()); }),
            ErrorCode::OneIsEigenvalue);
  Settings small;
  small.max_enum_dim = 1;
  EXPECT_EQ(code_of([&] { chen_xiang_constant(LcpProblem(kWorkedM, q), NormSpec::inf(), small); }),
            ErrorCode::DimensionTooLarge);
}

TEST(ChenXiang, RoutesAgreeOnRandomPMatrices) {
  Rng rng(83);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = testing::dim(rng, 1, 3);
    const LcpProblem lp(testing::random_p_matrix(rng, n), Vector(n, 1.0));
    for (const NormSpec& ns : kPlainNorms) {
      const ChenXiang cx = chen_xiang_constant(lp, ns);
      EXPECT_LE(std::fabs(cx.value - cx.value_via_ave), 1e-8 * std::max(cx.value, cx.value_via_ave));
      EXPECT_LE(rel_diff(cx.value, oracle_chen_xiang(lp.M, ns)), 1e-9);
    }
  }
}

TEST(ChenXiang, ErrorBoundHolds) {
  Rng rng(84);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = testing::dim(rng, 1, 4);
    const LcpProblem lp(testing::random_p_matrix(rng, n), testing::random_vector(rng, n, -3, 3));
    const Vector z_star = ave_to_lcp_solution(solve_exact(lcp_to_ave(lp)).unique().x_star).z;
    for (const NormSpec& ns : kPlainNorms) {
      const double c = chen_xiang_constant(lp, ns).value;
      for (int k = 0; k < 20; ++k) {
        const Vector x = testing::random_vector(rng, n, 0, 3);
        EXPECT_LE(vector_norm(subtract(x, z_star), ns),
                  c * vector_norm(natural_residual(lp, x), ns) + 1e-8);
      }
    }
  }
}

TEST(LcpCondMmatrix, WorkedValues) {
  const NormSpec inf = NormSpec::inf();
  const CondResult r = lcp_cond_M_matrix(LcpProblem(kWorkedM, Vector{1, 1}), inf);
  ASSERT_EQ(r.kind, CondKind::Exact);
  EXPECT_NEAR(r.value, 0.5, 1e-14);
  EXPECT_NEAR(cond_exact(Matrix{{1, -4}, {-4, 1}}, inf).value, 0.5, 1e-14);

  const CondResult half = lcp_cond_M_matrix(LcpProblem(Matrix{{0.5, 0}, {0, 0.5}}, Vector{1, 1}), inf);
  EXPECT_NEAR(half.value, 0.5, 1e-14);
  EXPECT_NEAR(cond_exact(lcp_transform_matrix(Matrix{{0.5, 0}, {0, 0.5}}), inf).value, 0.5, 1e-14);

  EXPECT_EQ(lcp_cond_M_matrix(LcpProblem(Matrix{{2, -1}, {-1, 2}}, Vector{1, 1}), inf).kind,
            CondKind::NotApplicable);
  EXPECT_EQ(lcp_cond_M_matrix(LcpProblem(Matrix{{1, 0.5}, {0.5, 1}}, Vector{1, 1}), inf).kind,
            CondKind::NotApplicable);
}

TEST(LcpCondHmatrix, WorkedValues) {
  const NormSpec inf = NormSpec::inf();
  const CondResult same = lcp_cond_H_matrix(LcpProblem(kWorkedM, Vector{1, 1}), inf);
  ASSERT_EQ(same.kind, CondKind::UpperBound);
  EXPECT_NEAR(same.value, 0.5, 1e-14);

  const Matrix m{{1, 0.5}, {-0.5, 1}};
  const CondResult r = lcp_cond_H_matrix(LcpProblem(m, Vector{1, 1}), inf);
  ASSERT_EQ(r.kind, CondKind::UpperBound);
  EXPECT_NEAR(r.value, 0.5, 1e-14);
  EXPECT_GE(r.value, cond_exact(lcp_transform_matrix(m), inf).value - 1e-9);

  EXPECT_EQ(lcp_cond_H_matrix(LcpProblem(Matrix{{-0.1, 0}, {0, 0.5}}, Vector{1, 1}), inf).kind,
            CondKind::NotApplicable);
}

TEST(LcpInfEnclosure, WorkedValues) {
  EXPECT_NEAR(lcp_inf_enclosure(LcpProblem(Matrix{{0.5, 0}, {0, 0.5}}, Vector{1, 1})), 2.0, 1e-14);
  EXPECT_EQ(code_of([] { lcp_inf_enclosure(LcpProblem(Matrix{{2, -1}, {-1, 2}}, Vector{1, 1})); }),
            ErrorCode::NotApplicable);
}

TEST(LcpInfEnclosure, WorkedMatrixMatchesTheConstant) {
  const LcpProblem lp(kWorkedM, Vector{1, 1});
  EXPECT_LE(rel_diff(lcp_inf_enclosure(lp), chen_xiang_constant(lp, NormSpec::inf()).value), 1e-12);
}

TEST(LcpInfEnclosure, NeverBelowTheConstant) {
  Rng rng(87);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = testing::dim(rng, 1, 4);
    const LcpProblem lp(random_unit_m_matrix(rng, n), Vector(n, 1.0));
    EXPECT_GE(lcp_inf_enclosure(lp), chen_xiang_constant(lp, NormSpec::inf()).value * (1 - 1e-12));
  }
}

TEST(LcpChenUpper, WorkedValues) {
  const NormSpec inf = NormSpec::inf();
  const LcpProblem half(Matrix{{0.5, 0}, {0, 0.5}}, Vector{1, 1});
  EXPECT_NEAR(lcp_chen_upper(half, inf), 2.0, 1e-14);
  EXPECT_NEAR(chen_xiang_constant(half, inf).value, 2.0, 1e-14);

  const LcpProblem worked(kWorkedM, Vector{1, 1});
  EXPECT_NEAR(lcp_chen_upper(worked, inf), 2.0, 1e-14);
  EXPECT_GE(lcp_chen_upper(worked, inf), chen_xiang_constant(worked, inf).value - 1e-9);

  const LcpProblem asym(Matrix{{1, 0.3}, {-0.2, 0.9}}, Vector{1, 1});
  EXPECT_GE(lcp_chen_upper(asym, inf), chen_xiang_constant(asym, inf).value - 1e-9);

  EXPECT_EQ(code_of([] { lcp_chen_upper(LcpProblem(Matrix{{2, 0}, {0, 2}}, Vector{1, 1}), NormSpec::inf()); }),
            ErrorCode::NotApplicable);
}

TEST(LcpBounds, DominateTheExactValues) {
  Rng rng(85);
  int tested = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = testing::dim(rng, 1, 4);
    const Matrix m = (t % 2) ? random_unit_m_matrix(rng, n) : random_unit_h_matrix(rng, n);
    if (!testing::transform_well_posed(m)) continue;
    const LcpProblem lp(m, Vector(n, 1.0));
    const Matrix a = lcp_transform_matrix(m);
    for (const NormSpec& ns : kPlainNorms) {
      const CondResult h = lcp_cond_H_matrix(lp, ns);
      ASSERT_TRUE(h.applicable()) << h.reason;
      ++tested;
      const double exact = oracle::cond_exact(a, ns);
      EXPECT_GE(h.value, exact - 1e-9);
      EXPECT_GE(lcp_chen_upper(lp, ns), chen_xiang_constant(lp, ns).value - 1e-9);

      const CondResult mm = lcp_cond_M_matrix(lp, ns);
      if (mm.applicable()) {
        EXPECT_LE(rel_diff(mm.value, exact), 1e-9);
        EXPECT_LE(std::fabs(mm.value - h.value), 1e-10 * std::max(1.0, h.value));
        ASSERT_TRUE(mm.witness_d.has_value());
        EXPECT_LE(rel_diff(oracle::induced_norm(oracle::inverse(minus_diag(a, *mm.witness_d)), ns), exact),
                  1e-9);
      }
    }
  }
  EXPECT_GT(tested, 600);
}

TEST(PmatrixEquivalence, WorkedValues) {
  EXPECT_TRUE(pmatrix_equivalence_check(Matrix{{2, 0}, {0, 2}}));
  EXPECT_TRUE(pmatrix_equivalence_check(kWorkedM));
  // 2 * [[0, 1], [1, 0]] avoids the eigenvalue 1 of the plain swap matrix.
  EXPECT_TRUE(pmatrix_equivalence_check(Matrix{{0, 2}, {2, 0}}));
  EXPECT_FALSE(is_p_matrix(Matrix{{0, 2}, {2, 0}}));
  EXPECT_EQ(code_of([] { pmatrix_equivalence_check(Matrix{{0, 1}, {1, 0}}); }),
            ErrorCode::OneIsEigenvalue);
}

TEST(PmatrixEquivalence, HoldsOnMixedRandomMatrices) {
  Rng rng(86);
  int p_count = 0;
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = testing::dim(rng, 1, 4);
    const Matrix m = (t % 2) ? testing::random_p_matrix(rng, n) : testing::random_transformable(rng, n);
    const bool is_p = oracle::is_p_matrix(m);
    p_count += is_p;
    EXPECT_TRUE(pmatrix_equivalence_check(m));
    EXPECT_EQ(is_p, oracle::is_regular(lcp_transform_matrix(m)));
  }
  EXPECT_GT(p_count, 100);
  EXPECT_LT(p_count, 450);
}

}  // namespace
}  // namespace avecond
