#include "selftest.hpp"

#include <cmath>

#include "avecond/condnum.hpp"
#include "avecond/lcp.hpp"
#include "avecond/spectral.hpp"

namespace avecond::cli {

namespace {

SelfCheck near(std::string name, double observed, double expected, double tol) {
  return {std::move(name), std::fabs(observed - expected) <= tol, observed, expected, tol,
          "abs_diff"};
}

SelfCheck at_most(std::string name, double observed, double limit) {
  return {std::move(name), observed <= limit, observed, limit, 0.0, "at_most"};
}

// (sqrt(2)/2) [[1,-1],[1,1]] diag(5, 1 + eps)
Matrix rotated_family(double eps) {
  const double h = std::sqrt(2.0) / 2.0;
  return Matrix{{h * 5.0, -h * (1.0 + eps)}, {h * 5.0, h * (1.0 + eps)}};
}

}  // namespace

std::vector<SelfCheck> run_selftest(const Settings& s) {
  std::vector<SelfCheck> checks;
  const Matrix a{{2.0, 1.0}, {-2.0, 1.0}};
  const Matrix id = Matrix::identity(2);
  const Matrix e = Matrix::diagonal(Vector{0.0, 1.0});

  checks.push_back(near("sigma_min(A)", sigma_min(a, s), std::sqrt(2.0), 1e-8));
  checks.push_back(near("mean sigma_min(A +- I)",
                        0.5 * (sigma_min(a + id, s) + sigma_min(a - id, s)), 1.541, 5e-3));
  checks.push_back(near("mean sigma_min(A +- E)",
                        0.5 * (sigma_min(a + e, s) + sigma_min(a - e, s)), 1.34, 5e-3));
  checks.push_back(near("c2(A) by enumeration", cond_exact(a, NormSpec::two(), s).value,
                        1.0 / std::sqrt(7.0 - std::sqrt(45.0)), 1e-10));

  for (double eps : {0.1, 0.01, 0.001}) {
    const Matrix b = rotated_family(eps);
    const std::string tag = "eps=" + std::to_string(eps).substr(0, 5);
    checks.push_back(at_most("c2 exact <= 6, " + tag, cond_exact(b, NormSpec::two(), s).value, 6.0));
    checks.push_back(near("sigma_min bound = 1/eps, " + tag, cond_sigma_upper(b, s).value,
                          1.0 / eps, 1e-6 / eps));
  }

  const LcpProblem lp(Matrix{{1.0, -0.5}, {-0.5, 1.0}}, Vector{0.0, 0.0});
  const Matrix transformed = lcp_transform_matrix(lp.M, s);
  const Matrix expected{{1.0, -4.0}, {-4.0, 1.0}};
  double diff = 0.0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) diff = std::max(diff, std::fabs(transformed(i, j) - expected(i, j)));
  checks.push_back(near("LCP transform of worked M", diff, 0.0, 1e-12));
  checks.push_back(near("LCP c_inf by enumeration",
                        cond_exact(transformed, NormSpec::inf(), s).value, 0.5, 1e-10));
  checks.push_back(near("LCP c_inf by M-matrix formula",
                        lcp_cond_M_matrix(lp, NormSpec::inf(), s).value, 0.5, 1e-10));
  checks.push_back(near("LCP c_inf by H-matrix formula",
                        lcp_cond_H_matrix(lp, NormSpec::inf(), s).value, 0.5, 1e-10));
  return checks;
}

}  // namespace avecond::cli
