#include "avecond/lcp.hpp"

#include <algorithm>
#include <cmath>

#include "avecond/classify.hpp"
#include "avecond/error.hpp"
#include "avecond/lu.hpp"
#include "avecond/regularity.hpp"
#include "avecond/vertices.hpp"

namespace avecond {

namespace {

constexpr double kDiagSlack = 1e-12;

bool one_is_eigenvalue(const Matrix& m, const Settings& s) {
  const double threshold =
      s.det_zero * std::pow(induced_norm(m, NormSpec::inf()), static_cast<double>(m.rows()));
  return !(std::fabs(determinant(m - Matrix::identity(m.rows()))) > threshold);
}

void require_transformable(const Matrix& m, const Settings& s) {
  if (one_is_eigenvalue(m, s)) {
    throw Error(ErrorCode::OneIsEigenvalue, "M - I is singular");
  }
}

bool diag_at_most_one(const Matrix& m) {
  for (double v : m.diag()) {
    if (v > 1.0 + kDiagSlack) return false;
  }
  return true;
}

bool diag_nonnegative(const Matrix& m) {
  for (double v : m.diag()) {
    if (v < -kDiagSlack) return false;
  }
  return true;
}

}  // namespace

LcpProblem::LcpProblem(Matrix m, Vector rhs) : M(std::move(m)), q(std::move(rhs)) {
  if (!M.is_square() || M.rows() != q.size()) {
    throw Error(ErrorCode::DimensionMismatch, "LCP needs square M with matching q");
  }
}

Matrix lcp_transform_matrix(const Matrix& m, const Settings& s) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "lcp_transform_matrix");
  require_transformable(m, s);
  const Matrix id = Matrix::identity(m.rows());
  return (m + id) * invert(m - id, s);
}

AveProblem lcp_to_ave(const LcpProblem& lp, const Settings& s) {
  Matrix a = lcp_transform_matrix(lp.M, s);
  Vector b = scale(solve(lp.M - Matrix::identity(lp.size()), lp.q, s), 2.0);
  return AveProblem(std::move(a), std::move(b));
}

Vector lcp_to_ave_point(std::span<const double> z, std::span<const double> w) {
  return subtract(w, z);
}

LcpSolution ave_to_lcp_solution(std::span<const double> x) {
  LcpSolution sol;
  sol.z.resize(x.size());
  sol.w.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    sol.z[i] = 0.5 * (std::fabs(x[i]) - x[i]);
    sol.w[i] = 0.5 * (std::fabs(x[i]) + x[i]);
  }
  sol.complementarity_gap = dot(sol.z, sol.w);
  return sol;
}

Vector natural_residual(const LcpProblem& lp, std::span<const double> x) {
  if (x.size() != lp.size()) throw Error(ErrorCode::DimensionMismatch, "natural_residual");
  Vector r = lp.M * x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(r[i] + lp.q[i], x[i]);
  return r;
}

ChenXiang chen_xiang_constant(const LcpProblem& lp, const NormSpec& ns, const Settings& s) {
  const Matrix& m = lp.M;
  const std::size_t n = m.rows();
  if (n > s.max_enum_dim) {
    throw Error(ErrorCode::DimensionTooLarge, "chen_xiang_constant; n = " + std::to_string(n));
  }
  if (!is_p_matrix(m, s)) throw Error(ErrorCode::NotPMatrix, "M is not a P-matrix");
  require_transformable(m, s);

  const Matrix id = Matrix::identity(n);
  const Matrix i_minus_m_inv = invert(id - m, s);
  const Matrix shifted = (id + m) * i_minus_m_inv;

  // diag(d) = 2D - I links the two vertex sets, so mask k visits the same
  // vertex in both routes. Masks count up from D = 0 (d = -e), which makes
  // ties resolve to the smallest D.
  struct Pair {
    double via_d = -1.0;
    double via_ave = -1.0;
    std::uint64_t mask = 0;
  };
  const Pair best = reduce_vertices(
      n, s.threads, Pair{},
      [&](std::uint64_t mask) {
        const Vector d = scale(sign_vertex(n, mask), -1.0);
        Matrix lhs = id;
        for (std::size_t i = 0; i < n; ++i) {
          const double di = 0.5 * (1.0 + d[i]);
          for (std::size_t j = 0; j < n; ++j) lhs(i, j) = (i == j ? 1.0 - di : 0.0) + di * m(i, j);
        }
        const Matrix rhs = i_minus_m_inv * invert(minus_diag(shifted, d), s);
        return Pair{inverse_norm(lhs, ns, s), 2.0 * induced_norm(rhs, ns), mask};
      },
      [](const Pair& a, const Pair& b) {
        Pair r = b.via_d > a.via_d ? b : a;
        r.via_ave = std::max(a.via_ave, b.via_ave);
        return r;
      });

  const double scale_ref = std::max(std::fabs(best.via_d), std::fabs(best.via_ave));
  if (std::fabs(best.via_d - best.via_ave) > s.identity_rel * scale_ref) {
    throw Error(ErrorCode::IdentityMismatch,
                "routes disagree: " + std::to_string(best.via_d) + " vs " +
                    std::to_string(best.via_ave));
  }
  ChenXiang cx;
  cx.value = best.via_d;
  cx.value_via_ave = best.via_ave;
  const Vector d = scale(sign_vertex(n, best.mask), -1.0);
  cx.argmax_D.resize(n);
  for (std::size_t i = 0; i < n; ++i) cx.argmax_D[i] = 0.5 * (1.0 + d[i]);
  return cx;
}

CondResult lcp_cond_M_matrix(const LcpProblem& lp, const NormSpec& ns, const Settings& s) {
  CondResult r;
  r.method = BoundMethod::LcpMmatrix;
  r.norm = ns;
  if (!is_m_matrix(lp.M, s)) {
    r.reason = "M is not an M-matrix";
  } else if (!diag_at_most_one(lp.M)) {
    r.reason = "Diag(M) exceeds 1";
  } else if (one_is_eigenvalue(lp.M, s)) {
    r.reason = "M - I is singular";
  } else {
    const std::size_t n = lp.size();
    r.kind = CondKind::Exact;
    r.value = 0.5 * induced_norm(Matrix::identity(n) - invert(lp.M, s), ns);
    // A + I = 2 M (M - I)^{-1}, whose inverse is (I - M^{-1}) / 2.
    r.witness_d = scale(ones(n), -1.0);
  }
  return r;
}

CondResult lcp_cond_H_matrix(const LcpProblem& lp, const NormSpec& ns, const Settings& s) {
  CondResult r;
  r.method = BoundMethod::LcpHmatrix;
  r.norm = ns;
  if (!is_h_matrix(lp.M, s)) {
    r.reason = "M is not an H-matrix";
  } else if (!diag_at_most_one(lp.M) || !diag_nonnegative(lp.M)) {
    r.reason = "Diag(M) outside [0, 1]";
  } else if (one_is_eigenvalue(lp.M, s)) {
    r.reason = "M - I is singular";
  } else {
    r.kind = CondKind::UpperBound;
    const Matrix cmp_inv = invert(comparison_matrix(lp.M), s);
    r.value = 0.5 * induced_norm(cmp_inv - Matrix::identity(lp.size()), ns);
  }
  return r;
}

double lcp_inf_enclosure(const LcpProblem& lp, const Settings& s) {
  const Matrix& m = lp.M;
  if (!is_m_matrix(m, s)) throw Error(ErrorCode::NotApplicable, "M is not an M-matrix");
  if (!diag_at_most_one(m)) throw Error(ErrorCode::NotApplicable, "Diag(M) exceeds 1");
  if (one_is_eigenvalue(m, s)) throw Error(ErrorCode::NotApplicable, "M - I is singular");

  const std::size_t n = m.rows();
  const Matrix id = Matrix::identity(n);
  const Matrix p = invert(id - m, s);
  const Matrix q = id - m;
  const Matrix r = invert(m, s) - id;
  Matrix hat(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double lo = 0.0;
      double hi = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const double u = p(i, k) * q(k, j);
        const double v = p(i, k) * r(k, j);
        lo += std::min(u, v);
        hi += std::max(u, v);
      }
      hat(i, j) = std::max(std::fabs(lo), std::fabs(hi));
    }
  }
  return induced_norm(hat, NormSpec::inf());
}

double lcp_chen_upper(const LcpProblem& lp, const NormSpec& ns, const Settings& s) {
  if (!is_h_matrix(lp.M, s)) throw Error(ErrorCode::NotApplicable, "M is not an H-matrix");
  if (!diag_at_most_one(lp.M) || !diag_nonnegative(lp.M)) {
    throw Error(ErrorCode::NotApplicable, "Diag(M) outside [0, 1]");
  }
  return inverse_norm(comparison_matrix(lp.M), ns, s);
}

bool pmatrix_equivalence_check(const Matrix& m, const Settings& s) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "pmatrix_equivalence_check");
  const bool is_p = is_p_matrix(m, s);
  const Matrix a = lcp_transform_matrix(m, s);
  return is_p == (regularity_exact(a, s).verdict == Verdict::Regular);
}

}  // namespace avecond
