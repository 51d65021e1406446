#pragma once

// Independent reference implementations built on Eigen. They share no code
// with the library beyond the Matrix container and are deliberately naive.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "avecond/matrix.hpp"
#include "avecond/norms.hpp"

namespace avecond::testing::oracle {

inline Eigen::MatrixXd to_eigen(const Matrix& a) {
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  return m;
}

inline Matrix from_eigen(const Eigen::MatrixXd& m) {
  Matrix a(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) a(i, j) = m(i, j);
  return a;
}

inline double det(const Matrix& a) { return to_eigen(a).fullPivLu().determinant(); }

inline Matrix inverse(const Matrix& a) { return from_eigen(to_eigen(a).fullPivLu().inverse()); }

inline Eigen::VectorXd singular_values(const Matrix& a) {
  return Eigen::JacobiSVD<Eigen::MatrixXd>(to_eigen(a)).singularValues();
}

inline double sigma_min(const Matrix& a) { return oracle::singular_values(a).minCoeff(); }
inline double sigma_max(const Matrix& a) { return oracle::singular_values(a).maxCoeff(); }

inline double spectral_radius(const Matrix& a) {
  return Eigen::EigenSolver<Eigen::MatrixXd>(to_eigen(a)).eigenvalues().cwiseAbs().maxCoeff();
}

inline Eigen::VectorXd weights(const NormSpec& ns, std::size_t n) {
  Eigen::VectorXd w = Eigen::VectorXd::Ones(n);
  if (ns.scaling) {
    for (std::size_t i = 0; i < n; ++i) w(i) = (*ns.scaling)[i];
  }
  return w;
}

inline double vector_norm(const Eigen::VectorXd& x, const NormSpec& ns) {
  const Eigen::VectorXd y = weights(ns, x.size()).cwiseProduct(x);
  switch (ns.p) {
    case NormKind::One: return y.lpNorm<1>();
    case NormKind::Two: return y.norm();
    case NormKind::Inf: return y.lpNorm<Eigen::Infinity>();
  }
  return 0.0;
}

inline double vector_norm(std::span<const double> x, const NormSpec& ns) {
  Eigen::VectorXd v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v(i) = x[i];
  return oracle::vector_norm(v, ns);
}

// Induced norm from its definition: the maximum of ||Sx|| over the extreme
// points of the unit ball (cube vertices for inf, signed unit vectors for 1),
// or the top singular value for 2. S = D A D^{-1}.
inline double induced_norm(const Matrix& a, const NormSpec& ns) {
  const std::size_t n = a.rows();
  const Eigen::VectorXd w = weights(ns, n);
  const Eigen::MatrixXd s = w.asDiagonal() * to_eigen(a) * w.cwiseInverse().asDiagonal();
  const NormSpec plain{ns.p, std::nullopt};
  double best = 0.0;
  switch (ns.p) {
    case NormKind::Inf:
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Eigen::VectorXd x(n);
        for (std::size_t i = 0; i < n; ++i) x(i) = ((mask >> i) & 1U) ? -1.0 : 1.0;
        best = std::max(best, vector_norm(Eigen::VectorXd(s * x), plain));
      }
      return best;
    case NormKind::One:
      for (std::size_t j = 0; j < n; ++j) {
        best = std::max(best, vector_norm(Eigen::VectorXd(s.col(j)), plain));
      }
      return best;
    case NormKind::Two:
      return Eigen::JacobiSVD<Eigen::MatrixXd>(s).singularValues()(0);
  }
  return best;
}

inline Matrix vertex_matrix(const Matrix& a, std::uint64_t mask) {
  Matrix m = a;
  for (std::size_t i = 0; i < a.rows(); ++i) m(i, i) -= ((mask >> i) & 1U) ? -1.0 : 1.0;
  return m;
}

// max over |d| = e of ||(A - diag(d))^{-1}||; +inf if a vertex is singular.
inline double cond_exact(const Matrix& a, const NormSpec& ns) {
  const std::size_t n = a.rows();
  double best = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(to_eigen(vertex_matrix(a, mask)));
    if (!lu.isInvertible()) return std::numeric_limits<double>::infinity();
    best = std::max(best, oracle::induced_norm(from_eigen(lu.inverse()), ns));
  }
  return best;
}

inline bool is_regular(const Matrix& a) {
  const std::size_t n = a.rows();
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::fabs(a(i, j));
    scale = std::max(scale, row);
  }
  const double threshold = 1e-12 * std::pow(scale, static_cast<double>(n));
  int sign = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const double d = oracle::det(vertex_matrix(a, mask));
    if (std::fabs(d) <= threshold) return false;
    const int s = d > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    if (s != sign) return false;
  }
  return true;
}

inline bool is_p_matrix(const Matrix& m) {
  const std::size_t n = m.rows();
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << n); ++subset) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if ((subset >> i) & 1U) idx.push_back(i);
    Eigen::MatrixXd sub(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) sub(r, c) = m(idx[r], idx[c]);
    if (!(sub.fullPivLu().determinant() > 1e-12)) return false;
  }
  return true;
}

// All x with (A - diag(s)) x = b and s_i x_i >= 0 (up to 1e-12), deduplicated.
inline std::vector<Vector> ave_solutions(const Matrix& a, std::span<const double> b) {
  const std::size_t n = a.rows();
  Eigen::VectorXd rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs(i) = b[i];
  std::vector<Vector> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(to_eigen(vertex_matrix(a, mask)));
    if (!lu.isInvertible()) continue;
    const Eigen::VectorXd x = lu.solve(rhs);
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      const double s = ((mask >> i) & 1U) ? -1.0 : 1.0;
      ok = ok && s * x(i) >= -1e-12;
    }
    if (!ok) continue;
    Vector v(x.data(), x.data() + n);
    const bool dup = std::any_of(out.begin(), out.end(), [&](const Vector& u) {
      double d = 0.0;
      for (std::size_t i = 0; i < n; ++i) d = std::max(d, std::fabs(u[i] - v[i]));
      return d < 1e-10;
    });
    if (!dup) out.push_back(std::move(v));
  }
  return out;
}

template <typename Rng>
Matrix random_orthogonal(Rng& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = g(rng);
  return from_eigen(Eigen::HouseholderQR<Eigen::MatrixXd>(m).householderQ() *
                    Eigen::MatrixXd::Identity(n, n));
}

}  // namespace avecond::testing::oracle
