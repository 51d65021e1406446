#include "avecond/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "avecond/classify.hpp"
#include "avecond/error.hpp"

namespace avecond {

SymmetricEigen symmetric_eigen(const Matrix& a, const Settings& s) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "eigen needs a square matrix");
  if (!is_symmetric(a, s)) throw Error(ErrorCode::NotSymmetric, "symmetric_eigen");
  const std::size_t n = a.rows();
  Matrix m = a;
  Matrix v = Matrix::identity(n);

  double frob = 0.0;
  for (double x : a.data()) frob += x * x;
  frob = std::sqrt(frob);

  bool converged = n < 2;
  for (int sweep = 0; sweep < s.jacobi_max_sweeps && !converged; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * m(p, q) * m(p, q);
    if (std::sqrt(off) <= s.jacobi_tol * frob) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (apq == 0.0) continue;
        const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::fabs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double sn = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double mkp = m(k, p);
          const double mkq = m(k, q);
          m(k, p) = c * mkp - sn * mkq;
          m(k, q) = sn * mkp + c * mkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double mpk = m(p, k);
          const double mqk = m(q, k);
          m(p, k) = c * mpk - sn * mqk;
          m(q, k) = sn * mpk + c * mqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * m(p, q) * m(p, q);
    // rounding can stall the last sweep slightly above jacobi_tol
    if (std::sqrt(off) > 1e3 * s.jacobi_tol * frob) {
      throw Error(ErrorCode::NoConvergence, "Jacobi eigenvalue sweeps exhausted");
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return m(i, i) < m(j, j); });
  SymmetricEigen out{Vector(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = m(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

Vector singular_values(const Matrix& a, const Settings& s) {
  // One-sided Jacobi: rotate column pairs of U = A until all are orthogonal;
  // the column norms are then the singular values.
  Matrix u = a.rows() >= a.cols() ? a : a.transpose();
  const std::size_t m = u.rows();
  const std::size_t n = u.cols();

  bool rotated = true;
  int sweep = 0;
  for (; rotated && sweep < s.jacobi_max_sweeps; ++sweep) {
    rotated = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
          alpha += u(k, i) * u(k, i);
          beta += u(k, j) * u(k, j);
          gamma += u(k, i) * u(k, j);
        }
        if (gamma == 0.0 || std::fabs(gamma) <= s.jacobi_tol * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::fabs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double sn = c * t;
        for (std::size_t k = 0; k < m; ++k) {
          const double uki = u(k, i);
          const double ukj = u(k, j);
          u(k, i) = c * uki - sn * ukj;
          u(k, j) = sn * uki + c * ukj;
        }
      }
    }
  }
  if (rotated) throw Error(ErrorCode::NoConvergence, "one-sided Jacobi sweeps exhausted");

  Vector sv(n);
  for (std::size_t j = 0; j < n; ++j) {
    double acc = 0.0;
    for (std::size_t k = 0; k < m; ++k) acc += u(k, j) * u(k, j);
    sv[j] = std::sqrt(acc);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

double sigma_min(const Matrix& a, const Settings& s) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "sigma_min needs a square matrix");
  if (a.rows() == 0) return 0.0;
  return singular_values(a, s).back();
}

double sigma_max(const Matrix& a, const Settings& s) {
  if (a.empty()) return 0.0;
  return singular_values(a, s).front();
}

PerronPair spectral_radius_nonneg(const Matrix& b, const Settings& s) {
  if (!b.is_square()) throw Error(ErrorCode::DimensionMismatch, "spectral radius");
  if (!is_nonnegative(b)) {
    throw Error(ErrorCode::InvalidArgument, "spectral_radius_nonneg needs B >= 0");
  }
  const std::size_t n = b.rows();
  PerronPair out;
  if (n == 0) return out;

  Vector x(n, 1.0 / static_cast<double>(n));
  double lambda = std::numeric_limits<double>::quiet_NaN();
  for (int it = 1; it <= s.perron_max_iter; ++it) {
    Vector y = b * x;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] += x[i];  // (B + I) x
      sum += y[i];
    }
    // ||x||_1 = 1 and x >= 0, so sum = e^T (B + I) x is the Rayleigh-type estimate
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] /= sum;
      change += std::fabs(y[i] - x[i]);
    }
    const double prev = lambda;
    lambda = sum;
    x = std::move(y);
    if (it > 1 && std::fabs(lambda - prev) < s.perron_tol * std::max(1.0, lambda) &&
        change < s.perron_tol * 1e2) {
      out.radius = std::max(0.0, lambda - 1.0);
      out.vector = std::move(x);
      out.iterations = it;
      return out;
    }
  }
  throw Error(ErrorCode::NoConvergence, "power iteration did not converge");
}

}  // namespace avecond
