#include "avecond/norms.hpp"

#include <algorithm>
#include <cmath>

#include "avecond/error.hpp"
#include "avecond/lu.hpp"
#include "avecond/spectral.hpp"

namespace avecond {

NormSpec NormSpec::scaled(NormKind p, Vector weights) {
  for (double w : weights) {
    if (!(std::isfinite(w) && w > 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "scaling weights must be finite and positive");
    }
  }
  return {p, std::move(weights)};
}

std::string to_string(NormKind p) {
  switch (p) {
    case NormKind::One: return "one";
    case NormKind::Two: return "two";
    case NormKind::Inf: return "inf";
  }
  return "?";
}

std::string to_string(const NormSpec& ns) {
  return ns.is_scaled() ? "scaled-" + to_string(ns.p) : to_string(ns.p);
}

double vector_norm(std::span<const double> x, const NormSpec& ns) {
  if (ns.scaling && ns.scaling->size() != x.size()) {
    throw Error(ErrorCode::DimensionMismatch, "scaling length differs from vector length");
  }
  auto w = [&](std::size_t i) { return ns.scaling ? (*ns.scaling)[i] * x[i] : x[i]; };
  double acc = 0.0;
  switch (ns.p) {
    case NormKind::One:
      for (std::size_t i = 0; i < x.size(); ++i) acc += std::fabs(w(i));
      return acc;
    case NormKind::Inf:
      for (std::size_t i = 0; i < x.size(); ++i) acc = std::max(acc, std::fabs(w(i)));
      return acc;
    case NormKind::Two: {
      // scaled sum of squares to avoid overflow
      double scale = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) scale = std::max(scale, std::fabs(w(i)));
      if (scale == 0.0) return 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        const double t = w(i) / scale;
        acc += t * t;
      }
      return scale * std::sqrt(acc);
    }
  }
  return acc;
}

Matrix apply_scaling(const Matrix& a, const NormSpec& ns) {
  if (!ns.scaling) return a;
  const Vector& d = *ns.scaling;
  if (!a.is_square() || d.size() != a.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "scaling length differs from matrix order");
  }
  Matrix m = a;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= d[i] / d[j];
  return m;
}

double induced_norm(const Matrix& a, const NormSpec& ns) {
  const Matrix m = apply_scaling(a, ns);
  double best = 0.0;
  switch (ns.p) {
    case NormKind::Inf:
      for (std::size_t i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (double v : m.row(i)) s += std::fabs(v);
        best = std::max(best, s);
      }
      return best;
    case NormKind::One:
      for (std::size_t j = 0; j < m.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m.rows(); ++i) s += std::fabs(m(i, j));
        best = std::max(best, s);
      }
      return best;
    case NormKind::Two:
      return sigma_max(m);
  }
  return best;
}

double inverse_norm(const Matrix& a, const NormSpec& ns, const Settings& s) {
  if (ns.p == NormKind::Two) {
    // D A^{-1} D^{-1} = (D A D^{-1})^{-1}
    const double smin = sigma_min(apply_scaling(a, ns), s);
    const double floor = s.singular_pivot * induced_norm(a, NormSpec::inf());
    if (!(smin > floor)) throw Error(ErrorCode::SingularMatrix, "sigma_min below threshold");
    return 1.0 / smin;
  }
  return induced_norm(invert(a, s), ns);
}

}  // namespace avecond
