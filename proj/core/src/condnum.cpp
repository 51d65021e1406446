#include "avecond/condnum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <utility>

#include "avecond/classify.hpp"
#include "avecond/error.hpp"
#include "avecond/lu.hpp"
#include "avecond/regularity.hpp"
#include "avecond/spectral.hpp"
#include "avecond/vertices.hpp"

namespace avecond {

namespace {

constexpr std::array<std::pair<BoundMethod, std::string_view>, 16> kMethodNames{{
    {BoundMethod::VertexEnum, "VertexEnum"},
    {BoundMethod::Symmetric2, "Symmetric2"},
    {BoundMethod::DiagDom2, "DiagDom2"},
    {BoundMethod::InvNonnegInf, "InvNonnegInf"},
    {BoundMethod::MmatrixInf, "MmatrixInf"},
    {BoundMethod::HmatrixInf, "HmatrixInf"},
    {BoundMethod::NeumannMonotone, "NeumannMonotone"},
    {BoundMethod::SigmaMin2, "SigmaMin2"},
    {BoundMethod::EnclosureInf, "EnclosureInf"},
    {BoundMethod::ScaledInfDiagDom, "ScaledInfDiagDom"},
    {BoundMethod::RowDiagDomInf, "RowDiagDomInf"},
    {BoundMethod::ColDiagDom1, "ColDiagDom1"},
    {BoundMethod::ScaledOneNormGamma, "ScaledOneNormGamma"},
    {BoundMethod::Relative, "Relative"},
    {BoundMethod::LcpMmatrix, "LcpMmatrix"},
    {BoundMethod::LcpHmatrix, "LcpHmatrix"},
}};

CondResult make(BoundMethod m, CondKind kind, const NormSpec& ns, double value = 0.0) {
  CondResult r;
  r.method = m;
  r.kind = kind;
  r.norm = ns;
  r.value = value;
  return r;
}

CondResult not_applicable(BoundMethod m, const NormSpec& ns, std::string reason) {
  CondResult r = make(m, CondKind::NotApplicable, ns);
  r.reason = std::move(reason);
  return r;
}

void require_square(const Matrix& a, const char* where) {
  if (!a.is_square() || a.empty()) throw Error(ErrorCode::DimensionMismatch, where);
}

std::optional<Matrix> try_invert(const Matrix& a, const Settings& s) {
  auto lu = LuFactorization::factor(a, s.singular_pivot * induced_norm(a, NormSpec::inf()));
  if (!lu) return std::nullopt;
  return lu->inverse();
}

// Perron root, or +inf when power iteration does not settle (callers only
// compare it against thresholds below 1).
double perron_root(const Matrix& b, const Settings& s) {
  try {
    return spectral_radius_nonneg(b, s).radius;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoConvergence) throw;
    return std::numeric_limits<double>::infinity();
  }
}

// min_i |b_ii| - (r_i(B) + cl_i(B)) / 2
double diagdom2_alpha(const Matrix& b) {
  const std::size_t n = b.rows();
  double alpha = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    double off = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) off += std::fabs(b(i, j)) + std::fabs(b(j, i));
    }
    alpha = std::min(alpha, std::fabs(b(i, i)) - 0.5 * off);
  }
  return alpha;
}

}  // namespace

std::string_view to_string(BoundMethod m) noexcept {
  for (const auto& [method, name] : kMethodNames) {
    if (method == m) return name;
  }
  return "?";
}

std::string_view to_string(CondKind k) noexcept {
  switch (k) {
    case CondKind::Exact: return "exact";
    case CondKind::UpperBound: return "upper_bound";
    case CondKind::NotApplicable: return "not_applicable";
  }
  return "?";
}

std::optional<BoundMethod> parse_bound_method(std::string_view name) noexcept {
  for (const auto& [method, text] : kMethodNames) {
    if (text == name) return method;
  }
  return std::nullopt;
}

CondResult cond_exact(const Matrix& a, const NormSpec& ns, const Settings& s,
                      RegularityCheck check) {
  require_square(a, "cond_exact");
  const std::size_t n = a.rows();
  if (n > s.max_enum_dim) {
    throw Error(ErrorCode::DimensionTooLarge, "cond_exact enumerates 2^n vertices; n = " +
                                                  std::to_string(n));
  }
  if (check == RegularityCheck::Enforce) {
    const RegularityReport reg = regularity_exact(a, s);
    if (reg.verdict != Verdict::Regular) {
      throw Error(ErrorCode::NotRegular, "[A - I, A + I] is not regular");
    }
  }

  struct Best {
    double value = -1.0;
    std::uint64_t mask = 0;
    bool unbounded = false;
  };
  const Best best = reduce_vertices(
      n, s.threads, Best{},
      [&](std::uint64_t mask) {
        try {
          return Best{inverse_norm(minus_diag(a, sign_vertex(n, mask)), ns, s), mask, false};
        } catch (const Error& e) {
          if (e.code() != ErrorCode::SingularMatrix) throw;
          if (check == RegularityCheck::Enforce) {
            throw Error(ErrorCode::NotRegular, "singular vertex matrix");
          }
          return Best{0.0, mask, true};
        }
      },
      [](const Best& lhs, const Best& rhs) {
        if (lhs.unbounded) return lhs;
        if (rhs.unbounded || rhs.value > lhs.value) return rhs;
        return lhs;
      });

  CondResult r = make(BoundMethod::VertexEnum, CondKind::Exact, ns, best.value);
  r.witness_d = sign_vertex(n, best.mask);
  if (best.unbounded) {
    r.unbounded = true;
    r.value = std::numeric_limits<double>::infinity();
  }
  return r;
}

CondResult cond_symmetric2(const Matrix& a, const Settings& s) {
  require_square(a, "cond_symmetric2");
  const NormSpec ns = NormSpec::two();
  if (!is_symmetric(a, s)) return not_applicable(BoundMethod::Symmetric2, ns, "A is not symmetric");
  const SymmetricEigen eig = symmetric_eigen(a, s);
  std::size_t k = 0;
  for (std::size_t i = 1; i < eig.values.size(); ++i) {
    if (std::fabs(eig.values[i]) < std::fabs(eig.values[k])) k = i;
  }
  const double smin = std::fabs(eig.values[k]);
  if (!(smin > 1.0 + s.strict_margin)) {
    return not_applicable(BoundMethod::Symmetric2, ns, "sigma_min(A) <= 1");
  }
  CondResult r = make(BoundMethod::Symmetric2, CondKind::Exact, ns, 1.0 / (smin - 1.0));
  r.witness_d = scale(ones(a.rows()), eig.values[k] < 0.0 ? -1.0 : 1.0);
  return r;
}

CondResult cond_sigma_upper(const Matrix& a, const Settings& s) {
  require_square(a, "cond_sigma_upper");
  const NormSpec ns = NormSpec::two();
  const double smin = sigma_min(a, s);
  if (!(smin > 1.0 + s.strict_margin)) {
    return not_applicable(BoundMethod::SigmaMin2, ns, "sigma_min(A) <= 1");
  }
  return make(BoundMethod::SigmaMin2, CondKind::UpperBound, ns, 1.0 / (smin - 1.0));
}

CondResult cond_diagdom2(const Matrix& a,
                         const std::optional<std::vector<std::size_t>>& permutation,
                         const Settings& s) {
  require_square(a, "cond_diagdom2");
  const std::size_t n = a.rows();
  const NormSpec ns = NormSpec::two();

  Matrix b = a;
  if (permutation) {
    const auto& perm = *permutation;
    std::vector<bool> seen(n, false);
    if (perm.size() != n) throw Error(ErrorCode::InvalidArgument, "permutation length");
    for (std::size_t j = 0; j < n; ++j) {
      if (perm[j] >= n || seen[perm[j]]) {
        throw Error(ErrorCode::InvalidArgument, "not a permutation");
      }
      seen[perm[j]] = true;
      for (std::size_t i = 0; i < n; ++i) b(i, j) = a(i, perm[j]);
    }
  }

  const double alpha = diagdom2_alpha(b);
  if (!(alpha > 1.0 + s.strict_margin)) {
    CondResult r = not_applicable(BoundMethod::DiagDom2, ns, "diagonal-dominance margin <= 1");
    r.params.alpha = alpha;
    return r;
  }
  Vector dbar(n);
  for (std::size_t i = 0; i < n; ++i) dbar[i] = b(i, i) < 0.0 ? -1.0 : 1.0;

  CondResult r = make(BoundMethod::DiagDom2, CondKind::Exact, ns,
                      inverse_norm(minus_diag(b, dbar), ns, s));
  r.witness_d = std::move(dbar);
  r.params.alpha = alpha;
  r.params.permutation = permutation;
  return r;
}

CondResult cond_diagdom2_bound(const Matrix& a, const Settings& s) {
  require_square(a, "cond_diagdom2_bound");
  const NormSpec ns = NormSpec::two();
  const double alpha = diagdom2_alpha(a);
  if (!(alpha > 1.0 + s.strict_margin)) {
    return not_applicable(BoundMethod::DiagDom2, ns, "diagonal-dominance margin <= 1");
  }
  CondResult r = make(BoundMethod::DiagDom2, CondKind::UpperBound, ns, 1.0 / (alpha - 1.0));
  r.params.alpha = alpha;
  return r;
}

CondResult cond_inv_nonneg_inf(const Matrix& a, const Settings& s) {
  require_square(a, "cond_inv_nonneg_inf");
  const std::size_t n = a.rows();
  const NormSpec ns = NormSpec::inf();
  const Matrix id = Matrix::identity(n);

  const auto lower_inv = try_invert(a - id, s);
  if (!lower_inv) return not_applicable(BoundMethod::InvNonnegInf, ns, "A - I is singular");

  BoundMethod route = BoundMethod::InvNonnegInf;
  const auto upper_inv = try_invert(a + id, s);
  const bool both_nonneg = upper_inv && is_nonnegative(*lower_inv, s.nonneg_slack) &&
                           is_nonnegative(*upper_inv, s.nonneg_slack);
  if (!both_nonneg) {
    if (!is_m_matrix(a, s)) {
      return not_applicable(BoundMethod::InvNonnegInf, ns,
                            "(A -+ I)^{-1} not both nonnegative and A is not an M-matrix");
    }
    if (!(perron_root(invert(a, s).abs(), s) < 1.0 - s.strict_margin)) {
      return not_applicable(BoundMethod::MmatrixInf, ns, "rho(A^{-1}) >= 1");
    }
    route = BoundMethod::MmatrixInf;
  }
  CondResult r = make(route, CondKind::Exact, ns, max_abs(*lower_inv * ones(n)));
  r.witness_d = ones(n);
  return r;
}

CondResult cond_hmatrix_inf(const Matrix& a, const Settings& s) {
  require_square(a, "cond_hmatrix_inf");
  const std::size_t n = a.rows();
  const NormSpec ns = NormSpec::inf();
  const Matrix cmp = comparison_matrix(a);
  if (!is_m_matrix(cmp, s)) return not_applicable(BoundMethod::HmatrixInf, ns, "not an H-matrix");
  if (!(perron_root(invert(cmp, s).abs(), s) < 1.0 - s.strict_margin)) {
    return not_applicable(BoundMethod::HmatrixInf, ns, "rho(<A>^{-1}) >= 1");
  }
  const Vector y = solve(cmp - Matrix::identity(n), ones(n), s);
  return make(BoundMethod::HmatrixInf, CondKind::UpperBound, ns, max_abs(y));
}

CondResult cond_neumann_upper(const Matrix& a, const NormSpec& ns, const Settings& s) {
  require_square(a, "cond_neumann_upper");
  const Matrix inv = invert(a, s);
  const double abs_norm = induced_norm(inv.abs(), ns);
  if (!(abs_norm < 1.0 - s.strict_margin)) {
    return not_applicable(BoundMethod::NeumannMonotone, ns, "|| |A^{-1}| || >= 1");
  }
  return make(BoundMethod::NeumannMonotone, CondKind::UpperBound, ns,
              induced_norm(inv, ns) / (1.0 - abs_norm));
}

CondResult cond_enclosure_inf(const Matrix& a, const Settings& s) {
  require_square(a, "cond_enclosure_inf");
  const std::size_t n = a.rows();
  const NormSpec ns = NormSpec::inf();
  const Matrix inv = invert(a, s);
  const Matrix inv_abs = inv.abs();
  if (!(perron_root(inv_abs, s) < 1.0 - s.strict_margin)) {
    return not_applicable(BoundMethod::EnclosureInf, ns, "rho(|A^{-1}|) >= 1");
  }
  const Matrix id = Matrix::identity(n);
  const Matrix h = invert(id - inv_abs, s);
  Vector t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = 1.0 / (2.0 * h(i, i) - 1.0);
  const Matrix tm = Matrix::diagonal(t);

  const Matrix h_abs = h * inv_abs;
  const Matrix lo_inner = tm * (inv + inv_abs) - h_abs;
  const Matrix hi_inner = h_abs + tm * (inv - inv_abs);
  const Matrix b1 = min(lo_inner, tm * lo_inner);
  const Matrix b2 = max(hi_inner, tm * hi_inner);

  return make(BoundMethod::EnclosureInf, CondKind::UpperBound, ns,
              induced_norm(max(b1.abs(), b2.abs()), ns));
}

CondResult cond_scaled_dd(const Matrix& a, std::span<const double> r, const Settings& s) {
  require_square(a, "cond_scaled_dd");
  const std::size_t n = a.rows();
  if (r.size() != n) throw Error(ErrorCode::DimensionMismatch, "cond_scaled_dd: r");
  Vector inv_r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(r[i] > 0.0) || !std::isfinite(r[i])) {
      throw Error(ErrorCode::InvalidArgument, "cond_scaled_dd: r must be positive");
    }
    inv_r[i] = 1.0 / r[i];
  }
  const NormSpec ns = NormSpec::scaled(NormKind::Inf, inv_r);

  double alpha = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    double off = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) off += r[j] * std::fabs(a(i, j));
    }
    alpha = std::min(alpha, std::fabs(a(i, i)) - 1.0 - off / r[i]);
  }

  CondResult res = alpha > s.strict_margin
                       ? make(BoundMethod::ScaledInfDiagDom, CondKind::UpperBound, ns, 1.0 / alpha)
                       : not_applicable(BoundMethod::ScaledInfDiagDom, ns,
                                        "scaled diagonal-dominance margin <= 0");
  res.params.r = Vector(r.begin(), r.end());
  res.params.alpha = alpha;
  return res;
}

CondResult cond_row_dd_inf(const Matrix& a, const Settings& s) {
  require_square(a, "cond_row_dd_inf");
  CondResult r = cond_scaled_dd(a, ones(a.rows()), s);
  r.method = BoundMethod::RowDiagDomInf;
  r.norm = NormSpec::inf();
  r.params.r.reset();
  return r;
}

CondResult cond_col_dd_one(const Matrix& a, const Settings& s) {
  require_square(a, "cond_col_dd_one");
  // c_1(A) = c_inf(A^T)
  CondResult r = cond_row_dd_inf(a.transpose(), s);
  r.method = BoundMethod::ColDiagDom1;
  r.norm = NormSpec::one();
  return r;
}

CondResult cond_scaled1_gamma(const Matrix& a, double gamma, const Settings& s) {
  require_square(a, "cond_scaled1_gamma");
  const std::size_t n = a.rows();
  if (!(gamma > 0.0 && gamma < 1.0)) {
    CondResult r = not_applicable(BoundMethod::ScaledOneNormGamma, NormSpec::one(),
                                  "gamma must lie in (0, 1)");
    r.params.gamma = gamma;
    return r;
  }
  const Matrix inv_abs = invert(a, s).abs();
  if (!(spectral_radius_nonneg(inv_abs, s).radius < gamma)) {
    CondResult r = not_applicable(BoundMethod::ScaledOneNormGamma, NormSpec::one(),
                                  "rho(|A^{-1}|) >= gamma");
    r.params.gamma = gamma;
    return r;
  }

  // rho(|A^{-1}| + tau e e^T) is increasing in tau and >= n tau, so the root
  // lies in [0, gamma / n]. Keep the lower end so rho(B) <= gamma.
  auto bumped = [&](double tau) {
    Matrix b = inv_abs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) += tau;
    return b;
  };
  double lo = 0.0;
  double hi = gamma / static_cast<double>(n);
  for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double rho = spectral_radius_nonneg(bumped(mid), s).radius;
    if (rho <= gamma) {
      lo = mid;
      if (gamma - rho < s.bisection_tol) break;
    } else {
      hi = mid;
    }
  }

  const Matrix b = bumped(lo);
  // Left Perron vector: v^T B = rho v^T makes the induced norm of v^T|x| equal rho(B).
  Vector v = spectral_radius_nonneg(b.transpose(), s).vector;
  const double v0 = v.front();
  if (!(v0 > 0.0)) throw Error(ErrorCode::NoConvergence, "degenerate Perron vector");
  for (double& vi : v) vi /= v0;

  CondResult r = make(BoundMethod::ScaledOneNormGamma, CondKind::UpperBound,
                      NormSpec::scaled(NormKind::One, v), gamma / (1.0 - gamma));
  r.params.gamma = gamma;
  r.params.alpha = lo;
  r.params.weights = std::move(v);
  return r;
}

ShiftedNorm max_shifted_norm(const Matrix& a, const NormSpec& ns, const Settings& s) {
  require_square(a, "max_shifted_norm");
  const Matrix scaled = apply_scaling(a, ns);
  if (ns.p == NormKind::Two) {
    return {sigma_max(scaled, s) + 1.0, is_symmetric(scaled, s)};
  }
  const NormSpec plain{ns.p, std::nullopt};
  return {induced_norm(scaled.abs() + Matrix::identity(a.rows()), plain), true};
}

CondResult cond_relative(const Matrix& a, const NormSpec& ns, const CondResult& base,
                         const Settings& s) {
  if (!base.applicable()) {
    throw Error(ErrorCode::NotApplicable, "base condition number not applicable: " + base.reason);
  }
  if (!(base.norm == ns)) throw Error(ErrorCode::InvalidArgument, "cond_relative: norm mismatch");
  const ShiftedNorm shifted = max_shifted_norm(a, ns, s);
  CondResult r = base;
  r.method = BoundMethod::Relative;
  r.kind = base.kind == CondKind::Exact && shifted.exact ? CondKind::Exact : CondKind::UpperBound;
  r.value = base.unbounded ? base.value : base.value * shifted.value;
  if (r.kind != CondKind::Exact) r.witness_d.reset();
  return r;
}

}  // namespace avecond
