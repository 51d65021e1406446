#include "avecond/errorbound.hpp"

#include <algorithm>
#include <random>

#include "avecond/error.hpp"

namespace avecond {

namespace {

constexpr double kZeroRhs = 1e-14;
constexpr double kWeakSharpSlack = 1e-9;

}  // namespace

CertReport certify_abs(const AveProblem& p, std::span<const double> x, const NormSpec& ns,
                       const CondResult& cond, const Settings& s) {
  if (x.size() != p.size()) throw Error(ErrorCode::DimensionMismatch, "certify: x");
  if (!cond.applicable()) {
    throw Error(ErrorCode::NotApplicable, "condition estimate not applicable: " + cond.reason);
  }
  if (cond.unbounded) throw Error(ErrorCode::NotRegular, "condition number is unbounded");
  if (!(cond.norm == ns)) {
    throw Error(ErrorCode::InvalidArgument,
                "condition estimate is for " + to_string(cond.norm) + ", not " + to_string(ns));
  }

  CertReport rep;
  rep.norm = ns;
  rep.cond_used = cond;
  rep.residual_norm = vector_norm(residual(p, x), ns);
  rep.abs_bound = cond.value * rep.residual_norm;

  const double b_norm = vector_norm(p.b, ns);
  if (b_norm > kZeroRhs) {
    const double rel_cond = cond_relative(p.A, ns, cond, s).value;
    const double rel_residual = rep.residual_norm / b_norm;
    rep.rel_bound_upper = rel_cond * rel_residual;
    rep.rel_bound_lower = rel_residual / rel_cond;
  }
  return rep;
}

CertReport certify_rel(const AveProblem& p, std::span<const double> x, const NormSpec& ns,
                       const CondResult& cond, const Settings& s) {
  if (!(vector_norm(p.b, ns) > kZeroRhs)) {
    throw Error(ErrorCode::ZeroRightHandSide, "relative bounds need b != 0");
  }
  return certify_abs(p, x, ns, cond, s);
}

CertReport certify_rel(const AveProblem& p, std::span<const double> x, const NormSpec& ns,
                       const Settings& s) {
  if (!(vector_norm(p.b, ns) > kZeroRhs)) {
    throw Error(ErrorCode::ZeroRightHandSide, "relative bounds need b != 0");
  }
  return certify_abs(p, x, ns, cond_exact(p.A, ns, s), s);
}

StabilityGap stability_gap(const Matrix& a, std::span<const double> b1,
                           std::span<const double> b2, const NormSpec& ns, const Settings& s) {
  const CondResult cond = cond_exact(a, ns, s);
  const AveProblem p1(a, Vector(b1.begin(), b1.end()));
  const AveProblem p2(a, Vector(b2.begin(), b2.end()));
  const Vector x1 = solve_exact(p1, s).unique().x_star;
  const Vector x2 = solve_exact(p2, s).unique().x_star;

  StabilityGap g;
  g.gap = vector_norm(subtract(x1, x2), ns);
  g.bound = cond.value * vector_norm(subtract(b1, b2), ns);
  return g;
}

WeakSharpReport weak_sharp_check(const AveProblem& p, int samples, std::uint64_t seed,
                                 const Settings& s) {
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "weak_sharp_check: samples >= 1");
  const double c2 = cond_exact(p.A, NormSpec::two(), s).value;
  const Vector x_star = solve_exact(p, s).unique().x_star;
  const double radius = 2.0 * std::max(max_abs(x_star), 1.0);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  WeakSharpReport rep;
  bool first = true;
  Vector x(p.size());
  for (int k = 0; k < samples; ++k) {
    ++rep.drawn;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = x_star[i] + radius * unit(rng);
    if (!concave_feasible(p, x, s)) continue;
    ++rep.feasible_tested;
    const Vector phi = residual(p, x);
    double objective = 0.0;
    for (double v : phi) objective += v;
    const double margin = objective - vector_norm(subtract(x, x_star), NormSpec::two()) / c2;
    rep.worst_margin = first ? margin : std::min(rep.worst_margin, margin);
    first = false;
    if (margin < -kWeakSharpSlack) rep.all_passed = false;
  }
  return rep;
}

}  // namespace avecond
