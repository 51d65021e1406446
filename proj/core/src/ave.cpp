#include "avecond/ave.hpp"

#include <cmath>
#include <random>

#include "avecond/error.hpp"
#include "avecond/lu.hpp"
#include "avecond/norms.hpp"
#include "avecond/vertices.hpp"

namespace avecond {

AveProblem::AveProblem(Matrix a, Vector rhs) : A(std::move(a)), b(std::move(rhs)) {
  if (!A.is_square() || A.rows() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "AVE needs square A with matching b");
  }
}

const AveSolution& AveSolutionSet::unique() const {
  if (solutions.empty()) throw Error(ErrorCode::NoSolution, "no sign pattern is consistent");
  if (solutions.size() > 1) {
    throw Error(ErrorCode::MultipleSolutions, std::to_string(solutions.size()) + " solutions");
  }
  return solutions.front();
}

Vector residual(const AveProblem& p, std::span<const double> x) {
  Vector r = p.A * x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - p.b[i] - std::fabs(x[i]);
  return r;
}

AveSolutionSet solve_exact(const AveProblem& p, const Settings& s) {
  const std::size_t n = p.size();
  if (n > s.max_enum_dim) {
    throw Error(ErrorCode::DimensionTooLarge, "sign enumeration; n = " + std::to_string(n));
  }

  struct Branches {
    std::vector<Vector> roots;  // in mask order
    std::size_t singular = 0;
  };
  const double norm_a = induced_norm(p.A, NormSpec::inf());

  Branches all = reduce_vertices(
      n, s.threads, Branches{},
      [&](std::uint64_t mask) {
        Branches out;
        const Vector sgn = sign_vertex(n, mask);
        const Matrix m = minus_diag(p.A, sgn);
        const double floor = s.singular_pivot * std::max(norm_a, induced_norm(m, NormSpec::inf()));
        auto lu = LuFactorization::factor(m, floor);
        if (!lu) {
          out.singular = 1;
          return out;
        }
        Vector x = lu->solve(p.b);
        for (std::size_t i = 0; i < n; ++i) {
          if (sgn[i] * x[i] < -s.sign_consistency) return out;
        }
        out.roots.push_back(std::move(x));
        return out;
      },
      [](Branches lhs, Branches rhs) {
        lhs.singular += rhs.singular;
        for (auto& r : rhs.roots) lhs.roots.push_back(std::move(r));
        return lhs;
      });

  AveSolutionSet set;
  set.singular_branches = all.singular;
  for (auto& x : all.roots) {
    bool duplicate = false;
    for (const auto& sol : set.solutions) {
      if (max_abs_diff(sol.x_star, x) < s.dedup) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    AveSolution sol;
    sol.sign_vector.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      sol.sign_vector[i] = std::fabs(x[i]) <= s.sign_consistency ? 0.0 : (x[i] > 0 ? 1.0 : -1.0);
    }
    sol.residual_norm_inf = max_abs(residual(p, x));
    sol.x_star = std::move(x);
    set.solutions.push_back(std::move(sol));
  }
  return set;
}

bool concave_feasible(const AveProblem& p, std::span<const double> x, const Settings& s) {
  const Vector ax = p.A * x;
  for (std::size_t i = 0; i < ax.size(); ++i) {
    if (ax[i] + x[i] - p.b[i] < -s.feasibility_slack) return false;
    if (ax[i] - x[i] - p.b[i] < -s.feasibility_slack) return false;
  }
  return true;
}

Vector picard_iterate(const AveProblem& p, std::span<const double> x0, int max_iter,
                      const Settings& s) {
  if (x0.size() != p.size()) throw Error(ErrorCode::DimensionMismatch, "picard_iterate");
  const double floor = s.singular_pivot * induced_norm(p.A, NormSpec::inf());
  auto lu = LuFactorization::factor(p.A, floor);
  if (!lu) throw Error(ErrorCode::SingularMatrix, "picard_iterate needs nonsingular A");
  Vector x(x0.begin(), x0.end());
  for (int k = 0; k < max_iter; ++k) {
    Vector rhs = abs(x);
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += p.b[i];
    Vector next = lu->solve(rhs);
    const double step = max_abs_diff(next, x);
    x = std::move(next);
    if (step < s.picard_step) break;
  }
  return x;
}

}  // namespace avecond
