#include "avecond_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include <CLI11.hpp>

#include "avecond/ave.hpp"
#include "avecond/classify.hpp"
#include "avecond/condnum.hpp"
#include "avecond/error.hpp"
#include "avecond/errorbound.hpp"
#include "avecond/io.hpp"
#include "avecond/lcp.hpp"
#include "avecond/regularity.hpp"
#include "report.hpp"
#include "selftest.hpp"
#include "sha256.hpp"

namespace avecond::cli {

namespace {

namespace fs = std::filesystem;

std::string_view command_name(Command c) {
  switch (c) {
    case Command::Condnum: return "condnum";
    case Command::Certify: return "certify";
    case Command::Regularity: return "regularity";
    case Command::Solve: return "solve";
    case Command::Lcp: return "lcp";
    case Command::Selftest: return "selftest";
  }
  return "?";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotApplicable:
    case ErrorCode::NotRegular:
    case ErrorCode::NoSolution:
    case ErrorCode::MultipleSolutions:
    case ErrorCode::OneIsEigenvalue:
    case ErrorCode::NotPMatrix:
      return kExitInapplicable;
    default:
      return kExitError;
  }
}

// Reads input files once, recording a checksum entry per file.
class InputLoader {
 public:
  explicit InputLoader(Json& sink) : sink_(sink) {}

  Matrix matrix(const fs::path& path, std::string_view role) {
    return parse_matrix(load(path, role));
  }
  Vector vector(const fs::path& path, std::string_view role) {
    return parse_vector(load(path, role));
  }

 private:
  std::string load(const fs::path& path, std::string_view role) {
    std::string text = read_file(path);
    Json entry;
    entry["role"] = std::string(role);
    entry["path"] = path.string();
    entry["sha256"] = sha256_hex(text);
    sink_.push_back(std::move(entry));
    return text;
  }

  Json& sink_;
};

std::optional<NormKind> parse_norm_kind(std::string_view text) {
  if (text == "one" || text == "1") return NormKind::One;
  if (text == "two" || text == "2") return NormKind::Two;
  if (text == "inf" || text == "infinity") return NormKind::Inf;
  return std::nullopt;
}

NormSpec parse_norm(const std::string& text, InputLoader& loader) {
  if (auto p = parse_norm_kind(text)) return NormSpec{*p, std::nullopt};
  constexpr std::string_view prefix = "scaled:";
  if (text.rfind(prefix, 0) != 0) {
    throw Error(ErrorCode::InvalidArgument, "unknown norm '" + text + "'");
  }
  std::string rest = text.substr(prefix.size());
  NormKind p = NormKind::Inf;
  if (const auto colon = rest.find(':'); colon != std::string::npos) {
    if (auto kind = parse_norm_kind(std::string_view(rest).substr(0, colon))) {
      p = *kind;
      rest = rest.substr(colon + 1);
    }
  }
  if (rest.empty()) throw Error(ErrorCode::InvalidArgument, "scaled norm needs a weight file");
  return NormSpec::scaled(p, loader.vector(rest, "norm_weights"));
}

CondResult guarded(BoundMethod method, const NormSpec& ns, const auto& compute) {
  try {
    return compute();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularMatrix && e.code() != ErrorCode::NoConvergence &&
        e.code() != ErrorCode::NotApplicable) {
      throw;
    }
    CondResult r;
    r.method = method;
    r.norm = ns;
    r.reason = e.what();
    return r;
  }
}

// Closed forms and bounds for the requested norm, in the fixed order used by
// "auto": class formulas, Neumann series, sigma_min.
std::vector<CondResult> closed_form_candidates(const Matrix& a, const NormSpec& ns,
                                               const Settings& s) {
  std::vector<CondResult> out;
  auto add = [&](BoundMethod m, const auto& f) { out.push_back(guarded(m, ns, f)); };
  if (!ns.is_scaled()) {
    switch (ns.p) {
      case NormKind::Two:
        add(BoundMethod::Symmetric2, [&] { return cond_symmetric2(a, s); });
        add(BoundMethod::DiagDom2, [&] { return cond_diagdom2(a, std::nullopt, s); });
        add(BoundMethod::DiagDom2, [&] { return cond_diagdom2_bound(a, s); });
        break;
      case NormKind::Inf:
        add(BoundMethod::InvNonnegInf, [&] { return cond_inv_nonneg_inf(a, s); });
        add(BoundMethod::HmatrixInf, [&] { return cond_hmatrix_inf(a, s); });
        add(BoundMethod::EnclosureInf, [&] { return cond_enclosure_inf(a, s); });
        add(BoundMethod::RowDiagDomInf, [&] { return cond_row_dd_inf(a, s); });
        break;
      case NormKind::One:
        add(BoundMethod::ColDiagDom1, [&] { return cond_col_dd_one(a, s); });
        break;
    }
  }
  add(BoundMethod::NeumannMonotone, [&] { return cond_neumann_upper(a, ns, s); });
  if (ns == NormSpec::two()) {
    add(BoundMethod::SigmaMin2, [&] { return cond_sigma_upper(a, s); });
  }
  return out;
}

struct CondSelection {
  CondResult chosen;
  Json candidates = Json::array();
};

// Enumeration when n <= threshold; otherwise the first exact closed form, then
// the smallest applicable upper bound.
CondSelection select_auto(const Matrix& a, const NormSpec& ns, const Settings& s,
                          std::size_t threshold) {
  CondSelection sel;
  const std::vector<CondResult> cands = closed_form_candidates(a, ns, s);
  for (const auto& c : cands) sel.candidates.push_back(to_json(c));

  if (a.rows() <= std::min(threshold, s.max_enum_dim)) {
    sel.chosen = cond_exact(a, ns, s);
    sel.candidates.push_back(to_json(sel.chosen));
    return sel;
  }
  const CondResult* best = nullptr;
  for (const auto& c : cands) {
    // The DiagDom2 vertex value can fall below c_2(A), so only its
    // 1/(alpha - 1) companion takes part in the selection.
    if (c.kind == CondKind::Exact && c.method == BoundMethod::DiagDom2) continue;
    if (c.kind == CondKind::Exact) {
      best = &c;
      break;
    }
    if (c.kind == CondKind::UpperBound && (!best || c.value < best->value)) best = &c;
  }
  if (best) {
    sel.chosen = *best;
  } else {
    sel.chosen.method = BoundMethod::VertexEnum;
    sel.chosen.norm = ns;
    sel.chosen.reason = "no closed form applies and n exceeds the enumeration threshold";
  }
  return sel;
}

CondResult require_norm(CondResult r, const NormSpec& ns) {
  if (r.applicable() && !(r.norm == ns)) {
    r.kind = CondKind::NotApplicable;
    r.reason = "method computes the " + to_string(r.norm) + " condition number, not " +
               to_string(ns);
    r.witness_d.reset();
  }
  return r;
}

CondSelection select_method(const RunConfig& cfg, const Matrix& a, const NormSpec& ns,
                            const Settings& s, InputLoader& loader) {
  if (cfg.method == "auto") return select_auto(a, ns, s, cfg.enum_threshold);
  if (cfg.method == "exact") return {cond_exact(a, ns, s), Json::array()};

  const auto method = parse_bound_method(cfg.method);
  if (!method) throw Error(ErrorCode::InvalidArgument, "unknown method '" + cfg.method + "'");
  CondSelection sel;
  auto pick = [&](BoundMethod m, const auto& f) { sel.chosen = guarded(m, ns, f); };
  switch (*method) {
    case BoundMethod::VertexEnum: sel.chosen = cond_exact(a, ns, s); break;
    case BoundMethod::Symmetric2: pick(*method, [&] { return cond_symmetric2(a, s); }); break;
    case BoundMethod::DiagDom2: pick(*method, [&] { return cond_diagdom2(a, std::nullopt, s); }); break;
    case BoundMethod::InvNonnegInf:
    case BoundMethod::MmatrixInf: pick(*method, [&] { return cond_inv_nonneg_inf(a, s); }); break;
    case BoundMethod::HmatrixInf: pick(*method, [&] { return cond_hmatrix_inf(a, s); }); break;
    case BoundMethod::NeumannMonotone:
      pick(*method, [&] { return cond_neumann_upper(a, ns, s); });
      break;
    case BoundMethod::SigmaMin2: pick(*method, [&] { return cond_sigma_upper(a, s); }); break;
    case BoundMethod::EnclosureInf: pick(*method, [&] { return cond_enclosure_inf(a, s); }); break;
    case BoundMethod::RowDiagDomInf: pick(*method, [&] { return cond_row_dd_inf(a, s); }); break;
    case BoundMethod::ColDiagDom1: pick(*method, [&] { return cond_col_dd_one(a, s); }); break;
    case BoundMethod::ScaledInfDiagDom: {
      if (!cfg.r_path) throw Error(ErrorCode::InvalidArgument, "ScaledInfDiagDom needs --r");
      const Vector r = loader.vector(*cfg.r_path, "r");
      // The method defines its own norm ||diag(r)^{-1} x||_inf.
      return {cond_scaled_dd(a, r, s), Json::array()};
    }
    case BoundMethod::ScaledOneNormGamma:
      if (!cfg.gamma) throw Error(ErrorCode::InvalidArgument, "ScaledOneNormGamma needs --gamma");
      // The method defines its own norm v^T |x|.
      pick(*method, [&] { return cond_scaled1_gamma(a, *cfg.gamma, s); });
      return sel;
    case BoundMethod::Relative: {
      CondSelection base = select_auto(a, ns, s, cfg.enum_threshold);
      if (!base.chosen.applicable()) return base;
      base.chosen = cond_relative(a, ns, base.chosen, s);
      return base;
    }
    case BoundMethod::LcpMmatrix:
    case BoundMethod::LcpHmatrix:
      throw Error(ErrorCode::InvalidArgument, cfg.method + " is reported by the lcp command");
  }
  sel.chosen = require_norm(std::move(sel.chosen), ns);
  return sel;
}

void expect_inputs(const RunConfig& cfg, std::size_t count, const char* usage) {
  if (cfg.inputs.size() != count) {
    throw Error(ErrorCode::InvalidArgument, std::string("usage: ") + usage);
  }
}

void merge(Json& report, const Json& fields) {
  for (const auto& [key, value] : fields.items()) report[key] = value;
}

void put_cond(Json& report, const CondResult& r) {
  merge(report, to_json(r));
}

int cmd_condnum(const RunConfig& cfg, const Settings& s, Json& report, InputLoader& loader) {
  expect_inputs(cfg, 1, "condnum [options] A.txt");
  const Matrix a = loader.matrix(cfg.inputs[0], "A");
  const NormSpec ns = parse_norm(cfg.norm, loader);
  report["n"] = a.rows();
  CondSelection sel = select_method(cfg, a, ns, s, loader);
  put_cond(report, sel.chosen);
  report["candidates"] = std::move(sel.candidates);
  return sel.chosen.applicable() ? kExitOk : kExitInapplicable;
}

int cmd_certify(const RunConfig& cfg, const Settings& s, Json& report, InputLoader& loader,
                int samples) {
  expect_inputs(cfg, 3, "certify [options] A.txt b.txt x.txt");
  Matrix a = loader.matrix(cfg.inputs[0], "A");
  const AveProblem p(std::move(a), loader.vector(cfg.inputs[1], "b"));
  const Vector x = loader.vector(cfg.inputs[2], "x");
  const NormSpec ns = parse_norm(cfg.norm, loader);
  report["n"] = p.size();
  const CondSelection sel = select_method(cfg, p.A, ns, s, loader);
  if (!sel.chosen.applicable()) {
    report["cond_used"] = to_json(sel.chosen);
    return kExitInapplicable;
  }
  // Scaled-norm methods certify in the norm they construct.
  const CertReport cert = certify_abs(p, x, sel.chosen.norm, sel.chosen, s);
  merge(report, to_json(cert));
  if (samples > 0) {
    const WeakSharpReport ws = weak_sharp_check(p, samples, cfg.seed, s);
    Json j;
    j["all_passed"] = ws.all_passed;
    j["drawn"] = ws.drawn;
    j["feasible_tested"] = ws.feasible_tested;
    j["worst_margin"] = ws.worst_margin;
    j["seed"] = cfg.seed;
    report["weak_sharp"] = std::move(j);
    if (!ws.all_passed) return kExitError;
  }
  return kExitOk;
}

int cmd_regularity(const RunConfig& cfg, const Settings& s, Json& report, InputLoader& loader) {
  expect_inputs(cfg, 1, "regularity [options] A.txt");
  const Matrix a = loader.matrix(cfg.inputs[0], "A");
  report["n"] = a.rows();
  RegularityReport r;
  if (cfg.method == "exact") {
    r = regularity_exact(a, s);
  } else if (cfg.method == "sufficient") {
    r = regularity_sufficient(a, s);
  } else if (cfg.method == "symmetric") {
    r = regularity_symmetric(a, s);
  } else if (cfg.method == "auto") {
    if (is_symmetric(a, s)) {
      r = regularity_symmetric(a, s);
    } else if (a.rows() <= std::min(cfg.enum_threshold, s.max_enum_dim)) {
      r = regularity_exact(a, s);
    } else {
      r = regularity_sufficient(a, s);
    }
  } else {
    throw Error(ErrorCode::InvalidArgument,
                "regularity method must be auto, exact, sufficient or symmetric");
  }
  merge(report, to_json(r));
  return r.verdict == Verdict::NotRegular ? kExitInapplicable : kExitOk;
}

Json solutions_json(const AveSolutionSet& set) {
  Json arr = Json::array();
  for (const auto& sol : set.solutions) {
    Json j;
    j["x"] = to_json(sol.x_star);
    j["sign_vector"] = to_json(sol.sign_vector);
    j["residual_norm_inf"] = sol.residual_norm_inf;
    arr.push_back(std::move(j));
  }
  return arr;
}

int cmd_solve(const RunConfig& cfg, const Settings& s, Json& report, InputLoader& loader) {
  expect_inputs(cfg, 2, "solve [options] A.txt b.txt");
  Matrix a = loader.matrix(cfg.inputs[0], "A");
  const AveProblem p(std::move(a), loader.vector(cfg.inputs[1], "b"));
  report["n"] = p.size();
  const AveSolutionSet set = solve_exact(p, s);
  report["solution_count"] = set.solutions.size();
  report["singular_branches"] = set.singular_branches;
  report["solutions"] = solutions_json(set);
  return set.solutions.size() == 1 ? kExitOk : kExitInapplicable;
}

int cmd_lcp(const RunConfig& cfg, const Settings& s, Json& report, InputLoader& loader) {
  expect_inputs(cfg, 2, "lcp [options] M.txt q.txt");
  Matrix m = loader.matrix(cfg.inputs[0], "M");
  const LcpProblem lp(std::move(m), loader.vector(cfg.inputs[1], "q"));
  const NormSpec ns = parse_norm(cfg.norm, loader);
  const std::size_t n = lp.size();
  report["n"] = n;

  const AveProblem ave = lcp_to_ave(lp, s);
  report["A"] = to_json(ave.A);
  report["b"] = to_json(ave.b);

  if (n <= s.max_pmatrix_dim) {
    const MatrixClass cls = classify(lp.M, s);
    Json j;
    j["is_symmetric"] = cls.is_symmetric;
    j["is_M_matrix"] = cls.is_M_matrix;
    j["is_H_matrix"] = cls.is_H_matrix;
    j["is_P_matrix"] = cls.is_P_matrix;
    j["is_inverse_nonnegative"] = cls.is_inverse_nonnegative;
    report["classification"] = std::move(j);
  }

  Json cond = Json::array();
  cond.push_back(to_json(lcp_cond_M_matrix(lp, ns, s)));
  cond.push_back(to_json(lcp_cond_H_matrix(lp, ns, s)));
  report["transform_cond"] = std::move(cond);

  const bool small = n <= std::min({cfg.enum_threshold, s.max_enum_dim, s.max_pmatrix_dim});
  if (small && is_p_matrix(lp.M, s)) {
    const ChenXiang cx = chen_xiang_constant(lp, ns, s);
    Json j;
    j["value"] = cx.value;
    j["value_via_ave"] = cx.value_via_ave;
    j["argmax_D"] = to_json(cx.argmax_D);
    report["chen_xiang"] = std::move(j);
  }

  if (n > std::min(cfg.enum_threshold, s.max_enum_dim)) return kExitOk;
  const AveSolutionSet set = solve_exact(ave, s);
  Json sols = Json::array();
  for (const auto& sol : set.solutions) {
    const LcpSolution z = ave_to_lcp_solution(sol.x_star);
    Json j;
    j["x"] = to_json(sol.x_star);
    j["z"] = to_json(z.z);
    j["w"] = to_json(z.w);
    j["complementarity_gap"] = z.complementarity_gap;
    j["natural_residual_inf"] = max_abs(natural_residual(lp, z.z));
    sols.push_back(std::move(j));
  }
  report["solution_count"] = set.solutions.size();
  report["solutions"] = std::move(sols);
  return set.solutions.size() == 1 ? kExitOk : kExitInapplicable;
}

int cmd_selftest(const Settings& s, Json& report) {
  Json checks = Json::array();
  bool all = true;
  for (const SelfCheck& c : run_selftest(s)) {
    Json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["observed"] = c.observed;
    j["expected"] = c.expected;
    j["relation"] = c.relation;
    j["tolerance"] = c.tolerance;
    checks.push_back(std::move(j));
    all = all && c.passed;
  }
  report["checks"] = std::move(checks);
  report["passed"] = all;
  return all ? kExitOk : kExitError;
}

void emit(const RunConfig& cfg, const Json& report, std::ostream& out) {
  if (cfg.format == Format::Json) {
    out << report.dump(2) << '\n';
  } else {
    out << render_text(report);
  }
}

int dispatch(const RunConfig& cfg, int samples, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Json report;
  report["schema_version"] = kSchemaVersion;
  report["command"] = std::string(command_name(cfg.command));
  report["inputs"] = Json::array();
  Json inputs = Json::array();
  InputLoader loader(inputs);
  int code = kExitError;
  try {
    const Settings s = make_settings(cfg);
    switch (cfg.command) {
      case Command::Condnum: code = cmd_condnum(cfg, s, report, loader); break;
      case Command::Certify: code = cmd_certify(cfg, s, report, loader, samples); break;
      case Command::Regularity: code = cmd_regularity(cfg, s, report, loader); break;
      case Command::Solve: code = cmd_solve(cfg, s, report, loader); break;
      case Command::Lcp: code = cmd_lcp(cfg, s, report, loader); break;
      case Command::Selftest: code = cmd_selftest(s, report); break;
    }
  } catch (const Error& e) {
    code = exit_code_for(e.code());
    Json j;
    j["code"] = std::string(to_string(e.code()));
    j["message"] = e.what();
    report["error"] = std::move(j);
    err << "avecond: " << e.what() << '\n';
  } catch (const std::exception& e) {
    code = kExitError;
    report["error"] = Json{{"code", "Internal"}, {"message", e.what()}};
    err << "avecond: " << e.what() << '\n';
  }
  report["inputs"] = std::move(inputs);
  if (cfg.timing) {
    const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start;
    report["wall_time_ms"] = dt.count();
  }
  report["exit_code"] = code;
  emit(cfg, report, out);
  return code;
}

}  // namespace

Settings make_settings(const RunConfig& cfg) {
  Settings s;
  s.threads = std::max(1U, cfg.threads);
  static const std::vector<std::pair<std::string_view, double Settings::*>> kReal{
      {"singular_pivot", &Settings::singular_pivot},
      {"det_zero", &Settings::det_zero},
      {"nonneg_slack", &Settings::nonneg_slack},
      {"minor_positive", &Settings::minor_positive},
      {"symmetry", &Settings::symmetry},
      {"strict_margin", &Settings::strict_margin},
      {"perron_tol", &Settings::perron_tol},
      {"jacobi_tol", &Settings::jacobi_tol},
      {"sign_consistency", &Settings::sign_consistency},
      {"dedup", &Settings::dedup},
      {"feasibility_slack", &Settings::feasibility_slack},
      {"picard_step", &Settings::picard_step},
      {"bisection_tol", &Settings::bisection_tol},
      {"identity_rel", &Settings::identity_rel},
  };
  for (const auto& [name, value] : cfg.tolerances) {
    if (!(value >= 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be >= 0: " + name);
    const auto it = std::find_if(kReal.begin(), kReal.end(),
                                 [&](const auto& entry) { return entry.first == name; });
    if (it != kReal.end()) {
      s.*(it->second) = value;
    } else if (name == "perron_max_iter") {
      s.perron_max_iter = static_cast<int>(value);
    } else if (name == "jacobi_max_sweeps") {
      s.jacobi_max_sweeps = static_cast<int>(value);
    } else if (name == "max_enum_dim") {
      s.max_enum_dim = static_cast<std::size_t>(value);
    } else if (name == "max_pmatrix_dim") {
      s.max_pmatrix_dim = static_cast<std::size_t>(value);
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown tolerance '" + name + "'");
    }
  }
  return s;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return dispatch(cfg, 0, out, err);
}

int run_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Condition numbers, error certificates and LCP transforms for Ax - b = |x|",
               "avecond"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "json";
  std::vector<std::string> tol_pairs;
  std::string r_path;
  double gamma = 0.0;
  int samples = 0;

  app.add_option("--norm", cfg.norm, "one | two | inf | scaled:<file> | scaled:<p>:<file>")
      ->capture_default_str();
  app.add_option("--method", cfg.method, "auto | exact | <BoundMethod>; regularity: auto | exact | sufficient | symmetric")
      ->capture_default_str();
  app.add_option("--format", format, "json | text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for sampling checks")->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker threads for vertex enumeration")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--enum-threshold", cfg.enum_threshold,
                 "Largest n for which auto enumerates all 2^n vertices")
      ->capture_default_str();
  auto* gamma_opt = app.add_option("--gamma", gamma, "gamma in (0,1) for ScaledOneNormGamma");
  auto* r_opt = app.add_option("--r", r_path, "Weight vector file for ScaledInfDiagDom");
  app.add_option("--tol", tol_pairs, "Override a tolerance, name=value (repeatable)");
  app.add_flag("--timing", cfg.timing, "Add wall_time_ms to the report");

  struct Sub {
    Command command;
    const char* name;
    const char* help;
    std::size_t inputs;
  };
  const Sub subs[] = {
      {Command::Condnum, "condnum", "Condition number c(A) of A", 1},
      {Command::Certify, "certify", "Certified error bound for a candidate x (A b x)", 3},
      {Command::Regularity, "regularity", "Regularity of [A - I, A + I]", 1},
      {Command::Solve, "solve", "All solutions by sign enumeration (A b)", 2},
      {Command::Lcp, "lcp", "LCP to AVE transform and its condition numbers (M q)", 2},
      {Command::Selftest, "selftest", "Regression checks on the worked examples", 0},
  };
  std::vector<std::string> files;
  for (const Sub& sub : subs) {
    CLI::App* cmd = app.add_subcommand(sub.name, sub.help);
    if (sub.inputs > 0) {
      cmd->add_option("inputs", files, "Input files")
          ->required()
          ->expected(static_cast<int>(sub.inputs));
    }
    if (sub.command == Command::Certify) {
      cmd->add_option("--samples", samples, "Run the weak-sharp-minimum sampling check");
    }
    cmd->callback([&cfg, c = sub.command] { cfg.command = c; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  cfg.format = format == "text" ? Format::Text : Format::Json;
  for (const auto& f : files) cfg.inputs.emplace_back(f);
  if (gamma_opt->count()) cfg.gamma = gamma;
  if (r_opt->count()) cfg.r_path = r_path;
  for (const auto& pair : tol_pairs) {
    const auto eq = pair.find('=');
    if (eq == std::string::npos) {
      err << "avecond: --tol expects name=value, got '" << pair << "'\n";
      return kExitError;
    }
    try {
      cfg.tolerances.emplace_back(pair.substr(0, eq), std::stod(pair.substr(eq + 1)));
    } catch (const std::exception&) {
      err << "avecond: bad --tol value in '" << pair << "'\n";
      return kExitError;
    }
  }
  return dispatch(cfg, samples, out, err);
}

}  // namespace avecond::cli
