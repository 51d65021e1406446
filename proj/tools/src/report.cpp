#include "report.hpp"

#include <cmath>

namespace avecond::cli {

namespace {

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

bool is_scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (e.is_structured()) return false;
  }
  return true;
}

void render(const Json& j, const std::string& path, std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      render(value, path.empty() ? key : path + "." + key, out);
    }
    return;
  }
  if (j.is_array() && !is_scalar_array(j)) {
    for (std::size_t i = 0; i < j.size(); ++i) render(j[i], path + "[" + std::to_string(i) + "]", out);
    return;
  }
  out += path;
  out += ": ";
  out += j.is_string() ? j.get<std::string>() : j.dump();
  out += '\n';
}

}  // namespace

Json to_json(std::span<const double> v) {
  Json arr = Json::array();
  for (double x : v) arr.push_back(number(x));
  return arr;
}

Json to_json(const Matrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(to_json(a.row(i)));
  return rows;
}

Json to_json(const NormSpec& ns) {
  Json j;
  j["p"] = to_string(ns.p);
  j["scaling"] = ns.scaling ? to_json(*ns.scaling) : Json(nullptr);
  return j;
}

Json to_json(const CondResult& r) {
  Json j;
  j["method"] = std::string(to_string(r.method));
  j["kind"] = std::string(to_string(r.kind));
  j["value"] = r.applicable() && !r.unbounded ? number(r.value) : Json(nullptr);
  j["unbounded"] = r.unbounded;
  j["norm"] = to_json(r.norm);
  j["witness"] = r.witness_d ? to_json(*r.witness_d) : Json(nullptr);
  Json params = Json::object();
  if (r.params.gamma) params["gamma"] = number(*r.params.gamma);
  if (r.params.r) params["r"] = to_json(*r.params.r);
  if (r.params.permutation) params["permutation"] = *r.params.permutation;
  if (r.params.alpha) params["alpha"] = number(*r.params.alpha);
  if (r.params.weights) params["weights"] = to_json(*r.params.weights);
  j["params"] = std::move(params);
  if (!r.applicable()) j["reason"] = r.reason;
  return j;
}

Json to_json(const RegularityReport& r) {
  Json j;
  j["verdict"] = std::string(to_string(r.verdict));
  j["method"] = std::string(to_string(r.method));
  j["statistic"] = number(r.statistic);
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return j;
}

Json to_json(const CertReport& r) {
  Json j;
  j["abs_bound"] = number(r.abs_bound);
  j["residual_norm"] = number(r.residual_norm);
  j["rel_bound_upper"] = r.rel_bound_upper ? number(*r.rel_bound_upper) : Json(nullptr);
  j["rel_bound_lower"] = r.rel_bound_lower ? number(*r.rel_bound_lower) : Json(nullptr);
  j["norm"] = to_json(r.norm);
  j["cond_used"] = to_json(r.cond_used);
  return j;
}

std::string render_text(const Json& report) {
  std::string out;
  render(report, "", out);
  return out;
}

}  // namespace avecond::cli
