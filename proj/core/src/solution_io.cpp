#include "circlefol/solution_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "circlefol/errors.hpp"

namespace circlefol {

namespace {

using nlohmann::json;

json coeffs_to_json(const PeriodicFunction& f) {
  json arr = json::array();
  for (const auto& c : f.coefficients()) arr.push_back({c.real(), c.imag()});
  return arr;
}

PeriodicFunction coeffs_from_json(const json& arr) {
  std::vector<std::complex<double>> c;
  c.reserve(arr.size());
  for (const auto& kv : arr) c.emplace_back(kv.at(0).get<double>(), kv.at(1).get<double>());
  return PeriodicFunction::from_coefficients(std::move(c));
}

json ft_to_json(const FourierTaylor& u) {
  json coeffs = json::array();
  for (int j = 0; j <= u.order(); ++j) coeffs.push_back(coeffs_to_json(u.coefficient(j)));
  return json{{"winding", u.winding()}, {"coeffs", coeffs}};
}

FourierTaylor ft_from_json(const json& j) {
  std::vector<PeriodicFunction> coeffs;
  for (const auto& row : j.at("coeffs")) coeffs.push_back(coeffs_from_json(row));
  return FourierTaylor(std::move(coeffs), j.at("winding").get<int>());
}

double to_finite(double v) {
  // JSON has no infinity; clamp report fields for transport.
  if (std::isinf(v)) return v > 0 ? 1e308 : -1e308;
  return v;
}

json report_to_json(const ConditionReport& r) {
  return json{{"lambda_c0", r.lambda_c0},
              {"lambda_star", r.lambda_star},
              {"lambda_star_n", r.lambda_star_n},
              {"da_c0", r.da_c0},
              {"da_inv_c0", to_finite(r.da_inv_c0)},
              {"dainv_c0", r.dainv_c0},
              {"m_max", to_finite(r.m_max)},
              {"residual_x0", r.residual_x0},
              {"residual_x1", r.residual_x1},
              {"residual_x2", r.residual_x2},
              {"frame_det_min", r.frame_det_min},
              {"taylor_tail_ratio", r.taylor_tail_ratio},
              {"analyticity_radius", to_finite(r.analyticity_radius)},
              {"contraction_ok", r.contraction_ok},
              {"regularity_ok", r.regularity_ok},
              {"frame_ok", r.frame_ok},
              {"residual_small", r.residual_small},
              {"warnings", r.warnings}};
}

ConditionReport report_from_json(const json& j) {
  ConditionReport r;
  r.lambda_c0 = j.at("lambda_c0").get<double>();
  r.lambda_star = j.at("lambda_star").get<double>();
  r.lambda_star_n = j.at("lambda_star_n").get<int>();
  r.da_c0 = j.at("da_c0").get<double>();
  r.da_inv_c0 = j.at("da_inv_c0").get<double>();
  r.dainv_c0 = j.at("dainv_c0").get<double>();
  r.m_max = j.at("m_max").get<double>();
  r.residual_x0 = j.at("residual_x0").get<double>();
  r.residual_x1 = j.at("residual_x1").get<double>();
  r.residual_x2 = j.at("residual_x2").get<double>();
  r.frame_det_min = j.at("frame_det_min").get<double>();
  r.taylor_tail_ratio = j.at("taylor_tail_ratio").get<double>();
  r.analyticity_radius = j.at("analyticity_radius").get<double>();
  r.contraction_ok = j.at("contraction_ok").get<bool>();
  r.regularity_ok = j.at("regularity_ok").get<bool>();
  r.frame_ok = j.at("frame_ok").get<bool>();
  r.residual_small = j.at("residual_small").get<bool>();
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  return r;
}

}  // namespace

std::string to_json(const SolutionDocument& doc) {
  json j{{"format_version", doc.format_version},
         {"model", {{"name", doc.model_name}, {"params", doc.model_params}}},
         {"discretization",
          {{"ntheta", doc.triple.n_modes()},
           {"order", doc.triple.order()},
           {"delta", doc.triple.delta}}},
         {"W", {ft_to_json(doc.triple.W.x), ft_to_json(doc.triple.W.y)}},
         {"a", {{"periodic_coeffs", coeffs_to_json(doc.triple.a.periodic_part())}}},
         {"lambda", {{"coeffs", coeffs_to_json(doc.triple.lambda)}}},
         {"report", report_to_json(doc.report)}};
  return j.dump(2);
}

SolutionDocument solution_from_json(const std::string& text) {
  json j = json::parse(text);
  SolutionDocument doc;
  doc.format_version = j.at("format_version").get<int>();
  if (doc.format_version != 1) throw BadInput("unsupported solution format_version");
  doc.model_name = j.at("model").at("name").get<std::string>();
  doc.model_params = j.at("model").at("params").get<std::map<std::string, double>>();
  FourierTaylor wx = ft_from_json(j.at("W").at(0));
  FourierTaylor wy = ft_from_json(j.at("W").at(1));
  CircleMap a(coeffs_from_json(j.at("a").at("periodic_coeffs")));
  PeriodicFunction lambda = coeffs_from_json(j.at("lambda").at("coeffs"));
  double delta = j.at("discretization").at("delta").get<double>();
  doc.triple = ConjugacyTriple{FTPair{std::move(wx), std::move(wy)}, a, lambda, delta};
  doc.report = report_from_json(j.at("report"));
  return doc;
}

void save_solution(const SolutionDocument& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw BadInput("cannot open for writing: " + path);
  out << to_json(doc) << "\n";
}

SolutionDocument load_solution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return solution_from_json(ss.str());
}

std::string periodic_to_json(const PeriodicFunction& f, const std::string& key) {
  json j{{key, coeffs_to_json(f)}};
  return j.dump(2);
}

PeriodicFunction periodic_from_json_file(const std::string& path, const std::string& key) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open: " + path);
  json j = json::parse(in);
  return coeffs_from_json(j.at(key));
}

}  // namespace circlefol
