#pragma once

// Lossless JSON persistence for solutions: model identification,
// discretization metadata, the conjugacy triple and its condition report.

#include <map>
#include <string>

#include "circlefol/aposteriori.hpp"
#include "circlefol/newton.hpp"

namespace circlefol {

struct SolutionDocument {
  int format_version = 1;
  std::string model_name;
  std::map<std::string, double> model_params;
  ConjugacyTriple triple;
  ConditionReport report;
};

std::string to_json(const SolutionDocument& doc);
SolutionDocument solution_from_json(const std::string& text);

void save_solution(const SolutionDocument& doc, const std::string& path);
SolutionDocument load_solution(const std::string& path);

// Coefficient-file payloads used by the cohomology debugging command.
std::string periodic_to_json(const PeriodicFunction& f, const std::string& key = "coeffs");
PeriodicFunction periodic_from_json_file(const std::string& path, const std::string& key = "coeffs");

}  // namespace circlefol
