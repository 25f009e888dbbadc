#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/diagram.hpp"
#include "core/filtration.hpp"
#include "core/polynomial.hpp"
#include "core/valuations.hpp"

namespace nf {

struct ProblemOptions {
  std::optional<Method> method;
  std::optional<Int> truncation;
};

/// Problem file contents after schema validation.
struct ProblemSpec {
  std::vector<std::string> variables;
  std::string polynomial;
  std::optional<std::vector<LinearForm>> facets;
  std::optional<std::vector<MultiIndex>> targets;
  std::optional<MultiIndex> box;
  ProblemOptions options;
};

/// Strict schema: unknown keys are rejected. Throws InputError naming the
/// offending field.
ProblemSpec parse_problem(const nlohmann::json& document);
ProblemSpec parse_problem_text(const std::string& text);
ProblemSpec load_problem(const std::filesystem::path& path);

nlohmann::json to_json(const ProblemSpec& spec);

/// A validated problem: germ, diagram (in the user's facet order when facets
/// were supplied) and valuation profile.
struct Problem {
  ProblemSpec spec;
  PolynomialGerm germ;
  ValuationProfile profile;
  FacetValidation facet_check;
};

/// Throws ParseError for bad polynomial text and InputError for schema or
/// facet mismatches.
Problem build_problem(ProblemSpec spec);

/// Sorted keys, two-space indent, trailing newline.
std::string render_report(const nlohmann::json& report);
void save_report(const nlohmann::json& report, const std::filesystem::path& path);

}  // namespace nf
