#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/closed_forms.hpp"
#include "core/problem_io.hpp"

namespace nf {

struct RunOptions {
  Method method = Method::B;
  unsigned threads = 1;
  MethodAOptions method_a;
};

/// "{}" or "{1,3}" (facets numbered from 1).
std::string subset_label(std::size_t mask, std::size_t s);

nlohmann::json record_json(const CoefficientRecord& rec, std::size_t s);

/// Facets, stellar vertex, u(x_j), u(f) and whether u(f) is a non-negative
/// integer (or rational) combination of the u(x_j).
nlohmann::json diagram_report(const Problem& problem);

nlohmann::json coefficients_report(const Problem& problem, const std::vector<MultiIndex>& targets,
                                   const RunOptions& options);

nlohmann::json series_report(const Problem& problem, const std::vector<MultiIndex>& targets,
                             const RunOptions& options);

enum class Claim { Prop1, Thm1, Thm2, PsIdentity, MethodsAgree };

/// "prop1", "thm1", "thm2", "ps-identity", "methods-agree".
Claim parse_claim(std::string_view text);
const char* claim_name(Claim claim);

struct VerifyRequest {
  Claim claim = Claim::Thm1;
  std::optional<MultiIndex> box;                  // v in [0, box]
  std::optional<std::vector<MultiIndex>> targets;  // explicit targets
  Int bound = 4;                                   // target_set degree bound
  Int margin = 2;                                  // ps-identity padding
};

struct VerifyOutcome {
  nlohmann::json report;
  bool holds = false;
};

/// Throws InapplicableError when the claim's hypotheses fail for the input.
VerifyOutcome verify_claim(const Problem& problem, const VerifyRequest& request,
                           const RunOptions& options);

nlohmann::json order_value_report(const Problem& problem, const std::string& germ_text,
                                  std::size_t facet, std::optional<Int> budget);

struct Scoreboard {
  nlohmann::json report;
  bool all_green = false;
};

/// Runs the bundled reference examples from `corpus`. `all` adds the slow ones.
Scoreboard examples_report(const std::filesystem::path& corpus, bool all, unsigned threads);

}  // namespace nf
