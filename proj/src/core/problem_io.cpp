#include "core/problem_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "core/error.hpp"
#include "core/parser.hpp"

namespace nf {

using nlohmann::json;

namespace {

Int as_int(const json& value, const std::string& field) {
  if (!value.is_number_integer()) throw InputError(field, "expected an integer");
  return value.get<Int>();
}

std::vector<Int> as_int_list(const json& value, const std::string& field) {
  if (!value.is_array()) throw InputError(field, "expected an array of integers");
  std::vector<Int> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(as_int(value[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

ProblemSpec parse_problem(const json& doc) {
  if (!doc.is_object()) throw InputError("(root)", "problem must be an object");
  static const std::set<std::string> known{"variables", "polynomial", "facets",
                                           "targets",   "box",        "options"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.count(key)) throw InputError(key, "unknown field");
  }
  ProblemSpec spec;

  if (!doc.contains("variables")) throw InputError("variables", "missing");
  const json& vars = doc.at("variables");
  if (!vars.is_array() || vars.empty()) throw InputError("variables", "expected a non-empty array");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!v.is_string()) throw InputError("variables", "names must be strings");
    auto name = v.get<std::string>();
    if (!seen.insert(name).second) throw InputError("variables", "duplicate name '" + name + "'");
    spec.variables.push_back(name);
  }

  if (!doc.contains("polynomial") || !doc.at("polynomial").is_string()) {
    throw InputError("polynomial", "expected a string");
  }
  spec.polynomial = doc.at("polynomial").get<std::string>();

  if (doc.contains("facets")) {
    const json& facets = doc.at("facets");
    if (!facets.is_array()) throw InputError("facets", "expected an array of [a_1,...,a_n,d]");
    std::vector<LinearForm> forms;
    for (std::size_t i = 0; i < facets.size(); ++i) {
      const std::string field = "facets[" + std::to_string(i) + "]";
      auto entries = as_int_list(facets[i], field);
      if (entries.size() != spec.variables.size() + 1) {
        throw InputError(field, "expected " + std::to_string(spec.variables.size() + 1) +
                                    " integers (coefficients then degree)");
      }
      Int degree = entries.back();
      entries.pop_back();
      try {
        forms.emplace_back(std::move(entries), degree);
      } catch (const InputError& e) {
        throw InputError(field, e.what());
      }
    }
    spec.facets = std::move(forms);
  }

  if (doc.contains("targets")) {
    const json& targets = doc.at("targets");
    if (!targets.is_array()) throw InputError("targets", "expected an array of multi-indices");
    std::vector<MultiIndex> out;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      out.emplace_back(as_int_list(targets[i], "targets[" + std::to_string(i) + "]"));
    }
    spec.targets = std::move(out);
  }

  if (doc.contains("box")) spec.box = MultiIndex(as_int_list(doc.at("box"), "box"));

  if (doc.contains("options")) {
    const json& opts = doc.at("options");
    if (!opts.is_object()) throw InputError("options", "expected an object");
    for (const auto& [key, value] : opts.items()) {
      if (key == "method") {
        if (!value.is_string()) throw InputError("options.method", "expected \"A\", \"B\" or \"both\"");
        spec.options.method = parse_method(value.get<std::string>());
      } else if (key == "truncation") {
        spec.options.truncation = as_int(value, "options.truncation");
      } else {
        throw InputError("options." + key, "unknown field");
      }
    }
  }
  return spec;
}

ProblemSpec parse_problem_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("(document)", std::string("malformed JSON: ") + e.what());
  }
  return parse_problem(doc);
}

ProblemSpec load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("(file)", "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem_text(buffer.str());
}

json to_json(const ProblemSpec& spec) {
  json out;
  out["variables"] = spec.variables;
  out["polynomial"] = spec.polynomial;
  if (spec.facets) {
    json facets = json::array();
    for (const auto& form : *spec.facets) {
      std::vector<Int> row(form.coefficients().begin(), form.coefficients().end());
      row.push_back(form.degree());
      facets.push_back(row);
    }
    out["facets"] = facets;
  }
  if (spec.targets) {
    json targets = json::array();
    for (const auto& v : *spec.targets) targets.push_back(v.vector());
    out["targets"] = targets;
  }
  if (spec.box) out["box"] = spec.box->vector();
  json opts = json::object();
  if (spec.options.method) opts["method"] = method_name(*spec.options.method);
  if (spec.options.truncation) opts["truncation"] = *spec.options.truncation;
  if (!opts.empty()) out["options"] = opts;
  return out;
}

Problem build_problem(ProblemSpec spec) {
  PolynomialGerm germ = parse_polynomial(spec.polynomial, spec.variables);
  if (germ.is_zero()) throw InputError("polynomial", "the defining germ is zero");
  NewtonDiagram diagram = compute_diagram(germ.support());
  FacetValidation check;
  if (spec.facets) {
    check = validate_user_facets(diagram, *spec.facets);
    if (!check.equal) {
      std::string detail;
      for (const auto& form : check.missing) detail += " missing " + form.to_string() + ";";
      for (const auto& form : check.extra) detail += " not a facet " + form.to_string() + ";";
      for (const auto& form : check.duplicated) detail += " duplicated " + form.to_string() + ";";
      throw InputError("facets", "facets do not match the Newton diagram:" + detail);
    }
    if (!spec.facets->empty()) diagram = diagram.with_facet_order(*spec.facets);
  } else {
    check.note = "no user facets supplied; nothing to check";
  }
  const std::size_t s = diagram.num_facets();
  if (spec.targets) {
    for (std::size_t i = 0; i < spec.targets->size(); ++i) {
      if ((*spec.targets)[i].size() != s) {
        throw InputError("targets[" + std::to_string(i) + "]",
                         "expected " + std::to_string(s) + " entries, one per facet");
      }
    }
  }
  if (spec.box) {
    if (spec.box->size() != s) throw InputError("box", "expected " + std::to_string(s) + " bounds");
    if (!spec.box->is_nonnegative()) throw InputError("box", "bounds must be >= 0");
  }
  ValuationProfile profile(std::move(diagram));
  return Problem{std::move(spec), std::move(germ), std::move(profile), std::move(check)};
}

std::string render_report(const json& report) { return report.dump(2) + "\n"; }

void save_report(const json& report, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("(file)", "cannot write " + path.string());
  out << render_report(report);
}

}  // namespace nf
