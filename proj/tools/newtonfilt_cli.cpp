// newtonfilt: Newton diagrams, Newton filtrations and Poincaré coefficients.
// Talks to the engine only through the C interface.
#include <newtonfilt/newtonfilt.h>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;

struct ProblemHandle {
  nf_problem* ptr = nullptr;
  ~ProblemHandle() { nf_problem_free(ptr); }
};

struct CliError {
  std::string message;
};

void check(nf_status status) {
  if (status != NF_OK) throw CliError{std::string(nf_status_name(status)) + ": " + nf_last_error()};
}

json take_json(char* text) {
  std::unique_ptr<char, decltype(&nf_string_free)> owned(text, nf_string_free);
  return json::parse(owned.get());
}

std::vector<int64_t> parse_tuple(const std::string& text) {
  std::vector<int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CliError{"input error: '" + text + "' is not a comma-separated integer tuple"};
    }
  }
  if (out.empty()) throw CliError{"input error: empty tuple"};
  return out;
}

// A file holding a JSON array of tuples, a JSON array inline, or "a,b;c,d".
std::vector<std::vector<int64_t>> parse_targets(const std::string& spec) {
  std::string text = spec;
  if (std::filesystem::is_regular_file(spec)) {
    std::ifstream in(spec);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    try {
      return json::parse(text).get<std::vector<std::vector<int64_t>>>();
    } catch (const json::exception& e) {
      throw CliError{std::string("input error: targets: ") + e.what()};
    }
  }
  std::vector<std::vector<int64_t>> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (item.find_first_not_of(" \t\r\n") != std::string::npos) out.push_back(parse_tuple(item));
  }
  return out;
}

std::string tuple_text(const json& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += values[i].dump();
  }
  return out + ")";
}

std::string form_text(const json& row) {
  std::string out = "(";
  for (std::size_t i = 0; i + 1 < row.size(); ++i) {
    if (i) out += ',';
    out += row[i].dump();
  }
  return out + "|" + row.back().dump() + ")";
}

nf_method parse_method(const std::string& text) {
  if (text == "A" || text == "a") return NF_METHOD_A;
  if (text == "B" || text == "b") return NF_METHOD_B;
  if (text == "both") return NF_METHOD_BOTH;
  throw CliError{"input error: --method expects A, B or both"};
}

void print_diagram(const json& r, const std::vector<std::string>& names) {
  std::printf("facets (s = %zu):\n", r["facets"].size());
  for (std::size_t i = 0; i < r["facets"].size(); ++i) {
    std::printf("  %2zu  %s\n", i + 1, form_text(r["facets"][i]).c_str());
  }
  std::printf("vertices:");
  for (const auto& k : r["vertices"]) std::printf(" %s", tuple_text(k).c_str());
  std::printf("\nstellar vertex: %s\n",
              r["stellar_vertex"].is_null() ? "not stellar" : tuple_text(r["stellar_vertex"]).c_str());
  for (std::size_t j = 0; j < r["u_of_variables"].size(); ++j) {
    std::printf("u(%s) = %s\n", names[j].c_str(), tuple_text(r["u_of_variables"][j]).c_str());
  }
  std::printf("u(f) = %s\n", tuple_text(r["u_of_f"]).c_str());
  std::printf("convenient: %s\n", r["convenient"].get<bool>() ? "yes" : "no");
  std::printf("u(f) is a non-negative integer combination of the u(x_j): %s\n",
              r["u_of_f_is_monomial_value"].get<bool>() ? "yes" : "no");
  std::printf("u(f) is a rational combination of the u(x_j): %s\n",
              r["u_of_f_in_rational_span"].get<bool>() ? "yes" : "no");
}

void print_records(const json& records, bool with_dims) {
  for (const auto& rec : records) {
    std::printf("v = %-24s coefficient = %s  [method %s]\n", tuple_text(rec["v"]).c_str(),
                rec["coefficient"].dump().c_str(), rec["method"].get<std::string>().c_str());
    if (rec.contains("discrepancy")) {
      std::printf("  A = %s, B = %s%s\n", rec["coefficient_A"].dump().c_str(),
                  rec["coefficient_B"].dump().c_str(),
                  rec["discrepancy"].get<bool>() ? "  (methods disagree)" : "");
    }
    if (!with_dims) continue;
    std::printf("  %-16s %s\n", "subset I", "dim J(v+1_I)/J(v+1)");
    // smallest subsets first
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [label, dim] : rec["dims_by_subset"].items()) rows.emplace_back(label, dim.dump());
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
      auto size = [](const std::string& l) { return l == "{}" ? 0 : std::count(l.begin(), l.end(), ',') + 1; };
      return size(a.first) < size(b.first);
    });
    for (const auto& [label, dim] : rows) std::printf("  %-16s %s\n", label.c_str(), dim.c_str());
    std::printf("  boundary points: %s, relation rank: %s\n", rec["boundary_count"].dump().c_str(),
                rec["relation_rank"].dump().c_str());
  }
}

std::vector<std::string> variable_names(const json& diagram) {
  return diagram["problem"]["variables"].get<std::vector<std::string>>();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton diagrams, Newton filtrations and Poincaré series coefficients"};
  app.require_subcommand(1);

  std::string file, v_text, targets_text, box_text, method_text, claim_text, germ_text;
  std::string corpus = NEWTONFILT_DEFAULT_CORPUS;
  bool as_json = false, force = false, all = false;
  int64_t truncation = 0, bound = 4, margin = 2, budget = -1;
  std::size_t facet = 1;
  unsigned threads = 1;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("problem", file, "problem file (JSON)")->required()->check(CLI::ExistingFile);
    cmd->add_flag("--json", as_json, "print the JSON report");
  };
  auto engine = [&](CLI::App* cmd) {
    cmd->add_option("--method", method_text, "A, B or both (default: problem file, else B)");
    cmd->add_option("--truncation", truncation, "method-A truncation degree (default: safe level)");
    cmd->add_flag("--force", force, "lift the method-A size guard");
    cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* diagram = app.add_subcommand("diagram", "facets, stellar vertex, u(x_j), u(f)");
  common(diagram);
  auto* coeff = app.add_subcommand("coeff", "one Poincaré coefficient with its subset table");
  common(coeff);
  engine(coeff);
  coeff->add_option("--v", v_text, "v as a,b,... (default: the problem file's targets)");
  auto* series = app.add_subcommand("series", "coefficients on targets or a box");
  common(series);
  engine(series);
  series->add_option("--targets", targets_text, "file, JSON array, or a,b;c,d");
  series->add_option("--box", box_text, "upper bounds b1,...,bs of [0,b]");
  auto* verify = app.add_subcommand("verify", "check a closed form or identity");
  common(verify);
  engine(verify);
  verify->add_option("--claim", claim_text, "prop1, thm1, thm2, ps-identity or methods-agree")->required();
  verify->add_option("--targets", targets_text, "file, JSON array, or a,b;c,d");
  verify->add_option("--box", box_text, "upper bounds b1,...,bs of [0,b]");
  verify->add_option("--bound", bound, "target-set degree bound when no box or targets are given");
  verify->add_option("--margin", margin, "ps-identity padding (>= 2)");
  auto* order = app.add_subcommand("order", "u and the order value of a germ on one facet");
  common(order);
  order->add_option("--germ", germ_text, "germ text, e.g. x^5+x^2*y^2")->required();
  order->add_option("--facet", facet, "facet number, from 1")->check(CLI::PositiveNumber);
  order->add_option("--budget", budget, "search budget (default u_i(g) + 3 max d)");
  auto* examples = app.add_subcommand("examples", "run the bundled reference examples");
  examples->add_flag("--all", all, "include the slow examples");
  examples->add_option("--corpus", corpus, "corpus directory");
  examples->add_flag("--json", as_json, "print the JSON report");
  examples->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (examples->parsed()) {
      char* text = nullptr;
      int green = 0;
      check(nf_report_examples(corpus.c_str(), all, threads, &text, &green));
      json r = take_json(text);
      if (as_json) {
        std::cout << r.dump(2) << "\n";
      } else {
        for (const auto& row : r["examples"]) {
          std::printf("%s  %-62s expected %s, computed %s\n", row["pass"].get<bool>() ? "PASS" : "FAIL",
                      row["name"].get<std::string>().c_str(), row["expected"].dump().c_str(),
                      row.contains("error") ? row["error"].get<std::string>().c_str()
                                            : row["computed"].dump().c_str());
        }
        std::printf("%s\n", green ? "all green" : "some examples failed");
      }
      return green ? kOk : kMismatch;
    }

    ProblemHandle problem;
    check(nf_problem_load(file.c_str(), &problem.ptr));
    const std::size_t s = nf_problem_num_facets(problem.ptr);
    char* text = nullptr;
    check(nf_report_diagram(problem.ptr, &text));
    const json header = take_json(text);
    const auto names = variable_names(header);

    nf_options options = nf_default_options();
    options.method = method_text.empty() ? nf_problem_method(problem.ptr, NF_METHOD_B)
                                         : parse_method(method_text);
    options.threads = threads;
    options.truncation = truncation;
    options.force = force;

    auto flatten = [&](const std::vector<std::vector<int64_t>>& tuples) {
      std::vector<int64_t> flat;
      for (const auto& t : tuples) {
        if (t.size() != s) {
          throw CliError{"input error: expected " + std::to_string(s) + " entries per tuple, got " +
                         std::to_string(t.size())};
        }
        flat.insert(flat.end(), t.begin(), t.end());
      }
      return flat;
    };
    auto file_targets = [&] {
      std::vector<std::vector<int64_t>> out;
      for (std::size_t i = 0; i < nf_problem_target_count(problem.ptr); ++i) {
        std::vector<int64_t> v(s);
        check(nf_problem_target(problem.ptr, i, v.data()));
        out.push_back(v);
      }
      return out;
    };
    std::vector<int64_t> box;
    if (!box_text.empty()) box = flatten({parse_tuple(box_text)});

    if (diagram->parsed()) {
      if (as_json) {
        std::cout << header.dump(2) << "\n";
      } else {
        print_diagram(header, names);
      }
      return kOk;
    }

    if (coeff->parsed()) {
      auto tuples = v_text.empty() ? file_targets() : std::vector<std::vector<int64_t>>{parse_tuple(v_text)};
      if (tuples.empty()) throw CliError{"input error: give --v or targets in the problem file"};
      auto flat = flatten(tuples);
      check(nf_report_coefficients(problem.ptr, flat.data(), tuples.size(), &options, &text));
      json r = take_json(text);
      if (as_json) {
        std::cout << r.dump(2) << "\n";
      } else {
        print_records(r["records"], true);
      }
      return kOk;
    }

    if (series->parsed()) {
      std::vector<int64_t> flat;
      std::size_t count = 0;
      if (!targets_text.empty()) {
        auto tuples = parse_targets(targets_text);
        flat = flatten(tuples);
        count = tuples.size();
      } else if (box.empty()) {
        box.resize(s);
        if (!nf_problem_box(problem.ptr, box.data())) {
          auto tuples = file_targets();
          if (tuples.empty()) throw CliError{"input error: give --targets or --box"};
          flat = flatten(tuples);
          count = tuples.size();
          box.clear();
        }
      }
      check(nf_report_series(problem.ptr, flat.empty() ? nullptr : flat.data(), count,
                             flat.empty() ? box.data() : nullptr, &options, &text));
      json r = take_json(text);
      if (as_json) {
        std::cout << r.dump(2) << "\n";
      } else {
        std::printf("prediction: %s\n", r["prediction"].get<std::string>().c_str());
        print_records(r["records"], false);
      }
      return kOk;
    }

    if (verify->parsed()) {
      nf_verify_request request{claim_text.c_str(), nullptr, nullptr, 0, bound, margin};
      std::vector<int64_t> flat;
      if (!box.empty()) request.box = box.data();
      if (!targets_text.empty()) {
        auto tuples = parse_targets(targets_text);
        flat = flatten(tuples);
        request.targets = flat.data();
        request.target_count = tuples.size();
      }
      int holds = 0;
      nf_status st = nf_report_verify(problem.ptr, &request, &options, &text, &holds);
      if (st == NF_ERR_INAPPLICABLE) {
        std::fprintf(stderr, "claim %s does not apply: %s\n", claim_text.c_str(), nf_last_error());
        return kInputError;
      }
      check(st);
      json r = take_json(text);
      if (as_json) {
        std::cout << r.dump(2) << "\n";
      } else {
        std::printf("claim %s: %s  (%s checked, %zu mismatches, %.0f ms)\n", claim_text.c_str(),
                    holds ? "HOLDS" : "FAILS", r["targets_checked"].dump().c_str(),
                    r["mismatches"].size(), r["elapsed_ms"].get<double>());
        if (r.contains("kind")) std::printf("closed form: %s\n", r["kind"].get<std::string>().c_str());
        for (const auto& m : r["mismatches"]) std::printf("  mismatch %s\n", m.dump().c_str());
      }
      return holds ? kOk : kMismatch;
    }

    if (order->parsed()) {
      check(nf_report_order_value(problem.ptr, germ_text.c_str(), facet - 1, budget, &text));
      json r = take_json(text);
      if (as_json) {
        std::cout << r.dump(2) << "\n";
      } else {
        std::printf("germ %s on facet %zu %s\n", r["germ"].get<std::string>().c_str(), facet,
                    form_text(r["facet_form"]).c_str());
        std::printf("u(g) = %s\n", r["u_germ"].is_array() ? tuple_text(r["u_germ"]).c_str()
                                                          : r["u_germ"].get<std::string>().c_str());
        const json& ov = r["order_value"];
        if (ov.is_object()) {
          std::printf("order value >= %s (budget reached)\n", ov["at_least"].dump().c_str());
        } else {
          std::printf("order value = %s\n", ov.dump().c_str());
        }
      }
      return kOk;
    }
  } catch (const CliError& e) {
    std::fprintf(stderr, "%s\n", e.message.c_str());
    return kInputError;
  }
  return kOk;
}
