#include "core/reports.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "core/error.hpp"
#include "core/parser.hpp"

namespace nf {

using nlohmann::json;

namespace {

json form_json(const LinearForm& form) {
  std::vector<Int> row(form.coefficients().begin(), form.coefficients().end());
  row.push_back(form.degree());
  return row;
}

json exponent_json(const Exponent& k) { return std::vector<Int>(k.entries().begin(), k.entries().end()); }

json factors_json(const std::vector<Factor>& factors) {
  json out = json::array();
  for (const auto& factor : factors) {
    out.push_back({{"exponent", factor.exponent.vector()}, {"sign", factor.sign}});
  }
  return out;
}

// Big integers go out as JSON numbers when they fit, strings otherwise.
json big_json(const BigInt& x) {
  if (x.fits_slong_p()) return static_cast<Int>(x.get_si());
  return x.get_str();
}

bool rational_combination(const ValuationProfile& profile) {
  RowEchelon span;
  auto as_row = [](const MultiIndex& m) {
    SparseVector row;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) row.emplace_back(i, BigInt(m[i]));
    }
    return row;
  };
  for (const auto& u : profile.u_vars()) span.insert(as_row(u));
  return span.contains(as_row(profile.u_f()));
}

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::vector<MultiIndex> pick_targets(const Problem& problem, const VerifyRequest& request) {
  if (request.targets) return *request.targets;
  if (request.box) return box_targets(*request.box);
  if (problem.spec.targets) return *problem.spec.targets;
  if (problem.spec.box) return box_targets(*problem.spec.box);
  return target_set(problem.profile, request.bound);
}

MultiIndex pick_box(const Problem& problem, const VerifyRequest& request, Int fallback) {
  if (request.box) return *request.box;
  if (problem.spec.box) return *problem.spec.box;
  return MultiIndex::constant(problem.profile.num_facets(), fallback);
}

void check_box(const Problem& problem, const MultiIndex& box) {
  if (box.size() != problem.profile.num_facets()) {
    throw InputError("box", "expected " + std::to_string(problem.profile.num_facets()) + " bounds");
  }
  if (!box.is_nonnegative()) throw InputError("box", "bounds must be >= 0");
}

json mismatches_json(const std::vector<Mismatch>& mismatches) {
  json out = json::array();
  for (const auto& m : mismatches) {
    out.push_back({{"v", m.v.vector()}, {"predicted", big_json(m.predicted)}, {"computed", m.computed}});
  }
  return out;
}

}  // namespace

std::string subset_label(std::size_t mask, std::size_t s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < s; ++i) {
    if (!((mask >> i) & 1)) continue;
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

json record_json(const CoefficientRecord& rec, std::size_t s) {
  auto dims = [&](const std::vector<Int>& values) {
    json out = json::object();
    for (std::size_t mask = 0; mask < values.size(); ++mask) out[subset_label(mask, s)] = values[mask];
    return out;
  };
  json out;
  out["v"] = rec.v.vector();
  out["coefficient"] = rec.coefficient;
  out["method"] = method_name(rec.method);
  out["dims_by_subset"] = dims(rec.value_b ? rec.dims_b : rec.dims_a);
  out["boundary_count"] = rec.boundary_count;
  out["relation_rank"] = rec.relation_rank;
  if (rec.method == Method::Both) {
    out["coefficient_A"] = *rec.value_a;
    out["coefficient_B"] = *rec.value_b;
    out["dims_by_subset_A"] = dims(rec.dims_a);
    out["discrepancy"] = rec.discrepancy;
  }
  return out;
}

json diagram_report(const Problem& problem) {
  const auto& profile = problem.profile;
  const auto& diagram = profile.diagram();
  json out;
  out["problem"] = to_json(problem.spec);
  json facets = json::array();
  for (const auto& form : diagram.facets()) facets.push_back(form_json(form));
  out["facets"] = facets;
  json vertices = json::array();
  for (const auto& k : diagram.vertices()) vertices.push_back(exponent_json(k));
  out["vertices"] = vertices;
  out["stellar_vertex"] = diagram.stellar_vertex() ? exponent_json(*diagram.stellar_vertex()) : json(nullptr);
  json u_vars = json::array();
  for (const auto& u : profile.u_vars()) u_vars.push_back(u.vector());
  out["u_of_variables"] = u_vars;
  out["u_of_f"] = profile.u_f().vector();
  out["convenient"] = true;  // enforced by compute_diagram
  out["u_of_f_is_monomial_value"] = lattice_count(profile, profile.u_f()) > 0;
  out["u_of_f_in_rational_span"] = rational_combination(profile);
  out["facet_check"] = problem.facet_check.note;
  return out;
}

json coefficients_report(const Problem& problem, const std::vector<MultiIndex>& targets,
                         const RunOptions& options) {
  json out = diagram_report(problem);
  auto records = poincare_coefficients(problem.profile, problem.germ, targets, options.method,
                                       options.threads, options.method_a);
  json list = json::array();
  for (const auto& rec : records) list.push_back(record_json(rec, problem.profile.num_facets()));
  out["records"] = list;
  out["method"] = method_name(options.method);
  return out;
}

json series_report(const Problem& problem, const std::vector<MultiIndex>& targets,
                   const RunOptions& options) {
  json out = coefficients_report(problem, targets, options);
  std::vector<std::pair<MultiIndex, Int>> terms;
  for (const auto& rec : out["records"]) {
    Int c = rec["coefficient"].get<Int>();
    if (c != 0) terms.emplace_back(MultiIndex(rec["v"].get<std::vector<Int>>()), c);
  }
  std::sort(terms.begin(), terms.end());
  json series = json::array();
  for (const auto& [v, c] : terms) series.push_back({{"exponent", v.vector()}, {"coefficient", c}});
  out["series"] = series;
  auto form = predicted_form(problem.profile);
  out["prediction"] = form ? json(kind_name(form->kind)) : json("empirical");
  return out;
}

Claim parse_claim(std::string_view text) {
  if (text == "prop1") return Claim::Prop1;
  if (text == "thm1") return Claim::Thm1;
  if (text == "thm2") return Claim::Thm2;
  if (text == "ps-identity") return Claim::PsIdentity;
  if (text == "methods-agree") return Claim::MethodsAgree;
  throw InputError("claim", "unknown claim '" + std::string(text) +
                                "' (expected prop1, thm1, thm2, ps-identity or methods-agree)");
}

const char* claim_name(Claim claim) {
  switch (claim) {
    case Claim::Prop1: return "prop1";
    case Claim::Thm1: return "thm1";
    case Claim::Thm2: return "thm2";
    case Claim::PsIdentity: return "ps-identity";
    case Claim::MethodsAgree: return "methods-agree";
  }
  return "?";
}

VerifyOutcome verify_claim(const Problem& problem, const VerifyRequest& request,
                           const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto& profile = problem.profile;
  const std::size_t s = profile.num_facets();
  json out;
  out["claim"] = claim_name(request.claim);
  out["method"] = method_name(options.method);
  if (request.box) check_box(problem, *request.box);

  switch (request.claim) {
    case Claim::Prop1: {
      const MultiIndex upper = pick_box(problem, request, 12);
      check_box(problem, upper);
      const Box box = Box::from_origin(upper);
      const ClosedForm form = ambient_form(profile);
      const SeriesBox predicted = expand(form, box);
      std::vector<Mismatch> mismatches;
      std::size_t checked = 0;
      box.for_each([&](const MultiIndex& v) {
        ++checked;
        Int count = lattice_count(profile, v);
        BigInt c = predicted.coefficient(v);
        if (c != count) mismatches.push_back({v, c, count});
      });
      out["kind"] = kind_name(form.kind);
      out["factors"] = factors_json(form.factors);
      out["box"] = upper.vector();
      out["targets_checked"] = checked;
      out["mismatches"] = mismatches_json(mismatches);
      break;
    }
    case Claim::Thm1:
    case Claim::Thm2: {
      ClosedForm form;
      if (request.claim == Claim::Thm1) {
        if (profile.num_variables() != 2) {
          throw InapplicableError("theorem 1 concerns plane curves (n = 2); this germ has n = " +
                                  std::to_string(profile.num_variables()));
        }
        if (s < 2) throw InapplicableError("theorem 1 needs a diagram with at least two facets");
        if (s == 2) {
          form = shifted_form(profile, ClosedFormKind::CurveS2);
        } else {
          form = ambient_form(profile);
          form.kind = ClosedFormKind::CurveSgt2;
        }
      } else {
        if (!profile.diagram().stellar_vertex()) throw InapplicableError("diagram is not stellar");
        form = shifted_form(profile, ClosedFormKind::Stellar);
      }
      const auto targets = pick_targets(problem, request);
      for (const auto& v : targets) {
        if (v.size() != s || !v.is_nonnegative()) {
          throw InputError("targets", "target " + v.to_string() + " is not a non-negative " +
                                          std::to_string(s) + "-tuple");
        }
      }
      auto report = verify(profile, problem.germ, targets, options.method, form, options.threads,
                           options.method_a);
      out["kind"] = report.kind;
      out["factors"] = factors_json(report.factors);
      out["targets_checked"] = report.targets_checked;
      out["mismatches"] = mismatches_json(report.mismatches);
      json discrepancies = json::array();
      for (const auto& rec : report.records) {
        if (rec.discrepancy) discrepancies.push_back(record_json(rec, s));
      }
      if (options.method == Method::Both) out["method_discrepancies"] = discrepancies;
      break;
    }
    case Claim::PsIdentity: {
      const MultiIndex upper = pick_box(problem, request, 4);
      check_box(problem, upper);
      auto check = ps_identity_check(profile, problem.germ, upper, request.margin, options.threads);
      out["box"] = upper.vector();
      out["margin"] = request.margin;
      out["targets_checked"] = check.inner.point_count().get_ui();
      json diffs = json::array();
      for (const auto& d : check.diffs) {
        diffs.push_back({{"v", d.exponent.vector()},
                         {"p_side", big_json(d.left)},
                         {"l_side", big_json(d.right)}});
      }
      out["mismatches"] = diffs;
      break;
    }
    case Claim::MethodsAgree: {
      const MultiIndex upper = pick_box(problem, request, 4);
      check_box(problem, upper);
      json mismatches = json::array();
      std::size_t checked = 0;
      for (const auto& v : box_targets(upper)) {
        auto cmp = compare_methods(profile, problem.germ, v, options.method_a);
        for (std::size_t mask = 0; mask < cmp.dims_a.size(); ++mask) {
          ++checked;
          if (cmp.dims_a[mask] == cmp.dims_b[mask]) continue;
          mismatches.push_back({{"v", v.vector()},
                                {"subset", subset_label(mask, s)},
                                {"A", cmp.dims_a[mask]},
                                {"B", cmp.dims_b[mask]}});
        }
      }
      out["box"] = upper.vector();
      out["targets_checked"] = checked;
      out["mismatches"] = mismatches;
      break;
    }
  }
  VerifyOutcome outcome;
  outcome.holds = out["mismatches"].empty();
  out["holds"] = outcome.holds;
  out["elapsed_ms"] = millis_since(start);
  outcome.report = std::move(out);
  return outcome;
}

json order_value_report(const Problem& problem, const std::string& germ_text, std::size_t facet,
                        std::optional<Int> budget) {
  const auto& profile = problem.profile;
  if (facet >= profile.num_facets()) {
    throw InputError("facet", "facet index " + std::to_string(facet + 1) + " out of range 1.." +
                                  std::to_string(profile.num_facets()));
  }
  PolynomialGerm g = parse_polynomial(germ_text, problem.spec.variables);
  json out;
  out["germ"] = g.is_zero() ? std::string("0") : g.to_string();
  out["facet"] = facet + 1;
  out["facet_form"] = form_json(profile.facet(facet));
  GermValue u = u_germ(profile, g);
  if (auto* value = std::get_if<MultiIndex>(&u)) {
    out["u_germ"] = value->vector();
  } else {
    out["u_germ"] = "infinity";
  }
  OrderValue v = order_value(profile, problem.germ, g, facet, budget);
  if (auto* value = std::get_if<Int>(&v)) {
    out["order_value"] = *value;
  } else {
    out["order_value"] = {{"at_least", std::get<AtLeast>(v).budget}};
  }
  return out;
}

Scoreboard examples_report(const std::filesystem::path& corpus, bool all, unsigned threads) {
  json rows = json::array();
  bool green = true;
  auto load = [&](const char* name) { return build_problem(load_problem(corpus / name)); };
  auto row = [&](std::string name, json expected, std::function<json()> compute) {
    const auto start = std::chrono::steady_clock::now();
    json entry{{"name", std::move(name)}, {"expected", expected}};
    try {
      json got = compute();
      entry["computed"] = got;
      entry["pass"] = got == expected;
    } catch (const std::exception& e) {
      entry["computed"] = nullptr;
      entry["error"] = e.what();
      entry["pass"] = false;
    }
    entry["elapsed_ms"] = millis_since(start);
    green = green && entry["pass"].get<bool>();
    rows.push_back(std::move(entry));
  };
  auto coefficient = [&](const Problem& p, MultiIndex v, Method method) {
    return poincare_coefficient(p.profile, p.germ, v, method);
  };
  auto facets_of = [](const Problem& p) {
    json out = json::array();
    for (const auto& form : p.profile.diagram().facets()) out.push_back(form_json(form));
    return out;
  };

  row("example1 facets", json::parse("[[1,1,1,4],[2,1,1,5],[1,2,1,5],[1,1,2,5]]"),
      [&] { return facets_of(load("example1.json")); });
  row("example1 stellar vertex", nullptr, [&] {
    auto p = load("example1.json");
    auto m = p.profile.diagram().stellar_vertex();
    return m ? exponent_json(*m) : json(nullptr);
  });
  row("example1 coefficient at (4,5,5,5), methods A and B", json::parse("[-1,-1]"), [&] {
    auto rec = coefficient(load("example1.json"), {4, 5, 5, 5}, Method::Both);
    return json::array({*rec.value_a, *rec.value_b});
  });
  row("example1 dim J(v)/J(v+1) at (4,5,5,5)", 17, [&] {
    auto p = load("example1.json");
    return json(d_of_v(p.profile, p.germ, {4, 5, 5, 5}));
  });
  row("curve u(x^2), u(x^3+y^2), order value of x^5+x^2y^2", json::parse("[4,6,15]"), [&] {
    auto p = load("curve_x5_x2y2_y5.json");
    std::size_t facet = 0;
    while (p.profile.facet(facet) != LinearForm({2, 3}, 10)) ++facet;
    const auto& vars = p.spec.variables;
    Int a = u_germ_at(p.profile, parse_polynomial("x^2", vars), facet);
    Int b = u_germ_at(p.profile, parse_polynomial("x^3+y^2", vars), facet);
    auto c = order_value(p.profile, p.germ, parse_polynomial("x^5+x^2*y^2", vars), facet, 20);
    return json::array({a, b, std::holds_alternative<Int>(c) ? json(std::get<Int>(c)) : json("at least 20")});
  });
  row("cusp coefficients at 0, 1 (a gap) and u(f) = 6", json::parse("[1,0,1]"), [&] {
    auto p = load("cusp.json");
    return json::array({coefficient(p, {0}, Method::Both).coefficient,
                        coefficient(p, {1}, Method::Both).coefficient,
                        coefficient(p, {6}, Method::Both).coefficient});
  });

  auto theorem = [&](const char* file, Claim claim, VerifyRequest request, Method method) {
    auto p = load(file);
    request.claim = claim;
    RunOptions options{method, threads, {}};
    auto outcome = verify_claim(p, request, options);
    return json{{"holds", outcome.holds}, {"mismatches", outcome.report["mismatches"].size()}};
  };
  const json holds{{"holds", true}, {"mismatches", 0}};
  const Int curve_box = all ? 20 : 10;
  row("theorem 1 (s = 2) on the curve, box [0," + std::to_string(curve_box) + "]^2", holds, [&] {
    return theorem("curve_x5_x2y2_y5.json", Claim::Thm1,
                   VerifyRequest{Claim::Thm1, MultiIndex{curve_box, curve_box}, {}, 0, 2}, Method::B);
  });
  const Int s3_bound = all ? 6 : 3;
  row("theorem 1 (s > 2) on x^7+x^4y+x^2y^2+y^7, target set " + std::to_string(s3_bound), holds, [&] {
    return theorem("curve_s3.json", Claim::Thm1, VerifyRequest{Claim::Thm1, {}, {}, s3_bound, 2},
                   Method::B);
  });
  const Int t_bound = all ? 4 : 2;
  row("theorem 2 on x^4+y^4+z^4+xyz, target set " + std::to_string(t_bound), holds, [&] {
    return theorem("t444.json", Claim::Thm2, VerifyRequest{Claim::Thm2, {}, {}, t_bound, 2},
                   Method::B);
  });
  row("example1 is outside theorem 2", "inapplicable", [&] {
    try {
      theorem("example1.json", Claim::Thm2, VerifyRequest{}, Method::B);
    } catch (const InapplicableError&) {
      return json("inapplicable");
    }
    return json("applicable");
  });
  row("methods agree on the cusp, v in [0,12]", holds, [&] {
    return theorem("cusp.json", Claim::MethodsAgree,
                   VerifyRequest{Claim::MethodsAgree, MultiIndex{12}, {}, 0, 2}, Method::B);
  });
  if (all) {
    row("example2 facets", json::parse("[[1,1,1,14],[2,3,5,40],[3,2,5,40],[11,4,5,80],[4,11,5,80]]"),
        [&] { return facets_of(load("example2.json")); });
    row("example2 coefficient at (14,40,40,80,80)", 1, [&] {
      return json(coefficient(load("example2.json"), {14, 40, 40, 80, 80}, Method::B).coefficient);
    });
    row("example2 u(f) is a monomial value", false, [&] {
      auto p = load("example2.json");
      return json(lattice_count(p.profile, p.profile.u_f()) > 0);
    });
  }
  Scoreboard board;
  board.report = {{"examples", rows}, {"all_green", green}, {"scope", all ? "all" : "quick"}};
  board.all_green = green;
  return board;
}

}  // namespace nf
