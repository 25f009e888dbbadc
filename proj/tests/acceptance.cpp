// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria (capped at 1).
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "core/closed_forms.hpp"
#include "core/parser.hpp"
#include "core/problem_io.hpp"
#include "core/reports.hpp"
#include "oracles.hpp"

using namespace nf;

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};
const char* kE1 = "x^5 + y^5 + z^5 + x^2*y*z + x*y^2*z + x*y*z^2";
const char* kE2 =
    "x^20 + y^20 + z^16 + x^8*y^8 + x^6*y^6*z^2 + x^2*y^2*z^10 + x^3*y^8*z^3 + x^8*y^3*z^3";
const char* kCurve = "x^5 + x^2*y^2 + y^5";
const char* kCurveS3 = "x^7 + x^4*y + x^2*y^2 + y^7";
const char* kCusp = "x^2 + y^3";
const char* kT = "x^4 + y^4 + z^4 + x*y*z";

struct Germ {
  PolynomialGerm f;
  ValuationProfile profile;
  Germ(const char* text, const std::vector<std::string>& vars)
      : f(parse_polynomial(text, vars)), profile(compute_diagram(f.support())) {}
};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

std::set<LinearForm> as_set(const std::vector<LinearForm>& forms) {
  return {forms.begin(), forms.end()};
}

std::size_t facet_index(const ValuationProfile& p, const LinearForm& form) {
  for (std::size_t i = 0; i < p.num_facets(); ++i)
    if (p.facet(i) == form) return i;
  throw std::logic_error("facet not found: " + form.to_string());
}

std::vector<oracle::Facet> oracle_facets(const ValuationProfile& p) {
  std::vector<oracle::Facet> out;
  for (const auto& form : p.diagram().facets())
    out.push_back({std::vector<Int>(form.coefficients().begin(), form.coefficients().end()),
                   form.degree()});
  return out;
}

bool same_facets_as_oracle(const Germ& g, Int max_entry) {
  auto hull = oracle::hull_facets(g.f.support(), max_entry);
  auto ours = oracle_facets(g.profile);
  return std::set<oracle::Facet>(ours.begin(), ours.end()) == hull;
}

int failures = 0;

void run(int number, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail << "[exception: " << e.what() << "] ";
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && seconds > limit_seconds) {
    out.pass = false;
    out.detail << "[over the " << limit_seconds << " s limit] ";
  }
  failures += !out.pass;
  std::printf("criterion %d: %s  %s(%.2f s)\n", number, out.pass ? "PASS" : "FAIL",
              out.detail.str().c_str(), seconds);
  std::fflush(stdout);
}

// dims of every J(v+1_I)/J(v+1) under both methods; optionally also at a
// doubled truncation.
struct CrossCheck {
  std::size_t specs = 0;
  std::size_t disagreements = 0;
  std::size_t unstable = 0;
  std::string first;
};

void cross_check(const Germ& g, Int corner, bool doubled, CrossCheck& acc) {
  const std::size_t s = g.profile.num_facets();
  Box::cube(s, 0, corner).for_each([&](const MultiIndex& v) {
    auto cmp = compare_methods(g.profile, g.f, v);
    acc.specs += cmp.dims_a.size() - 1;
    for (std::size_t mask = 0; mask + 1 < cmp.dims_a.size(); ++mask) {
      if (cmp.dims_a[mask] != cmp.dims_b[mask]) {
        if (!acc.disagreements++) acc.first = v.to_string();
      }
    }
    if (doubled) {
      MultiIndex upper = v + MultiIndex::constant(s, 1);
      Int safe = safe_truncation(QuotientSpec(v, upper), g.f);
      auto twice = compare_methods(g.profile, g.f, v, {2 * safe, false});
      for (std::size_t mask = 0; mask + 1 < cmp.dims_a.size(); ++mask) {
        if (twice.dims_a[mask] != cmp.dims_a[mask] && !acc.unstable++) acc.first = v.to_string();
      }
    }
  });
}

PolynomialGerm random_germ(std::mt19937_64& rng, const std::vector<std::string>& vars) {
  PolynomialGerm g(vars);
  std::uniform_int_distribution<int> terms(1, 4), deg(0, 6), coeff(-4, 4);
  while (g.is_zero()) {
    for (int t = terms(rng); t > 0; --t) {
      std::vector<Int> k(vars.size());
      for (auto& e : k) e = deg(rng);
      g.add_term(Exponent(k), coeff(rng));
    }
  }
  return g;
}

PolynomialGerm product(const PolynomialGerm& a, const PolynomialGerm& b) {
  PolynomialGerm out(a.variables());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) out.add_term(ka + kb, ca * cb);
  return out;
}

}  // namespace

int main() {
  run(1, 10, [](Outcome& out) {
    Germ g(kE1, kXYZ);
    out.require(as_set(g.profile.diagram().facets()) ==
                    std::set<LinearForm>{LinearForm({1, 1, 1}, 4), LinearForm({2, 1, 1}, 5),
                                         LinearForm({1, 2, 1}, 5), LinearForm({1, 1, 2}, 5)},
                "facets");
    MultiIndex v = g.profile.u_f();
    auto rec = poincare_coefficient(g.profile, g.f, v, Method::B);
    auto d = d_of_v(g.profile, g.f, v);
    out.require(rec.coefficient == -1, "coefficient");
    out.require(d == 17, "dim J(v)/J(v+1)");
    out.detail << "coefficient " << rec.coefficient << ", d " << d << " ";
  });

  run(2, 120, [](Outcome& out) {
    auto problem = build_problem(load_problem(std::string(NEWTONFILT_CORPUS_DIR) + "/example2.json"));
    Germ g(kE2, kXYZ);
    out.require(as_set(g.profile.diagram().facets()) ==
                    std::set<LinearForm>{LinearForm({1, 1, 1}, 14), LinearForm({2, 3, 5}, 40),
                                         LinearForm({3, 2, 5}, 40), LinearForm({11, 4, 5}, 80),
                                         LinearForm({4, 11, 5}, 80)},
                "facets");
    MultiIndex v{14, 40, 40, 80, 80};
    out.require(problem.profile.u_f() == v, "u(f)");
    auto rec = poincare_coefficient(problem.profile, problem.germ, v, Method::B);
    out.require(rec.coefficient == 1, "coefficient");
    auto report = diagram_report(problem);
    out.require(report.at("u_of_f_is_monomial_value") == false, "u(f) reported as a monomial value");
    out.detail << "coefficient " << rec.coefficient << ", u(f) monomial value: "
               << report.at("u_of_f_is_monomial_value").dump() << " ";
  });

  run(3, 0, [](Outcome& out) {
    Germ g(kCurve, kXY);
    auto i = facet_index(g.profile, LinearForm({2, 3}, 10));
    auto u2 = u_germ_at(g.profile, parse_polynomial("x^2", kXY), i);
    auto u3 = u_germ_at(g.profile, parse_polynomial("x^3 + y^2", kXY), i);
    auto ov = order_value(g.profile, g.f, parse_polynomial("x^5 + x^2*y^2", kXY), i);
    out.require(u2 == 4, "u(x^2)");
    out.require(u3 == 6, "u(x^3+y^2)");
    out.require(ov == OrderValue{Int{15}}, "order value");
    out.detail << "values " << u2 << ", " << u3 << ", "
               << (std::holds_alternative<Int>(ov) ? std::to_string(std::get<Int>(ov)) : "unbounded")
               << " ";
  });

  run(4, 30, [](Outcome& out) {
    Germ g(kCurve, kXY);
    auto form = shifted_form(g.profile, ClosedFormKind::CurveS2);
    auto report = verify(g.profile, g.f, box_targets({20, 20}), Method::B, form);
    out.require(g.profile.u_f() == MultiIndex{10, 10}, "u(f)");
    out.require(report.mismatches.empty(), "coefficients");
    out.detail << report.targets_checked << " targets, " << report.mismatches.size()
               << " mismatches ";
  });

  run(5, 30, [](Outcome& out) {
    Germ g(kCurveS3, kXY);
    out.require(same_facets_as_oracle(g, 8), "facets vs hull oracle");
    out.require(g.profile.num_facets() == 3, "three facets");
    // each facet polynomial of f has two terms, hence is non-degenerate
    for (const auto& form : g.profile.diagram().facets()) {
      std::size_t on = 0;
      for (const auto& k : g.f.support()) on += form.evaluate(k) == form.degree();
      out.require(on == 2, "facet " + form.to_string() + " carries two monomials");
    }
    auto report = verify(g.profile, g.f, target_set(g.profile, 6), Method::B, ambient_form(g.profile));
    out.require(report.mismatches.empty(), "coefficients");
    out.detail << report.targets_checked << " targets, " << report.mismatches.size()
               << " mismatches ";
  });

  run(6, 60, [](Outcome& out) {
    Germ g(kT, kXYZ);
    out.require(g.profile.diagram().stellar_vertex().has_value(), "stellar");
    out.require(g.profile.u_f() == MultiIndex{4, 4, 4}, "u(f)");
    auto form = predicted_form(g.profile);
    out.require(form && form->kind == ClosedFormKind::Stellar, "stellar prediction");
    auto report = verify(g.profile, g.f, target_set(g.profile, 4), Method::B,
                         shifted_form(g.profile, ClosedFormKind::Stellar));
    out.require(report.mismatches.empty(), "coefficients");
    out.detail << report.targets_checked << " targets, " << report.mismatches.size()
               << " mismatches ";
  });

  run(7, 0, [](Outcome& out) {
    std::size_t points = 0;
    for (auto [text, vars] : {std::pair{kCurve, kXY}, std::pair{kE1, kXYZ}}) {
      Germ g(text, vars);
      auto facets = oracle_facets(g.profile);
      Box box = Box::cube(g.profile.num_facets(), 0, 12);
      auto series = ambient_series(g.profile, box);
      box.for_each([&](const MultiIndex& v) {
        ++points;
        long expected = oracle::lattice_count(facets, v.vector());
        if (series.coefficient(v) != expected || lattice_count(g.profile, v) != expected)
          out.require(false, std::string(text) + " at " + v.to_string());
      });
    }
    out.detail << points << " coefficients ";
  });

  run(8, 0, [](Outcome& out) {
    CrossCheck acc;
    cross_check(Germ(kCurve, kXY), 12, false, acc);
    cross_check(Germ(kCusp, kXY), 12, false, acc);
    cross_check(Germ(kT, kXYZ), 6, false, acc);
    out.require(acc.disagreements == 0, "methods disagree, first at v=" + acc.first);
    out.detail << acc.specs << " quotients, " << acc.disagreements << " disagreements ";
  });

  run(9, 0, [](Outcome& out) {
    Germ cusp(kCusp, kXY);
    auto c = ps_identity_check(cusp.profile, cusp.f, {10}, 2);
    out.require(c.diffs.empty(), "cusp");
    // one facet: the identity reduces to P = L, checked directly on [-2, 12]
    Box wide(MultiIndex{-2}, MultiIndex{12});
    auto L = L_series(cusp.profile, cusp.f, wide);
    SeriesBox P(wide);
    for (Int v = 0; v <= 12; ++v)
      P.set({v}, poincare_coefficient(cusp.profile, cusp.f, {v}, Method::B).coefficient);
    out.require(compare(P, L).empty(), "cusp P = L on [-2,12]");
    Germ curve(kCurve, kXY);
    out.require(ps_identity_check(curve.profile, curve.f, {10, 10}, 2).diffs.empty(), "curve");
    Germ e1(kE1, kXYZ);
    out.require(ps_identity_check(e1.profile, e1.f, {5, 5, 5, 5}, 2).diffs.empty(), "example 1");
  });

  run(10, 0, [](Outcome& out) {
    CrossCheck acc;
    cross_check(Germ(kCurve, kXY), 12, true, acc);
    cross_check(Germ(kCusp, kXY), 12, true, acc);
    cross_check(Germ(kT, kXYZ), 6, true, acc);
    out.require(acc.unstable == 0, "dimension changed at v=" + acc.first);
    out.detail << acc.specs << " quotients at 2x truncation, " << acc.unstable << " changed ";
  });

  run(11, 0, [](Outcome& out) {
    std::mt19937_64 rng(424242);
    Germ g(kE1, kXYZ);
    std::size_t cases = 0;
    for (; cases < 1000; ++cases) {
      auto a = random_germ(rng, kXYZ), b = random_germ(rng, kXYZ);
      auto ua = std::get<MultiIndex>(u_germ(g.profile, a));
      auto ub = std::get<MultiIndex>(u_germ(g.profile, b));
      if (std::get<MultiIndex>(u_germ(g.profile, product(a, b))) != ua + ub)
        out.require(false, "multiplicativity");
      PolynomialGerm s = a;
      for (const auto& [k, c] : b.terms()) s.add_term(k, c);
      if (s.is_zero()) continue;
      auto us = std::get<MultiIndex>(u_germ(g.profile, s));
      for (std::size_t i = 0; i < us.size(); ++i)
        if (us[i] < std::min(ua[i], ub[i])) out.require(false, "ultrametric inequality");
    }
    out.require(std::holds_alternative<Infinite>(u_germ(g.profile, PolynomialGerm(kXYZ))), "u(0)");

    std::uniform_int_distribution<Int> entry(-3, 3);
    for (int t = 0; t < 1000; ++t) {
      MultiIndex a{entry(rng), entry(rng)}, b{entry(rng), entry(rng)}, c{entry(rng), entry(rng)};
      if (!geq(a, a)) out.require(false, "reflexivity");
      if (geq(a, b) && geq(b, a) && a != b) out.require(false, "antisymmetry");
      if (geq(a, b) && geq(b, c) && !geq(a, c)) out.require(false, "transitivity");
    }

    Box outer = Box::cube(2, 0, 16), inner = Box::cube(2, 0, 7);
    for (int t = 0; t < 50; ++t) {
      MultiIndex m1{entry(rng) + 4, entry(rng) + 3}, m2{entry(rng) + 3, entry(rng) + 4};
      auto a = binomial_factor(m1, -1, outer), b = binomial_factor(m2, t % 2 ? 1 : -1, outer);
      if (multiply(a, b, outer).crop(inner) != multiply(a.crop(inner), b.crop(inner), inner))
        out.require(false, "crop commutation");
    }

    auto problem = build_problem(load_problem(std::string(NEWTONFILT_CORPUS_DIR) + "/t444.json"));
    auto targets = box_targets({4, 4, 4});
    auto first = render_report(series_report(problem, targets, {Method::B, 4, {}}));
    auto second = render_report(series_report(problem, targets, {Method::B, 4, {}}));
    auto serial = render_report(series_report(problem, targets, {Method::B, 1, {}}));
    out.require(first == second && first == serial, "determinism");
    out.detail << cases << " random germs ";
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures ? 1 : 0;
}
