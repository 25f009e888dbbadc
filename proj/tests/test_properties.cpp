// Randomised invariants. Seeds are fixed so failures reproduce.
#include <doctest.h>

#include <random>

#include "core/closed_forms.hpp"
#include "core/parser.hpp"
#include "core/problem_io.hpp"
#include "core/reports.hpp"
#include "core/valuations.hpp"

using namespace nf;

namespace {

PolynomialGerm product(const PolynomialGerm& a, const PolynomialGerm& b) {
  PolynomialGerm out(a.variables());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) out.add_term(ka + kb, ca * cb);
  return out;
}

PolynomialGerm sum(const PolynomialGerm& a, const PolynomialGerm& b) {
  PolynomialGerm out = a;
  for (const auto& [k, c] : b.terms()) out.add_term(k, c);
  return out;
}

PolynomialGerm random_germ(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::string> vars;
  for (std::size_t j = 0; j < n; ++j) vars.push_back("x" + std::to_string(j + 1));
  PolynomialGerm g(vars);
  std::uniform_int_distribution<int> terms(1, 4), deg(0, 5), coeff(-3, 3);
  while (g.is_zero()) {
    for (int t = terms(rng); t > 0; --t) {
      std::vector<Int> k(n);
      for (auto& e : k) e = deg(rng);
      g.add_term(Exponent(k), coeff(rng));
    }
  }
  return g;
}

struct Setting {
  std::vector<std::string> vars;
  const char* f;
};

const Setting kSettings[] = {
    {{"x1", "x2"}, "x1^5 + x1^2*x2^2 + x2^5"},
    {{"x1", "x2"}, "x1^7 + x1^4*x2 + x1^2*x2^2 + x2^7"},
    {{"x1", "x2", "x3"}, "x1^5 + x2^5 + x3^5 + x1^2*x2*x3 + x1*x2^2*x3 + x1*x2*x3^2"},
};

MultiIndex min_of(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

}  // namespace

TEST_CASE("facet valuations are valuations") {
  std::mt19937_64 rng(20260101);
  for (const auto& setting : kSettings) {
    auto f = parse_polynomial(setting.f, setting.vars);
    ValuationProfile profile(compute_diagram(f.support()));
    const std::size_t n = setting.vars.size();
    for (int trial = 0; trial < 350; ++trial) {
      auto g = random_germ(rng, n);
      auto h = random_germ(rng, n);
      auto ug = std::get<MultiIndex>(u_germ(profile, g));
      auto uh = std::get<MultiIndex>(u_germ(profile, h));
      CHECK(std::get<MultiIndex>(u_germ(profile, product(g, h))) == ug + uh);
      auto s = sum(g, h);
      if (s.is_zero()) continue;
      CHECK(geq(std::get<MultiIndex>(u_germ(profile, s)), min_of(ug, uh)));
      // u of a monomial x^k is the row of facet values at k
      auto k = g.support().front();
      CHECK(u_monomial(profile, k) + uh ==
            std::get<MultiIndex>(u_germ(profile, h.shifted(k))));
    }
  }
}

TEST_CASE("order values dominate u and ignore multiples of f") {
  std::mt19937_64 rng(7);
  auto f = parse_polynomial(kSettings[0].f, kSettings[0].vars);
  ValuationProfile profile(compute_diagram(f.support()));
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_germ(rng, 2);
    auto h = random_germ(rng, 2);
    auto moved = sum(g, product(h, f));
    if (moved.is_zero()) continue;
    for (std::size_t i = 0; i < profile.num_facets(); ++i) {
      Int budget = std::max({Int{40}, u_germ_at(profile, g, i), u_germ_at(profile, moved, i)});
      auto a = order_value(profile, f, g, i, budget);
      auto b = order_value(profile, f, moved, i, budget);
      if (std::holds_alternative<Int>(a)) {
        CHECK(std::get<Int>(a) >= u_germ_at(profile, g, i));
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("componentwise order laws") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Int> entry(-3, 3);
  auto draw = [&] { return MultiIndex{entry(rng), entry(rng), entry(rng)}; };
  for (int trial = 0; trial < 1000; ++trial) {
    auto a = draw(), b = draw(), c = draw();
    CHECK(geq(a, a));
    if (geq(a, b) && geq(b, a)) CHECK(a == b);
    if (geq(a, b) && geq(b, c)) CHECK(geq(a, c));
    CHECK(geq(a + c, b + c) == geq(a, b));
  }
  CHECK_THROWS(geq(MultiIndex{1}, MultiIndex{1, 2}));
}

TEST_CASE("series algebra") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Int> entry(0, 4);
  Box box = Box::cube(2, 0, 14);
  auto factor = [&] {
    MultiIndex m{entry(rng), entry(rng)};
    if (m.is_zero()) m[0] = 1;
    return binomial_factor(m, rng() % 2 ? 1 : -1, box);
  };
  for (int trial = 0; trial < 25; ++trial) {
    auto a = factor(), b = factor(), c = factor();
    CHECK(multiply(a, b, box) == multiply(b, a, box));
    CHECK(multiply(multiply(a, b, box), c, box) == multiply(a, multiply(b, c, box), box));
    Box inner = Box::cube(2, 0, 6);
    CHECK(multiply(a, b, box).crop(inner) == multiply(a.crop(inner), b.crop(inner), inner));
    MultiIndex m{entry(rng) + 1, entry(rng)};
    CHECK(multiply(binomial_factor(m, -1, box), binomial_factor(m, 1, box), box) ==
          SeriesBox::one(box));
  }
}

TEST_CASE("polynomial text round trips") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_germ(rng, 1 + trial % 3);
    CHECK(parse_polynomial(g.to_string(), g.variables()) == g);
  }
}

TEST_CASE("reports do not depend on the thread count") {
  auto problem = build_problem(load_problem(std::string(NEWTONFILT_CORPUS_DIR) + "/curve_s3.json"));
  auto targets = box_targets({6, 6, 6});
  RunOptions serial{Method::B, 1, {}};
  RunOptions threaded{Method::B, 4, {}};
  CHECK(render_report(coefficients_report(problem, targets, serial)) ==
        render_report(coefficients_report(problem, targets, threaded)));
  CHECK(render_report(series_report(problem, targets, serial)) ==
        render_report(series_report(problem, targets, threaded)));
  VerifyRequest request;
  request.claim = Claim::Thm1;
  request.bound = 3;
  auto a = verify_claim(problem, request, serial).report;
  auto b = verify_claim(problem, request, threaded).report;
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  CHECK(render_report(a) == render_report(b));
}
