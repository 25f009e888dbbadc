#include <doctest.h>

#include "core/error.hpp"
#include "core/parser.hpp"

using namespace nf;

namespace {
const std::vector<std::string> xy{"x", "y"};
const std::vector<std::string> xyz{"x", "y", "z"};

std::size_t error_position(std::string_view text, const std::vector<std::string>& vars) {
  try {
    parse_polynomial(text, vars);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for " << text);
  return 0;
}
}  // namespace

TEST_CASE("the curve from the filtration section") {
  auto g = parse_polynomial("x^5 + x^2*y^2 + y^5", xy);
  CHECK(g.support() == std::vector<Exponent>{{0, 5}, {2, 2}, {5, 0}});
  for (const auto& [k, c] : g.terms()) CHECK(c == 1);
}

TEST_CASE("example 1 has six terms") {
  auto g = parse_polynomial("x^5+y^5+z^5+x^2*y*z+x*y^2*z+x*y*z^2", xyz);
  CHECK(g.terms().size() == 6);
  CHECK(g.coefficient(Exponent{1, 1, 2}) == 1);
}

TEST_CASE("cancellation leaves the empty germ") {
  auto g = parse_polynomial("x - x", xy);
  CHECK(g.is_zero());
}

TEST_CASE("coefficients, signs and juxtaposition") {
  auto g = parse_polynomial("-3/4 x^2 y + 2*x^2*y - y^3 + 1/2", xy);
  CHECK(g.coefficient(Exponent{2, 1}) == Rational(5, 4));
  CHECK(g.coefficient(Exponent{0, 3}) == -1);
  CHECK(g.coefficient(Exponent{0, 0}) == Rational(1, 2));
  CHECK(parse_polynomial("2x y", xy).coefficient(Exponent{1, 1}) == 2);
}

TEST_CASE("term order and whitespace do not matter") {
  auto a = parse_polynomial("x^5+x^2*y^2+y^5", xy);
  auto b = parse_polynomial("  y^5 +x^2 * y^2+   x^5 ", xy);
  CHECK(a == b);
}

TEST_CASE("round trip through the canonical text") {
  for (const char* text : {"x^5 + x^2*y^2 + y^5", "-2/3*x*y + 7 - y^4", "x + x + y", "3*x^2*y^0"}) {
    auto g = parse_polynomial(text, xy);
    auto again = parse_polynomial(g.to_string(), xy);
    CHECK(g == again);
    CHECK(again.to_string() == g.to_string());
  }
}

TEST_CASE("errors carry positions") {
  CHECK(error_position("", xy) == 0);
  CHECK(error_position("x + w", xy) == 4);
  CHECK(error_position("x^-2", xy) == 2);
  CHECK_THROWS_AS(parse_polynomial("x^1.5", xy), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^2^3", xy), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1/0*x", xy), ParseError);
  CHECK_THROWS_AS(parse_polynomial("0.5*x", xy), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x +", xy), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x", {"x", "x"}), InputError);
}
