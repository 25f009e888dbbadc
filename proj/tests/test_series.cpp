#include <doctest.h>

#include "core/error.hpp"
#include "core/series.hpp"

using namespace nf;

TEST_CASE("geometric series") {
  auto g = binomial_factor({2, 3}, -1, Box::cube(2, 0, 6));
  CHECK(g.terms().size() == 3);
  for (MultiIndex e : {MultiIndex{0, 0}, MultiIndex{2, 3}, MultiIndex{4, 6}}) CHECK(g.coefficient(e) == 1);
  auto d = binomial_factor({1, 1}, -1, Box::cube(2, 0, 2));
  CHECK(d.terms().size() == 3);
  CHECK(d.coefficient({2, 2}) == 1);
  auto h = binomial_factor({0, 2}, -1, Box::cube(2, 0, 5));
  CHECK(h.terms().size() == 3);
}

TEST_CASE("binomial (1 - t^m)") {
  auto b = binomial_factor({10, 10}, 1, Box::cube(2, 0, 12));
  CHECK(b.coefficient({0, 0}) == 1);
  CHECK(b.coefficient({10, 10}) == -1);
  CHECK(b.terms().size() == 2);
  CHECK_THROWS_AS(binomial_factor({0, 0}, -1, Box::cube(2, 0, 3)), InputError);
  CHECK_THROWS_AS(binomial_factor({1, -1}, 1, Box::cube(2, 0, 3)), InputError);
}

TEST_CASE("the curve's closed form vanishes at (10,10)") {
  Box box = Box::cube(2, 0, 12);
  auto ambient = multiply(binomial_factor({2, 3}, -1, box), binomial_factor({3, 2}, -1, box), box);
  CHECK(ambient.coefficient({10, 10}) == 1);
  CHECK(ambient.coefficient({5, 5}) == 1);
  auto product = multiply(binomial_factor({10, 10}, 1, box), ambient, box);
  CHECK(product.coefficient({10, 10}) == 0);
}

TEST_CASE("identity and inverse pairs") {
  Box box = Box::cube(3, 0, 9);
  auto a = binomial_factor({1, 2, 3}, -1, box);
  CHECK(multiply(a, SeriesBox::one(box), box) == a);
  for (MultiIndex m : {MultiIndex{1, 2, 3}, MultiIndex{0, 0, 4}, MultiIndex{5, 1, 1}}) {
    auto prod = multiply(binomial_factor(m, -1, box), binomial_factor(m, 1, box), box);
    CHECK(prod == SeriesBox::one(box));
  }
}

TEST_CASE("coefficient outside the box is an error") {
  SeriesBox s(Box(MultiIndex{-2, -2}, MultiIndex{3, 3}));
  s.add({-1, 2}, 5);
  CHECK(s.coefficient({-1, 2}) == 5);
  CHECK(s.coefficient({-2, -2}) == 0);
  CHECK_THROWS_AS(s.coefficient({4, 0}), RangeError);
}

TEST_CASE("compare lists the differing exponents") {
  Box box = Box::cube(2, 0, 4);
  auto a = binomial_factor({1, 1}, -1, box);
  CHECK(compare(a, a).empty());
  auto b = a;
  b.add({2, 2}, 3);
  b.add({0, 1}, -1);
  auto diffs = compare(a, b);
  REQUIRE(diffs.size() == 2);
  CHECK(diffs[0].exponent == MultiIndex{0, 1});
  CHECK(diffs[1].exponent == MultiIndex{2, 2});
  CHECK(diffs[1].left == 1);
  CHECK(diffs[1].right == 4);
  CHECK_THROWS_AS(compare(a, SeriesBox(Box::cube(2, 0, 5))), InputError);
}

TEST_CASE("threaded products equal the serial product") {
  Box box = Box::cube(2, 0, 25);
  auto a = multiply(binomial_factor({2, 3}, -1, box), binomial_factor({3, 1}, -1, box), box);
  auto b = multiply(binomial_factor({1, 4}, -1, box), binomial_factor({5, 5}, 1, box), box);
  CHECK(multiply(a, b, box, 1) == multiply(a, b, box, 4));
}

TEST_CASE("box iteration order and counts") {
  Box box(MultiIndex{-1, 0}, MultiIndex{1, 1});
  std::vector<MultiIndex> seen;
  box.for_each([&](const MultiIndex& e) { seen.push_back(e); });
  CHECK(seen.size() == 6);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(box.point_count() == 6);
  CHECK(Box(MultiIndex{2}, MultiIndex{1}).point_count() == 0);
}
