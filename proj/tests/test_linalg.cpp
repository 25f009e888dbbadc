#include <doctest.h>

#include <random>

#include "core/linalg.hpp"
#include "oracles.hpp"

using namespace nf;

namespace {

SparseVector sparse(const std::vector<long>& dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) out.emplace_back(i, BigInt(dense[i]));
  }
  return out;
}

oracle::Matrix dense(const std::vector<SparseVector>& rows, std::size_t dim) {
  oracle::Matrix out;
  for (const auto& row : rows) {
    std::vector<mpq_class> d(dim);
    for (const auto& [c, x] : row) d[c] = x;
    out.push_back(d);
  }
  return out;
}

std::vector<SparseVector> random_rows(std::mt19937& rng, std::size_t count, std::size_t dim,
                                      int density) {
  std::uniform_int_distribution<int> value(-4, 4), coin(0, 9);
  std::vector<SparseVector> rows;
  for (std::size_t r = 0; r < count; ++r) {
    std::vector<long> d(dim, 0);
    for (auto& x : d) x = coin(rng) < density ? value(rng) : 0;
    rows.push_back(sparse(d));
  }
  return rows;
}

}  // namespace

TEST_CASE("rank of small matrices") {
  CHECK(rank_of({}) == 0);
  CHECK(rank_of({sparse({1, 2, 3}), sparse({2, 4, 6}), sparse({0, 0, 0})}) == 1);
  CHECK(rank_of({sparse({1, 0, 1}), sparse({0, 1, 1}), sparse({1, 1, 2})}) == 2);
}

TEST_CASE("denominators are cleared without changing the row") {
  auto row = to_integer_vector({{0, Rational(1, 2)}, {3, Rational(-2, 3)}, {5, Rational(0)}});
  CHECK(row == SparseVector{{0, BigInt(3)}, {3, BigInt(-4)}});
}

TEST_CASE("echelon rank and membership agree with dense elimination") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t dim = 3 + trial % 9;
    auto rows = random_rows(rng, 1 + trial % 12, dim, 1 + trial % 8);
    RowEchelon echelon;
    for (const auto& r : rows) echelon.insert(r);
    CHECK(echelon.rank() == oracle::rank(dense(rows, dim)));
    auto probe = random_rows(rng, 1, dim, 5).front();
    auto with = rows;
    with.push_back(probe);
    CHECK(echelon.contains(probe) == (oracle::rank(dense(with, dim)) == echelon.rank()));
  }
}

TEST_CASE("Zassenhaus intersection has the dimension of the oracle's") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = 4 + trial % 6;
    auto u = random_rows(rng, 1 + trial % 5, dim, 6);
    auto w = random_rows(rng, 1 + (trial / 2) % 5, dim, 6);
    auto meet = intersect_spans(u, w, dim);
    auto expected = oracle::intersect(dense(u, dim), dense(w, dim), dim);
    CHECK(meet.size() == expected.size());
    // every basis vector lies in both spans
    for (const auto& x : meet) {
      RowEchelon eu, ew;
      for (const auto& r : u) eu.insert(r);
      for (const auto& r : w) ew.insert(r);
      CHECK(eu.contains(x));
      CHECK(ew.contains(x));
    }
  }
}

TEST_CASE("Bareiss determinant") {
  CHECK(determinant({}) == 1);
  CHECK(determinant({{BigInt(7)}}) == 7);
  CHECK(determinant({{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(0)}}) == -1);
  CHECK(determinant({{BigInt(2), BigInt(0), BigInt(1)},
                     {BigInt(1), BigInt(3), BigInt(2)},
                     {BigInt(1), BigInt(1), BigInt(2)}}) == 6);
  CHECK(determinant({{BigInt(1), BigInt(2)}, {BigInt(2), BigInt(4)}}) == 0);
}
