#include "core/linalg.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace nf {

SparseVector to_integer_vector(const std::map<std::size_t, Rational>& entries) {
  BigInt denominator_lcm = 1;
  for (const auto& [col, q] : entries) {
    mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(),
            q.get_den_mpz_t());
  }
  SparseVector out;
  out.reserve(entries.size());
  for (const auto& [col, q] : entries) {
    if (q == 0) continue;
    BigInt scaled = q.get_num() * (denominator_lcm / q.get_den());
    out.emplace_back(col, std::move(scaled));
  }
  return out;
}

void make_primitive(SparseVector& v) {
  if (v.empty()) return;
  BigInt g = 0;
  for (const auto& [col, x] : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  const bool negate = v.front().second < 0;
  if (g == 1 && !negate) return;
  for (auto& [col, x] : v) {
    if (g != 1) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    if (negate) x = -x;
  }
}

namespace {

// scale_a * a - scale_b * b
SparseVector combine(const SparseVector& a, const BigInt& scale_a, const SparseVector& b,
                     const BigInt& scale_b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  BigInt value;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      value = scale_a * a[i].second;
      out.emplace_back(a[i].first, value);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      value = -(scale_b * b[j].second);
      out.emplace_back(b[j].first, value);
      ++j;
    } else {
      value = scale_a * a[i].second - scale_b * b[j].second;
      if (value != 0) out.emplace_back(a[i].first, value);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseVector RowEchelon::reduce(SparseVector row) const {
  make_primitive(row);
  while (!row.empty()) {
    auto it = pivot_row_.find(row.front().first);
    if (it == pivot_row_.end()) break;
    const SparseVector& pivot = rows_[it->second];
    BigInt g;
    mpz_gcd(g.get_mpz_t(), pivot.front().second.get_mpz_t(), row.front().second.get_mpz_t());
    BigInt scale_row = pivot.front().second / g;
    BigInt scale_pivot = row.front().second / g;
    row = combine(row, scale_row, pivot, scale_pivot);
    make_primitive(row);
  }
  return row;
}

bool RowEchelon::insert(SparseVector row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  pivot_row_.emplace(row.front().first, rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

bool RowEchelon::contains(SparseVector row) const { return reduce(std::move(row)).empty(); }

std::size_t rank_of(const std::vector<SparseVector>& rows) {
  RowEchelon echelon;
  for (const auto& r : rows) echelon.insert(r);
  return echelon.rank();
}

std::vector<SparseVector> intersect_spans(const std::vector<SparseVector>& u,
                                          const std::vector<SparseVector>& w,
                                          std::size_t dimension) {
  if (u.empty() || w.empty()) return {};
  RowEchelon echelon;
  for (const auto& row : u) {
    SparseVector doubled = row;
    for (const auto& [col, x] : row) doubled.emplace_back(col + dimension, x);
    echelon.insert(std::move(doubled));
  }
  for (const auto& row : w) echelon.insert(row);
  std::vector<SparseVector> basis;
  for (const auto& row : echelon.rows()) {
    if (row.front().first < dimension) continue;
    SparseVector right;
    right.reserve(row.size());
    for (const auto& [col, x] : row) right.emplace_back(col - dimension, x);
    basis.push_back(std::move(right));
  }
  return basis;
}

BigInt determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw InputError("determinant of a non-square matrix");
  }
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace nf
