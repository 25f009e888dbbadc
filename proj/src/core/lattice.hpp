#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace nf {

using Int = std::int64_t;
using BigInt = mpz_class;
using Rational = mpq_class;

// Overflow-checked lattice arithmetic. Throws RangeError.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Monomial exponent k = (k_1, ..., k_n), every entry >= 0.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::vector<Int> entries);
  Exponent(std::initializer_list<Int> entries);

  static Exponent zero(std::size_t n);

  std::size_t size() const { return entries_.size(); }
  Int operator[](std::size_t j) const { return entries_[j]; }
  std::span<const Int> entries() const { return entries_; }

  Int total_degree() const;
  /// Componentwise k >= other.
  bool dominates(const Exponent& other) const;

  Exponent operator+(const Exponent& other) const;

  auto operator<=>(const Exponent&) const = default;
  bool operator==(const Exponent&) const = default;

  std::string to_string() const;

 private:
  std::vector<Int> entries_;
};

/// An s-tuple of integers: filtration indices and series exponents. Entries
/// may be negative.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<Int> entries) : entries_(std::move(entries)) {}
  MultiIndex(std::initializer_list<Int> entries) : entries_(entries) {}

  static MultiIndex zero(std::size_t s) { return MultiIndex(std::vector<Int>(s, 0)); }
  static MultiIndex constant(std::size_t s, Int value) {
    return MultiIndex(std::vector<Int>(s, value));
  }

  std::size_t size() const { return entries_.size(); }
  Int operator[](std::size_t i) const { return entries_[i]; }
  Int& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Int> entries() const { return entries_; }
  const std::vector<Int>& vector() const { return entries_; }

  bool is_nonnegative() const;
  bool is_zero() const;
  Int max_entry() const;

  MultiIndex operator+(const MultiIndex& other) const;
  MultiIndex operator-(const MultiIndex& other) const;

  auto operator<=>(const MultiIndex&) const = default;
  bool operator==(const MultiIndex&) const = default;

  std::string to_string() const;

 private:
  std::vector<Int> entries_;
};

/// 1_I for the subset I of {0, ..., s-1} encoded as a bit mask.
MultiIndex indicator_tuple(std::uint32_t subset_mask, std::size_t s);
MultiIndex indicator_tuple(std::span<const std::size_t> subset, std::size_t s);

/// Componentwise partial order a >= b. Throws InputError on length mismatch.
bool geq(const MultiIndex& a, const MultiIndex& b);

/// Facet equation a_1 k_1 + ... + a_n k_n = d with positive integers,
/// gcd(a_1, ..., a_n, d) = 1. Ordered lexicographically by (coefficients,
/// degree).
class LinearForm {
 public:
  /// Validates positivity and primitivity; throws InputError otherwise.
  LinearForm(std::vector<Int> coefficients, Int degree);

  /// Divides out the common gcd first.
  static LinearForm normalized(std::vector<Int> coefficients, Int degree);

  std::size_t dimension() const { return coefficients_.size(); }
  std::span<const Int> coefficients() const { return coefficients_; }
  Int coefficient(std::size_t j) const { return coefficients_[j]; }
  Int degree() const { return degree_; }

  Int evaluate(const Exponent& k) const;

  auto operator<=>(const LinearForm&) const = default;
  bool operator==(const LinearForm&) const = default;

  std::string to_string() const;

 private:
  std::vector<Int> coefficients_;
  Int degree_ = 0;
};

/// sum_j a_j k_j. Throws InputError on dimension mismatch.
Int evaluate_form(const LinearForm& form, const Exponent& k);

/// Visit every k >= 0 with form(k) <= bound. Finite because all a_j >= 1.
template <class Fn>
void for_each_at_most(const LinearForm& form, Int bound, Fn&& fn);

/// Visit every k >= 0 with form(k) == value.
template <class Fn>
void for_each_on(const LinearForm& form, Int value, Fn&& fn);

namespace detail {
template <class Fn>
void enumerate_bounded(std::span<const Int> a, std::size_t j, std::vector<Int>& k, Int used,
                       Int bound, bool exact, Fn& fn) {
  const std::size_t n = a.size();
  if (j + 1 == n) {
    const Int room = bound - used;
    if (exact) {
      if (room % a[j] != 0) return;
      k[j] = room / a[j];
      fn(Exponent(k));
      return;
    }
    for (Int e = 0; e * a[j] <= room; ++e) {
      k[j] = e;
      fn(Exponent(k));
    }
    return;
  }
  for (Int e = 0; used + e * a[j] <= bound; ++e) {
    k[j] = e;
    enumerate_bounded(a, j + 1, k, used + e * a[j], bound, exact, fn);
  }
  k[j] = 0;
}
}  // namespace detail

template <class Fn>
void for_each_at_most(const LinearForm& form, Int bound, Fn&& fn) {
  if (bound < 0) return;
  std::vector<Int> k(form.dimension(), 0);
  detail::enumerate_bounded(form.coefficients(), 0, k, 0, bound, false, fn);
}

template <class Fn>
void for_each_on(const LinearForm& form, Int value, Fn&& fn) {
  if (value < 0) return;
  std::vector<Int> k(form.dimension(), 0);
  detail::enumerate_bounded(form.coefficients(), 0, k, 0, value, true, fn);
}

}  // namespace nf
