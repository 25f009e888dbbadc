#pragma once

#include <map>
#include <vector>

#include "core/lattice.hpp"

namespace nf {

/// Rectangle of exponents lower <= e <= upper (componentwise, inclusive).
class Box {
 public:
  Box(MultiIndex lower, MultiIndex upper);
  /// [0, upper]
  static Box from_origin(MultiIndex upper);
  static Box cube(std::size_t s, Int lower, Int upper);

  std::size_t arity() const { return lower_.size(); }
  const MultiIndex& lower() const { return lower_; }
  const MultiIndex& upper() const { return upper_; }
  bool contains(const MultiIndex& e) const;
  bool contains(const Box& other) const;
  /// Number of lattice points, as a BigInt (boxes can be huge).
  BigInt point_count() const;

  /// Calls fn on every point in lexicographic order.
  template <class Fn>
  void for_each(Fn&& fn) const;

  bool operator==(const Box&) const = default;
  std::string to_string() const;

 private:
  MultiIndex lower_;
  MultiIndex upper_;
};

/// Integer-coefficient series truncated to a box. Only non-zero coefficients
/// are stored.
class SeriesBox {
 public:
  explicit SeriesBox(Box box) : box_(std::move(box)) {}

  static SeriesBox one(const Box& box);

  const Box& box() const { return box_; }
  const std::map<MultiIndex, BigInt>& terms() const { return terms_; }

  /// Throws RangeError outside the box.
  BigInt coefficient(const MultiIndex& e) const;
  /// Adds c at e; silently ignored outside the box (truncation).
  void add(const MultiIndex& e, const BigInt& c);
  void set(const MultiIndex& e, const BigInt& c);

  SeriesBox crop(const Box& smaller) const;

  bool operator==(const SeriesBox&) const = default;

 private:
  Box box_;
  std::map<MultiIndex, BigInt> terms_;
};

/// (1 - t^m) for sign = +1, sum_{r>=0} t^{rm} for sign = -1.
SeriesBox binomial_factor(const MultiIndex& m, int sign, const Box& box);

/// Truncated Cauchy product, optionally split across `threads` workers by
/// output partition; the result does not depend on the split.
SeriesBox multiply(const SeriesBox& a, const SeriesBox& b, const Box& box, unsigned threads = 1);

struct SeriesDiff {
  MultiIndex exponent;
  BigInt left;
  BigInt right;
};

/// Exponents where the coefficients differ, sorted. Throws InputError when the
/// boxes differ.
std::vector<SeriesDiff> compare(const SeriesBox& a, const SeriesBox& b);

template <class Fn>
void Box::for_each(Fn&& fn) const {
  const std::size_t s = arity();
  for (std::size_t i = 0; i < s; ++i) {
    if (lower_[i] > upper_[i]) return;
  }
  MultiIndex e = lower_;
  while (true) {
    fn(static_cast<const MultiIndex&>(e));
    std::size_t i = s;
    while (i > 0) {
      --i;
      if (e[i] < upper_[i]) {
        ++e[i];
        for (std::size_t j = i + 1; j < s; ++j) e[j] = lower_[j];
        break;
      }
      if (i == 0) return;
    }
    if (s == 0) return;
  }
}

}  // namespace nf
