#include "core/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "core/error.hpp"

namespace nf {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw RangeError("lattice arithmetic overflow");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw RangeError("lattice arithmetic overflow");
  return r;
}

namespace {

std::string join(std::span<const Int> xs) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ',';
    out << xs[i];
  }
  out << ')';
  return out.str();
}

}  // namespace

Exponent::Exponent(std::vector<Int> entries) : entries_(std::move(entries)) {
  for (Int e : entries_) {
    if (e < 0) throw InputError("exponent entries must be non-negative");
  }
}

Exponent::Exponent(std::initializer_list<Int> entries) : Exponent(std::vector<Int>(entries)) {}

Exponent Exponent::zero(std::size_t n) { return Exponent(std::vector<Int>(n, 0)); }

Int Exponent::total_degree() const {
  Int total = 0;
  for (Int e : entries_) total = checked_add(total, e);
  return total;
}

bool Exponent::dominates(const Exponent& other) const {
  if (size() != other.size()) throw InputError("exponent dimension mismatch");
  for (std::size_t j = 0; j < size(); ++j) {
    if (entries_[j] < other.entries_[j]) return false;
  }
  return true;
}

Exponent Exponent::operator+(const Exponent& other) const {
  if (size() != other.size()) throw InputError("exponent dimension mismatch");
  std::vector<Int> sum(size());
  for (std::size_t j = 0; j < size(); ++j) sum[j] = checked_add(entries_[j], other.entries_[j]);
  return Exponent(std::move(sum));
}

std::string Exponent::to_string() const { return join(entries_); }

bool MultiIndex::is_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Int x) { return x >= 0; });
}

bool MultiIndex::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Int x) { return x == 0; });
}

Int MultiIndex::max_entry() const {
  if (entries_.empty()) throw InputError("empty multi-index");
  return *std::max_element(entries_.begin(), entries_.end());
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (size() != other.size()) throw InputError("multi-index length mismatch");
  std::vector<Int> r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = checked_add(entries_[i], other.entries_[i]);
  return MultiIndex(std::move(r));
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  if (size() != other.size()) throw InputError("multi-index length mismatch");
  std::vector<Int> r(size());
  for (std::size_t i = 0; i < size(); ++i) {
    Int d;
    if (__builtin_sub_overflow(entries_[i], other.entries_[i], &d)) {
      throw RangeError("lattice arithmetic overflow");
    }
    r[i] = d;
  }
  return MultiIndex(std::move(r));
}

std::string MultiIndex::to_string() const { return join(entries_); }

MultiIndex indicator_tuple(std::uint32_t subset_mask, std::size_t s) {
  if (s < 32 && (subset_mask >> s) != 0) throw InputError("subset not contained in {1..s}");
  std::vector<Int> r(s, 0);
  for (std::size_t i = 0; i < s; ++i) r[i] = (subset_mask >> i) & 1u;
  return MultiIndex(std::move(r));
}

MultiIndex indicator_tuple(std::span<const std::size_t> subset, std::size_t s) {
  std::vector<Int> r(s, 0);
  for (std::size_t i : subset) {
    if (i >= s) throw InputError("subset not contained in {1..s}");
    r[i] = 1;
  }
  return MultiIndex(std::move(r));
}

bool geq(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) throw InputError("multi-index length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

LinearForm::LinearForm(std::vector<Int> coefficients, Int degree)
    : coefficients_(std::move(coefficients)), degree_(degree) {
  if (coefficients_.empty()) throw InputError("linear form needs at least one coefficient");
  Int g = degree_;
  for (Int a : coefficients_) {
    if (a < 1) throw InputError("facet coefficients must be positive: " + to_string());
    g = std::gcd(g, a);
  }
  if (degree_ < 1) throw InputError("facet degree must be positive: " + to_string());
  if (g != 1) {
    throw InputError("facet " + to_string() + " is not gcd-normalized (gcd " + std::to_string(g) +
                     ")");
  }
}

LinearForm LinearForm::normalized(std::vector<Int> coefficients, Int degree) {
  Int g = degree;
  for (Int a : coefficients) g = std::gcd(g, a);
  if (g > 1) {
    for (Int& a : coefficients) a /= g;
    degree /= g;
  }
  return LinearForm(std::move(coefficients), degree);
}

Int LinearForm::evaluate(const Exponent& k) const {
  if (k.size() != coefficients_.size()) throw InputError("linear form dimension mismatch");
  Int total = 0;
  for (std::size_t j = 0; j < k.size(); ++j) {
    total = checked_add(total, checked_mul(coefficients_[j], k[j]));
  }
  return total;
}

std::string LinearForm::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t j = 0; j < coefficients_.size(); ++j) {
    if (j) out << ',';
    out << coefficients_[j];
  }
  out << '|' << degree_ << ')';
  return out.str();
}

Int evaluate_form(const LinearForm& form, const Exponent& k) { return form.evaluate(k); }

}  // namespace nf
