#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/lattice.hpp"

namespace nf {

/// Finite germ sum c_k x^k with exact rational coefficients. No stored
/// coefficient is zero.
class PolynomialGerm {
 public:
  PolynomialGerm() = default;
  explicit PolynomialGerm(std::vector<std::string> variables);

  std::size_t num_variables() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }

  /// Adds c x^k, combining like terms and dropping cancellations.
  void add_term(const Exponent& k, const Rational& c);

  const std::map<Exponent, Rational>& terms() const { return terms_; }
  Rational coefficient(const Exponent& k) const;
  std::vector<Exponent> support() const;
  bool is_zero() const { return terms_.empty(); }
  Int max_total_degree() const;

  /// x^a * g.
  PolynomialGerm shifted(const Exponent& a) const;

  /// Canonical text, terms in descending lexicographic exponent order.
  /// parse_polynomial(to_string()) reproduces the germ.
  std::string to_string() const;

  bool operator==(const PolynomialGerm&) const = default;

 private:
  std::vector<std::string> variables_;
  std::map<Exponent, Rational> terms_;
};

}  // namespace nf
