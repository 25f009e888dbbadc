#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "core/diagram.hpp"
#include "core/polynomial.hpp"

namespace nf {

/// Value of the zero germ.
struct Infinite {
  bool operator==(const Infinite&) const = default;
};

/// "At least `budget`": the search stopped without finding the maximum.
struct AtLeast {
  Int budget;
  bool operator==(const AtLeast&) const = default;
};

using GermValue = std::variant<MultiIndex, Infinite>;
using OrderValue = std::variant<Int, AtLeast>;

/// Facet valuations u_i(x^k) = l_i(k) with cached values on the variables and
/// on the defining germ.
class ValuationProfile {
 public:
  explicit ValuationProfile(NewtonDiagram diagram);

  const NewtonDiagram& diagram() const { return diagram_; }
  std::size_t num_facets() const { return diagram_.num_facets(); }
  std::size_t num_variables() const { return diagram_.num_variables(); }
  const LinearForm& facet(std::size_t i) const { return diagram_.facet(i); }
  const std::vector<MultiIndex>& u_vars() const { return u_vars_; }
  const MultiIndex& u_f() const { return u_f_; }
  Int max_degree() const;

 private:
  NewtonDiagram diagram_;
  std::vector<MultiIndex> u_vars_;
  MultiIndex u_f_;
};

MultiIndex u_monomial(const ValuationProfile& profile, const Exponent& k);

/// Componentwise minimum over the support; Infinite for the zero germ.
GermValue u_germ(const ValuationProfile& profile, const PolynomialGerm& g);

/// u_i(g) alone (the germ must be non-zero).
Int u_germ_at(const ValuationProfile& profile, const PolynomialGerm& g, std::size_t i);

/// max of u_i over the class g + (f), searched up to `budget`. The default
/// budget is u_i(g) + 3 max_i d_i.
OrderValue order_value(const ValuationProfile& profile, const PolynomialGerm& f,
                       const PolynomialGerm& g, std::size_t facet,
                       std::optional<Int> budget = std::nullopt);

/// True iff g lies in span{x^k : l_i(k) >= level} + (f).
bool in_level(const ValuationProfile& profile, const PolynomialGerm& f, const PolynomialGerm& g,
              std::size_t facet, Int level);

}  // namespace nf
