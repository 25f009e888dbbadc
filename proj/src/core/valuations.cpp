#include "core/valuations.hpp"

#include <algorithm>
#include <map>

#include "core/error.hpp"
#include "core/linalg.hpp"

namespace nf {

ValuationProfile::ValuationProfile(NewtonDiagram diagram)
    : diagram_(std::move(diagram)),
      u_vars_(u_of_variables(diagram_)),
      u_f_(u_of_f(diagram_)) {}

Int ValuationProfile::max_degree() const { return u_f_.max_entry(); }

MultiIndex u_monomial(const ValuationProfile& profile, const Exponent& k) {
  std::vector<Int> values;
  values.reserve(profile.num_facets());
  for (const auto& form : profile.diagram().facets()) values.push_back(evaluate_form(form, k));
  return MultiIndex(std::move(values));
}

GermValue u_germ(const ValuationProfile& profile, const PolynomialGerm& g) {
  if (g.is_zero()) return Infinite{};
  std::vector<Int> best;
  for (const auto& [k, c] : g.terms()) {
    MultiIndex u = u_monomial(profile, k);
    if (best.empty()) {
      best = u.vector();
    } else {
      for (std::size_t i = 0; i < best.size(); ++i) best[i] = std::min(best[i], u[i]);
    }
  }
  return MultiIndex(std::move(best));
}

Int u_germ_at(const ValuationProfile& profile, const PolynomialGerm& g, std::size_t i) {
  if (g.is_zero()) throw InputError("valuation of the zero germ is infinite");
  const LinearForm& form = profile.facet(i);
  Int best = form.evaluate(g.terms().begin()->first);
  for (const auto& [k, c] : g.terms()) best = std::min(best, form.evaluate(k));
  return best;
}

bool in_level(const ValuationProfile& profile, const PolynomialGerm& f, const PolynomialGerm& g,
              std::size_t facet, Int level) {
  // Work modulo span{x^k : l(k) >= level}: coordinates are the finitely many
  // monomials below the level. Only translates x^a f with l(a) + d < level
  // survive the projection.
  const LinearForm& form = profile.facet(facet);
  std::map<Exponent, std::size_t> column;
  for_each_at_most(form, level - 1, [&](const Exponent& k) { column.emplace(k, 0); });
  std::size_t next = 0;
  for (auto& [k, idx] : column) idx = next++;

  auto project = [&](const PolynomialGerm& h, const Exponent& shift) {
    std::map<std::size_t, Rational> entries;
    for (const auto& [k, c] : h.terms()) {
      auto it = column.find(k + shift);
      if (it != column.end()) entries[it->second] += c;
    }
    return to_integer_vector(entries);
  };

  SparseVector target = project(g, Exponent::zero(g.num_variables()));
  if (target.empty()) return true;
  RowEchelon relations;
  for_each_at_most(form, level - 1 - form.degree(), [&](const Exponent& a) {
    SparseVector row = project(f, a);
    if (!row.empty()) relations.insert(std::move(row));
  });
  return relations.contains(std::move(target));
}

OrderValue order_value(const ValuationProfile& profile, const PolynomialGerm& f,
                       const PolynomialGerm& g, std::size_t facet, std::optional<Int> budget) {
  if (facet >= profile.num_facets()) throw InputError("facet index out of range");
  const Int spread = checked_mul(3, profile.max_degree());
  if (g.is_zero()) return AtLeast{budget.value_or(spread)};
  const Int base = u_germ_at(profile, g, facet);
  const Int limit = budget.value_or(checked_add(base, spread));
  if (limit < base) {
    throw InputError("budget " + std::to_string(limit) + " is below u_i(g) = " +
                     std::to_string(base));
  }
  for (Int level = base + 1; level <= limit; ++level) {
    if (!in_level(profile, f, g, facet, level)) return level - 1;
  }
  return AtLeast{limit};
}

}  // namespace nf
