#include "core/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "core/error.hpp"

namespace nf {

PolynomialGerm::PolynomialGerm(std::vector<std::string> variables)
    : variables_(std::move(variables)) {}

void PolynomialGerm::add_term(const Exponent& k, const Rational& c) {
  if (k.size() != variables_.size()) throw InputError("term dimension does not match variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational PolynomialGerm::coefficient(const Exponent& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Exponent> PolynomialGerm::support() const {
  std::vector<Exponent> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.push_back(k);
  return out;
}

Int PolynomialGerm::max_total_degree() const {
  Int best = 0;
  for (const auto& [k, c] : terms_) best = std::max(best, k.total_degree());
  return best;
}

PolynomialGerm PolynomialGerm::shifted(const Exponent& a) const {
  PolynomialGerm out(variables_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k + a, c);
  return out;
}

std::string PolynomialGerm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = k.total_degree() == 0;
    bool wrote = false;
    if (magnitude != 1 || constant) {
      out << magnitude.get_str();
      wrote = true;
    }
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (k[j] == 0) continue;
      if (wrote) out << '*';
      out << variables_[j];
      if (k[j] != 1) out << '^' << k[j];
      wrote = true;
    }
  }
  return out.str();
}

}  // namespace nf
