#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "core/linalg.hpp"
#include "core/series.hpp"
#include "core/valuations.hpp"

namespace nf {

/// The pair J(lower) ⊇ J(upper), lower <= upper componentwise.
struct QuotientSpec {
  MultiIndex lower;
  MultiIndex upper;

  /// Throws InputError unless lower <= upper, lower != upper.
  QuotientSpec(MultiIndex lower, MultiIndex upper);
};

enum class Method { A, B, Both };

const char* method_name(Method m);
/// "A", "B" or "both" (case-insensitive). Throws InputError.
Method parse_method(std::string_view text);

/// Monomials k >= 0 with u(x^k) >= lower and not u(x^k) >= upper, sorted.
std::vector<Exponent> boundary_points(const ValuationProfile& profile, const MultiIndex& lower,
                                      const MultiIndex& upper);

/// Truncated translates pi(x^a f) on the monomials outside the ambient
/// J(upper), i.e. those with l_i(k) < upper_i for some i.
struct RelationSystem {
  std::vector<Exponent> columns;  // sorted
  std::map<Exponent, std::size_t> column_index;
  std::vector<Exponent> translates;  // a, one per row
  std::vector<SparseVector> rows;    // non-zero, integer-scaled
  std::size_t rank = 0;
};

RelationSystem relation_rows(const ValuationProfile& profile, const PolynomialGerm& f,
                             const MultiIndex& upper);

/// dim (J_amb(lower) + (f)) / (J_amb(upper) + (f)).
std::size_t quotient_dim_B(const ValuationProfile& profile, const PolynomialGerm& f,
                           const QuotientSpec& spec);
std::size_t quotient_dim_B(const ValuationProfile& profile, const RelationSystem& system,
                           const MultiIndex& lower);

/// max_i upper_i + max |k| over supp f.
Int safe_truncation(const QuotientSpec& spec, const PolynomialGerm& f);

/// Size of the degree <= N truncated ring, C(N + n, n).
BigInt truncated_ring_size(Int truncation, std::size_t variables);

inline constexpr std::uint64_t kMethodASizeLimit = 200000;

struct MethodAOptions {
  std::optional<Int> truncation;  // default: the safe level of each spec
  bool force = false;             // skip the truncated-ring size guard
};

/// dim O/J(c) for J(c) = ∩_i (U_i(c_i) + (f)) in the degree <= N truncation,
/// U_i(c) = span{x^k : l_i(k) >= c}.
std::size_t colength_A(const ValuationProfile& profile, const PolynomialGerm& f, const MultiIndex& c,
                       Int truncation);

/// Literal per-coordinate definition: dim J(lower)/J(upper) with
/// J(c) = ∩_i {g : v_i(g) >= c_i}. Throws InputError if the truncation is
/// below the safe level, or if the truncated ring exceeds kMethodASizeLimit
/// without `force`.
std::size_t quotient_dim_A(const ValuationProfile& profile, const PolynomialGerm& f,
                           const QuotientSpec& spec, const MethodAOptions& options = {});

/// Both methods on every quotient J(v+1_I)/J(v+1), I ranging over all
/// subsets of facets (bit masks).
struct MethodComparison {
  MultiIndex v;
  std::vector<Int> dims_a;
  std::vector<Int> dims_b;
  bool agree() const { return dims_a == dims_b; }
};

MethodComparison compare_methods(const ValuationProfile& profile, const PolynomialGerm& f,
                                 const MultiIndex& v, const MethodAOptions& options = {});

/// One coefficient of the Poincaré series with its inclusion–exclusion data.
/// Subsets of facets are bit masks (bit i = facet i).
struct CoefficientRecord {
  MultiIndex v;
  Method method = Method::B;
  Int coefficient = 0;
  std::optional<Int> value_a;
  std::optional<Int> value_b;
  std::vector<Int> dims_a;  // indexed by subset mask
  std::vector<Int> dims_b;
  std::size_t boundary_count = 0;
  std::size_t relation_rank = 0;
  bool discrepancy = false;
};

/// Sum over I of (-1)^|I| dim J(v+1_I)/J(v+1). Method B builds the
/// single-step spaces J(v+1_i)/J(v+1) from boundary monomials modulo
/// translates and takes |I| >= 2 terms as their intersections; method A uses
/// the literal definition.
CoefficientRecord poincare_coefficient(const ValuationProfile& profile, const PolynomialGerm& f,
                                       const MultiIndex& v, Method method,
                                       const MethodAOptions& options = {});

/// Coefficients for every target, evaluated on `threads` workers, returned in
/// target order.
std::vector<CoefficientRecord> poincare_coefficients(const ValuationProfile& profile,
                                                     const PolynomialGerm& f,
                                                     const std::vector<MultiIndex>& targets,
                                                     Method method, unsigned threads = 1,
                                                     const MethodAOptions& options = {});

/// d(v) = dim J(v)/J(v+1), any integer v.
std::size_t d_of_v(const ValuationProfile& profile, const PolynomialGerm& f, const MultiIndex& v);

SeriesBox L_series(const ValuationProfile& profile, const PolynomialGerm& f, const Box& box,
                   unsigned threads = 1);

struct IdentityCheck {
  Box inner;
  Int margin;
  std::vector<SeriesDiff> diffs;  // (P * (t_1...t_s - 1)) vs (L * prod(t_i - 1))
};

/// Checks P(t)(t_1...t_s - 1) = L(t) prod(t_i - 1) on the inner box [0, bound],
/// with L assembled on the box widened by `margin` (>= 2) on every side.
IdentityCheck ps_identity_check(const ValuationProfile& profile, const PolynomialGerm& f,
                                const MultiIndex& bound, Int margin = 2, unsigned threads = 1);

/// {u(x^k)} ∪ {u(x^k) + u(f)} over |k| <= bound, plus u(f); sorted.
std::vector<MultiIndex> target_set(const ValuationProfile& profile, Int bound);

}  // namespace nf
