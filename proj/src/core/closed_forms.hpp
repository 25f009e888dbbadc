#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/filtration.hpp"

namespace nf {

enum class ClosedFormKind { Ambient, CurveS2, CurveSgt2, Stellar };

const char* kind_name(ClosedFormKind kind);

struct Factor {
  MultiIndex exponent;
  int sign;  // +1: (1 - t^m), -1: (1 - t^m)^{-1}
};

struct ClosedForm {
  ClosedFormKind kind;
  std::vector<Factor> factors;
};

/// prod_j (1 - t^{u(x_j)})^{-1}
ClosedForm ambient_form(const ValuationProfile& profile);
/// Ambient factors times (1 - t^{u(f)}).
ClosedForm shifted_form(const ValuationProfile& profile, ClosedFormKind kind);

/// Stellar diagrams, then plane curves (s = 2 and s > 2); nullopt otherwise.
std::optional<ClosedForm> predicted_form(const ValuationProfile& profile);

SeriesBox expand(const ClosedForm& form, const Box& box);

SeriesBox ambient_series(const ValuationProfile& profile, const Box& box);

/// #{k >= 0 : l_i(k) = v_i for all i}, by direct enumeration.
Int lattice_count(const ValuationProfile& profile, const MultiIndex& v);

struct Mismatch {
  MultiIndex v;
  BigInt predicted;
  Int computed;
};

struct VerificationReport {
  std::string kind;  // closed-form kind, or "empirical" without a prediction
  std::vector<Factor> factors;
  std::size_t targets_checked = 0;
  std::vector<Mismatch> mismatches;
  std::vector<CoefficientRecord> records;
  double elapsed_ms = 0;
};

/// Compares the closed form (the dispatched prediction unless `candidate` is
/// given) with brute-force coefficients at every target. Without any
/// prediction the coefficients are still computed and labelled "empirical".
VerificationReport verify(const ValuationProfile& profile, const PolynomialGerm& f,
                          const std::vector<MultiIndex>& targets, Method method,
                          const std::optional<ClosedForm>& candidate = std::nullopt,
                          unsigned threads = 1, const MethodAOptions& options = {});

/// Every point of [0, upper].
std::vector<MultiIndex> box_targets(const MultiIndex& upper);

}  // namespace nf
