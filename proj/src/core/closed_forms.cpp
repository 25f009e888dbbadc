#include "core/closed_forms.hpp"

#include <chrono>
#include <stdexcept>

#include "core/error.hpp"

namespace nf {

const char* kind_name(ClosedFormKind kind) {
  switch (kind) {
    case ClosedFormKind::Ambient: return "ambient";
    case ClosedFormKind::CurveS2: return "curve-s2";
    case ClosedFormKind::CurveSgt2: return "curve-sgt2";
    case ClosedFormKind::Stellar: return "stellar";
  }
  return "?";
}

ClosedForm ambient_form(const ValuationProfile& profile) {
  ClosedForm form{ClosedFormKind::Ambient, {}};
  for (const auto& u : profile.u_vars()) form.factors.push_back({u, -1});
  return form;
}

ClosedForm shifted_form(const ValuationProfile& profile, ClosedFormKind kind) {
  ClosedForm form = ambient_form(profile);
  form.kind = kind;
  form.factors.push_back({profile.u_f(), +1});
  return form;
}

std::optional<ClosedForm> predicted_form(const ValuationProfile& profile) {
  const bool stellar = profile.diagram().stellar_vertex().has_value();
  const bool curve = profile.num_variables() == 2;
  const std::size_t s = profile.num_facets();
  if (stellar && curve && s > 2) {
    throw std::logic_error("a plane Newton diagram with more than two facets cannot be stellar");
  }
  if (stellar) return shifted_form(profile, ClosedFormKind::Stellar);
  if (curve && s == 2) return shifted_form(profile, ClosedFormKind::CurveS2);
  if (curve && s > 2) {
    ClosedForm form = ambient_form(profile);
    form.kind = ClosedFormKind::CurveSgt2;
    return form;
  }
  return std::nullopt;
}

SeriesBox expand(const ClosedForm& form, const Box& box) {
  SeriesBox out = SeriesBox::one(box);
  for (const auto& factor : form.factors) {
    out = multiply(out, binomial_factor(factor.exponent, factor.sign, box), box);
  }
  return out;
}

SeriesBox ambient_series(const ValuationProfile& profile, const Box& box) {
  if (!box.lower().is_nonnegative()) throw InputError("box", "ambient series needs a box in v >= 0");
  return expand(ambient_form(profile), box);
}

Int lattice_count(const ValuationProfile& profile, const MultiIndex& v) {
  if (v.size() != profile.num_facets()) throw InputError("v", "arity differs from s");
  Int count = 0;
  for_each_on(profile.facet(0), v[0], [&](const Exponent& k) {
    if (u_monomial(profile, k) == v) ++count;
  });
  return count;
}

std::vector<MultiIndex> box_targets(const MultiIndex& upper) {
  std::vector<MultiIndex> out;
  Box::from_origin(upper).for_each([&](const MultiIndex& v) { out.push_back(v); });
  return out;
}

VerificationReport verify(const ValuationProfile& profile, const PolynomialGerm& f,
                          const std::vector<MultiIndex>& targets, Method method,
                          const std::optional<ClosedForm>& candidate, unsigned threads,
                          const MethodAOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t s = profile.num_facets();
  std::optional<ClosedForm> form = candidate ? candidate : predicted_form(profile);

  VerificationReport report;
  report.kind = form ? kind_name(form->kind) : "empirical";
  if (form) report.factors = form->factors;
  report.records = poincare_coefficients(profile, f, targets, method, threads, options);
  report.targets_checked = targets.size();

  if (form && !targets.empty()) {
    MultiIndex corner = MultiIndex::zero(s);
    for (const auto& v : targets) {
      for (std::size_t i = 0; i < s; ++i) corner[i] = std::max(corner[i], v[i]);
    }
    const SeriesBox predicted = expand(*form, Box::from_origin(corner));
    for (const auto& rec : report.records) {
      BigInt expected = predicted.coefficient(rec.v);
      if (expected != rec.coefficient) report.mismatches.push_back({rec.v, expected, rec.coefficient});
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace nf
