#include "core/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "core/error.hpp"
#include "core/linalg.hpp"

namespace nf {

namespace {

bool on_facet(const LinearForm& form, const Exponent& k) { return form.evaluate(k) == form.degree(); }

// A point of a convenient polyhedron is a vertex iff the normals of the facets
// through it span R^n. Non-compact facets lie in the coordinate hyperplanes.
bool is_vertex(const Exponent& p, const std::vector<LinearForm>& facets) {
  const std::size_t n = p.size();
  RowEchelon normals;
  bool on_some_facet = false;
  for (const auto& form : facets) {
    if (!on_facet(form, p)) continue;
    on_some_facet = true;
    SparseVector row;
    for (std::size_t j = 0; j < n; ++j) row.emplace_back(j, BigInt(form.coefficient(j)));
    normals.insert(std::move(row));
  }
  if (!on_some_facet) return false;
  for (std::size_t j = 0; j < n; ++j) {
    if (p[j] == 0) normals.insert(SparseVector{{j, BigInt(1)}});
  }
  return normals.rank() == n;
}

std::optional<Exponent> common_vertex(const std::vector<LinearForm>& facets,
                                      const std::vector<Exponent>& vertices) {
  for (const auto& m : vertices) {  // vertices are sorted
    if (std::all_of(facets.begin(), facets.end(),
                    [&](const LinearForm& form) { return on_facet(form, m); })) {
      return m;
    }
  }
  return std::nullopt;
}

// Hyperplane through n points: normal entries are signed maximal minors of the
// difference matrix.
std::optional<LinearForm> hyperplane_through(const std::vector<const Exponent*>& pts,
                                             const std::vector<Exponent>& reduced) {
  const std::size_t n = pts.size();
  std::vector<std::vector<BigInt>> diff(n - 1, std::vector<BigInt>(n));
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t j = 0; j < n; ++j) diff[r - 1][j] = BigInt((*pts[r])[j] - (*pts[0])[j]);
  }
  std::vector<BigInt> normal(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<BigInt>> minor(n - 1);
    for (std::size_t r = 0; r + 1 < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) minor[r].push_back(diff[r][c]);
      }
    }
    normal[j] = determinant(std::move(minor));
    if (j % 2 == 1) normal[j] = -normal[j];
  }
  if (normal.front() < 0) {
    for (auto& a : normal) a = -a;
  }
  if (std::any_of(normal.begin(), normal.end(), [](const BigInt& a) { return a <= 0; })) {
    return std::nullopt;  // degenerate, mixed signs, or a zero entry (non-compact)
  }
  BigInt degree = 0;
  for (std::size_t j = 0; j < n; ++j) degree += normal[j] * (*pts[0])[j];
  for (const auto& k : reduced) {
    BigInt value = 0;
    for (std::size_t j = 0; j < n; ++j) value += normal[j] * k[j];
    if (value < degree) return std::nullopt;
  }
  BigInt g = degree;
  for (const auto& a : normal) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  std::vector<Int> coeffs;
  for (const auto& a : normal) {
    BigInt q = a / g;
    if (!q.fits_slong_p()) throw RangeError("facet normal too large");
    coeffs.push_back(q.get_si());
  }
  BigInt d = degree / g;
  if (!d.fits_slong_p()) throw RangeError("facet degree too large");
  return LinearForm(std::move(coeffs), d.get_si());
}

void for_each_subset(std::size_t count, std::size_t size,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> pick(size);
  std::iota(pick.begin(), pick.end(), 0);
  if (size > count) return;
  while (true) {
    fn(pick);
    std::size_t i = size;
    while (i > 0 && pick[i - 1] == count - size + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

NewtonDiagram::NewtonDiagram(std::vector<LinearForm> facets, std::vector<Exponent> support,
                             std::vector<Exponent> vertices)
    : facets_(std::move(facets)), support_(std::move(support)), vertices_(std::move(vertices)) {
  stellar_vertex_ = common_vertex(facets_, vertices_);
}

NewtonDiagram NewtonDiagram::with_facet_order(const std::vector<LinearForm>& order) const {
  if (!std::is_permutation(order.begin(), order.end(), facets_.begin(), facets_.end())) {
    throw InputError("facets", "facet order is not a permutation of the diagram's facets");
  }
  return NewtonDiagram(order, support_, vertices_);
}

NewtonDiagram compute_diagram(const std::vector<Exponent>& support_in) {
  if (support_in.empty()) throw InputError("polynomial", "empty support");
  const std::size_t n = support_in.front().size();
  if (n < 2) throw UnsupportedError("Newton diagrams need at least 2 variables");
  for (const auto& k : support_in) {
    if (k.size() != n) throw InputError("polynomial", "inconsistent exponent dimensions");
  }
  std::set<Exponent> unique(support_in.begin(), support_in.end());
  std::vector<Exponent> support(unique.begin(), unique.end());

  for (std::size_t j = 0; j < n; ++j) {
    bool meets_axis = std::any_of(support.begin(), support.end(), [&](const Exponent& k) {
      for (std::size_t t = 0; t < n; ++t) {
        if ((t == j) != (k[t] > 0)) return false;
      }
      return true;
    });
    if (!meets_axis) throw InputError("polynomial", "diagram does not meet all coordinate axes");
  }

  // Points dominating another support point lie strictly inside the polyhedron
  // (or on a non-compact face) and cannot span a compact facet.
  std::vector<Exponent> reduced;
  for (const auto& k : support) {
    bool dominated = std::any_of(support.begin(), support.end(), [&](const Exponent& other) {
      return other != k && k.dominates(other);
    });
    if (!dominated) reduced.push_back(k);
  }

  std::set<LinearForm> found;
  for_each_subset(reduced.size(), n, [&](const std::vector<std::size_t>& pick) {
    std::vector<const Exponent*> pts;
    for (auto i : pick) pts.push_back(&reduced[i]);
    if (auto form = hyperplane_through(pts, reduced)) found.insert(*form);
  });
  if (found.empty()) throw InputError("polynomial", "Newton diagram has no compact facet");

  std::vector<LinearForm> facets(found.begin(), found.end());
  std::vector<Exponent> vertices;
  for (const auto& k : reduced) {
    if (is_vertex(k, facets)) vertices.push_back(k);
  }
  return NewtonDiagram(std::move(facets), std::move(support), std::move(vertices));
}

std::optional<Exponent> is_stellar(const NewtonDiagram& diagram) { return diagram.stellar_vertex(); }

FacetValidation validate_user_facets(const NewtonDiagram& diagram,
                                     const std::vector<LinearForm>& user) {
  FacetValidation result;
  if (user.empty()) {
    result.note = "no user facets supplied; nothing to check";
    return result;
  }
  std::set<LinearForm> seen;
  for (const auto& form : user) {
    if (!seen.insert(form).second) result.duplicated.push_back(form);
  }
  const auto& computed = diagram.facets();
  for (const auto& form : computed) {
    if (!seen.count(form)) result.missing.push_back(form);
  }
  for (const auto& form : seen) {
    if (std::find(computed.begin(), computed.end(), form) == computed.end()) {
      result.extra.push_back(form);
    }
  }
  result.equal = result.missing.empty() && result.extra.empty() && result.duplicated.empty();
  result.note = result.equal ? "user facets match the computed diagram"
                             : "user facets differ from the computed diagram";
  return result;
}

MultiIndex u_of_f(const NewtonDiagram& diagram) {
  std::vector<Int> d;
  for (const auto& form : diagram.facets()) d.push_back(form.degree());
  return MultiIndex(std::move(d));
}

std::vector<MultiIndex> u_of_variables(const NewtonDiagram& diagram) {
  std::vector<MultiIndex> columns;
  for (std::size_t j = 0; j < diagram.num_variables(); ++j) {
    std::vector<Int> column;
    for (const auto& form : diagram.facets()) column.push_back(form.coefficient(j));
    columns.emplace_back(std::move(column));
  }
  return columns;
}

}  // namespace nf
