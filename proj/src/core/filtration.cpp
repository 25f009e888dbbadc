#include "core/filtration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <exception>
#include <set>
#include <thread>

#include "core/error.hpp"

namespace nf {

QuotientSpec::QuotientSpec(MultiIndex lower_, MultiIndex upper_)
    : lower(std::move(lower_)), upper(std::move(upper_)) {
  if (!geq(upper, lower)) {
    throw InputError("quotient needs lower <= upper, got " + lower.to_string() + " and " +
                     upper.to_string());
  }
  if (upper == lower) throw InputError("quotient needs lower != upper");
}

const char* method_name(Method m) {
  switch (m) {
    case Method::A: return "A";
    case Method::B: return "B";
    case Method::Both: return "both";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  std::string lower;
  for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "a") return Method::A;
  if (lower == "b") return Method::B;
  if (lower == "both") return Method::Both;
  throw InputError("method", "expected A, B or both, got '" + std::string(text) + "'");
}

namespace {

void check_arity(const ValuationProfile& profile, const MultiIndex& v, const char* what) {
  if (v.size() != profile.num_facets()) {
    throw InputError(std::string(what) + " has " + std::to_string(v.size()) +
                     " entries; the diagram has " + std::to_string(profile.num_facets()) +
                     " facets");
  }
}

// Monomials with l_i(k) < c_i for some i.
std::set<Exponent> below_some(const ValuationProfile& profile, const MultiIndex& c) {
  std::set<Exponent> out;
  for (std::size_t i = 0; i < profile.num_facets(); ++i) {
    for_each_at_most(profile.facet(i), c[i] - 1, [&](const Exponent& k) { out.insert(k); });
  }
  return out;
}

bool at_least(const ValuationProfile& profile, const Exponent& k, const MultiIndex& level) {
  for (std::size_t i = 0; i < profile.num_facets(); ++i) {
    if (profile.facet(i).evaluate(k) < level[i]) return false;
  }
  return true;
}

SparseVector restrict_row(const SparseVector& row, const std::vector<bool>& keep) {
  SparseVector out;
  for (const auto& [col, x] : row) {
    if (keep[col]) out.emplace_back(col, x);
  }
  return out;
}

}  // namespace

std::vector<Exponent> boundary_points(const ValuationProfile& profile, const MultiIndex& lower,
                                      const MultiIndex& upper) {
  check_arity(profile, lower, "lower");
  check_arity(profile, upper, "upper");
  std::vector<Exponent> out;
  for (const auto& k : below_some(profile, upper)) {
    if (at_least(profile, k, lower)) out.push_back(k);
  }
  return out;
}

RelationSystem relation_rows(const ValuationProfile& profile, const PolynomialGerm& f,
                             const MultiIndex& upper) {
  check_arity(profile, upper, "upper");
  if (f.is_zero()) throw InputError("the defining germ is zero");
  RelationSystem system;
  auto columns = below_some(profile, upper);
  system.columns.assign(columns.begin(), columns.end());
  for (std::size_t c = 0; c < system.columns.size(); ++c) {
    system.column_index.emplace(system.columns[c], c);
  }
  // x^a f leaves a monomial below upper_i iff l_i(a) + d_i <= upper_i - 1.
  std::set<Exponent> shifts;
  for (std::size_t i = 0; i < profile.num_facets(); ++i) {
    const LinearForm& form = profile.facet(i);
    for_each_at_most(form, upper[i] - 1 - form.degree(),
                     [&](const Exponent& a) { shifts.insert(a); });
  }
  RowEchelon echelon;
  for (const auto& a : shifts) {
    std::map<std::size_t, Rational> entries;
    for (const auto& [k, c] : f.terms()) {
      auto it = system.column_index.find(k + a);
      if (it != system.column_index.end()) entries[it->second] += c;
    }
    SparseVector row = to_integer_vector(entries);
    if (row.empty()) continue;
    echelon.insert(row);
    system.translates.push_back(a);
    system.rows.push_back(std::move(row));
  }
  system.rank = echelon.rank();
  return system;
}

std::size_t quotient_dim_B(const ValuationProfile& profile, const RelationSystem& system,
                           const MultiIndex& lower) {
  check_arity(profile, lower, "lower");
  std::vector<bool> outside(system.columns.size());
  std::size_t points = 0;
  for (std::size_t c = 0; c < system.columns.size(); ++c) {
    bool is_point = at_least(profile, system.columns[c], lower);
    outside[c] = !is_point;
    points += is_point;
  }
  // dim(span(P) + R) - dim R = |P| + rank(R with the P columns deleted) - rank R.
  RowEchelon reduced;
  for (const auto& row : system.rows) {
    SparseVector r = restrict_row(row, outside);
    if (!r.empty()) reduced.insert(std::move(r));
  }
  return points + reduced.rank() - system.rank;
}

std::size_t quotient_dim_B(const ValuationProfile& profile, const PolynomialGerm& f,
                           const QuotientSpec& spec) {
  check_arity(profile, spec.lower, "lower");
  return quotient_dim_B(profile, relation_rows(profile, f, spec.upper), spec.lower);
}

Int safe_truncation(const QuotientSpec& spec, const PolynomialGerm& f) {
  return checked_add(std::max<Int>(spec.upper.max_entry(), 0), f.max_total_degree());
}

BigInt truncated_ring_size(Int truncation, std::size_t variables) {
  if (truncation < 0) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(truncation) + variables, variables);
  return out;
}

std::size_t colength_A(const ValuationProfile& profile, const PolynomialGerm& f, const MultiIndex& c,
                       Int truncation) {
  check_arity(profile, c, "level");
  const std::size_t s = profile.num_facets();
  // dim O/∩S_i = rank of O -> ⊕ O/S_i. With O/S_i = span(B_i)/rows(M_i), the
  // kernel is parametrized by coefficient vectors λ_i on the rows of M_i that
  // agree on overlapping coordinates:
  //   colength = |∪B_i| - Σ rank M_i + rank(consistency).
  std::vector<std::set<Exponent>> below(s);
  std::set<Exponent> all_below;
  // per facet: column -> [(row, value)]
  std::vector<std::map<Exponent, std::vector<std::pair<std::size_t, BigInt>>>> by_column(s);
  std::vector<std::size_t> offset(s + 1, 0);
  std::size_t rank_sum = 0;
  for (std::size_t i = 0; i < s; ++i) {
    const LinearForm& form = profile.facet(i);
    for_each_at_most(form, c[i] - 1, [&](const Exponent& k) {
      if (k.total_degree() <= truncation) below[i].insert(k);
    });
    all_below.insert(below[i].begin(), below[i].end());

    std::vector<Exponent> shifts;
    for_each_at_most(form, c[i] - 1 - form.degree(), [&](const Exponent& a) {
      if (a.total_degree() <= truncation) shifts.push_back(a);
    });
    std::map<Exponent, std::size_t> local;
    for (const auto& k : below[i]) local.emplace(k, local.size());
    std::vector<Exponent> local_columns(below[i].begin(), below[i].end());
    RowEchelon echelon;
    std::size_t rows = 0;
    for (const auto& a : shifts) {
      std::map<std::size_t, Rational> entries;
      for (const auto& [k, coeff] : f.terms()) {
        auto it = local.find(k + a);
        if (it != local.end()) entries[it->second] += coeff;
      }
      SparseVector row = to_integer_vector(entries);
      if (row.empty()) continue;
      for (const auto& [col, x] : row) by_column[i][local_columns[col]].emplace_back(rows, x);
      echelon.insert(std::move(row));
      ++rows;
    }
    rank_sum += echelon.rank();
    offset[i + 1] = offset[i] + rows;
  }

  std::set<Exponent> touched;
  for (const auto& m : by_column) {
    for (const auto& [k, entries] : m) touched.insert(k);
  }
  RowEchelon consistency;
  for (const auto& k : touched) {
    std::vector<std::size_t> containing;
    for (std::size_t i = 0; i < s; ++i) {
      if (below[i].count(k)) containing.push_back(i);
    }
    if (containing.size() < 2) continue;
    auto entries_of = [&](std::size_t i) -> const std::vector<std::pair<std::size_t, BigInt>>* {
      auto it = by_column[i].find(k);
      return it == by_column[i].end() ? nullptr : &it->second;
    };
    const auto* first = entries_of(containing[0]);
    for (std::size_t t = 1; t < containing.size(); ++t) {
      const auto* other = entries_of(containing[t]);
      SparseVector eq;
      if (first) {
        for (const auto& [r, x] : *first) eq.emplace_back(offset[containing[0]] + r, x);
      }
      if (other) {
        for (const auto& [r, x] : *other) eq.emplace_back(offset[containing[t]] + r, -x);
      }
      std::sort(eq.begin(), eq.end(),
                [](const auto& p, const auto& q) { return p.first < q.first; });
      if (!eq.empty()) consistency.insert(std::move(eq));
    }
  }
  return all_below.size() + consistency.rank() - rank_sum;
}

std::size_t quotient_dim_A(const ValuationProfile& profile, const PolynomialGerm& f,
                           const QuotientSpec& spec, const MethodAOptions& options) {
  check_arity(profile, spec.lower, "lower");
  check_arity(profile, spec.upper, "upper");
  const Int safe = safe_truncation(spec, f);
  const Int truncation = options.truncation.value_or(safe);
  if (truncation < safe) {
    throw InputError("truncation", "truncation " + std::to_string(truncation) +
                                       " is below the safe level " + std::to_string(safe));
  }
  const BigInt size = truncated_ring_size(truncation, profile.num_variables());
  if (!options.force && size > kMethodASizeLimit) {
    throw InputError("truncation", "method A would work in a truncated ring of " + size.get_str() +
                                       " monomials (limit " + std::to_string(kMethodASizeLimit) +
                                       "); use force to override");
  }
  const std::size_t upper = colength_A(profile, f, spec.upper, truncation);
  const std::size_t lower = colength_A(profile, f, spec.lower, truncation);
  if (upper < lower) throw std::logic_error("method A: J(upper) is not contained in J(lower)");
  return upper - lower;
}

MethodComparison compare_methods(const ValuationProfile& profile, const PolynomialGerm& f,
                                 const MultiIndex& v, const MethodAOptions& options) {
  check_arity(profile, v, "v");
  const std::size_t s = profile.num_facets();
  const MultiIndex upper = v + MultiIndex::constant(s, 1);
  const RelationSystem system = relation_rows(profile, f, upper);
  MethodComparison out{v, {}, {}};
  const std::uint32_t full = (1u << s) - 1;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (mask == full) {  // J(v+1)/J(v+1)
      out.dims_a.push_back(0);
      out.dims_b.push_back(0);
      continue;
    }
    const QuotientSpec spec(v + indicator_tuple(mask, s), upper);
    out.dims_a.push_back(static_cast<Int>(quotient_dim_A(profile, f, spec, options)));
    out.dims_b.push_back(static_cast<Int>(quotient_dim_B(profile, system, spec.lower)));
  }
  return out;
}

namespace {

constexpr std::size_t kMaxFacets = 20;

void coefficient_B(const ValuationProfile& profile, const PolynomialGerm& f, CoefficientRecord& rec) {
  const std::size_t s = profile.num_facets();
  const MultiIndex upper = rec.v + MultiIndex::constant(s, 1);
  const RelationSystem system = relation_rows(profile, f, upper);
  const std::size_t masks = std::size_t{1} << s;
  rec.dims_b.assign(masks, 0);
  rec.relation_rank = system.rank;

  rec.dims_b[0] = static_cast<Int>(quotient_dim_B(profile, system, rec.v));
  for (std::size_t i = 0; i < s; ++i) {
    rec.dims_b[std::size_t{1} << i] =
        static_cast<Int>(quotient_dim_B(profile, system, rec.v + indicator_tuple(1u << i, s)));
  }
  std::size_t boundary = 0;
  for (const auto& k : system.columns) boundary += at_least(profile, k, rec.v);
  rec.boundary_count = boundary;

  if (s >= 2) {
    // Split the coordinates: T = columns touched by relations. Off T the
    // spaces are coordinate subspaces, on T they contain the relation span.
    std::vector<std::size_t> t_index(system.columns.size(), SIZE_MAX);
    std::size_t t_size = 0;
    for (const auto& row : system.rows) {
      for (const auto& [col, x] : row) {
        if (t_index[col] == SIZE_MAX) t_index[col] = 0;
      }
    }
    for (auto& idx : t_index) {
      if (idx != SIZE_MAX) idx = t_size++;
    }
    std::vector<SparseVector> relations_t;
    for (const auto& row : system.rows) {
      SparseVector r;
      for (const auto& [col, x] : row) r.emplace_back(t_index[col], x);
      std::sort(r.begin(), r.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
      relations_t.push_back(std::move(r));
    }
    std::vector<std::vector<bool>> free_points(s, std::vector<bool>(system.columns.size(), false));
    std::vector<std::vector<SparseVector>> spaces(s);
    for (std::size_t i = 0; i < s; ++i) {
      const MultiIndex lower = rec.v + indicator_tuple(1u << i, s);
      RowEchelon space;
      for (const auto& r : relations_t) space.insert(r);
      for (std::size_t c = 0; c < system.columns.size(); ++c) {
        if (!at_least(profile, system.columns[c], lower)) continue;
        if (t_index[c] == SIZE_MAX) {
          free_points[i][c] = true;
        } else {
          space.insert(SparseVector{{t_index[c], BigInt(1)}});
        }
      }
      spaces[i] = space.rows();
    }
    std::vector<std::vector<SparseVector>> meet(masks);
    for (std::size_t mask = 1; mask < masks; ++mask) {
      if (std::popcount(mask) < 2) {
        meet[mask] = spaces[static_cast<std::size_t>(std::countr_zero(mask))];
        continue;
      }
      const std::size_t top = std::bit_width(mask) - 1;
      const std::size_t rest = mask & ~(std::size_t{1} << top);
      meet[mask] = intersect_spans(meet[rest], spaces[top], t_size);
      std::size_t free_count = 0;
      for (std::size_t c = 0; c < system.columns.size(); ++c) {
        bool all = true;
        for (std::size_t i = 0; i < s && all; ++i) {
          if ((mask >> i) & 1) all = free_points[i][c];
        }
        free_count += all;
      }
      rec.dims_b[mask] = static_cast<Int>(free_count + meet[mask].size() - system.rank);
    }
  }
  Int total = 0;
  for (std::size_t mask = 0; mask < masks; ++mask) {
    total += (std::popcount(mask) % 2 ? -1 : 1) * rec.dims_b[mask];
  }
  rec.value_b = total;
}

void coefficient_A(const ValuationProfile& profile, const PolynomialGerm& f,
                   const MethodAOptions& options, CoefficientRecord& rec) {
  const std::size_t s = profile.num_facets();
  const MultiIndex upper = rec.v + MultiIndex::constant(s, 1);
  const QuotientSpec widest(rec.v, upper);
  const Int safe = safe_truncation(widest, f);
  const Int truncation = options.truncation.value_or(safe);
  if (truncation < safe) {
    throw InputError("truncation", "truncation " + std::to_string(truncation) +
                                       " is below the safe level " + std::to_string(safe));
  }
  const BigInt size = truncated_ring_size(truncation, profile.num_variables());
  if (!options.force && size > kMethodASizeLimit) {
    throw InputError("truncation", "method A would work in a truncated ring of " + size.get_str() +
                                       " monomials (limit " + std::to_string(kMethodASizeLimit) +
                                       "); use force to override");
  }
  const std::size_t masks = std::size_t{1} << s;
  rec.dims_a.assign(masks, 0);
  const auto top = static_cast<Int>(colength_A(profile, f, upper, truncation));
  Int total = 0;
  for (std::size_t mask = 0; mask < masks; ++mask) {
    const MultiIndex lower = rec.v + indicator_tuple(static_cast<std::uint32_t>(mask), s);
    rec.dims_a[mask] = top - static_cast<Int>(colength_A(profile, f, lower, truncation));
    total += (std::popcount(mask) % 2 ? -1 : 1) * rec.dims_a[mask];
  }
  rec.value_a = total;
}

}  // namespace

CoefficientRecord poincare_coefficient(const ValuationProfile& profile, const PolynomialGerm& f,
                                       const MultiIndex& v, Method method,
                                       const MethodAOptions& options) {
  check_arity(profile, v, "v");
  if (!v.is_nonnegative()) throw InputError("v", "coefficients live at v >= 0, got " + v.to_string());
  if (profile.num_facets() > kMaxFacets) throw UnsupportedError("too many facets for 2^s subsets");
  CoefficientRecord rec;
  rec.v = v;
  rec.method = method;
  if (method != Method::A) coefficient_B(profile, f, rec);
  if (method != Method::B) {
    coefficient_A(profile, f, options, rec);
    if (method == Method::A) {
      const RelationSystem system =
          relation_rows(profile, f, v + MultiIndex::constant(v.size(), 1));
      rec.relation_rank = system.rank;
      for (const auto& k : system.columns) rec.boundary_count += at_least(profile, k, v);
    }
  }
  rec.coefficient = rec.value_b ? *rec.value_b : *rec.value_a;
  rec.discrepancy = rec.value_a && rec.value_b && *rec.value_a != *rec.value_b;
  return rec;
}

namespace {

template <class Result, class Fn>
std::vector<Result> parallel_map(std::size_t count, unsigned threads, Fn&& fn) {
  std::vector<Result> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace

std::vector<CoefficientRecord> poincare_coefficients(const ValuationProfile& profile,
                                                     const PolynomialGerm& f,
                                                     const std::vector<MultiIndex>& targets,
                                                     Method method, unsigned threads,
                                                     const MethodAOptions& options) {
  return parallel_map<CoefficientRecord>(targets.size(), threads, [&](std::size_t i) {
    return poincare_coefficient(profile, f, targets[i], method, options);
  });
}

std::size_t d_of_v(const ValuationProfile& profile, const PolynomialGerm& f, const MultiIndex& v) {
  check_arity(profile, v, "v");
  const RelationSystem system = relation_rows(profile, f, v + MultiIndex::constant(v.size(), 1));
  return quotient_dim_B(profile, system, v);
}

SeriesBox L_series(const ValuationProfile& profile, const PolynomialGerm& f, const Box& box,
                   unsigned threads) {
  if (box.arity() != profile.num_facets()) throw InputError("box", "box arity differs from s");
  std::vector<MultiIndex> points;
  box.for_each([&](const MultiIndex& v) { points.push_back(v); });
  auto dims = parallel_map<std::size_t>(points.size(), threads,
                                        [&](std::size_t i) { return d_of_v(profile, f, points[i]); });
  SeriesBox out(box);
  for (std::size_t i = 0; i < points.size(); ++i) out.add(points[i], BigInt(dims[i]));
  return out;
}

IdentityCheck ps_identity_check(const ValuationProfile& profile, const PolynomialGerm& f,
                                const MultiIndex& bound, Int margin, unsigned threads) {
  const std::size_t s = profile.num_facets();
  if (bound.size() != s) throw InputError("box", "box arity differs from s");
  if (!bound.is_nonnegative()) throw InputError("box", "inner box bounds must be >= 0");
  if (margin < 2) throw InputError("margin", "margin must be at least 2");
  const Box inner = Box::from_origin(bound);
  const MultiIndex pad = MultiIndex::constant(s, margin);
  const Box outer(MultiIndex::zero(s) - pad, bound + pad);

  SeriesBox lseries = L_series(profile, f, outer, threads);

  std::vector<MultiIndex> targets;
  inner.for_each([&](const MultiIndex& v) { targets.push_back(v); });
  auto records = poincare_coefficients(profile, f, targets, Method::B, threads);
  SeriesBox pseries(outer);
  for (const auto& rec : records) pseries.add(rec.v, BigInt(rec.coefficient));

  const Box unit = Box::cube(s, 0, 1);
  SeriesBox diagonal(unit);  // t_1...t_s - 1
  diagonal.add(MultiIndex::constant(s, 1), 1);
  diagonal.add(MultiIndex::zero(s), -1);
  SeriesBox product(unit);  // prod (t_i - 1)
  unit.for_each([&](const MultiIndex& e) {
    Int ones = 0;
    for (std::size_t i = 0; i < s; ++i) ones += e[i];
    product.add(e, (static_cast<Int>(s) - ones) % 2 ? -1 : 1);
  });

  IdentityCheck check{inner, margin, {}};
  check.diffs = compare(multiply(pseries, diagonal, inner), multiply(lseries, product, inner));
  return check;
}

std::vector<MultiIndex> target_set(const ValuationProfile& profile, Int bound) {
  if (bound < 0) throw InputError("bound", "degree bound must be >= 0");
  std::set<MultiIndex> out;
  const MultiIndex& uf = profile.u_f();
  out.insert(uf);
  const LinearForm total_degree(std::vector<Int>(profile.num_variables(), 1), 1);
  for_each_at_most(total_degree, bound, [&](const Exponent& k) {
    MultiIndex u = u_monomial(profile, k);
    out.insert(u + uf);
    out.insert(std::move(u));
  });
  return {out.begin(), out.end()};
}

}  // namespace nf
