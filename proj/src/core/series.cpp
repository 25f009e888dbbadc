#include "core/series.hpp"

#include <algorithm>
#include <thread>

#include "core/error.hpp"

namespace nf {

Box::Box(MultiIndex lower, MultiIndex upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.size() != upper_.size()) throw InputError("box bounds have different arity");
}

Box Box::from_origin(MultiIndex upper) {
  const std::size_t s = upper.size();
  return Box(MultiIndex::zero(s), std::move(upper));
}

Box Box::cube(std::size_t s, Int lower, Int upper) {
  return Box(MultiIndex::constant(s, lower), MultiIndex::constant(s, upper));
}

bool Box::contains(const MultiIndex& e) const {
  if (e.size() != arity()) return false;
  for (std::size_t i = 0; i < arity(); ++i) {
    if (e[i] < lower_[i] || e[i] > upper_[i]) return false;
  }
  return true;
}

bool Box::contains(const Box& other) const {
  return other.arity() == arity() && geq(other.lower_, lower_) && geq(upper_, other.upper_);
}

BigInt Box::point_count() const {
  BigInt count = 1;
  for (std::size_t i = 0; i < arity(); ++i) {
    if (upper_[i] < lower_[i]) return 0;
    count *= BigInt(upper_[i] - lower_[i] + 1);
  }
  return count;
}

std::string Box::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < arity(); ++i) {
    if (i) out += 'x';
    out += '[' + std::to_string(lower_[i]) + ',' + std::to_string(upper_[i]) + ']';
  }
  return out;
}

SeriesBox SeriesBox::one(const Box& box) {
  SeriesBox s(box);
  s.add(MultiIndex::zero(box.arity()), 1);
  return s;
}

BigInt SeriesBox::coefficient(const MultiIndex& e) const {
  if (!box_.contains(e)) {
    throw RangeError("exponent " + e.to_string() + " outside the series box " + box_.to_string());
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void SeriesBox::add(const MultiIndex& e, const BigInt& c) {
  if (c == 0 || !box_.contains(e)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SeriesBox::set(const MultiIndex& e, const BigInt& c) {
  if (!box_.contains(e)) throw RangeError("exponent " + e.to_string() + " outside the series box");
  if (c == 0) {
    terms_.erase(e);
  } else {
    terms_[e] = c;
  }
}

SeriesBox SeriesBox::crop(const Box& smaller) const {
  if (!box_.contains(smaller)) throw InputError("crop box is not inside the series box");
  SeriesBox out(smaller);
  for (const auto& [e, c] : terms_) {
    if (smaller.contains(e)) out.terms_.emplace(e, c);
  }
  return out;
}

SeriesBox binomial_factor(const MultiIndex& m, int sign, const Box& box) {
  if (m.size() != box.arity()) throw InputError("binomial exponent has the wrong arity");
  if (!m.is_nonnegative() || m.is_zero()) {
    throw InputError("binomial exponent must be non-negative and non-zero");
  }
  if (sign != 1 && sign != -1) throw InputError("binomial sign must be +1 or -1");
  SeriesBox out(box);
  const MultiIndex zero = MultiIndex::zero(box.arity());
  out.add(zero, 1);
  if (sign == 1) {
    out.add(m, -1);
    return out;
  }
  // Once some coordinate with m_i > 0 exceeds the upper bound it stays out.
  MultiIndex e = m;
  while (true) {
    bool past = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0 && e[i] > box.upper()[i]) past = true;
    }
    if (past) break;
    out.add(e, 1);
    e = e + m;
  }
  return out;
}

SeriesBox multiply(const SeriesBox& a, const SeriesBox& b, const Box& box, unsigned threads) {
  if (a.box().arity() != b.box().arity() || a.box().arity() != box.arity()) {
    throw InputError("series arity mismatch");
  }
  std::vector<std::pair<MultiIndex, BigInt>> left(a.terms().begin(), a.terms().end());
  threads = std::max(1u, std::min<unsigned>(threads, left.size() ? left.size() : 1));
  // Each worker owns a disjoint slice of the left factor; partial products are
  // summed in a fixed order.
  std::vector<SeriesBox> partial(threads, SeriesBox(box));
  auto work = [&](unsigned t) {
    for (std::size_t i = t; i < left.size(); i += threads) {
      for (const auto& [eb, cb] : b.terms()) {
        partial[t].add(left[i].first + eb, left[i].second * cb);
      }
    }
  };
  if (threads == 1) {
    work(0);
    return std::move(partial[0]);
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  for (auto& th : pool) th.join();
  SeriesBox out(box);
  for (const auto& p : partial) {
    for (const auto& [e, c] : p.terms()) out.add(e, c);
  }
  return out;
}

std::vector<SeriesDiff> compare(const SeriesBox& a, const SeriesBox& b) {
  if (!(a.box() == b.box())) {
    throw InputError("cannot compare series on different boxes: " + a.box().to_string() +
                     " vs " + b.box().to_string());
  }
  std::vector<SeriesDiff> diffs;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
      diffs.push_back({ia->first, ia->second, 0});
      ++ia;
    } else if (ia == a.terms().end() || ib->first < ia->first) {
      diffs.push_back({ib->first, 0, ib->second});
      ++ib;
    } else {
      if (ia->second != ib->second) diffs.push_back({ia->first, ia->second, ib->second});
      ++ia;
      ++ib;
    }
  }
  return diffs;
}

}  // namespace nf
