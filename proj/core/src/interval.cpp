#include "aa/interval.hpp"

#include <algorithm>

#include "aa/error.hpp"

namespace aa {

const Rational& Endpoint::rational() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return *r;
  throw MixedEndpointKinds("expected a rational endpoint, got " + str());
}

const SqrtSum2& Endpoint::sqrt_sum() const {
  if (const auto* s = std::get_if<SqrtSum2>(&v_)) return *s;
  throw MixedEndpointKinds("expected a sqrt-sum endpoint, got " + str());
}

Endpoint Endpoint::embedded() const {
  if (is_rational()) return SqrtSum2::of(rational());
  return *this;
}

std::string Endpoint::str() const {
  return std::visit([](const auto& v) { return v.str(); }, v_);
}

std::string Endpoint::decimal(int digits) const {
  return std::visit([digits](const auto& v) { return v.decimal(digits); }, v_);
}

double Endpoint::approx() const {
  return std::visit([](const auto& v) { return v.approx(); }, v_);
}

std::strong_ordering operator<=>(const Endpoint& x, const Endpoint& y) {
  if (x.kind() != y.kind()) {
    throw MixedEndpointKinds("comparing " + x.str() + " with " + y.str() + " without embedding");
  }
  if (x.is_rational()) return x.rational() <=> y.rational();
  return cmp_sqrt2(x.sqrt_sum(), y.sqrt_sum());
}

bool operator==(const Endpoint& x, const Endpoint& y) { return (x <=> y) == 0; }

std::strong_ordering compare_embedding(const Endpoint& x, const Endpoint& y) {
  if (x.kind() == y.kind()) return x <=> y;
  if (x.is_rational() && x.rational().sign() < 0) return std::strong_ordering::less;
  if (y.is_rational() && y.rational().sign() < 0) return std::strong_ordering::greater;
  return x.embedded() <=> y.embedded();
}

Interval::Interval(Endpoint lo, Endpoint hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.kind() != hi_.kind()) {
    throw MixedEndpointKinds("interval endpoints " + lo_.str() + ", " + hi_.str() + " differ in kind");
  }
  if (hi_ < lo_) throw InvalidInterval("interval [" + lo_.str() + ", " + hi_.str() + "] has lo > hi");
}

Rational Interval::length() const { return hi_.rational() - lo_.rational(); }

std::string Interval::str() const { return "[" + lo_.str() + "," + hi_.str() + "]"; }

IntervalUnion IntervalUnion::normalize(std::vector<Interval> raw) {
  IntervalUnion out;
  if (raw.empty()) return out;
  const EndpointKind k = raw.front().kind();
  for (const auto& iv : raw) {
    if (iv.kind() != k) throw MixedEndpointKinds("normalize: mixed endpoint kinds");
  }
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    auto c = a.lo() <=> b.lo();
    if (c != 0) return c < 0;
    return a.hi() < b.hi();
  });
  out.parts_.reserve(raw.size());
  for (auto& iv : raw) {
    if (!out.parts_.empty() && iv.lo() <= out.parts_.back().hi()) {
      if (out.parts_.back().hi() < iv.hi()) {
        out.parts_.back() = Interval(out.parts_.back().lo(), iv.hi());
      }
    } else {
      out.parts_.push_back(std::move(iv));
    }
  }
  return out;
}

std::optional<EndpointKind> IntervalUnion::kind() const {
  if (parts_.empty()) return std::nullopt;
  return parts_.front().kind();
}

bool IntervalUnion::contains(const Endpoint& x) const {
  auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                             [](const Endpoint& v, const Interval& iv) { return v < iv.lo(); });
  if (it == parts_.begin()) return false;
  return std::prev(it)->contains(x);
}

bool IntervalUnion::contains(const Interval& iv) const {
  auto it = std::upper_bound(parts_.begin(), parts_.end(), iv.lo(),
                             [](const Endpoint& v, const Interval& p) { return v < p.lo(); });
  if (it == parts_.begin()) return false;
  return std::prev(it)->contains(iv);
}

bool IntervalUnion::subset_of(const IntervalUnion& other) const {
  return std::all_of(parts_.begin(), parts_.end(), [&](const Interval& p) { return other.contains(p); });
}

bool IntervalUnion::disjoint_from_open(const Interval& gap) const {
  return std::none_of(parts_.begin(), parts_.end(), [&](const Interval& p) { return p.meets_open(gap); });
}

IntervalUnion IntervalUnion::intersect(const Interval& window) const {
  IntervalUnion out;
  for (const auto& p : parts_) {
    if (!p.intersects(window)) continue;
    const Endpoint& lo = p.lo() < window.lo() ? window.lo() : p.lo();
    const Endpoint& hi = window.hi() < p.hi() ? window.hi() : p.hi();
    out.parts_.emplace_back(lo, hi);
  }
  return out;
}

std::vector<Interval> IntervalUnion::gaps_within(const Interval& window) const {
  std::vector<Interval> gaps;
  Endpoint cursor = window.lo();
  for (const auto& p : parts_) {
    if (p.hi() < window.lo()) continue;
    if (window.hi() < p.lo()) break;
    if (cursor < p.lo()) gaps.emplace_back(cursor, p.lo());
    if (cursor < p.hi()) cursor = p.hi();
  }
  if (cursor < window.hi()) gaps.emplace_back(cursor, window.hi());
  return gaps;
}

IntervalUnion IntervalUnion::embedded() const {
  IntervalUnion out;
  out.parts_.reserve(parts_.size());
  for (const auto& p : parts_) out.parts_.push_back(p.embedded());
  return out;
}

Rational IntervalUnion::total_length() const {
  Rational sum;
  for (const auto& p : parts_) sum += p.length();
  return sum;
}

std::string IntervalUnion::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += parts_[i].str();
  }
  return s + "}";
}

void IntervalAccumulator::insert(const Interval& iv) {
  Endpoint lo = iv.lo();
  Endpoint hi = iv.hi();
  auto it = parts_.upper_bound(lo);
  if (it != parts_.begin()) {
    auto prev = std::prev(it);
    if (lo <= prev->second) {
      if (hi <= prev->second) return;
      lo = prev->first;
      it = prev;
    }
  }
  while (it != parts_.end() && it->first <= hi) {
    if (hi < it->second) hi = it->second;
    it = parts_.erase(it);
  }
  parts_.emplace_hint(it, std::move(lo), std::move(hi));
}

bool IntervalAccumulator::covers(const Interval& iv) const {
  auto it = parts_.upper_bound(iv.lo());
  if (it == parts_.begin()) return false;
  return iv.hi() <= std::prev(it)->second;
}

IntervalUnion IntervalAccumulator::to_union() const {
  std::vector<Interval> parts;
  parts.reserve(parts_.size());
  for (const auto& [lo, hi] : parts_) parts.emplace_back(lo, hi);
  return IntervalUnion::normalize(std::move(parts));
}

}  // namespace aa
