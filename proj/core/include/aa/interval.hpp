#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "aa/rational.hpp"
#include "aa/sqrt_sum.hpp"

namespace aa {

enum class EndpointKind { Rational, SqrtSum };

/// Interval endpoint: either an exact rational or an exact sqrt(a)+sqrt(b).
///
/// Comparing endpoints of different kinds throws MixedEndpointKinds; callers
/// that want to mix them must embed the rational side explicitly.
class Endpoint {
 public:
  Endpoint() : v_(Rational{}) {}
  Endpoint(Rational r) : v_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Endpoint(SqrtSum2 s) : v_(std::move(s)) {}  // NOLINT(google-explicit-constructor)
  Endpoint(long long n) : v_(Rational(n)) {}  // NOLINT(google-explicit-constructor)

  EndpointKind kind() const {
    return std::holds_alternative<Rational>(v_) ? EndpointKind::Rational : EndpointKind::SqrtSum;
  }
  bool is_rational() const { return kind() == EndpointKind::Rational; }

  const Rational& rational() const;
  const SqrtSum2& sqrt_sum() const;

  /// Rational endpoints become sqrt(r^2); sqrt-sum endpoints are unchanged.
  Endpoint embedded() const;

  std::string str() const;
  std::string decimal(int digits = 12) const;
  double approx() const;

  friend std::strong_ordering operator<=>(const Endpoint& x, const Endpoint& y);
  friend bool operator==(const Endpoint& x, const Endpoint& y);

 private:
  std::variant<Rational, SqrtSum2> v_;
};

/// Ordering that embeds a rational side when kinds differ.
std::strong_ordering compare_embedding(const Endpoint& x, const Endpoint& y);

/// Closed interval [lo, hi] with homogeneous endpoint kind and lo <= hi.
class Interval {
 public:
  Interval(Endpoint lo, Endpoint hi);
  static Interval point(const Endpoint& x) { return Interval(x, x); }

  const Endpoint& lo() const { return lo_; }
  const Endpoint& hi() const { return hi_; }
  EndpointKind kind() const { return lo_.kind(); }

  bool contains(const Endpoint& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool intersects(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
  /// True when this closed interval meets the open interval (o.lo, o.hi).
  bool meets_open(const Interval& o) const { return lo_ < o.hi_ && o.lo_ < hi_; }
  /// Rational intervals only.
  Rational length() const;

  Interval embedded() const { return Interval(lo_.embedded(), hi_.embedded()); }

  std::string str() const;

  friend bool operator==(const Interval& a, const Interval& b) = default;

 private:
  Endpoint lo_;
  Endpoint hi_;
};

/// Finite union of disjoint closed intervals, sorted, with a strict gap
/// between consecutive parts. Empty unions are allowed.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  explicit IntervalUnion(Interval single) : parts_{std::move(single)} {}

  /// Sorts and merges touching or overlapping intervals. Idempotent.
  static IntervalUnion normalize(std::vector<Interval> raw);

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }
  std::optional<EndpointKind> kind() const;

  const Endpoint& min() const { return parts_.front().lo(); }
  const Endpoint& max() const { return parts_.back().hi(); }

  bool contains(const Endpoint& x) const;
  bool contains(const Interval& iv) const;
  bool subset_of(const IntervalUnion& other) const;
  /// True when no part meets the open interval (gap.lo, gap.hi).
  bool disjoint_from_open(const Interval& gap) const;

  /// Clips to a closed window.
  IntervalUnion intersect(const Interval& window) const;
  /// Maximal open subintervals of `window` that miss every part.
  std::vector<Interval> gaps_within(const Interval& window) const;

  IntervalUnion embedded() const;
  /// Sum of part lengths; rational unions only.
  Rational total_length() const;

  /// Canonical text `{[lo,hi],[lo,hi]}` with exact endpoints.
  std::string str() const;

  friend bool operator==(const IntervalUnion& a, const IntervalUnion& b) = default;

 private:
  std::vector<Interval> parts_;
};

/// Mutable union with logarithmic insertion and containment queries, used by
/// the oracle's branch-and-bound covers.
class IntervalAccumulator {
 public:
  void insert(const Interval& iv);
  bool covers(const Interval& iv) const;
  IntervalUnion to_union() const;
  std::size_t size() const { return parts_.size(); }

 private:
  struct Less {
    bool operator()(const Endpoint& a, const Endpoint& b) const { return a < b; }
  };
  std::map<Endpoint, Endpoint, Less> parts_;
};

}  // namespace aa
