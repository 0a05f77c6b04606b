#pragma once

#include <compare>
#include <optional>
#include <string>

#include "aa/rational.hpp"

namespace aa {

/// The real number sqrt(a) + sqrt(b) for nonnegative rationals a >= b.
/// Stored canonically: when sqrt(a)/sqrt(b) is rational the value collapses
/// to sqrt((sqrt(a)+sqrt(b))^2) + sqrt(0), so equal values share one
/// representation.
///
/// Every inequality between square-root expressions that the certificates
/// need has the shape sqrt(a)+sqrt(b) vs sqrt(c)+sqrt(d) once constants k are
/// written as sqrt(k^2) and 2*sqrt(x) as sqrt(4x), so two radicals suffice.
class SqrtSum2 {
 public:
  SqrtSum2() = default;
  /// Throws NegativeRadicand if either radicand is negative.
  SqrtSum2(Rational a, Rational b);

  /// Embeds a nonnegative rational r as sqrt(r^2) + sqrt(0).
  static SqrtSum2 of(const Rational& r);
  /// 2*sqrt(x) = sqrt(4x).
  static SqrtSum2 twice_sqrt(const Rational& x);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_.is_zero(); }
  /// True when the value is known rational: sqrt(r^2) + 0 with r rational.
  bool is_rational_embedding() const;

  /// sqrt(k) * (sqrt(a)+sqrt(b)) = sqrt(ka)+sqrt(kb), k >= 0.
  SqrtSum2 scaled_by_sqrt(const Rational& k) const;

  /// `sqrt(a)+sqrt(b)` text with exact radicands.
  std::string str() const;
  /// High-precision decimal rendering; advisory only.
  std::string decimal(int digits = 12) const;
  double approx() const;

  friend bool operator==(const SqrtSum2& p, const SqrtSum2& q);
  friend std::strong_ordering operator<=>(const SqrtSum2& p, const SqrtSum2& q);

 private:
  Rational a_;
  Rational b_;
};

/// sqrt(r) when it is rational.
std::optional<Rational> rational_sqrt(const Rational& r);

/// Exact sign of u + sqrt(z) for rational u and z >= 0.
int sign_rational_plus_sqrt(const Rational& u, const Rational& z);

/// Exact ordering of sqrt(p.a)+sqrt(p.b) against sqrt(q.a)+sqrt(q.b).
///
/// Decided by at most two squarings with explicit sign tracking; no floating
/// point is involved.
std::strong_ordering cmp_sqrt2(const SqrtSum2& p, const SqrtSum2& q);

/// Sign of lhs - rhs as -1, 0 or 1.
int sign_of(std::strong_ordering o);

}  // namespace aa
