#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace aa {

/// Exact rational number in canonical form (positive denominator, reduced).
///
/// Thin value wrapper over GMP's mpq_class. Integers convert implicitly so
/// that polynomial expressions such as `1 - lambda * c` read naturally.
class Rational {
 public:
  Rational() = default;
  Rational(long long n);  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(mpq_class v);

  /// Parses `P/Q`, integers and decimal literals (`0.45`, `-1.5e-3`) exactly.
  static Rational parse(std::string_view text);

  const mpq_class& mpq() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const;
  Rational pow(unsigned exponent) const;
  Rational reciprocal() const;

  /// Canonical `P/Q` text, or `P` for integers.
  std::string str() const;
  /// Decimal rendering truncated toward zero; advisory only.
  std::string decimal(int digits = 12) const;
  /// Nearest double; never used in a decision path.
  double approx() const { return v_.get_d(); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  mpq_class v_;
};

/// Three-way exact comparison by cross-multiplication.
std::strong_ordering cmp_rational(const Rational& x, const Rational& y);

std::size_t hash_value(const Rational& r);

}  // namespace aa
