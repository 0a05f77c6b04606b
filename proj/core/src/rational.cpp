#include "aa/rational.hpp"

#include <cctype>
#include <functional>

#include "aa/error.hpp"

namespace aa {

static_assert(sizeof(long) == sizeof(long long), "mpq_class takes long");

Rational::Rational(long long n) : v_(static_cast<long>(n)) {}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw ParseError("zero denominator");
  v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) {
      throw ParseError("malformed exponent in '" + std::string(text) + "'");
    }
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) {
    throw ParseError("empty number '" + std::string(text) + "'");
  }
  if ((!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part))) {
    throw ParseError("malformed number '" + std::string(text) + "'");
  }
  std::string digits = std::string(int_part) + std::string(frac_part);
  mpz_class num(digits.empty() ? std::string("0") : digits, 10);
  long scale = static_cast<long>(frac_part.size()) - exponent;
  mpq_class q;
  if (scale >= 0) {
    q = mpq_class(num, pow10(static_cast<unsigned long>(scale)));
  } else {
    q = mpq_class(num * pow10(static_cast<unsigned long>(-scale)));
  }
  q.canonicalize();
  if (negative) q = -q;
  return Rational(q);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    mpq_class q(mpz_class(std::string(num), 10), d);
    q.canonicalize();
    if (negative) q = -q;
    return Rational(q);
  }
  return parse_decimal(text);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::pow(unsigned exponent) const {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), exponent);
  return Rational(mpq_class(num, den));
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error("reciprocal of zero");
  return Rational(mpq_class(1) / v_);
}

std::string Rational::str() const { return v_.get_str(); }

std::string Rational::decimal(int digits) const {
  mpz_class scaled = ::abs(v_.get_num()) * pow10(static_cast<unsigned long>(digits));
  mpz_class q = scaled / v_.get_den();  // truncation
  std::string s = q.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  std::string out = s.substr(0, s.size() - static_cast<std::size_t>(digits));
  if (digits > 0) out += "." + s.substr(s.size() - static_cast<std::size_t>(digits));
  if (sign() < 0) out.insert(0, "-");
  return out;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.v_, b.v_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering cmp_rational(const Rational& x, const Rational& y) {
  // Cross-multiplication over positive denominators: x.n * y.d vs y.n * x.d.
  mpz_class lhs = x.numerator() * y.denominator();
  mpz_class rhs = y.numerator() * x.denominator();
  int c = cmp(lhs, rhs);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::size_t hash_value(const Rational& r) {
  std::hash<std::string> h;
  return h(r.str());
}

}  // namespace aa
