#include "aa/sqrt_sum.hpp"

#include <utility>

#include "aa/error.hpp"

namespace aa {

SqrtSum2::SqrtSum2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.sign() < 0 || b_.sign() < 0) {
    throw NegativeRadicand("negative radicand in sqrt(" + a_.str() + ")+sqrt(" + b_.str() + ")");
  }
  if (a_ < b_) std::swap(a_, b_);
  if (!b_.is_zero()) {
    if (auto root = rational_sqrt(a_ * b_)) {
      a_ = a_ + b_ + 2 * *root;
      b_ = Rational(0);
    }
  }
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  const mpz_class& num = r.numerator();
  const mpz_class& den = r.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class n;
  mpz_class d;
  mpz_sqrt(n.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), den.get_mpz_t());
  return Rational(mpq_class(n, d));
}

SqrtSum2 SqrtSum2::of(const Rational& r) {
  if (r.sign() < 0) throw NegativeRadicand("cannot embed negative rational " + r.str());
  return SqrtSum2(r * r, 0);
}

SqrtSum2 SqrtSum2::twice_sqrt(const Rational& x) { return SqrtSum2(4 * x, 0); }

bool SqrtSum2::is_rational_embedding() const { return b_.is_zero() && rational_sqrt(a_).has_value(); }

SqrtSum2 SqrtSum2::scaled_by_sqrt(const Rational& k) const { return SqrtSum2(a_ * k, b_ * k); }

std::string SqrtSum2::str() const {
  if (b_.is_zero()) return "sqrt(" + a_.str() + ")";
  return "sqrt(" + a_.str() + ")+sqrt(" + b_.str() + ")";
}

namespace {

// floor(sqrt(r) * 10^digits) computed with integer square roots.
mpz_class scaled_isqrt(const Rational& r, unsigned long digits) {
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, 2 * digits);
  mpz_class v = r.numerator() * p10 / r.denominator();
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
  return root;
}

}  // namespace

std::string SqrtSum2::decimal(int digits) const {
  constexpr unsigned long kGuard = 6;
  const auto total = static_cast<unsigned long>(digits) + kGuard;
  mpz_class sum = scaled_isqrt(a_, total) + scaled_isqrt(b_, total);
  mpz_class guard;
  mpz_ui_pow_ui(guard.get_mpz_t(), 10, kGuard);
  sum /= guard;
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return Rational(mpq_class(sum, p10)).decimal(digits);
}

double SqrtSum2::approx() const {
  mpf_class a(a_.mpq(), 128);
  mpf_class b(b_.mpq(), 128);
  mpf_class s = sqrt(a) + sqrt(b);
  return s.get_d();
}

bool operator==(const SqrtSum2& p, const SqrtSum2& q) { return cmp_sqrt2(p, q) == 0; }

std::strong_ordering operator<=>(const SqrtSum2& p, const SqrtSum2& q) { return cmp_sqrt2(p, q); }

int sign_of(std::strong_ordering o) {
  if (o < 0) return -1;
  if (o > 0) return 1;
  return 0;
}

namespace {

std::strong_ordering from_sign(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

int sign_rational_plus_sqrt(const Rational& u, const Rational& z) {
  if (z.sign() < 0) throw NegativeRadicand("negative radicand " + z.str());
  if (u.sign() >= 0) return (u.sign() > 0 || z.sign() > 0) ? 1 : 0;
  // u < 0: compare sqrt(z) with |u|.
  return sign_of(z <=> u * u);
}

std::strong_ordering cmp_sqrt2(const SqrtSum2& p, const SqrtSum2& q) {
  if (p.a() == q.a() && p.b() == q.b()) return std::strong_ordering::equal;
  if (p.b().is_zero() && q.b().is_zero()) return p.a() <=> q.a();

  // Both sides are nonnegative, so compare squares:
  //   (pa+pb) + 2 sqrt(pa pb)  vs  (qa+qb) + 2 sqrt(qa qb)
  // i.e. the sign of r + sqrt(x) - sqrt(y).
  const Rational r = (p.a() + p.b()) - (q.a() + q.b());
  const Rational x = 4 * p.a() * p.b();
  const Rational y = 4 * q.a() * q.b();
  const int rs = r.sign();
  const int ds = sign_of(x <=> y);

  if (rs >= 0 && ds >= 0) return from_sign((rs > 0 || ds > 0) ? 1 : 0);
  if (rs <= 0 && ds <= 0) return from_sign((rs < 0 || ds < 0) ? -1 : 0);

  // Opposite signs. Square again: |r| vs |sqrt(x) - sqrt(y)| reduces to the
  // sign of u + sqrt(4xy) with u = r^2 - x - y.
  const Rational u = r * r - x - y;
  const int s = sign_rational_plus_sqrt(u, 4 * x * y);
  return from_sign(rs > 0 ? s : -s);
}

}  // namespace aa
