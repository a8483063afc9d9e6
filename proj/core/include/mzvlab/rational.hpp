#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace mzvlab {

using BigInt = mpz_class;
__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

BigInt to_bigint(std::int64_t v);
BigInt to_bigint(Int128 v);

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T n) : q_(to_bigint(static_cast<std::int64_t>(n))) {}  // NOLINT(google-explicit-constructor)

  Rational(std::int64_t num, std::int64_t den);
  Rational(const BigInt& n);  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(mpq_class q);

  /// Parses "p/q" or "p" (optional leading '-').
  static Rational parse(std::string_view text);

  [[nodiscard]] BigInt numerator() const { return q_.get_num(); }
  [[nodiscard]] BigInt denominator() const { return q_.get_den(); }
  [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
  [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] Rational abs() const;
  [[nodiscard]] double to_double() const { return q_.get_d(); }
  [[nodiscard]] const mpq_class& raw() const { return q_; }

  /// "p/q", or "p" when the denominator is 1.
  [[nodiscard]] std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);
  Rational operator-() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// gcd-normalizes a vector of rationals to a primitive integer vector. The
/// result is the input times a positive rational scalar.
template <typename Container>
void scale_to_primitive(Container& values) {
  BigInt lcm_den = 1;
  for (const Rational& v : values) {
    if (!v.is_zero()) lcm_den = lcm(lcm_den, v.denominator());
  }
  BigInt g = 0;
  for (const Rational& v : values) {
    if (v.is_zero()) continue;
    BigInt n = v.numerator() * (lcm_den / v.denominator());
    g = gcd(g, n);
  }
  if (g == 0) return;
  for (Rational& v : values) {
    if (v.is_zero()) continue;
    BigInt n = v.numerator() * (lcm_den / v.denominator());
    v = Rational(BigInt(n / g));
  }
}

}  // namespace mzvlab

template <>
struct std::hash<mzvlab::Rational> {
  std::size_t operator()(const mzvlab::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};
