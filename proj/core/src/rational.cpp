#include "mzvlab/rational.hpp"

#include <ostream>

#include "mzvlab/error.hpp"

namespace mzvlab {

BigInt to_bigint(std::int64_t v) {
  // gmpxx has no long long constructor; long is 64-bit on the supported ABIs.
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return BigInt(static_cast<long>(v));
}

BigInt to_bigint(Int128 v) {
  const bool neg = v < 0;
  UInt128 u = neg ? -static_cast<UInt128>(v) : static_cast<UInt128>(v);
  const auto hi = static_cast<unsigned long>(u >> 64);
  const auto lo = static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL);
  BigInt r = hi;
  r <<= 64;
  r += lo;
  return neg ? BigInt(-r) : r;
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(to_bigint(num), to_bigint(den)) {}

Rational::Rational(const BigInt& n) : q_(n) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  require(den != 0, "Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
  require(q_.get_den() != 0, "Rational: zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s, 10));
    return Rational(BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw ContractViolation("Rational::parse: malformed rational '" + s + "'");
  }
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  require(!o.is_zero(), "Rational: division by zero");
  q_ /= o.q_;
  return *this;
}
Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace mzvlab
