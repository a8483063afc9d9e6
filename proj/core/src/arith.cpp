#include "mzvlab/arith.hpp"

#include <algorithm>
#include <array>

#include "mzvlab/error.hpp"

namespace mzvlab {
namespace {

std::vector<Rational> bernoulli_table(int upto) {
  // sum_{k=0}^{n} binom(n+1, k) B_k = 0 for n >= 1
  std::vector<Rational> b(static_cast<std::size_t>(upto) + 1);
  b[0] = Rational(1);
  for (int n = 1; n <= upto; ++n) {
    if (n > 1 && n % 2 == 1) {
      b[n] = Rational(0);
      continue;
    }
    Rational acc;
    for (int k = 0; k < n; ++k) {
      if (!b[k].is_zero()) acc += Rational(binom(n + 1, k)) * b[k];
    }
    b[n] = -acc / Rational(n + 1);
  }
  return b;
}

const std::vector<Rational>& memo_bernoulli() {
  static const std::vector<Rational> table = bernoulli_table(kBinomialTableBound);
  return table;
}

const std::vector<std::vector<BigInt>>& memo_binom() {
  static const std::vector<std::vector<BigInt>> table = [] {
    std::vector<std::vector<BigInt>> t(kBinomialTableBound + 1);
    for (int m = 0; m <= kBinomialTableBound; ++m) {
      t[m].resize(static_cast<std::size_t>(m) + 1);
      t[m][0] = 1;
      t[m][m] = 1;
      for (int n = 1; n < m; ++n) t[m][n] = t[m - 1][n - 1] + t[m - 1][n];
    }
    return t;
  }();
  return table;
}

constexpr int kSmallBound = 62;

const std::array<std::array<std::int64_t, kSmallBound + 1>, kSmallBound + 1>& memo_small() {
  static const auto table = [] {
    std::array<std::array<std::int64_t, kSmallBound + 1>, kSmallBound + 1> t{};
    for (int m = 0; m <= kSmallBound; ++m) {
      t[m][0] = 1;
      for (int n = 1; n <= m; ++n) t[m][n] = t[m - 1][n - 1] + (n <= m - 1 ? t[m - 1][n] : 0);
    }
    return t;
  }();
  return table;
}

}  // namespace

Rational bernoulli(int n) {
  require(n >= 0, "bernoulli: n must be non-negative");
  if (n <= kBinomialTableBound) return memo_bernoulli()[static_cast<std::size_t>(n)];
  if (n % 2 == 1) return Rational(0);
  return bernoulli_table(n)[static_cast<std::size_t>(n)];
}

Rational beta(int k) {
  require(k >= 0, "beta: k must be non-negative");
  if (k % 2 == 1) return Rational(0);
  return -bernoulli(k) / Rational(BigInt(2 * factorial(k)));
}

BigInt factorial(int n) {
  require(n >= 0, "factorial: n must be non-negative");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt binom(long m, long n) {
  if (n < 0 || m < n) return 0;
  if (m <= kBinomialTableBound) return memo_binom()[m][n];
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(n));
  return r;
}

std::int64_t binom_small(int m, int n) {
  if (n < 0 || m < n) return 0;
  require(m <= kSmallBound, "binom_small: upper argument exceeds 62 (weight too large)");
  return memo_small()[m][n];
}

// ---------------------------------------------------------------------------

Series::Series(int low, int high) : low_(low), high_(high) {
  require(high >= low, "Series: empty exponent range");
  c_.assign(static_cast<std::size_t>(high - low + 1), 0);
}

Series Series::monomial(int exponent, int high, std::int64_t coefficient) {
  Series s(std::min(exponent, high), high);
  if (exponent <= high) s.set(exponent, coefficient);
  return s;
}

Series Series::odd(int high) {
  Series s(0, std::max(high, 0));
  for (int k = 3; k <= high; k += 2) s.set(k, 1);
  return s;
}

Series Series::even(int high) {
  Series s(0, std::max(high, 0));
  for (int k = 2; k <= high; k += 2) s.set(k, 1);
  return s;
}

Series Series::cusp(int high) {
  Series s(0, std::max(high, 0));
  for (int k = 0; k <= high; ++k) s.set(k, dim_cusp(k));
  return s;
}

std::int64_t Series::coefficient(int exponent) const {
  if (exponent < low_ || exponent > high_) return 0;
  return c_[static_cast<std::size_t>(exponent - low_)];
}

void Series::set(int exponent, std::int64_t value) {
  require(exponent >= low_ && exponent <= high_, "Series::set: exponent out of range");
  c_[static_cast<std::size_t>(exponent - low_)] = value;
}

Series Series::shifted(int k) const {
  Series s(low_ + k, high_ + k);
  for (int e = low_; e <= high_; ++e) s.set(e + k, coefficient(e));
  return s;
}

Series operator+(const Series& a, const Series& b) {
  Series s(std::min(a.low_, b.low_), std::min(a.high_, b.high_));
  for (int e = s.low_; e <= s.high_; ++e) s.set(e, a.coefficient(e) + b.coefficient(e));
  return s;
}

Series operator-(const Series& a, const Series& b) {
  Series s(std::min(a.low_, b.low_), std::min(a.high_, b.high_));
  for (int e = s.low_; e <= s.high_; ++e) s.set(e, a.coefficient(e) - b.coefficient(e));
  return s;
}

Series operator*(const Series& a, const Series& b) {
  // Known precision: the product is exact up to min(a.high + b.low, b.high + a.low).
  const int low = a.low_ + b.low_;
  const int high = std::min(a.high_ + b.low_, b.high_ + a.low_);
  Series s(low, std::max(high, low));
  for (int i = a.low_; i <= a.high_; ++i) {
    const std::int64_t ai = a.coefficient(i);
    if (ai == 0) continue;
    for (int j = b.low_; j <= b.high_ && i + j <= high; ++j) {
      s.c_[static_cast<std::size_t>(i + j - low)] += ai * b.coefficient(j);
    }
  }
  return s;
}

int dim_cusp(int k) {
  require(k >= 0, "dim_cusp: k must be non-negative");
  if (k < 12 || k % 2 == 1) return 0;
  int count = 0;
  for (int b = 0; 6 * b <= k - 12; ++b) {
    if ((k - 12 - 6 * b) % 4 == 0) ++count;
  }
  return count;
}

int odd_series_coeff(int k) { return (k >= 3 && k % 2 == 1) ? 1 : 0; }
int even_series_coeff(int k) { return (k >= 2 && k % 2 == 0) ? 1 : 0; }

}  // namespace mzvlab
