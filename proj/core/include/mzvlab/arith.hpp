#pragma once

#include <cstdint>
#include <vector>

#include "mzvlab/rational.hpp"

namespace mzvlab {

/// Largest upper argument served from the memoized binomial table.
inline constexpr int kBinomialTableBound = 128;

/// Bernoulli number B_n with B_1 = -1/2.
Rational bernoulli(int n);

/// beta_k = -B_k / (2 k!) for k even, 0 for k odd.
Rational beta(int k);

BigInt factorial(int n);

/// Binomial coefficient with the conventions binom(m, n) = 0 for n < 0 and
/// for m < n. Every other input has 0 <= n <= m.
BigInt binom(long m, long n);

/// Same conventions, for kernels whose arguments stay below 63.
std::int64_t binom_small(int m, int n);

/// (-1)^n for any integer n.
constexpr int sign_pow(long n) { return (n % 2 == 0) ? 1 : -1; }

/// Truncated Laurent series in x with integer coefficients, used for the
/// dimension generating functions. Coefficients are stored for exponents in
/// [low, high]; everything above `high` is unknown and dropped.
class Series {
 public:
  Series(int low, int high);

  static Series odd(int high);   ///< O(x) = x^3 / (1 - x^2)
  static Series even(int high);  ///< E(x) = x^2 / (1 - x^2)
  static Series cusp(int high);  ///< S(x) = x^12 / ((1 - x^4)(1 - x^6))
  static Series monomial(int exponent, int high, std::int64_t coefficient = 1);

  [[nodiscard]] int low() const { return low_; }
  [[nodiscard]] int high() const { return high_; }
  [[nodiscard]] std::int64_t coefficient(int exponent) const;
  void set(int exponent, std::int64_t value);

  /// Multiplies by x^k (k may be negative).
  [[nodiscard]] Series shifted(int k) const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);

 private:
  int low_;
  int high_;
  std::vector<std::int64_t> c_;
};

/// dim S_k: the coefficient of x^k in S(x).
int dim_cusp(int k);
/// Coefficient of x^k in O(x).
int odd_series_coeff(int k);
/// Coefficient of x^k in E(x).
int even_series_coeff(int k);

}  // namespace mzvlab
