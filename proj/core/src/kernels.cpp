#include "mzvlab/kernels.hpp"

#include "mzvlab/arith.hpp"
#include "mzvlab/error.hpp"

namespace mzvlab {
namespace {

using i128 = Int128;

bool same(const Index& m, std::size_t mi, const Index& n, std::size_t ni) { return m[mi] == n[ni]; }

void check_c_domain(const Index& m, const Index& n, const char* who) {
  require(m.depth() == 3 && n.depth() == 3, std::string(who) + ": depth-3 indices required");
  require(m.weight() == n.weight(), std::string(who) + ": weight mismatch between " + m.str() +
                                        " and " + n.str());
}

}  // namespace

std::int64_t b_coeff(int n, int n2, int m) {
  require(m >= 1, "b_coeff: m must be >= 1");
  return sign_pow(n) * binom_small(m - 1, n - 1) + sign_pow(n2 - m) * binom_small(m - 1, n2 - 1);
}

std::int64_t e_coeff(const Index& m, const Index& n) {
  require(m.depth() == n.depth(), "e_coeff: length mismatch between " + m.str() + " and " + n.str());
  const std::size_t r = m.depth();
  std::int64_t total = (m == n) ? 1 : 0;
  // i runs over 1..r-1 in the 1-based formula; here i is 0-based (i = 0..r-2).
  for (std::size_t i = 0; i + 1 < r; ++i) {
    // m side: m_2 .. m_i, m_{i+2} .. m_r   (1-based)
    // n side: n_1 .. n_{i-1}, n_{i+2} .. n_r
    bool match = true;
    std::size_t mi = 1;
    std::size_t ni = 0;
    // first block has length i (1-based i-1)
    for (std::size_t t = 0; t < i && match; ++t) match = same(m, mi++, n, ni++);
    mi = i + 2;
    ni = i + 2;
    for (; mi < r && match; ++mi, ++ni) match = same(m, mi, n, ni);
    if (match) total += b_coeff(n[i], n[i + 1], m[0]);
  }
  return total;
}

BigInt c_coeff(const Index& m, const Index& n) {
  check_c_domain(m, n, "c_coeff");
  require(m[0] >= 3 && m[0] % 2 == 1 && m[1] >= 3 && m[1] % 2 == 1 && m[2] >= 2,
          "c_coeff: m must satisfy m1, m2 odd >= 3 and m3 >= 2, got " + m.str());
  const int weight = m.weight();
  const Index tail{m[1], m[2]};
  i128 acc = 0;
  for (int k1 = 1; k1 <= weight - 2; ++k1) {
    const int d = (k1 == m[0]) ? 1 : 0;
    for (int k2 = 1; k1 + k2 <= weight - 1; ++k2) {
      const int k3 = weight - k1 - k2;
      const std::int64_t e2 = e_coeff(tail, Index{k2, k3});
      const std::int64_t e3 = e_coeff(Index{k1, k2, k3}, n);
      acc += static_cast<i128>(d) * e2 * e3;
    }
  }
  return to_bigint(acc);
}

BigInt c_coeff_fast(const Index& m, const Index& n) {
  check_c_domain(m, n, "c_coeff_fast");
  const int weight = m.weight();
  const int k1 = m[0];
  const Index tail{m[1], m[2]};
  i128 acc = 0;
  for (int k2 = 1; k1 + k2 <= weight - 1; ++k2) {
    const int k3 = weight - k1 - k2;
    const std::int64_t e2 = e_coeff(tail, Index{k2, k3});
    if (e2 == 0) continue;
    acc += static_cast<i128>(e2) * e_coeff(Index{k1, k2, k3}, n);
  }
  return to_bigint(acc);
}

BigInt h_coeff(const Index& m, const Index& n) {
  check_c_domain(m, n, "h_coeff");
  require(m[0] >= 1 && m[1] >= 1 && m[2] >= 1, "h_coeff: m parts must be >= 1");
  const int m1 = m[0], m2 = m[1];
  const int n1 = n[0], n2 = n[1], n3 = n[2];
  i128 acc = (m == n) ? 1 : 0;
  if (m2 == n1) acc += b_coeff(n2, n3, m1);
  if (m[0] == n1) acc += b_coeff(n2, n3, m2);
  {
    const i128 inner = static_cast<i128>(sign_pow(n2)) * binom_small(m1 - 1, n2 - 1) -
                       static_cast<i128>(sign_pow(n1)) * binom_small(m1 - 1, n1 - 1);
    acc += sign_pow(m1 + m2 + n3) * static_cast<i128>(binom_small(m2 - 1, n3 - 1)) * inner;
  }
  {
    const i128 inner = static_cast<i128>(sign_pow(n2)) * binom_small(m1 - 1, n2 - 1) -
                       static_cast<i128>(sign_pow(n3)) * binom_small(m1 - 1, n3 - 1);
    acc += sign_pow(n1) * static_cast<i128>(binom_small(m2 - 1, n1 - 1)) * inner;
  }
  return to_bigint(acc);
}

namespace {

// sum_{j=2}^{N} binom(j-1, s-1) beta_j beta_{N-j}
Rational beta_convolution(int weight, int s) {
  Rational acc;
  for (int j = 2; j <= weight; ++j) {
    const BigInt c = binom(j - 1, s - 1);
    if (c == 0) continue;
    const Rational bj = beta(j);
    if (bj.is_zero()) continue;
    acc += Rational(c) * bj * beta(weight - j);
  }
  return acc;
}

}  // namespace

Rational tau(int n1, int n2) {
  require(n1 >= 1 && n2 >= 1, "tau: n1, n2 must be >= 1");
  const int weight = n1 + n2;
  if (weight % 2 == 1) {
    const Rational inner = Rational(sign_pow(n1)) + Rational(binom(weight - 1, n1 - 1)) +
                           Rational(binom(weight - 1, n2 - 1));
    return Rational(sign_pow(n1 + 1), 2) * inner;
  }
  const Rational bn = beta(weight);
  const Rational sgn(sign_pow(n2));
  Rational result = Rational(-1, 12) * (Rational(5) + sgn * Rational(binom(weight - 1, n2 - 1)) -
                                        sgn * Rational(binom(weight - 1, n2)));
  result += beta(n1) * beta(n2) / (Rational(3) * bn);
  result += sgn / (Rational(3) * bn) * beta_convolution(weight, n2);
  return result;
}

Rational lambda_coeff(int r, int s) {
  require(r >= 1 && s >= 1, "lambda_coeff: r, s must be >= 1");
  require((r + s) % 2 == 0, "lambda_coeff: r + s must be even");
  const int weight = r + s;
  const Rational sgn(sign_pow(s));
  Rational result = Rational(-1, 12) * (Rational(1) - sgn * Rational(binom(weight - 1, s - 1)) +
                                        sgn * Rational(binom(weight - 1, s)));
  result -= sgn / (Rational(3) * beta(weight)) * beta_convolution(weight, s);
  return result;
}

}  // namespace mzvlab
