#include <gtest/gtest.h>

#include <mpfr.h>

#include <cmath>

#include "mzvlab/arith.hpp"
#include "mzvlab/error.hpp"
#include "mzvlab/numeric.hpp"

using namespace mzvlab;

namespace {

BigFloat pi_power(int n, mpfr_prec_t bits) {
  BigFloat pi(bits);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  BigFloat out(1, bits);
  for (int i = 0; i < n; ++i) out *= pi;
  return out;
}

double gap(const BigFloat& a, const BigFloat& b) { return (a - b).abs().to_double(); }

ZetaTerm single(int s, long c) { return {ZetaTerm::Kind::kSingle, Index{s}, Rational(c)}; }
ZetaTerm dbl(int r, int s, const Rational& c) { return {ZetaTerm::Kind::kDouble, Index{r, s}, c}; }
ZetaTerm half(int r, int s, long c) { return {ZetaTerm::Kind::kHalf, Index{r, s}, Rational(c)}; }
ZetaTerm product(int a, int b, long c) { return {ZetaTerm::Kind::kProduct, Index{a, b}, Rational(c)}; }

const PrecisionBudget kDefault{};

}  // namespace

TEST(Zeta, EvenValuesFromClosedForms) {
  const mpfr_prec_t bits = kDefault.bits();
  const Approx z2 = zeta(2, kDefault);
  EXPECT_LE(gap(z2.value, pi_power(2, bits) / BigFloat(6, bits)), 1e-25);
  EXPECT_LT(z2.bound, 1e-20);
  EXPECT_LE(gap(zeta(6, kDefault).value, pi_power(6, bits) / BigFloat(945, bits)), 1e-25);
  // Euler: zeta(2n) = (-1)^(n+1) B_2n (2 pi)^2n / (2 (2n)!)
  const Rational coef = Rational(-1) * bernoulli(12) * Rational(BigInt(4096)) / Rational(BigInt(BigInt(2) * factorial(12)));
  EXPECT_EQ(coef, Rational(691, 638512875));
  EXPECT_LE(gap(zeta(12, kDefault).value, BigFloat(coef, bits) * pi_power(12, bits)), 1e-25);
  EXPECT_THROW(zeta(1, kDefault), ContractViolation);
}

TEST(DoubleZeta, ClassicalIdentities) {
  const Approx z12 = double_zeta(1, 2, kDefault);
  const Approx z3 = zeta(3, kDefault);
  EXPECT_LE(gap(z12.value, z3.value), z12.bound + z3.bound);
  EXPECT_LT(z12.bound, 1e-20);

  const Approx six = eval_relation({dbl(2, 4, Rational(1)), dbl(4, 2, Rational(1)), {ZetaTerm::Kind::kSingle, Index{6}, Rational(-3, 4)}},
                                   kDefault);
  EXPECT_TRUE(relation_holds(six, 1e-20));

  const Approx parity = eval_relation(
      {dbl(2, 3, Rational(1)), product(2, 3, -3), {ZetaTerm::Kind::kSingle, Index{5}, Rational(11, 2)}}, kDefault);
  EXPECT_TRUE(relation_holds(parity, 1e-20));

  EXPECT_THROW(double_zeta(2, 1, kDefault), ContractViolation);
  EXPECT_THROW(double_zeta(0, 3, kDefault), ContractViolation);
  EXPECT_THROW(eval_relation({dbl(3, 1, Rational(1))}, kDefault), ContractViolation);
}

TEST(DoubleZeta, StuffleSanity) {
  for (auto [a, b] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 4}}) {
    const Approx rel = eval_relation({product(a, b, 1), dbl(a, b, Rational(-1)), dbl(b, a, Rational(-1)), single(a + b, -1)},
                                     kDefault);
    EXPECT_TRUE(relation_holds(rel, 1e-20)) << a << "," << b;
  }
}

TEST(Relations, ReferenceWeightTwelve) {
  const Approx even = eval_relation(
      {half(1, 11, 22680), half(3, 9, 13006), half(5, 7, -29145), half(7, 5, -35364), half(9, 3, 22680)}, kDefault);
  EXPECT_TRUE(relation_holds(even, 1e-20));
  EXPECT_LT(std::fabs(even.value.to_double()), 1e-20);
  const Approx odd = eval_relation({half(3, 10, -12), half(5, 8, -14), half(7, 6, 5), half(9, 4, 18)}, kDefault);
  EXPECT_TRUE(relation_holds(odd, 1e-20));
  // A perturbed relation must be rejected.
  const Approx wrong = eval_relation({half(3, 10, -12), half(5, 8, -14), half(7, 6, 5), half(9, 4, 19)}, kDefault);
  EXPECT_FALSE(relation_holds(wrong, 1e-20));
}

TEST(Relations, EmptyListIsExactlyZero) {
  const Approx empty = eval_relation({}, kDefault);
  EXPECT_EQ(empty.value.to_double(), 0.0);
  EXPECT_EQ(empty.bound, 0.0);
}

TEST(Precision, DoublingIsStableAndTightens) {
  const PrecisionBudget lo = PrecisionBudget::with_digits(30), hi = PrecisionBudget::with_digits(60);
  for (auto [r, s] : {std::pair{1, 2}, std::pair{3, 9}, std::pair{9, 3}, std::pair{5, 7}}) {
    const Approx a = double_zeta(r, s, lo), b = double_zeta(r, s, hi);
    EXPECT_LE(gap(a.value, b.value), a.bound + b.bound);
    EXPECT_LE(b.bound * 10, a.bound);
    EXPECT_LT(b.bound, 1e-49);
  }
  const Approx z = zeta(7, PrecisionBudget::with_digits(45));
  EXPECT_LT(z.bound, 1e-34);
  EXPECT_THROW((PrecisionBudget{1e-30, 20, 10}.validate()), ContractViolation);
}

TEST(Precision, TailBoundIsHonestForZeta93) {
  const Approx reference = double_zeta(9, 3, PrecisionBudget::with_digits(50));
  for (SumMethod method : {SumMethod::kPlain, SumMethod::kEulerMaclaurin}) {
    for (long n : {2000L, 20000L}) {
      PrecisionBudget small{1e-5, 40, 10, method, n / 2};
      PrecisionBudget large{1e-5, 40, 10, method, n};
      const Approx a = double_zeta(9, 3, small), b = double_zeta(9, 3, large);
      EXPECT_LE(gap(a.value, b.value), a.bound) << n;
      EXPECT_LE(gap(a.value, reference.value), a.bound + reference.bound);
      EXPECT_LE(gap(b.value, reference.value), b.bound + reference.bound);
    }
  }
}

TEST(Precision, PlainSummationFallback) {
  const PrecisionBudget plain = PrecisionBudget::plain(1000000, 1e-9);
  const Approx rel = eval_relation(
      {dbl(2, 3, Rational(1)), product(2, 3, -3), {ZetaTerm::Kind::kSingle, Index{5}, Rational(11, 2)}}, plain);
  EXPECT_TRUE(relation_holds(rel, 1e-9));
  EXPECT_GT(rel.bound, 1e-16);
}
