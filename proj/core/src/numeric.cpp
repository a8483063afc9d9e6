#include "mzvlab/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "mzvlab/arith.hpp"
#include "mzvlab/error.hpp"

namespace mzvlab {

PrecisionBudget PrecisionBudget::with_digits(int digits, int guard) {
  PrecisionBudget b;
  b.working_digits = digits;
  b.guard_digits = guard;
  b.target_error = std::pow(10.0, -(digits - guard));
  return b;
}

PrecisionBudget PrecisionBudget::plain(long n, double target) {
  PrecisionBudget b;
  b.method = SumMethod::kPlain;
  b.truncation = n;
  b.target_error = target;
  b.working_digits = 30;
  return b;
}

mpfr_prec_t PrecisionBudget::bits() const {
  return static_cast<mpfr_prec_t>(std::ceil(working_digits * 3.3219280948873623)) + 32;
}

long PrecisionBudget::truncation_n() const {
  if (truncation > 0) return truncation;
  return method == SumMethod::kPlain ? 1000000L : std::max(32, working_digits + 16);
}

void PrecisionBudget::validate() const {
  require(target_error > 0, "precision budget: target error must be positive");
  require(working_digits >= 5, "precision budget: at least 5 working digits");
  const double needed = -std::log10(target_error) + guard_digits;
  require(working_digits + 1e-9 >= needed,
          "precision budget: working digits must cover the target error plus the guard digits");
}

std::string Approx::bound_str() const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", bound);
  return buf;
}

namespace {

// Relative rounding allowance per arithmetic step.
double unit(mpfr_prec_t bits) { return std::ldexp(1.0, -static_cast<int>(bits) + 1); }

// B_2j / (2j)! * s (s+1) ... (s+2j-2), the Euler-Maclaurin coefficient of
// the j-th correction for f(x) = x^-s.
BigFloat em_coefficient(int j, int s, mpfr_prec_t bits) {
  BigFloat c(Rational(bernoulli(2 * j)) / Rational(factorial(2 * j)), bits);
  for (int t = 0; t <= 2 * j - 2; ++t) c *= BigFloat(s + t, bits);
  return c;
}

BigFloat power(long n, long e, mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_set_si(r.get(), n, MPFR_RNDN);
  mpfr_pow_si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

constexpr int kMaxCorrections = kBinomialTableBound / 2 - 1;

// sum_{n >= N} n^-s by Euler-Maclaurin. The remainder is at most the first
// omitted correction; it is counted twice.
Approx power_tail(long n, int s, mpfr_prec_t bits, double eps) {
  require(s >= 2, "power tail needs s >= 2");
  Approx out{BigFloat(bits), 0, 0};
  out.value = power(n, 1 - s, bits) / BigFloat(s - 1, bits);
  out.value += power(n, -s, bits) / BigFloat(2, bits);
  int j = 1;
  for (; j <= kMaxCorrections; ++j) {
    const BigFloat term = em_coefficient(j, s, bits) * power(n, 1 - s - 2 * j, bits);
    const double size = std::fabs(term.to_double());
    if (size < eps) break;
    out.value += term;
  }
  const BigFloat next = em_coefficient(j, s, bits) * power(n, 1 - s - 2 * j, bits);
  out.bound = 2 * std::fabs(next.to_double()) + 8 * (j + 2) * unit(bits) * std::fabs(out.value.to_double());
  return out;
}

// D_N = sum over N <= m < n of m^-r n^-s, from the expansion of the inner
// tail sum_{n > m} n^-s in powers of m.
Approx double_tail(long n, int r, int s, mpfr_prec_t bits, double eps) {
  const int w = r + s;
  Approx out{BigFloat(bits), 0, 0};
  const auto add = [&](const BigFloat& coef, int exponent) {
    const Approx t = power_tail(n, exponent, bits, eps);
    out.value += coef * t.value;
    out.bound += std::fabs(coef.to_double()) * t.bound;
  };
  add(BigFloat(1, bits) / BigFloat(s - 1, bits), w - 1);
  add(BigFloat(-1, bits) / BigFloat(2, bits), w);
  int j = 1;
  for (; j <= kMaxCorrections; ++j) {
    const BigFloat c = em_coefficient(j, s, bits);
    const double size = std::fabs((c * power(n, 1 - w - 2 * j + 1, bits)).to_double());
    if (size < eps) break;
    add(c, w + 2 * j - 1);
  }
  // per-m remainder 2 |c_j| m^(1-s-2j), summed against m^-r
  const BigFloat c = em_coefficient(j, s, bits);
  const Approx rest = power_tail(n, w + 2 * j - 1, bits, eps);
  out.bound += 2 * std::fabs(c.to_double()) * (std::fabs(rest.value.to_double()) + rest.bound);
  return out;
}

// H^(r)_k for k = 0..n-1 is accumulated on the fly; returns
// sum_{2 <= m < n} m^-s H^(r)_{m-1} and H^(r)_{n-1}.
std::pair<BigFloat, BigFloat> direct_double_sum(long n, int r, int s, mpfr_prec_t bits) {
  BigFloat harmonic(bits);
  BigFloat total(bits);
  for (long m = 1; m < n; ++m) {
    if (m >= 2) total += harmonic * BigFloat::inverse_power(static_cast<unsigned long>(m), s, bits);
    harmonic += BigFloat::inverse_power(static_cast<unsigned long>(m), r, bits);
  }
  return {std::move(total), std::move(harmonic)};
}

double plain_zeta_tail(long n, int s) { return std::pow(static_cast<double>(n), 1.0 - s) / (s - 1); }

// Bound on sum_{m > n} m^-s H^(r)_{m-1}.
double plain_double_tail(long n, int r, int s) {
  const double nn = static_cast<double>(n);
  const double head = std::pow(nn, 1.0 - s);
  if (r >= 2) return 1.6449340668482264 * head / (s - 1);
  return head * ((1 + std::log(nn)) / (s - 1) + 1.0 / ((s - 1.0) * (s - 1.0)));
}

}  // namespace

Approx zeta(int s, const PrecisionBudget& budget) {
  require(s >= 2, "zeta: argument must be at least 2");
  const mpfr_prec_t bits = budget.bits();
  Approx out{BigFloat(bits), 0, budget.working_digits};
  if (budget.method == SumMethod::kPlain) {
    const long n = budget.truncation_n();
    for (long m = 1; m <= n; ++m) out.value += BigFloat::inverse_power(static_cast<unsigned long>(m), s, bits);
    // the tail lies between the integrals from n+1 and from n; take the midpoint
    const double upper = plain_zeta_tail(n, s);
    const double lower = plain_zeta_tail(n + 1, s);
    BigFloat mid(bits);
    mpfr_set_d(mid.get(), (upper + lower) / 2, MPFR_RNDN);
    out.value += mid;
    out.bound = (upper - lower) / 2 + 1e-15 * upper + 4 * n * unit(bits) * out.value.to_double();
    return out;
  }
  mpfr_zeta_ui(out.value.get(), static_cast<unsigned long>(s), MPFR_RNDN);
  out.bound = unit(bits) * out.value.to_double();
  return out;
}

Approx double_zeta(int r, int s, const PrecisionBudget& budget) {
  require(r >= 1, "double_zeta: first argument must be positive");
  require(s >= 2, "double_zeta: last argument must be at least 2 (divergent otherwise)");
  const mpfr_prec_t bits = budget.bits();
  const long n = budget.truncation_n();
  Approx out{BigFloat(bits), 0, budget.working_digits};
  if (budget.method == SumMethod::kPlain) {
    auto [total, harmonic] = direct_double_sum(n + 1, r, s, bits);
    out.value = std::move(total);
    out.bound = plain_double_tail(n, r, s) + 8 * n * unit(bits) * out.value.to_double();
    return out;
  }
  const double eps = std::min(budget.target_error * 1e-6, std::pow(10.0, 2 - budget.working_digits));
  auto [total, harmonic] = direct_double_sum(n, r, s, bits);
  const Approx single = power_tail(n, s, bits, eps);
  const Approx both = double_tail(n, r, s, bits, eps);
  out.value = total + harmonic * single.value + both.value;
  out.bound = std::fabs(harmonic.to_double()) * single.bound + both.bound +
              8 * n * unit(bits) * std::fabs(out.value.to_double());
  return out;
}

Approx zeta_half(int r, int s, const PrecisionBudget& budget) {
  Approx d = double_zeta(r, s, budget);
  const Approx z = zeta(r + s, budget);
  d.value += z.value / BigFloat(2, budget.bits());
  d.bound += z.bound / 2 + unit(budget.bits()) * std::fabs(d.value.to_double());
  return d;
}

std::string ZetaTerm::str() const {
  std::ostringstream os;
  if (coef == Rational(-1)) {
    os << '-';
  } else if (coef != Rational(1)) {
    os << coef.str() << '*';
  }
  switch (kind) {
    case Kind::kSingle: os << "z(" << args[0] << ')'; break;
    case Kind::kDouble: os << "z" << args.str(); break;
    case Kind::kHalf: os << "zh" << args.str(); break;
    case Kind::kProduct: os << "z(" << args[0] << ")z(" << args[1] << ')'; break;
  }
  return os.str();
}

Approx eval_relation(const std::vector<ZetaTerm>& terms, const PrecisionBudget& budget) {
  budget.validate();
  const mpfr_prec_t bits = budget.bits();
  Approx out{BigFloat(bits), 0, budget.working_digits};
  double magnitude = 0;
  for (const auto& t : terms) {
    if (t.coef.is_zero()) continue;
    Approx v{BigFloat(bits), 0, 0};
    switch (t.kind) {
      case ZetaTerm::Kind::kSingle:
        require(t.args.depth() == 1, "eval_relation: single zeta term needs one argument");
        v = zeta(t.args[0], budget);
        break;
      case ZetaTerm::Kind::kDouble:
        require(t.args.depth() == 2, "eval_relation: double zeta term needs two arguments");
        v = double_zeta(t.args[0], t.args[1], budget);
        break;
      case ZetaTerm::Kind::kHalf:
        require(t.args.depth() == 2, "eval_relation: interpolated term needs two arguments");
        v = zeta_half(t.args[0], t.args[1], budget);
        break;
      case ZetaTerm::Kind::kProduct: {
        require(t.args.depth() == 2, "eval_relation: product term needs two arguments");
        const Approx a = zeta(t.args[0], budget);
        const Approx b = zeta(t.args[1], budget);
        v.value = a.value * b.value;
        v.bound = std::fabs(a.value.to_double()) * b.bound + std::fabs(b.value.to_double()) * a.bound +
                  a.bound * b.bound;
        break;
      }
    }
    const BigFloat c(t.coef, bits);
    const double cabs = std::fabs(c.to_double());
    out.value += c * v.value;
    out.bound += cabs * v.bound;
    magnitude += cabs * std::fabs(v.value.to_double());
  }
  out.bound += 4 * (static_cast<double>(terms.size()) + 2) * unit(bits) * magnitude;
  return out;
}

bool relation_holds(const Approx& a, double threshold) {
  return std::fabs(a.value.to_double()) <= a.bound && a.bound < threshold;
}

}  // namespace mzvlab
