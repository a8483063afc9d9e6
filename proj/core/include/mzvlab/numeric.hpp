#pragma once

#include <string>
#include <vector>

#include "mzvlab/bigfloat.hpp"
#include "mzvlab/index.hpp"
#include "mzvlab/rational.hpp"

namespace mzvlab {

enum class SumMethod {
  kEulerMaclaurin,  ///< short direct sum plus an asymptotic tail with a remainder bound
  kPlain,           ///< truncated double sum plus an integral tail bound
};

struct PrecisionBudget {
  double target_error = 1e-20;
  int working_digits = 30;
  int guard_digits = 10;
  SumMethod method = SumMethod::kEulerMaclaurin;
  /// Cutoff for the direct part of every sum. 0 picks a default for the method.
  long truncation = 0;

  /// `digits` working digits, target error 10^-(digits - guard).
  static PrecisionBudget with_digits(int digits, int guard = 10);
  /// Plain summation to n terms with the given target.
  static PrecisionBudget plain(long n, double target);

  [[nodiscard]] mpfr_prec_t bits() const;
  [[nodiscard]] long truncation_n() const;
  /// Throws unless working_digits covers the target plus the guard.
  void validate() const;
};

/// A value together with an upper bound on its absolute error.
struct Approx {
  BigFloat value;
  double bound = 0;
  int digits = 0;

  [[nodiscard]] std::string value_str() const { return value.str(digits); }
  [[nodiscard]] std::string bound_str() const;
};

Approx zeta(int s, const PrecisionBudget& budget);
/// sum over 0 < m < n of m^-r n^-s.
Approx double_zeta(int r, int s, const PrecisionBudget& budget);
/// double_zeta(r, s) + zeta(r + s) / 2.
Approx zeta_half(int r, int s, const PrecisionBudget& budget);

struct ZetaTerm {
  enum class Kind { kSingle, kDouble, kHalf, kProduct };
  Kind kind;
  Index args;  ///< (s), (r, s), (r, s) or (a, b) for a product zeta(a) zeta(b)
  Rational coef;

  [[nodiscard]] std::string str() const;
};

/// Sum of coef * value over the terms, with the accumulated bound.
Approx eval_relation(const std::vector<ZetaTerm>& terms, const PrecisionBudget& budget);

/// The value lies within its own bound (the exact value of a true relation
/// is zero) and the bound is under the threshold.
bool relation_holds(const Approx& a, double threshold);

}  // namespace mzvlab
