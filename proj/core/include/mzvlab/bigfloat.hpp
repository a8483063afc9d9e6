#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "mzvlab/rational.hpp"

namespace mzvlab {

/// Owning handle for an mpfr_t. Every operation rounds to nearest at the
/// precision of the left operand.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits = 128) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(long x, mpfr_prec_t bits) : BigFloat(bits) { mpfr_set_si(v_, x, MPFR_RNDN); }
  BigFloat(const Rational& q, mpfr_prec_t bits) : BigFloat(bits) {
    mpfr_set_z(v_, q.numerator().get_mpz_t(), MPFR_RNDN);
    mpfr_div_z(v_, v_, q.denominator().get_mpz_t(), MPFR_RNDN);
  }
  BigFloat(const BigFloat& o) : BigFloat(mpfr_get_prec(o.v_)) { mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept : BigFloat(mpfr_get_prec(o.v_)) { mpfr_swap(v_, o.v_); }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  [[nodiscard]] mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  [[nodiscard]] mpfr_srcptr get() const { return v_; }

  BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend BigFloat operator-(BigFloat a) {
    mpfr_neg(a.v_, a.v_, MPFR_RNDN);
    return a;
  }

  [[nodiscard]] BigFloat abs() const {
    BigFloat r(*this);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
  }
  /// n^(-s) at the given precision.
  static BigFloat inverse_power(unsigned long n, unsigned long s, mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_ui_pow_ui(r.v_, n, s, MPFR_RNDN);
    mpfr_ui_div(r.v_, 1, r.v_, MPFR_RNDN);
    return r;
  }

  [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits.
  [[nodiscard]] std::string str(int digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits > 1 ? digits - 1 : 0, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

}  // namespace mzvlab
