#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mzvlab/error.hpp"
#include "mzvlab/labelled.hpp"
#include "mzvlab/rational.hpp"

namespace mzvlab {

inline bool coef_is_zero(const Rational& c) { return c.is_zero(); }
inline bool coef_is_zero(const BigInt& c) { return sgn(c) == 0; }

/// Sparse Laurent polynomial in N variables. Terms are kept in an ordered
/// exponent map; zero coefficients are never stored.
template <std::size_t N, typename Coef>
class LaurentPoly {
 public:
  using Exponent = std::array<int, N>;
  using Terms = std::map<Exponent, Coef>;

  LaurentPoly() = default;

  static LaurentPoly monomial(const Exponent& e, const Coef& c = Coef(1)) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
  }

  void add_term(const Exponent& e, const Coef& c) {
    if (coef_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (coef_is_zero(it->second)) terms_.erase(it);
  }

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  [[nodiscard]] Coef coefficient(const Exponent& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Coef(0) : it->second;
  }

  /// Smallest exponent of variable `var` over all terms (0 for the zero polynomial).
  [[nodiscard]] int min_exponent(std::size_t var) const {
    int lo = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first || e[var] < lo) lo = e[var];
      first = false;
    }
    return lo;
  }

  [[nodiscard]] bool is_polynomial() const {
    for (const auto& [e, c] : terms_) {
      for (int v : e) {
        if (v < 0) return false;
      }
    }
    return true;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  LaurentPoly& operator*=(const Coef& s) {
    if (coef_is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Coef& s) { return a *= s; }
  friend LaurentPoly operator*(const Coef& s, LaurentPoly a) { return a *= s; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e;
        for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  [[nodiscard]] LaurentPoly times_monomial(const Exponent& shift) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
      Exponent s = e;
      for (std::size_t i = 0; i < N; ++i) s[i] += shift[i];
      r.terms_.emplace(s, c);
    }
    return r;
  }

  /// Formal partial derivative with respect to variable `var`.
  [[nodiscard]] LaurentPoly derivative(std::size_t var) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponent d = e;
      --d[var];
      r.add_term(d, c * Coef(e[var]));
    }
    return r;
  }

  /// Human-readable form such as "3/2*x1^2*x3^-1 - x2".
  [[nodiscard]] std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string c = coef_string(it->second);
      bool neg = !c.empty() && c[0] == '-';
      if (neg) c.erase(0, 1);
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < N; ++i) {
        const int p = it->first[i];
        if (p == 0) continue;
        if (!mono.empty()) mono += '*';
        mono += "x" + std::to_string(i + 1);
        if (p != 1) mono += "^" + std::to_string(p);
      }
      if (mono.empty()) {
        out += c;
      } else {
        out += (c == "1") ? mono : c + "*" + mono;
      }
    }
    return out;
  }

 private:
  static std::string coef_string(const Rational& c) { return c.str(); }
  static std::string coef_string(const BigInt& c) { return c.get_str(); }

  Terms terms_;
};

using TriPoly = LaurentPoly<3, Rational>;
using BiPoly = LaurentPoly<2, Rational>;
using IntTriPoly = LaurentPoly<3, BigInt>;

/// Integer linear form sum_j coef[j] x_j.
template <std::size_t N>
using LinearForm = std::array<int, N>;

/// x_i -> forms[i].
template <std::size_t N>
using Substitution = std::array<LinearForm<N>, N>;

/// f(L_1(x), ..., L_N(x)) expanded exactly. A negative power is accepted only
/// where the corresponding form is a single variable with coefficient +-1.
template <std::size_t N, typename Coef>
LaurentPoly<N, Coef> substitute(const LaurentPoly<N, Coef>& f, const Substitution<N>& forms);

/// f|(sigma_i), i = 1..5, on polynomials. Negative exponents are rejected.
template <typename Coef>
LaurentPoly<3, Coef> sigma_apply(int i, const LaurentPoly<3, Coef>& f);

/// As sigma_apply, but allows negative powers of x3 (the third slot of every
/// sigma substitution is a single variable).
template <typename Coef>
LaurentPoly<3, Coef> sigma_apply_laurent(int i, const LaurentPoly<3, Coef>& f);

/// f|(1 + sigma_{ops[0]} + sigma_{ops[1]} + ...), Laurent-tolerant in x3.
template <typename Coef>
LaurentPoly<3, Coef> apply_one_plus(const LaurentPoly<3, Coef>& f, const std::vector<int>& ops);

/// Integer 2x2 matrix (a b; c d), acting by F|g = F(ax + by, cx + dy).
struct Mat2 {
  int a, b, c, d;
  friend Mat2 operator*(const Mat2& g, const Mat2& h) {
    return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c,
            g.c * h.b + g.d * h.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

BiPoly pgl2_apply(const BiPoly& f, const Mat2& g);

/// Coefficient vector over the extended depth-3 set of weight k; monomial
/// x1^(n1-1) x2^(n2-1) x3^(n3-1) goes to coordinate (n1,n2,n3).
LabelledVector vectorize(const TriPoly& f, int weight);
TriPoly devectorize(const LabelledVector& v);

/// 4 sum_{n1+n2=k, n_i>=0} beta_{n1} beta_{n2} x1^(n1-1) x2^(n2-1).
BiPoly ghat(int k);

/// x1 x2 (x2-x1) * [G(x1,x2) + G(x2-x1,x2) - G(x2-x1,x1)] for G = ghat(k),
/// expanded as a polynomial.
BiPoly ghat_period_defect(int k);

/// (f|(1+s3))|(1+s1+s2) - (f|(1+s1))|(1+s2+s3+s4+s5); f must be even in x1
/// and in x2.
TriPoly sigma_identity_defect(const TriPoly& f);

/// The polynomial whose coefficients solve the double shuffle system in even
/// weight N: (1/(3 beta_N)) G_N|(T^-1 + 1) - (1/12) Phi_N|(5 - 3U + U eps),
/// with G_N = sum_{n_i>=1} beta_{n1} beta_{n2} x^(n1-1) y^(n2-1) and Phi_N
/// the sum of all monomials of degree N-2. The coefficient of
/// x^(n2-1) y^(n1-1) is tau(n1, n2).
BiPoly double_shuffle_generating(int weight);

/// Lifts a polynomial in two variables into three (third exponent zero).
TriPoly lift_to_tri(const BiPoly& p);

}  // namespace mzvlab
