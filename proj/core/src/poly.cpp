#include "mzvlab/poly.hpp"

#include "mzvlab/arith.hpp"
#include "mzvlab/index.hpp"

namespace mzvlab {

template <std::size_t N, typename Coef>
LaurentPoly<N, Coef> substitute(const LaurentPoly<N, Coef>& f, const Substitution<N>& forms) {
  using Poly = LaurentPoly<N, Coef>;
  using Exponent = typename Poly::Exponent;

  // A form with exactly one nonzero coefficient equal to +-1 is a signed
  // variable: powers of it are a shift and a sign, negative powers included.
  std::array<int, N> single_var{};
  std::array<int, N> single_sign{};
  std::array<Poly, N> form_poly;
  for (std::size_t i = 0; i < N; ++i) {
    int nonzero = 0;
    single_var[i] = -1;
    for (std::size_t j = 0; j < N; ++j) {
      if (forms[i][j] == 0) continue;
      ++nonzero;
      Exponent e{};
      e[j] = 1;
      form_poly[i].add_term(e, Coef(forms[i][j]));
      if (forms[i][j] == 1 || forms[i][j] == -1) {
        single_var[i] = static_cast<int>(j);
        single_sign[i] = forms[i][j];
      }
    }
    if (nonzero != 1) single_var[i] = -1;
  }

  std::array<std::vector<Poly>, N> powers;
  auto power = [&](std::size_t i, int e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::monomial(Exponent{}, Coef(1)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * form_poly[i]);
    return cache[static_cast<std::size_t>(e)];
  };

  Poly result;
  for (const auto& [e, c] : f.terms()) {
    Exponent shift{};
    Coef scale = c;
    Poly expanded = Poly::monomial(Exponent{}, Coef(1));
    for (std::size_t i = 0; i < N; ++i) {
      if (e[i] == 0) continue;
      if (single_var[i] >= 0) {
        shift[static_cast<std::size_t>(single_var[i])] += e[i];
        if (single_sign[i] < 0 && e[i] % 2 != 0) scale = -scale;
        continue;
      }
      require(e[i] > 0, "substitute: negative power x" + std::to_string(i + 1) + "^" +
                            std::to_string(e[i]) + " of a variable replaced by a multi-term form");
      expanded = expanded * power(i, e[i]);
    }
    for (const auto& [pe, pc] : expanded.terms()) {
      Exponent out = pe;
      for (std::size_t j = 0; j < N; ++j) out[j] += shift[j];
      result.add_term(out, scale * pc);
    }
  }
  return result;
}

template LaurentPoly<2, Rational> substitute(const LaurentPoly<2, Rational>&, const Substitution<2>&);
template LaurentPoly<3, Rational> substitute(const LaurentPoly<3, Rational>&, const Substitution<3>&);
template LaurentPoly<3, BigInt> substitute(const LaurentPoly<3, BigInt>&, const Substitution<3>&);

namespace {

struct SigmaPair {
  Substitution<3> plus;
  Substitution<3> minus;
};

// f|sigma_i = f(plus) - f(minus)
const SigmaPair& sigma_forms(int i) {
  static const SigmaPair table[5] = {
      // (x2-x1, x1, x3) - (x2-x1, x2, x3)
      {{{{-1, 1, 0}, {1, 0, 0}, {0, 0, 1}}}, {{{-1, 1, 0}, {0, 1, 0}, {0, 0, 1}}}},
      // (x3-x2, x1, x2) - (x3-x2, x1, x3)
      {{{{0, -1, 1}, {1, 0, 0}, {0, 1, 0}}}, {{{0, -1, 1}, {1, 0, 0}, {0, 0, 1}}}},
      // (x1, x2-x3, x2) - (x1, x2-x3, x3)
      {{{{1, 0, 0}, {0, 1, -1}, {0, 1, 0}}}, {{{1, 0, 0}, {0, 1, -1}, {0, 0, 1}}}},
      // (x2-x1, x3-x1, x1) - (x1-x2, x3-x2, x2)
      {{{{-1, 1, 0}, {-1, 0, 1}, {1, 0, 0}}}, {{{1, -1, 0}, {0, -1, 1}, {0, 1, 0}}}},
      // (x3-x2, x3-x1, x3) - (x2-x3, x2-x1, x2)
      {{{{0, -1, 1}, {-1, 0, 1}, {0, 0, 1}}}, {{{0, 1, -1}, {-1, 1, 0}, {0, 1, 0}}}},
  };
  require(i >= 1 && i <= 5, "sigma: operator index must be 1..5");
  return table[i - 1];
}

}  // namespace

template <typename Coef>
LaurentPoly<3, Coef> sigma_apply_laurent(int i, const LaurentPoly<3, Coef>& f) {
  const SigmaPair& s = sigma_forms(i);
  return substitute(f, s.plus) - substitute(f, s.minus);
}

template <typename Coef>
LaurentPoly<3, Coef> sigma_apply(int i, const LaurentPoly<3, Coef>& f) {
  require(f.is_polynomial(), "sigma_apply: input has a negative exponent");
  return sigma_apply_laurent(i, f);
}

template <typename Coef>
LaurentPoly<3, Coef> apply_one_plus(const LaurentPoly<3, Coef>& f, const std::vector<int>& ops) {
  LaurentPoly<3, Coef> out = f;
  for (int i : ops) out += sigma_apply_laurent(i, f);
  return out;
}

template LaurentPoly<3, Rational> sigma_apply(int, const LaurentPoly<3, Rational>&);
template LaurentPoly<3, BigInt> sigma_apply(int, const LaurentPoly<3, BigInt>&);
template LaurentPoly<3, Rational> sigma_apply_laurent(int, const LaurentPoly<3, Rational>&);
template LaurentPoly<3, BigInt> sigma_apply_laurent(int, const LaurentPoly<3, BigInt>&);
template LaurentPoly<3, Rational> apply_one_plus(const LaurentPoly<3, Rational>&, const std::vector<int>&);
template LaurentPoly<3, BigInt> apply_one_plus(const LaurentPoly<3, BigInt>&, const std::vector<int>&);

BiPoly pgl2_apply(const BiPoly& f, const Mat2& g) {
  return substitute(f, Substitution<2>{{{g.a, g.b}, {g.c, g.d}}});
}

LabelledVector vectorize(const TriPoly& f, int weight) {
  LabelledVector v(extended_ooe(weight));
  for (const auto& [e, c] : f.terms()) {
    const Index idx{e[0] + 1, e[1] + 1, e[2] + 1};
    const long pos = v.labels.find(idx);
    require(pos >= 0, "vectorize: monomial x1^" + std::to_string(e[0]) + " x2^" +
                          std::to_string(e[1]) + " x3^" + std::to_string(e[2]) +
                          " is outside the index set of weight " + std::to_string(weight));
    v.values[static_cast<std::size_t>(pos)] = c;
  }
  return v;
}

TriPoly devectorize(const LabelledVector& v) {
  TriPoly f;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Index& idx = v.labels[i];
    require(idx.depth() == 3, "devectorize: depth-3 labels required");
    f.add_term({idx[0] - 1, idx[1] - 1, idx[2] - 1}, v.values[i]);
  }
  return f;
}

BiPoly ghat(int k) {
  require(k >= 4 && k % 2 == 0, "ghat: k must be even and >= 4");
  BiPoly g;
  for (int n1 = 0; n1 <= k; n1 += 2) {
    g.add_term({n1 - 1, k - n1 - 1}, Rational(4) * beta(n1) * beta(k - n1));
  }
  return g;
}

BiPoly ghat_period_defect(int k) {
  const BiPoly g = ghat(k);
  const BiPoly q = g.times_monomial({1, 1});
  BiPoly d;
  d.add_term({1, 2}, Rational(1));
  d.add_term({2, 1}, Rational(-1));
  const BiPoly at_u_x2 = substitute(q, Substitution<2>{{{-1, 1}, {0, 1}}});
  const BiPoly at_u_x1 = substitute(q, Substitution<2>{{{-1, 1}, {1, 0}}});
  return d * g + at_u_x2.times_monomial({1, 0}) - at_u_x1.times_monomial({0, 1});
}

TriPoly sigma_identity_defect(const TriPoly& f) {
  for (const auto& [e, c] : f.terms()) {
    require(e[0] % 2 == 0 && e[1] % 2 == 0,
            "sigma_identity_defect: input must be even in x1 and x2, found exponent (" +
                std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) +
                ")");
  }
  const TriPoly lhs = apply_one_plus(apply_one_plus(f, {3}), {1, 2});
  const TriPoly rhs = apply_one_plus(apply_one_plus(f, {1}), {2, 3, 4, 5});
  return lhs - rhs;
}

BiPoly double_shuffle_generating(int weight) {
  require(weight >= 4 && weight % 2 == 0, "double_shuffle_generating: weight must be even >= 4");
  BiPoly g;
  BiPoly phi;
  for (int n1 = 1; n1 < weight; ++n1) {
    g.add_term({n1 - 1, weight - n1 - 1}, beta(n1) * beta(weight - n1));
  }
  for (int i = 0; i <= weight - 2; ++i) phi.add_term({i, weight - 2 - i}, Rational(1));

  const Mat2 t_inv{1, -1, 0, 1};
  const Mat2 u{1, -1, 1, 0};
  const Mat2 u_eps{-1, 1, 0, 1};
  BiPoly first = pgl2_apply(g, t_inv) + g;
  first *= Rational(1) / (Rational(3) * beta(weight));
  BiPoly second = phi * Rational(5) - pgl2_apply(phi, u) * Rational(3) + pgl2_apply(phi, u_eps);
  second *= Rational(1, 12);
  return first - second;
}

TriPoly lift_to_tri(const BiPoly& p) {
  TriPoly t;
  for (const auto& [e, c] : p.terms()) t.add_term({e[0], e[1], 0}, c);
  return t;
}

}  // namespace mzvlab
