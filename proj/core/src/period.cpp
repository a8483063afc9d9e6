#include "mzvlab/period.hpp"

#include <mutex>
#include <shared_mutex>

#include "mzvlab/arith.hpp"
#include "mzvlab/error.hpp"
#include "mzvlab/kernels.hpp"
#include "mzvlab/linalg.hpp"

namespace mzvlab {

std::string period_kind_name(PeriodKind k) {
  switch (k) {
    case PeriodKind::kEvenRestricted: return "W+0";
    case PeriodKind::kOdd: return "W-";
    case PeriodKind::kEvenFull: return "W+full";
    case PeriodKind::kCuspEven: return "cusp-even";
  }
  return "?";
}

PeriodKind parse_period_kind(std::string_view name) {
  for (auto k : {PeriodKind::kEvenRestricted, PeriodKind::kOdd, PeriodKind::kEvenFull,
                 PeriodKind::kCuspEven}) {
    if (name == period_kind_name(k)) return k;
  }
  throw ContractViolation("unknown period space kind '" + std::string(name) + "'");
}

BiPoly period_relation(const BiPoly& p, bool plus) {
  const BiPoly shifted_y = substitute(p, Substitution<2>{{{1, 1}, {0, 1}}});
  const BiPoly shifted_x = substitute(p, Substitution<2>{{{1, 1}, {1, 0}}});
  return plus ? p - shifted_y + shifted_x : p - shifted_y - shifted_x;
}

Rational kz_functional(const BiPoly& p, int weight) {
  Rational total;
  for (int s = 1; s < weight; s += 2) {
    const Rational c = p.coefficient({weight - s - 1, s - 1});
    if (c.is_zero()) continue;
    total += lambda_coeff(weight - s, s) * c / Rational(binom(weight - 2, s - 1));
  }
  return total;
}

PeriodBasis period_basis(PeriodKind kind, int weight) {
  require(weight >= 4 && weight % 2 == 0, "period_basis: weight must be even and >= 4");
  const int degree = weight - 2;
  const bool odd = kind == PeriodKind::kOdd;

  // unknowns: x1^a x2^(degree-a), a descending, with the parity of the kind
  std::vector<int> exps;
  for (int a = degree; a >= 0; --a) {
    if ((a % 2 != 0) != odd) continue;
    if (kind == PeriodKind::kEvenRestricted && a == degree) continue;
    exps.push_back(a);
  }
  const std::size_t n = exps.size();

  // one equation per monomial of the relation image
  std::vector<BiPoly> images;
  images.reserve(n);
  for (int a : exps) images.push_back(period_relation(BiPoly::monomial({a, degree - a}), !odd));
  RationalRows system;
  for (int a = 0; a <= degree; ++a) {
    RationalRow row(n);
    bool any = false;
    for (std::size_t c = 0; c < n; ++c) {
      row[c] = images[c].coefficient({a, degree - a});
      any = any || !row[c].is_zero();
    }
    if (any) system.push_back(std::move(row));
  }
  if (kind == PeriodKind::kCuspEven) {
    RationalRow row(n);
    for (std::size_t c = 0; c < n; ++c) {
      row[c] = kz_functional(BiPoly::monomial({exps[c], degree - exps[c]}), weight);
    }
    system.push_back(std::move(row));
  }

  PeriodBasis out{kind, weight, {}};
  for (const auto& v : nullspace(system, n)) {
    BiPoly p;
    for (std::size_t c = 0; c < n; ++c) p.add_term({exps[c], degree - exps[c]}, v[c]);
    out.basis.push_back(std::move(p));
  }
  return out;
}

const PeriodBasis& cached_period_basis(PeriodKind kind, int weight) {
  static std::shared_mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<PeriodBasis>> cache;
  const auto key = std::make_pair(static_cast<int>(kind), weight);
  {
    std::shared_lock lock(mutex);
    const auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto built = std::make_unique<PeriodBasis>(period_basis(kind, weight));
  std::unique_lock lock(mutex);
  const auto [it, inserted] = cache.emplace(key, std::move(built));
  return *it->second;
}

std::string lifted_family_name(LiftedFamily f) {
  switch (f) {
    case LiftedFamily::kPPlus: return "P+";
    case LiftedFamily::kQPlus: return "Q+";
    case LiftedFamily::kQMinus: return "Q-";
    case LiftedFamily::kPHatPlus: return "Phat+";
  }
  return "?";
}

LiftedFamily parse_lifted_family(std::string_view name) {
  for (auto f : {LiftedFamily::kPPlus, LiftedFamily::kQPlus, LiftedFamily::kQMinus,
                 LiftedFamily::kPHatPlus}) {
    if (name == lifted_family_name(f)) return f;
  }
  throw ContractViolation("unknown lifted family '" + std::string(name) + "'");
}

namespace {

// x1^shift * p(x2, x3)
TriPoly shift_into_last_two(const BiPoly& p, int x1_power) {
  TriPoly t;
  for (const auto& [e, c] : p.terms()) t.add_term({x1_power, e[0], e[1]}, c);
  return t;
}

}  // namespace

LiftedBasis lifted_basis(LiftedFamily family, int weight) {
  require(weight % 2 == 0 && weight >= 2, "lifted_basis: weight must be even");
  LiftedBasis out{family, weight, {}};
  switch (family) {
    case LiftedFamily::kPPlus:
    case LiftedFamily::kPHatPlus: {
      const int top = family == LiftedFamily::kPPlus ? weight - 1 : weight;
      for (int n = 4; n <= top; n += 2) {
        for (const auto& p : cached_period_basis(PeriodKind::kEvenRestricted, n).basis) {
          out.basis.push_back(lift_to_tri(p).times_monomial({0, 0, weight - n - 1}));
        }
      }
      break;
    }
    case LiftedFamily::kQPlus:
      for (int n = 3; n < weight; n += 2) {
        if (weight - n + 1 < 4) continue;
        for (const auto& p : cached_period_basis(PeriodKind::kEvenRestricted, weight - n + 1).basis) {
          out.basis.push_back(shift_into_last_two(p, n - 1));
        }
      }
      break;
    case LiftedFamily::kQMinus:
      for (int n = 3; n < weight; n += 2) {
        if (weight - n - 1 < 4) continue;
        for (const auto& p : cached_period_basis(PeriodKind::kOdd, weight - n - 1).basis) {
          out.basis.push_back(shift_into_last_two(p, n - 1));
        }
      }
      break;
  }
  return out;
}

LabelledVector q_image(const TriPoly& q, LiftedFamily family, int weight) {
  require(family == LiftedFamily::kQPlus || family == LiftedFamily::kQMinus,
          "q_image: family must be Q+ or Q-");
  LabelledVector out(almost_totally_odd(weight, 3));
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Index& n = out.labels[i];
    if (family == LiftedFamily::kQPlus) {
      // coefficient of the monomial with index (n1, n3+1, n2)
      out.values[i] = Rational(n[2]) * q.coefficient({n[0] - 1, n[2], n[1] - 1});
    } else {
      // index (n1, n2-1, n3)
      out.values[i] = q.coefficient({n[0] - 1, n[1] - 2, n[2] - 1});
    }
  }
  return out;
}

CoefficientMap cusp_coeffs(CuspCoeffKind kind, const BiPoly& p, int weight) {
  require(weight >= 4 && weight % 2 == 0, "cusp_coeffs: weight must be even and >= 4");
  const Substitution<2> to_sum_y{{{1, 1}, {0, 1}}};  // (x+y, y)
  const Substitution<2> to_sum_x{{{1, 1}, {1, 0}}};  // (x+y, x)
  BiPoly combined;
  int total = weight;
  int normalizer_top = weight - 2;
  switch (kind) {
    case CuspCoeffKind::kEvenA:
      combined = substitute(p, to_sum_x);
      break;
    case CuspCoeffKind::kOddB: {
      combined = substitute(p, to_sum_y) - substitute(p, to_sum_x).times_monomial({1, -1});
      for (const auto& [e, c] : combined.terms()) {
        require(e[1] >= 0, "cusp_coeffs: a y^-1 term survives; input is not an odd period polynomial");
      }
      normalizer_top = weight - 1;
      break;
    }
    case CuspCoeffKind::kEvenC:
      combined = substitute(p, to_sum_y).derivative(0) - substitute(p, to_sum_x).derivative(1);
      total = weight - 1;
      normalizer_top = weight - 3;
      break;
  }
  CoefficientMap out;
  for (int i = 1; i < total; ++i) {
    const int j = total - i;
    const Rational c = combined.coefficient({i - 1, j - 1});
    out[Index{i, j}] = c.is_zero() ? Rational(0) : c / Rational(binom(normalizer_top, i - 1));
  }
  for (const auto& [e, c] : combined.terms()) {
    require(e[0] + e[1] == total - 2, "cusp_coeffs: input is not homogeneous of the expected degree");
  }
  return out;
}

LabelledVector eisenstein_kernel_vector(int weight) {
  require(weight >= 3 && weight % 2 == 1, "eisenstein_kernel_vector: weight must be odd and >= 3");
  LabelledVector out(index_set(weight, "oe0"));
  if (weight == 3) {
    out.set(Index{3, 0}, Rational(4) * beta(2) * beta(0));
    return out;
  }
  const BiPoly p = ghat(weight - 1).times_monomial({1, 0});
  BiPoly q;
  for (const auto& [e, c] : p.terms()) {
    if (e[0] != 0) q.add_term(e, c);  // drop p(0, x2)
  }
  for (const auto& [e, c] : q.terms()) {
    const Index idx{e[0] + 1, e[1] + 1};
    require(out.labels.find(idx) >= 0, "eisenstein_kernel_vector: stray monomial " + idx.str());
    out.set(idx, c);
  }
  return out;
}

LabelledVector odd_derivative_vector(const BiPoly& p, int weight) {
  const TriPoly t = lift_to_tri(p).derivative(0).times_monomial({0, -1, 1});
  LabelledVector out(almost_totally_odd(weight, 3));
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Index& n = out.labels[i];
    out.values[i] = t.coefficient({n[0] - 1, n[1] - 1, n[2] - 1});
  }
  return out;
}

}  // namespace mzvlab
