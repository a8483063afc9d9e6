#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mzvlab/labelled.hpp"
#include "mzvlab/poly.hpp"

namespace mzvlab {

enum class PeriodKind {
  kEvenRestricted,  ///< W+0: even in x1, p(x1,0) = 0, plus-relation
  kOdd,             ///< W-: odd in x1, minus-relation
  kEvenFull,        ///< W+full: even in x1, plus-relation
  kCuspEven,        ///< W+full cut by the Kohnen-Zagier functional
};

std::string period_kind_name(PeriodKind k);  ///< "W+0", "W-", "W+full", "cusp-even"
PeriodKind parse_period_kind(std::string_view name);

struct PeriodBasis {
  PeriodKind kind;
  int weight;
  std::vector<BiPoly> basis;
  [[nodiscard]] std::size_t dim() const { return basis.size(); }
};

/// Homogeneous polynomials of degree weight-2 in (x1, x2). The basis is in
/// reduced echelon form for x1-descending monomial order, each element a
/// primitive integer polynomial with positive leading coefficient.
PeriodBasis period_basis(PeriodKind kind, int weight);
/// Memoized; safe for concurrent callers.
const PeriodBasis& cached_period_basis(PeriodKind kind, int weight);

/// p(x1,x2) - p(x1+x2,x2) + p(x1+x2,x1) for plus = true, with the last sign
/// flipped otherwise.
BiPoly period_relation(const BiPoly& p, bool plus);

/// The linear functional defining cusp-even inside W+full.
Rational kz_functional(const BiPoly& p, int weight);

enum class LiftedFamily { kPPlus, kQPlus, kQMinus, kPHatPlus };

std::string lifted_family_name(LiftedFamily f);  ///< "P+", "Q+", "Q-", "Phat+"
LiftedFamily parse_lifted_family(std::string_view name);

struct LiftedBasis {
  LiftedFamily family;
  int weight;
  std::vector<TriPoly> basis;
  [[nodiscard]] std::size_t dim() const { return basis.size(); }
};

LiftedBasis lifted_basis(LiftedFamily family, int weight);

/// Images of Q+ / Q- elements in the vector space over I_k(ooe):
/// a+_n = n3 a_(n1, n3+1, n2) and a-_n = a_(n1, n2-1, n3).
LabelledVector q_image(const TriPoly& q, LiftedFamily family, int weight);

enum class CuspCoeffKind { kEvenA, kOddB, kEvenC };

/// {(i, j) -> coefficient} for every i + j = K (K = weight, or weight - 1
/// for kEvenC), i, j >= 1.
using CoefficientMap = std::map<Index, Rational>;

CoefficientMap cusp_coeffs(CuspCoeffKind kind, const BiPoly& p, int weight);

/// Coefficients of p - p(0, x2), p = x1 Ghat_{k-1}, on the set oe0 of odd
/// weight k (for k = 3 the single entry 4 beta_2 beta_0).
LabelledVector eisenstein_kernel_vector(int weight);

/// The derivative vector (x3/x2) dp/dx1 restricted to I_k(ooe) for p in W-_k.
LabelledVector odd_derivative_vector(const BiPoly& p, int weight);

}  // namespace mzvlab
