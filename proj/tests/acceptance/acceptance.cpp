// Acceptance run: one PASS/FAIL line per criterion. Tolerances, sweep bounds
// and time limits are pinned below and are not configurable.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mzvlab/arith.hpp"
#include "mzvlab/labelled.hpp"
#include "mzvlab/linalg.hpp"
#include "mzvlab/matrices.hpp"
#include "mzvlab/numeric.hpp"
#include "mzvlab/period.hpp"
#include "mzvlab/poly.hpp"
#include "mzvlab/suites.hpp"

using namespace mzvlab;

namespace {

constexpr double kRelationTolerance = 1e-20;
constexpr int kRelationDigits = 30;
constexpr double kParityTolerance = 1e-9;
constexpr int kConjectureMaxWeight = 30;
constexpr int kSeriesMaxWeight = 30;
constexpr int kIdentityMaxWeight = 40;
constexpr int kSymbolReductionMaxWeight = 30;
constexpr int kSigmaIdentityMaxDegree = 21;
constexpr int kHFactorizationMaxWeight = 20;
constexpr int kFactorizationMaxWeight = 30;
constexpr int kPeriodDimMaxWeight = 40;
constexpr int kAnnihilatorMaxWeight = 24;
constexpr int kEisensteinMaxWeight = 31;

struct Outcome {
  bool pass = true;
  std::string detail;
  bool known_deviation = false;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

struct Criterion {
  int number;
  const char* title;
  double time_limit_s;
  std::function<Outcome()> run;
};

using IntRows = std::vector<std::vector<long>>;

bool equals_reference(const QMatrix& m, const IntRows& reference) {
  if (m.nrows() != reference.size()) return false;
  for (std::size_t r = 0; r < m.nrows(); ++r) {
    if (m.ncols() != reference[r].size()) return false;
    for (std::size_t c = 0; c < m.ncols(); ++c) {
      if (m(r, c) != Rational(reference[r][c])) return false;
    }
  }
  return true;
}

std::vector<Rational> q(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Coefficients of the generating series, computed by direct counting.
long cusp_count(int k) {
  if (k < 12 || k % 2 != 0) return 0;
  long n = 0;
  for (int a = 0; 4 * a <= k - 12; ++a) n += (k - 12 - 4 * a) % 6 == 0 ? 1 : 0;
  return n;
}
long odd_count(int k) { return k >= 3 && k % 2 != 0 ? 1 : 0; }
long even_count(int k) { return k >= 2 && k % 2 == 0 ? 1 : 0; }

long convolve(int k, long (*f)(int), long (*g)(int)) {
  long s = 0;
  for (int a = 0; a <= k; ++a) s += f(a) * g(k - a);
  return s;
}
long se(int k) { return convolve(k, cusp_count, even_count); }
long so(int k) { return convolve(k, cusp_count, odd_count); }
long oo(int k) { return convolve(k, odd_count, odd_count); }
long eoo(int k) { return convolve(k, even_count, oo); }

std::string relation_detail(const Approx& a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "|value| %.1e, bound %.1e", std::fabs(a.value.to_double()), a.bound);
  return buf;
}

ZetaTerm half(int r, int s, long c) { return {ZetaTerm::Kind::kHalf, Index{r, s}, Rational(c)}; }

void absorb_suite(Outcome& o, const SuiteReport& r, const char* label) {
  for (const auto& c : r.checks) {
    if (c.status != Status::kPass) o.require(false, std::string(label) + ": " + c.name);
  }
}

Outcome reference_matrices() {
  Outcome o;
  o.require(equals_reference(build_matrix(Family::kB2, 11),
                           {{0, 0, 0, -2}, {-6, 0, -4, -4}, {-15, -21, -20, -6}, {-36, -126, -84, -8}}),
            "B11");
  o.require(equals_reference(build_matrix(Family::kB2, 13), {{0, 0, 0, 0, -2},
                                                          {-6, 0, 0, -4, -4},
                                                          {-15, -15, -6, -20, -6},
                                                          {-28, -78, -84, -56, -8},
                                                          {-55, -330, -462, -165, -10}}),
            "B13");
  o.require(equals_reference(build_matrix(Family::kC3, 12, 3), {{0, 0, 0, 0, 0, 4},
                                                             {0, 0, 12, 0, 8, 8},
                                                             {0, 0, 42, 0, 70, 12},
                                                             {0, 0, 12, 20, 8, -12},
                                                             {60, 100, 64, -20, 16, -24},
                                                             {42, 70, 42, 0, 0, -30}}),
            "C12(3)");
  return o;
}

Outcome reference_kernels() {
  Outcome o;
  const auto one_dim = [&o](const KernelBasis& k, const std::vector<Rational>& reference, const char* what) {
    o.require(k.dim() == 1 && proportional(k.vectors[0].values, reference), what);
  };
  one_dim(left_kernel(build_matrix(Family::kB2, 11)), q({-4, 9, -6, 1}), "left kernel B11");
  one_dim(left_kernel(build_matrix(Family::kB2, 13)), q({4, -25, 42, -25, 4}), "left kernel B13");
  const QMatrix c12 = build_matrix(Family::kC3, 12, 3);
  one_dim(left_kernel(c12), q({20, 14, 20, -63, -63, 90}), "left kernel C12(3)");
  const KernelBasis right = right_kernel(c12);
  one_dim(right, q({-5, 3, 0, 0, 0, 0}), "right kernel C12(3)");
  if (right.dim() == 1) {
    o.require(right.vectors[0].labels[0] == Index{3, 3, 6} && right.vectors[0].labels[1] == Index{3, 5, 4},
              "right kernel labels (3,3,6), (3,5,4)");
  }
  return o;
}

Outcome conjecture_sweep() {
  Outcome o;
  for (int k = 4; k <= kConjectureMaxWeight; k += 2) {
    const long expect[3] = {se(k + 2), se(k), se(k + 2) + so(k - 1) + so(k + 1)};
    for (int j = 1; j <= 3; ++j) {
      const auto c = cached_matrix(Family::kC3, k, j);
      const long dim = static_cast<long>(c->nrows() - rank(*c));
      o.require(dim == expect[j - 1], "k=" + std::to_string(k) + " j=" + std::to_string(j));
    }
  }
  return o;
}

Outcome series_sweeps() {
  Outcome o;
  for (int k = 4; k <= kSeriesMaxWeight; k += 2) {
    const std::string at = "k=" + std::to_string(k);
    const auto b = cached_matrix(Family::kB3, k);
    const auto e = cached_matrix(Family::kE3, k, 3);
    const KernelBasis ker_b = left_kernel(*b), ker_e = left_kernel(*e);
    o.require(static_cast<long>(ker_b.dim()) == so(k - 1) + so(k + 1), at + " ker B(3)");
    o.require(static_cast<long>(ker_e.dim()) == se(k + 2), at + " ker E(3)");
    o.require(intersection_dim(b->to_rows(), ker_e.rows(), b->nrows()) == ker_e.dim(), at + " Im B ^ ker E");
    o.require(static_cast<long>(rank(build_matrix(Family::kCeee, k))) == eoo(k) - se(k), at + " rank C(eee)");
  }
  return o;
}

Outcome weight12_relations() {
  Outcome o;
  const PrecisionBudget budget = PrecisionBudget::with_digits(kRelationDigits);
  const std::vector<std::pair<const char*, std::vector<ZetaTerm>>> relations = {
      {"even", {half(1, 11, 22680), half(3, 9, 13006), half(5, 7, -29145), half(7, 5, -35364), half(9, 3, 22680)}},
      {"odd-i", {half(3, 10, -12), half(5, 8, -14), half(7, 6, 5), half(9, 4, 18)}},
      {"odd-ii", {half(3, 8, 14), half(5, 6, 10), half(7, 4, -21)}},
  };
  for (const auto& [name, terms] : relations) {
    const Approx a = eval_relation(terms, budget);
    const bool ok = std::fabs(a.value.to_double()) < kRelationTolerance && relation_holds(a, kRelationTolerance);
    o.require(ok, std::string(name) + " " + relation_detail(a));
    if (ok) o.detail += std::string(o.detail.empty() ? "" : ", ") + name + " " + relation_detail(a);
  }
  return o;
}

Outcome cusp_even_reconstruction() {
  Outcome o;
  const PeriodBasis b12 = period_basis(PeriodKind::kCuspEven, 12);
  BiPoly reference = Rational(36, 691) * (BiPoly::monomial({10, 0}) - BiPoly::monomial({0, 10}));
  const BiPoly d = BiPoly::monomial({2, 0}) - BiPoly::monomial({0, 2});
  reference -= BiPoly::monomial({2, 2}) * d * d * d;
  std::vector<Rational> got, want;
  if (b12.dim() == 1) {
    for (int i = 0; i <= 10; ++i) {
      got.push_back(b12.basis[0].coefficient({i, 10 - i}));
      want.push_back(reference.coefficient({i, 10 - i}));
    }
  }
  o.require(b12.dim() == 1 && proportional(got, want), "weight 12 basis");
  const PrecisionBudget budget = PrecisionBudget::with_digits(kRelationDigits);
  for (int k : {16, 18, 20}) {
    const RelationReport r = relation_even_weight(k, true, budget);
    o.require(!r.relations.empty() && r.all_hold(), "weight " + std::to_string(k) + " relations");
  }
  return o;
}

Outcome exact_identities() {
  Outcome o;
  absorb_suite(o, verify_tau_double_shuffle(kIdentityMaxWeight), "tau");
  const SuiteReport lambda = verify_lambda_kz(kIdentityMaxWeight);
  absorb_suite(o, lambda, "lambda");
  o.require(kSymbolReductionMaxWeight <= kIdentityMaxWeight && lambda.find("symbol-vector reduction holds modulo the functional equation"),
            "symbol-vector reduction check missing");
  absorb_suite(o, verify_h_factorization(kHFactorizationMaxWeight), "h-factorization");
  absorb_suite(o, verify_factorization(kFactorizationMaxWeight), "factorization");
  const bool others_pass = o.pass;

  const SuiteReport sigma = verify_sigma_identity(kSigmaIdentityMaxDegree);
  const Check* stated = sigma.find("identity as stated, all admissible monomials");
  const Check* even = sigma.find("x1-even part of the defect vanishes");
  const bool stated_holds = stated && stated->status == Status::kPass;
  o.require(stated_holds, "sigma identity as stated: defect vanishes for only " +
                              (stated ? stated->detail.substr(0, stated->detail.find(" vanish")) : "?") + " monomials");
  // Pinned known deviation: the reference identity is false; only its x1-odd part survives.
  o.known_deviation = others_pass && !stated_holds && even && even->status == Status::kPass;
  if (o.known_deviation) o.detail += " (known deviation: defect is odd in x1, its x1-even part vanishes for all monomials)";
  return o;
}

Outcome period_dimensions() {
  Outcome o;
  for (int k = 4; k <= kPeriodDimMaxWeight; k += 2) {
    const std::size_t s = static_cast<std::size_t>(cusp_count(k));
    o.require(period_basis(PeriodKind::kEvenRestricted, k).dim() == s, "W+0 k=" + std::to_string(k));
    o.require(period_basis(PeriodKind::kOdd, k).dim() == s, "W- k=" + std::to_string(k));
  }
  return o;
}

Outcome property_suites() {
  Outcome o;
  for (int k = 4; k <= kAnnihilatorMaxWeight; k += 2) {
    absorb_suite(o, verify_period_annihilators(k, 0), "annihilators");
    if (k >= 12) absorb_suite(o, verify_L_map(k), "L-map");
  }
  absorb_suite(o, verify_eisenstein_kernel(kEisensteinMaxWeight), "eisenstein");
  const LabelledVector v5 = eisenstein_kernel_vector(5);
  o.require(v5.size() == 2 && v5.at(Index{3, 2}) == Rational(1, 144) && v5.at(Index{5, 0}) == Rational(-1, 720),
            "k=5 fixture");
  return o;
}

Outcome parity_depth_two() {
  Outcome o;
  const PrecisionBudget budget = PrecisionBudget::with_digits(kRelationDigits);
  const std::pair<int, int> instances[] = {{2, 3}, {1, 4}, {3, 4}, {2, 5}, {4, 5}, {3, 6}};
  double worst = 0;
  for (auto [n1, n2] : instances) {
    const RelationReport r = parity_depth2(n1, n2, true, budget);
    const Approx& a = *r.relations.at(0).residual;
    worst = std::max(worst, a.bound);
    o.require(relation_holds(a, kParityTolerance), "(" + std::to_string(n1) + "," + std::to_string(n2) + ")");
  }
  const RelationReport exact = parity_depth2(2, 3, false, budget);
  const auto& first = exact.relations.at(0).terms;
  o.require(first.size() == 3 && first[1].args == Index{3, 2} && first[1].coef == Rational(-3) &&
                first[2].coef == Rational(11, 2),
            "zeta(2,3) coefficients");
  char buf[64];
  std::snprintf(buf, sizeof buf, "6 instances, worst bound %.1e", worst);
  if (o.pass) o.detail = buf;
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "reference matrices B11, B13, C12(3)", 1.0, reference_matrices},
      {2, "reference kernels", 1.0, reference_kernels},
      {3, "dim ker C(j) series, k <= 30", 300.0, conjecture_sweep},
      {4, "B(3), E(3), C(eee) series, k <= 30", 300.0, series_sweeps},
      {5, "weight 12 relations < 1e-20 at 30 digits", 180.0, weight12_relations},
      {6, "cusp-even reconstruction", 120.0, cusp_even_reconstruction},
      {7, "exact identity suites", 300.0, exact_identities},
      {8, "dim W+0 = dim W- = dim S, k <= 40", 60.0, period_dimensions},
      {9, "annihilator, L-map and Eisenstein kernel properties", 300.0, property_suites},
      {10, "parity depth 2 at 1e-9", 60.0, parity_depth_two},
  };
  int hard_failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.time_limit_s) {
      o.pass = false;
      o.known_deviation = false;
      o.detail += " (took " + std::to_string(secs) + " s)";
    }
    std::printf("criterion %2d  %s  %-52s %7.2fs / %.0fs  %s\n", c.number, o.pass ? "PASS" : "FAIL", c.title, secs,
                c.time_limit_s, o.detail.c_str());
    if (!o.pass && !o.known_deviation) ++hard_failures;
  }
  std::printf("%s\n", hard_failures == 0 ? "acceptance: all criteria pass except pinned known deviations"
                                         : "acceptance: FAILED");
  return hard_failures == 0 ? 0 : 1;
}
