#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mzvlab/numeric.hpp"
#include "mzvlab/rational.hpp"

namespace mzvlab {

enum class Status { kPass, kFail, kMismatch };
std::string status_name(Status s);  ///< "pass", "fail", "mismatch"

struct Check {
  std::string name;
  Status status = Status::kPass;
  std::string detail;
};

struct Table {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Residual {
  std::string label;
  std::string value;
  std::string bound;
  bool holds = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> params;
  Status status = Status::kPass;
  std::vector<Check> checks;
  std::vector<Table> tables;
  std::vector<Residual> residuals;
  std::vector<std::string> notes;

  /// Records a sub-check. A failing conjectural check counts as a mismatch.
  void check(std::string name, bool ok, std::string detail = {}, bool conjectural = false);
  void param(std::string key, std::string value) { params.emplace_back(std::move(key), std::move(value)); }
  /// Folds another report's checks, tables and residuals into this one.
  void absorb(const SuiteReport& other);
  [[nodiscard]] const Check* find(std::string_view name) const;
};

/// One emitted relation sum(coef * term) = 0.
struct Relation {
  std::string origin;
  std::vector<ZetaTerm> terms;
  std::optional<Approx> residual;

  [[nodiscard]] std::vector<Rational> coefficients() const;
  [[nodiscard]] std::string str() const;
};

struct RelationReport {
  std::string kind;
  int weight = 0;
  bool numeric = false;
  double threshold = 0;
  std::vector<Relation> relations;

  /// Every residual (if computed) within the threshold.
  [[nodiscard]] bool all_hold() const;
};

enum class OddPart { kI, kII };

/// One relation per cusp-even basis polynomial, coefficients a_{r,s} on
/// zeta_half(r, s), r odd >= 1, s odd >= 3.
RelationReport relation_even_weight(int weight, bool numeric, const PrecisionBudget& budget);
/// Part i: b_{r,s} on zeta_half(r, s+1); part ii: c_{r,s} on zeta_half(r, s),
/// s even. One relation per basis polynomial of W- (i) or cusp-even (ii).
RelationReport relation_odd_weight(int weight, OddPart part, bool numeric, const PrecisionBudget& budget);
/// zeta(n1,n2) - sum e * zeta(m1) zeta(m2) - tau(n1,n2) zeta(N) = 0 for odd N.
RelationReport parity_depth2(int n1, int n2, bool numeric, const PrecisionBudget& budget);

struct SuiteParams {
  int weight = 0;      ///< 0: the suite's default range
  int max_weight = 0;  ///< 0: the suite's default bound
  int j = 0;           ///< 0: all of 1, 2, 3
  int digits = 30;
  bool numeric = true;
};

SuiteReport verify_tau_double_shuffle(int max_weight);
SuiteReport verify_lambda_kz(int max_weight);
SuiteReport verify_even_relations(const SuiteParams& p);
SuiteReport verify_odd_relations(const SuiteParams& p);
SuiteReport verify_parity2(const SuiteParams& p);
SuiteReport parity_depth3_coeffs(int weight, int j);
SuiteReport verify_period_annihilators(int weight, int j);
SuiteReport verify_L_map(int weight);
SuiteReport conjecture_report(int max_weight);
SuiteReport verify_sigma_identity(int max_degree);
SuiteReport verify_h_factorization(int max_weight);
SuiteReport verify_factorization(int max_weight);
SuiteReport verify_period_dims(int max_weight);
SuiteReport verify_eisenstein_kernel(int max_weight);

/// Registered suite names, in display order.
const std::vector<std::string>& suite_names();
/// Runs a suite by name; throws ContractViolation for unknown names.
SuiteReport run_suite(std::string_view name, const SuiteParams& p);

}  // namespace mzvlab
