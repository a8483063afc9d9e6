#pragma once

#include <string>
#include <string_view>

#include "mzvlab/linalg.hpp"
#include "mzvlab/period.hpp"
#include "mzvlab/suites.hpp"

namespace mzvlab {

// All text formats write rationals as "p/q" (or "p") and indices as
// "(n1,n2,n3)". Parsers throw FormatError on malformed input.

/// First row: "", then the column labels; every further row: its label, then
/// the entries. Labels are quoted since they contain commas.
std::string matrix_to_csv(const QMatrix& m);
QMatrix matrix_from_csv(std::string_view text);

/// {"weight", "rows": {"pattern", "labels"}, "cols": {...}, "entries": [[...]]}
std::string matrix_to_json(const QMatrix& m, std::string_view id = {}, int indent = 2);
QMatrix matrix_from_json(std::string_view text);

std::string kernel_to_json(const KernelBasis& k, int indent = 2);

/// {"kind", "weight", "dim", "basis": [[{"exp": [..], "coef": "p/q"}, ...], ...]}
std::string period_basis_to_json(const PeriodBasis& b, int indent = 2);
PeriodBasis period_basis_from_json(std::string_view text);
std::string lifted_basis_to_json(const LiftedBasis& b, int indent = 2);
LiftedBasis lifted_basis_from_json(std::string_view text);

std::string relation_report_to_json(const RelationReport& r, int indent = 2);

/// {"schema", "version", "suite", "params", "status", "checks", "tables",
///  "residuals", "notes"}
std::string suite_report_to_json(const SuiteReport& r, int indent = 2);
/// Plain-text rendering for terminals.
std::string suite_report_to_text(const SuiteReport& r);

}  // namespace mzvlab
