#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mzvlab/index.hpp"
#include "mzvlab/labelled.hpp"
#include "mzvlab/rational.hpp"

namespace mzvlab {

using RationalRow = std::vector<Rational>;
using RationalRows = std::vector<RationalRow>;

/// Dense exact matrix with Index-labelled rows and columns.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(IndexSet rows, IndexSet cols);
  /// Unlabelled matrix; rows and columns get depth-1 labels (1), (2), ...
  static QMatrix unlabelled(std::size_t nrows, std::size_t ncols);

  [[nodiscard]] const IndexSet& rows() const { return rows_; }
  [[nodiscard]] const IndexSet& cols() const { return cols_; }
  [[nodiscard]] std::size_t nrows() const { return rows_.size(); }
  [[nodiscard]] std::size_t ncols() const { return cols_.size(); }

  [[nodiscard]] const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * ncols() + c];
  }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * ncols() + c]; }

  [[nodiscard]] RationalRow row(std::size_t r) const;
  [[nodiscard]] RationalRows to_rows() const;
  [[nodiscard]] QMatrix transpose() const;
  [[nodiscard]] bool is_zero() const;

  friend bool operator==(const QMatrix& a, const QMatrix& b);
  /// Requires a.cols == b.rows as label lists.
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);

 private:
  IndexSet rows_;
  IndexSet cols_;
  std::vector<Rational> data_;
};

/// Reduced row echelon form of a list of rows (zero rows dropped). Pivot
/// columns are returned through `pivots` when non-null.
RationalRows rref(const RationalRows& rows, std::size_t ncols, std::vector<std::size_t>* pivots = nullptr);

/// Rank of the row space spanned by `rows`.
std::size_t rank_of_rows(const RationalRows& rows, std::size_t ncols);

/// Reduced echelon basis, each row scaled to a primitive integer vector with
/// positive leading entry.
RationalRows canonical_basis(const RationalRows& rows, std::size_t ncols);

/// Canonical basis of {x : A x = 0} where A is given by its rows.
RationalRows nullspace(const RationalRows& rows, std::size_t ncols);

/// Solves A x = b; returns one solution (free variables zero) or nullopt.
std::optional<RationalRow> solve(const RationalRows& a, std::size_t ncols, const RationalRow& b);

std::size_t rank(const QMatrix& m);

enum class Side { kLeft, kRight };

struct KernelBasis {
  Side side = Side::kLeft;
  std::string matrix_id;
  std::vector<LabelledVector> vectors;

  [[nodiscard]] std::size_t dim() const { return vectors.size(); }
  [[nodiscard]] RationalRows rows() const;
};

/// Row vectors v with v M = 0, labelled by M's rows.
KernelBasis left_kernel(const QMatrix& m, std::string id = {});
/// Column vectors v with M v = 0, labelled by M's columns.
KernelBasis right_kernel(const QMatrix& m, std::string id = {});

struct Membership {
  bool member = false;
  std::optional<LabelledVector> witness;  ///< w with w M = v, labelled by M's rows
};

/// Decides whether v lies in the row space of M (v labelled by M's columns).
Membership row_space_membership(const QMatrix& m, const LabelledVector& v);

/// v M for a row vector labelled by M's rows.
LabelledVector left_multiply(const LabelledVector& v, const QMatrix& m);
/// M v for a column vector labelled by M's columns.
LabelledVector right_multiply(const QMatrix& m, const LabelledVector& v);

/// dim(span(a) ∩ span(b)) for two families of vectors of equal length.
std::size_t intersection_dim(const RationalRows& a, const RationalRows& b, std::size_t ncols);

}  // namespace mzvlab
