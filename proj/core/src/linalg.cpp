#include "mzvlab/linalg.hpp"

#include <utility>

#include "mzvlab/error.hpp"

namespace mzvlab {

QMatrix::QMatrix(IndexSet rows, IndexSet cols)
    : rows_(std::move(rows)), cols_(std::move(cols)), data_(rows_.size() * cols_.size()) {}

namespace {

IndexSet counting_labels(std::size_t n) {
  std::vector<Index> members;
  members.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) members.push_back(Index{static_cast<int>(i)});
  return IndexSet(0, {}, std::move(members));
}

}  // namespace

QMatrix QMatrix::unlabelled(std::size_t nrows, std::size_t ncols) {
  return QMatrix(counting_labels(nrows), counting_labels(ncols));
}

RationalRow QMatrix::row(std::size_t r) const {
  return RationalRow(data_.begin() + static_cast<long>(r * ncols()),
                     data_.begin() + static_cast<long>((r + 1) * ncols()));
}

RationalRows QMatrix::to_rows() const {
  RationalRows out;
  out.reserve(nrows());
  for (std::size_t r = 0; r < nrows(); ++r) out.push_back(row(r));
  return out;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < nrows(); ++r) {
    for (std::size_t c = 0; c < ncols(); ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
  return a.rows_.members() == b.rows_.members() && a.cols_.members() == b.cols_.members() &&
         a.data_ == b.data_;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  require(a.cols_.members() == b.rows_.members(), "QMatrix product: inner labels differ");
  QMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.nrows(); ++i) {
    for (std::size_t k = 0; k < a.ncols(); ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.ncols(); ++j) {
        const Rational& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  }
  return out;
}

namespace {

using IntRow = std::vector<BigInt>;

IntRow integer_row(const RationalRow& row) {
  BigInt den = 1;
  for (const auto& x : row) {
    if (!x.is_zero()) den = lcm(den, x.denominator());
  }
  IntRow out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (!row[i].is_zero()) out[i] = row[i].numerator() * (den / row[i].denominator());
  }
  return out;
}

// Fraction-free forward elimination. Returns the nonzero echelon rows; each
// division by the previous pivot is exact.
std::vector<IntRow> bareiss_echelon(std::vector<IntRow> a, std::size_t ncols,
                                    std::vector<std::size_t>& pivots) {
  const std::size_t m = a.size();
  std::size_t r = 0;
  BigInt prev = 1;
  BigInt tmp;
  for (std::size_t c = 0; c < ncols && r < m; ++c) {
    std::size_t p = r;
    while (p < m && sgn(a[p][c]) == 0) ++p;
    if (p == m) continue;
    // prefer the smallest pivot to keep intermediate entries short
    for (std::size_t q = p + 1; q < m; ++q) {
      if (sgn(a[q][c]) != 0 && mpz_cmpabs(a[q][c].get_mpz_t(), a[p][c].get_mpz_t()) < 0) p = q;
    }
    std::swap(a[r], a[p]);
    const BigInt& piv = a[r][c];
    for (std::size_t i = r + 1; i < m; ++i) {
      const bool lead_zero = sgn(a[i][c]) == 0;
      for (std::size_t j = c + 1; j < ncols; ++j) {
        if (lead_zero) {
          if (sgn(a[i][j]) == 0) continue;
          tmp = piv * a[i][j];
        } else {
          tmp = piv * a[i][j] - a[i][c] * a[r][j];
        }
        mpz_divexact(a[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return a;
}

}  // namespace

RationalRows rref(const RationalRows& rows, std::size_t ncols, std::vector<std::size_t>* pivots_out) {
  std::vector<IntRow> ints;
  ints.reserve(rows.size());
  for (const auto& row : rows) {
    require(row.size() == ncols, "rref: row length mismatch");
    ints.push_back(integer_row(row));
  }
  std::vector<std::size_t> pivots;
  const std::vector<IntRow> ech = bareiss_echelon(std::move(ints), ncols, pivots);

  RationalRows out(ech.size(), RationalRow(ncols));
  for (std::size_t r = 0; r < ech.size(); ++r) {
    const BigInt& piv = ech[r][pivots[r]];
    for (std::size_t c = pivots[r]; c < ncols; ++c) {
      if (sgn(ech[r][c]) != 0) out[r][c] = Rational(ech[r][c], piv);
    }
  }
  for (std::size_t r = out.size(); r-- > 0;) {
    const std::size_t pc = pivots[r];
    for (std::size_t above = 0; above < r; ++above) {
      const Rational f = out[above][pc];
      if (f.is_zero()) continue;
      for (std::size_t c = pc; c < ncols; ++c) {
        if (!out[r][c].is_zero()) out[above][c] -= f * out[r][c];
      }
    }
  }
  if (pivots_out) *pivots_out = std::move(pivots);
  return out;
}

std::size_t rank_of_rows(const RationalRows& rows, std::size_t ncols) {
  std::vector<IntRow> ints;
  ints.reserve(rows.size());
  for (const auto& row : rows) {
    require(row.size() == ncols, "rank_of_rows: row length mismatch");
    ints.push_back(integer_row(row));
  }
  std::vector<std::size_t> pivots;
  bareiss_echelon(std::move(ints), ncols, pivots);
  return pivots.size();
}

RationalRows canonical_basis(const RationalRows& rows, std::size_t ncols) {
  RationalRows out = rref(rows, ncols);
  for (auto& row : out) row = canonical_direction(std::move(row));
  return out;
}

RationalRows nullspace(const RationalRows& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  const RationalRows r = rref(rows, ncols, &pivots);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  RationalRows basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    RationalRow v(ncols);
    v[f] = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][f];
    basis.push_back(std::move(v));
  }
  return canonical_basis(basis, ncols);
}

std::optional<RationalRow> solve(const RationalRows& a, std::size_t ncols, const RationalRow& b) {
  require(a.size() == b.size(), "solve: right-hand side length mismatch");
  RationalRows aug;
  aug.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    RationalRow row = a[i];
    require(row.size() == ncols, "solve: row length mismatch");
    row.push_back(b[i]);
    aug.push_back(std::move(row));
  }
  std::vector<std::size_t> pivots;
  const RationalRows r = rref(aug, ncols + 1, &pivots);
  if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
  RationalRow x(ncols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r[i][ncols];
  return x;
}

std::size_t rank(const QMatrix& m) { return rank_of_rows(m.to_rows(), m.ncols()); }

RationalRows KernelBasis::rows() const {
  RationalRows out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(v.values);
  return out;
}

KernelBasis left_kernel(const QMatrix& m, std::string id) {
  KernelBasis k{Side::kLeft, std::move(id), {}};
  for (auto& v : nullspace(m.transpose().to_rows(), m.nrows())) {
    k.vectors.emplace_back(m.rows(), std::move(v));
  }
  return k;
}

KernelBasis right_kernel(const QMatrix& m, std::string id) {
  KernelBasis k{Side::kRight, std::move(id), {}};
  for (auto& v : nullspace(m.to_rows(), m.ncols())) k.vectors.emplace_back(m.cols(), std::move(v));
  return k;
}

Membership row_space_membership(const QMatrix& m, const LabelledVector& v) {
  require(v.labels.members() == m.cols().members(),
          "row_space_membership: vector labels do not match the matrix columns");
  Membership out;
  auto w = solve(m.transpose().to_rows(), m.nrows(), v.values);
  if (!w) return out;
  out.member = true;
  out.witness = LabelledVector(m.rows(), std::move(*w));
  return out;
}

LabelledVector left_multiply(const LabelledVector& v, const QMatrix& m) {
  require(v.labels.members() == m.rows().members(), "left_multiply: labels do not match rows");
  LabelledVector out(m.cols());
  for (std::size_t i = 0; i < m.nrows(); ++i) {
    if (v.values[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.ncols(); ++j) {
      if (!m(i, j).is_zero()) out.values[j] += v.values[i] * m(i, j);
    }
  }
  return out;
}

LabelledVector right_multiply(const QMatrix& m, const LabelledVector& v) {
  require(v.labels.members() == m.cols().members(), "right_multiply: labels do not match columns");
  LabelledVector out(m.rows());
  for (std::size_t i = 0; i < m.nrows(); ++i) {
    for (std::size_t j = 0; j < m.ncols(); ++j) {
      if (!m(i, j).is_zero() && !v.values[j].is_zero()) out.values[i] += m(i, j) * v.values[j];
    }
  }
  return out;
}

std::size_t intersection_dim(const RationalRows& a, const RationalRows& b, std::size_t ncols) {
  RationalRows both = a;
  both.insert(both.end(), b.begin(), b.end());
  return rank_of_rows(a, ncols) + rank_of_rows(b, ncols) - rank_of_rows(both, ncols);
}

}  // namespace mzvlab
