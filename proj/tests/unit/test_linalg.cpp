#include <gtest/gtest.h>

#include <random>

#include "mzvlab/error.hpp"
#include "mzvlab/linalg.hpp"
#include "oracles.hpp"

using namespace mzvlab;

namespace {

QMatrix from_oracle(const oracle::Matrix& a) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  QMatrix m = QMatrix::unlabelled(a.size(), cols);
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(a[r][c]);
  return m;
}

bool is_primitive_canonical(const LabelledVector& v) {
  BigInt g = 0;
  bool leading_seen = false;
  for (const auto& x : v.values) {
    if (!x.is_integer()) return false;
    if (x.is_zero()) continue;
    if (!leading_seen && x.sign() < 0) return false;
    leading_seen = true;
    g = gcd(g, x.numerator());
  }
  return g == 1;
}

struct Shape {
  std::size_t rows, cols, rank;
};

}  // namespace

TEST(Rank, ZeroAndIdentity) {
  EXPECT_EQ(rank(QMatrix::unlabelled(4, 7)), 0U);
  QMatrix id = QMatrix::unlabelled(5, 5);
  for (std::size_t i = 0; i < 5; ++i) id(i, i) = Rational(1);
  EXPECT_EQ(rank(id), 5U);
  EXPECT_EQ(rank(QMatrix::unlabelled(0, 0)), 0U);
}

TEST(Rank, AgreesWithNaiveElimination) {
  std::mt19937 rng(2024);
  const Shape shapes[] = {{6, 6, 3}, {8, 12, 5}, {12, 8, 7}, {15, 15, 14}, {20, 9, 9}, {3, 30, 2}};
  for (const auto& s : shapes) {
    for (int t = 0; t < 5; ++t) {
      const oracle::Matrix a = oracle::random_low_rank(rng, s.rows, s.cols, s.rank);
      EXPECT_EQ(rank(from_oracle(a)), oracle::rank(a));
    }
  }
}

TEST(Kernels, RankNullityAndAnnihilation) {
  std::mt19937 rng(7);
  const Shape shapes[] = {{6, 6, 3}, {8, 12, 5}, {12, 8, 7}, {10, 10, 10}, {9, 4, 1}};
  for (const auto& s : shapes) {
    for (int t = 0; t < 4; ++t) {
      const QMatrix m = from_oracle(oracle::random_low_rank(rng, s.rows, s.cols, s.rank, 9));
      const std::size_t r = rank(m);
      const KernelBasis left = left_kernel(m), right = right_kernel(m);
      EXPECT_EQ(r + left.dim(), m.nrows());
      EXPECT_EQ(r + right.dim(), m.ncols());
      EXPECT_EQ(left.side, Side::kLeft);
      EXPECT_EQ(right.side, Side::kRight);
      for (const auto& v : left.vectors) {
        EXPECT_TRUE(left_multiply(v, m).is_zero());
        EXPECT_TRUE(is_primitive_canonical(v));
      }
      for (const auto& v : right.vectors) {
        EXPECT_TRUE(right_multiply(m, v).is_zero());
        EXPECT_TRUE(is_primitive_canonical(v));
      }
      EXPECT_EQ(rank_of_rows(left.rows(), m.nrows()), left.dim());
      EXPECT_EQ(rank_of_rows(right.rows(), m.ncols()), right.dim());
    }
  }
}

TEST(Kernels, CanonicalBasisIsEchelonAndSpansSameSpace) {
  std::mt19937 rng(99);
  for (int t = 0; t < 10; ++t) {
    const oracle::Matrix a = oracle::random_low_rank(rng, 7, 9, 4);
    const RationalRows rows = from_oracle(a).to_rows();
    const RationalRows basis = canonical_basis(rows, 9);
    EXPECT_EQ(basis.size(), oracle::rank(a));
    RationalRows both = rows;
    both.insert(both.end(), basis.begin(), basis.end());
    EXPECT_EQ(rank_of_rows(both, 9), basis.size());
    std::size_t last_lead = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::size_t lead = 0;
      while (basis[i][lead].is_zero()) ++lead;
      if (i > 0) {
        EXPECT_GT(lead, last_lead);
      }
      last_lead = lead;
      EXPECT_GT(basis[i][lead].sign(), 0);
      for (std::size_t other = 0; other < basis.size(); ++other) {
        if (other != i) {
          EXPECT_TRUE(basis[other][lead].is_zero());
        }
      }
    }
  }
}

TEST(Solve, FindsPreimageOrReportsNone) {
  std::mt19937 rng(5);
  for (int t = 0; t < 10; ++t) {
    const QMatrix a = from_oracle(oracle::random_low_rank(rng, 8, 6, 4));
    const RationalRows rows = a.to_rows();
    RationalRow x0(6);
    for (auto& x : x0) x = Rational(static_cast<int>(rng() % 11) - 5);
    RationalRow b(8);
    for (std::size_t r = 0; r < 8; ++r)
      for (std::size_t c = 0; c < 6; ++c) b[r] += rows[r][c] * x0[c];
    const auto x = solve(rows, 6, b);
    ASSERT_TRUE(x.has_value());
    for (std::size_t r = 0; r < 8; ++r) {
      Rational s;
      for (std::size_t c = 0; c < 6; ++c) s += rows[r][c] * (*x)[c];
      EXPECT_EQ(s, b[r]);
    }
    // A left-kernel vector is orthogonal to the column space, so b + k is unreachable.
    const KernelBasis left = left_kernel(a);
    ASSERT_FALSE(left.vectors.empty());
    RationalRow bad = b;
    for (std::size_t r = 0; r < 8; ++r) bad[r] += left.vectors[0].values[r];
    EXPECT_FALSE(solve(rows, 6, bad).has_value());
  }
}

TEST(RowSpace, MembershipWitnessesAndRejections) {
  std::mt19937 rng(17);
  for (int t = 0; t < 10; ++t) {
    const QMatrix m = from_oracle(oracle::random_low_rank(rng, 6, 9, 4));
    LabelledVector w(m.rows());
    for (auto& x : w.values) x = Rational(static_cast<int>(rng() % 7) - 3);
    const LabelledVector v = left_multiply(w, m);
    const Membership yes = row_space_membership(m, v);
    ASSERT_TRUE(yes.member);
    ASSERT_TRUE(yes.witness.has_value());
    EXPECT_EQ(left_multiply(*yes.witness, m), v);

    const KernelBasis right = right_kernel(m);
    ASSERT_FALSE(right.vectors.empty());
    const Membership no = row_space_membership(m, right.vectors[0]);
    EXPECT_FALSE(no.member);
    EXPECT_FALSE(no.witness.has_value());
  }
  const QMatrix m = QMatrix::unlabelled(3, 4);
  EXPECT_THROW(row_space_membership(m, LabelledVector(QMatrix::unlabelled(5, 5).cols())), ContractViolation);
}

TEST(Intersection, MatchesDimensionFormula) {
  std::mt19937 rng(31);
  for (int t = 0; t < 10; ++t) {
    const RationalRows a = from_oracle(oracle::random_low_rank(rng, 5, 10, 5)).to_rows();
    RationalRows b = from_oracle(oracle::random_low_rank(rng, 3, 10, 3)).to_rows();
    b.push_back(a[0]);
    b.push_back(a[1]);
    RationalRows sum = a;
    sum.insert(sum.end(), b.begin(), b.end());
    const std::size_t expect = rank_of_rows(a, 10) + rank_of_rows(b, 10) - rank_of_rows(sum, 10);
    EXPECT_EQ(intersection_dim(a, b, 10), expect);
    EXPECT_GE(expect, 2U);
  }
}

TEST(QMatrixOps, ProductAndTranspose) {
  std::mt19937 rng(3);
  for (int t = 0; t < 5; ++t) {
    const oracle::Matrix a = oracle::random_low_rank(rng, 4, 5, 3), b = oracle::random_low_rank(rng, 5, 3, 2);
    const QMatrix qa = from_oracle(a), qb = from_oracle(b);
    EXPECT_EQ(qa * qb, from_oracle(oracle::product(a, b)));
    EXPECT_EQ((qa * qb).transpose(), qb.transpose() * qa.transpose());
    EXPECT_EQ(qa.transpose().transpose(), qa);
  }
  EXPECT_THROW(QMatrix::unlabelled(2, 3) * QMatrix::unlabelled(2, 3), ContractViolation);
}
