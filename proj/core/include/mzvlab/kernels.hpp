#pragma once

#include <cstdint>

#include "mzvlab/index.hpp"
#include "mzvlab/rational.hpp"

namespace mzvlab {

// Scalar coefficient families of the depth-2/depth-3 coaction formulas.
//
// b(n, n', m) = (-1)^n binom(m-1, n-1) + (-1)^(n'-m) binom(m-1, n'-1)
//
// e(m; n)    = delta(m; n) + sum_{i=1}^{r-1} delta(m_2..m_i, m_{i+2}..m_r ;
//                                                n_1..n_{i-1}, n_{i+2}..n_r) b(n_i, n_{i+1}, m_1)
//
// c(m; n)    = sum_{k1+k2+k3=N, k_i>=1} delta(m1; k1) e(m2,m3; k2,k3) e(k1,k2,k3; n)
//
// h(m; n)    = the five-term expression obtained by comparing coefficients in
//              the sigma-operator identity (see sigma_identity_defect in poly.hpp).
//
// Binomial upper arguments are bounded by the weight, so b and e fit in 64
// bits for weights below 63; c and h are accumulated in 128 bits.

std::int64_t b_coeff(int n, int n2, int m);

/// Depth 1..3; throws ContractViolation on depth mismatch or non-positive m_1.
std::int64_t e_coeff(const Index& m, const Index& n);

/// Reference summation over every composition (k1,k2,k3) of the weight.
BigInt c_coeff(const Index& m, const Index& n);

/// Same value; restricts the sum to k1 = m1 and nonzero e(m2,m3; k2,k3).
BigInt c_coeff_fast(const Index& m, const Index& n);

BigInt h_coeff(const Index& m, const Index& n);

/// Coefficient of f_N in the depth-2 image: the Bernoulli solution of the
/// double shuffle system for N even, the parity closed form for N odd.
Rational tau(int n1, int n2);

/// Kohnen-Zagier coefficient lambda(r, s); requires r + s even.
Rational lambda_coeff(int r, int s);

}  // namespace mzvlab
