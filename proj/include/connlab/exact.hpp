#pragma once

#include <vector>

#include "connlab/matrix.hpp"

namespace connlab {

/// Determinant by fraction-free (Bareiss) elimination, exact. Runs a
/// machine-integer pass first and redoes the elimination in GMP integers
/// if that overflows.
BigInt det_exact(const IntMat& a);

/// Rank over the integers (= rank over the rationals), fraction-free with
/// full pivoting; same int64/GMP fallback scheme.
std::size_t rank_exact(const IntMat& a);

/// Monic characteristic polynomial det(xI - A): coefficient vector c with
/// c[k] the coefficient of x^k and c[n] = 1. Faddeev-LeVerrier over GMP
/// integers (the trace divisions are exact).
std::vector<BigInt> char_poly(const IntMat& a);

/// Product of the nonzero eigenvalues, read off the lowest-order nonzero
/// characteristic coefficient: for p(x) = x^r q(x) with q(0) != 0 the
/// product is (-1)^(n-r) c_r. Empty matrices and zero matrices give 1.
BigInt pseudo_determinant(const IntMat& a);

/// Exact sum of 1/lambda over the nonzero eigenvalues (trace of the
/// pseudo-inverse for symmetric a), equal to -c_{r+1}/c_r.
Rational pseudo_inverse_trace(const IntMat& a);

/// Integer basis of the kernel of a (columns of the result), computed by
/// Gauss-Jordan over rationals with denominators cleared per vector.
/// Result is n x k with k = n - rank.
BigMat kernel_basis(const IntMat& a);

/// Degree of gcd(p, p') for the characteristic polynomial p of a: zero iff
/// every eigenvalue is simple. An exact square-freeness certificate.
std::size_t char_poly_repeated_root_degree(const IntMat& a);

/// Gauss-Jordan inverse over rationals; throws std::invalid_argument when
/// singular.
RatMat rat_inverse(const RatMat& a);

/// Solve a x = b over rationals (a square nonsingular).
RatMat rat_solve(const RatMat& a, const RatMat& b);

}  // namespace connlab
