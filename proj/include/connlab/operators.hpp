#pragma once

#include <vector>

#include "connlab/complex.hpp"
#include "connlab/matrix.hpp"

namespace connlab {

/// Signed facet incidence: 0 unless y is a facet of x (y subset x, one
/// dimension lower); otherwise (-1)^i where the vertex of x missing from y
/// is the i-th (0-based) entry of x's sorted vertex list.
int boundary_sign(const Simplex& x, const Simplex& y);

/// Exterior derivative d with d(x,y) = boundary_sign(x,y).
IntMat exterior_derivative(const Complex& g);

/// Dirac matrix D = d + d^T: symmetric, zero diagonal, entries in {-1,0,1}.
IntMat dirac(const Complex& g);

/// Hodge Laplacian H = D*D, block diagonal in the dimension grading.
IntMat hodge(const Complex& g);

/// The f_k x f_k diagonal block of H on k-dimensional simplices.
IntMat hodge_block(const Complex& g, int k);

/// Connection matrix L(x,y) = 1 iff x and y intersect. Symmetric 0-1 with
/// unit diagonal.
IntMat connection_matrix(const Complex& g);

/// Green matrix g(x,y) = omega(x) omega(y) chi(U(x) cap U(y)), built from
/// the star formula (not by inversion). L * g = identity exactly.
IntMat green_matrix(const Complex& g);

/// Ordered (descending) connection degrees: row sums of L.
std::vector<long long> connection_degrees(const Complex& g);

/// Ordered (descending) Dirac degrees: row sums of |D|.
std::vector<long long> dirac_degrees(const Complex& g);

/// Entrywise absolute value.
IntMat signless(const IntMat& m);

/// Principal submatrix with the listed rows+columns removed.
IntMat submatrix_delete(const IntMat& m, const std::vector<std::size_t>& positions);

}  // namespace connlab
