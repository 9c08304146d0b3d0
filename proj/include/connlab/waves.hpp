#pragma once

#include <cstddef>
#include <vector>

#include "connlab/matrix.hpp"
#include "connlab/spectra.hpp"

namespace connlab {

/// Amplitude/velocity pair over the simplex basis.
struct WaveState {
    std::vector<double> u, v;
};

/// f(A) = V f(Lambda) V^T for a precomputed eigendecomposition.
RealMat matrix_function(const EigenSystem& es, double (*f)(double));

/// u'' = -A^2 u with u(0) = u0, u'(0) = v0, solved by functional calculus:
/// u(t) = cos(At) u0 + t sinc(At) v0, v(t) = -A sin(At) u0 + cos(At) v0.
WaveState wave_solve(const RealMat& a, const std::vector<double>& u0,
                     const std::vector<double>& v0, double t);
WaveState wave_solve(const EigenSystem& es, const std::vector<double>& u0,
                     const std::vector<double>& v0, double t);

/// Initial velocity v0 with wave_solve(c*A, u0, v0, 1).u = u1. Requires the
/// spectral radius of c*A below pi/2 so sinc(cA) is invertible.
std::vector<double> boundary_solve(const RealMat& a, double c,
                                   const std::vector<double>& u0,
                                   const std::vector<double>& u1);

/// One step of the discrete wave map (u,v) -> (2Au - v, u). The evolve
/// wrapper enforces spectral radius < 1 once and iterates.
WaveState symplectic_step(const RealMat& a, const WaveState& s);
WaveState symplectic_evolve(const RealMat& a, WaveState s, std::size_t steps);

/// Closed form of the n-step discrete evolution through Chebyshev
/// functional calculus (matches symplectic_evolve at integer times).
std::vector<double> chebyshev_closed_form(const EigenSystem& es,
                                          const std::vector<double>& u0,
                                          const std::vector<double>& v0,
                                          std::size_t steps);

struct UnitaryConjugationReport {
    bool pass = false;
    double sum_residual = 0.0;        // max |U + U* - 2A|
    double conjugation_residual = 0.0; // max |S^{-1} B S - diag(U,U*)|
    double circle_residual = 0.0;      // max | |mu| - 1 | over block-map eigenvalues
};

/// Builds U = A + i sqrt(I - A^2) and verifies U + U* = 2A and that the
/// eigenvector matrix S = [[U, U*], [I, I]] conjugates the block map
/// B = [[2A, -I], [I, 0]] to the unitary pair diag(U, U*). Requires
/// spectral radius < 1.
UnitaryConjugationReport unitary_conjugation_check(const RealMat& a,
                                                   double sum_tol = 1e-10,
                                                   double conj_tol = 1e-8);

struct SymplecticSpectrumReport {
    bool pass = false;
    double max_modulus_deviation = 0.0;  // over all 2n block-map eigenvalues
    double max_eigen_residual = 0.0;     // ||B w - mu w|| for the verified pairs
};

/// Verifies that all 2n eigenvalues of the block map [[2A,-I],[I,0]] lie on
/// the unit circle, by constructing the 2n eigenpairs mu = lambda +-
/// i sqrt(1-lambda^2) from the eigensystem of A and bounding their
/// residuals.
SymplecticSpectrumReport symplectic_spectrum_check(const RealMat& a,
                                                   double circle_tol = 1e-10);

struct CausalityReport {
    bool pass = false;
    std::size_t steps = 0;
    double worst_leak = 0.0;  // max |u| outside the reachable ball, all steps
};

/// Iterates the discrete wave map from a point source and checks that the
/// support after k steps stays inside the distance-k ball of the interaction
/// graph of A (entries outside are structural zeros; bound 1e-14).
CausalityReport causality_check(const RealMat& a, std::size_t source,
                                std::size_t steps, double leak_tol = 1e-14);

struct ChebyshevReport {
    bool pass = false;
    double max_recurrence_residual = 0.0;  // T_n recurrence vs cos(n arccos)
    double max_scalar_deviation = 0.0;     // three time discretizations at O(h^3)
};

/// T_n(A) by three-term recurrence against cos(n arccos(A)) by functional
/// calculus for n <= order, plus the scalar second-order agreement of the
/// arcsin-exponential, plain exponential and Cayley discretizations.
ChebyshevReport chebyshev_series_check(const RealMat& a, int order,
                                       double mat_tol = 1e-9);

/// Spectral radius via the symmetric eigensolver.
double spectral_radius(const RealMat& a);

}  // namespace connlab
