#pragma once

#include <cstddef>
#include <vector>

#include "connlab/complex.hpp"
#include "connlab/matrix.hpp"
#include "connlab/operators.hpp"

namespace connlab {

/// Full spectrum of a symmetric matrix, descending, with cumulative sums
/// S_k = lambda_1 + ... + lambda_k.
struct Spectrum {
    std::vector<double> values;      // descending
    std::vector<double> cumulative;  // cumulative[k] = S_{k+1}
    double residual_bound = 0.0;     // max ||Av - lambda v|| over computed pairs

    std::size_t size() const { return values.size(); }
    double spectral_radius() const;
    /// S_k with 1-based k.
    double partial_sum(std::size_t k) const { return cumulative.at(k - 1); }
};

/// Eigendecomposition A = V diag(values) V^T with orthonormal columns,
/// values descending. Basis for all matrix functional calculus here.
struct EigenSystem {
    std::vector<double> values;
    RealMat vectors;  // column j pairs with values[j]
};

/// Householder tridiagonalization + implicit-shift QL. Rejects matrices
/// that are not symmetric within sym_tol entrywise. When with_vectors is
/// set the residual bound max_j ||A v_j - lambda_j v_j||_2 is reported.
Spectrum spectrum_of(const RealMat& a, bool with_vectors = true, double sym_tol = 1e-12);

EigenSystem eigen_system(const RealMat& a, double sym_tol = 1e-12);

/// Package an externally computed eigenvalue list (sorted descending here).
Spectrum spectrum_from_values(std::vector<double> values);

struct Signature {
    std::size_t positives = 0, negatives = 0, zeros = 0;
};

Signature signature(const Spectrum& s, double zero_tol);

/// Cauchy interlacing for one deleted index: with both spectra descending
/// and |inner| = |outer|-1, checks outer_k >= inner_k >= outer_{k+1}
/// within tol.
bool interlace_check(const Spectrum& outer, const Spectrum& inner, double tol);

/// Nested (repeated-deletion) interlacing: with j = |outer|-|inner| >= 0,
/// checks outer_k >= inner_k >= outer_{k+j} within tol.
bool interlace_check_nested(const Spectrum& outer, const Spectrum& inner, double tol);

/// lambda_j <= d_j + tol for all j (equal lengths, both descending).
bool degree_bound_check(const Spectrum& s, const std::vector<long long>& degrees,
                        double tol);

/// Margins S_k(a) - S_k(b) for k = 1..n.
std::vector<double> loewner_margins(const Spectrum& a, const Spectrum& b);

/// Exact Betti numbers b_k = f_k - rank(H_k), integer ranks.
std::vector<long long> betti(const Complex& g);

struct McKeanSingerReport {
    bool pass = false;
    std::vector<BigInt> supertraces;  // str(H^m) for m = 1..n_max
    long long str_identity = 0;       // str(H^0)
};

/// str(H^m) = 0 exactly for m = 1..n_max and str(I) = chi(G).
McKeanSingerReport mckean_singer_check(const Complex& g, int n_max);

/// Analytic torsion: product over k of Det(H_k)^(k (-1)^(k+1)) with Det the
/// pseudo determinant, an exact rational.
Rational analytic_torsion(const Complex& g);

/// Sum of lambda^(-s) over eigenvalues above zero_tol.
double zeta(const Spectrum& s, double exponent, double zero_tol = 1e-8);

struct PerronReport {
    bool unique_top = false;  // lambda_1 > lambda_2 + gap_tol
    bool primitive = false;   // some power M^r entrywise positive, r <= n
    bool pass = false;
    double gap = 0.0;
};

/// Perron-Frobenius check for an entrywise nonnegative integer matrix.
PerronReport perron_check(const IntMat& m, const Spectrum& s, double gap_tol = 1e-9);

}  // namespace connlab
