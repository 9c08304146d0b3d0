#pragma once

#include <cstddef>
#include <vector>

#include "connlab/complex.hpp"
#include "connlab/matrix.hpp"

namespace connlab {

/// A vertex assignment on a complex, validated so that the image of every
/// simplex is again a simplex. Immutable after validation.
class SimplicialMap {
public:
    /// Validates the assignment (parallel arrays: sorted vertex list of g
    /// and its images). Throws std::invalid_argument naming a violating
    /// simplex when some image set is not in g.
    SimplicialMap(const Complex& g, std::vector<Vertex> domain,
                  std::vector<Vertex> image);

    const std::vector<Vertex>& domain() const { return domain_; }
    const std::vector<Vertex>& image() const { return image_; }
    Vertex apply(Vertex v) const;

    /// Basis position of the image simplex of basis element i.
    std::size_t image_position(std::size_t i) const { return image_pos_[i]; }
    /// Signature of the sorting permutation of the image tuple, 0 when the
    /// image loses dimension (repeated image vertices).
    int image_sign(std::size_t i) const { return image_sign_[i]; }
    bool degenerate(std::size_t i) const { return image_sign_[i] == 0; }

    /// Bijective on vertices (then automatically a basis permutation).
    bool is_automorphism() const { return automorphism_; }

    SimplicialMap compose_with(const Complex& g, const SimplicialMap& inner) const;

private:
    std::vector<Vertex> domain_;  // sorted
    std::vector<Vertex> image_;
    std::vector<std::size_t> image_pos_;
    std::vector<int> image_sign_;
    bool automorphism_ = false;
};

/// Convenience constructor from an explicit vertex permutation given as the
/// image list over g's sorted vertex set.
SimplicialMap validate_map(const Complex& g, const std::vector<Vertex>& image);
SimplicialMap identity_map(const Complex& g);

/// All (or the first `limit`) vertex bijections mapping the edge set onto
/// itself, each validated as a simplicial automorphism. Guarded by a vertex
/// cap against factorial blowup.
std::vector<SimplicialMap> find_automorphisms(const Complex& g, std::size_t limit = 0,
                                              std::size_t vertex_cap = 10);

/// Koopman matrix: column y carries the sorting-permutation signature at
/// row T(y) when the image keeps full cardinality, else the column is zero.
IntMat koopman(const Complex& g, const SimplicialMap& t);

struct FixedPointReport {
    std::vector<std::size_t> fixed;  // basis positions with T(x) = x
    std::vector<int> indices;        // i_T(x) = omega(x) sign(T|x)
    long long index_sum = 0;
};

FixedPointReport fixed_points(const Complex& g, const SimplicialMap& t);

/// Lefschetz number str(U_T | ker H) computed with exact rational kernel
/// projections; always an exact integer.
long long lefschetz_number(const Complex& g, const SimplicialMap& t);

struct LefschetzReport {
    long long index_sum = 0;
    long long lefschetz = 0;
    long long koopman_supertrace = 0;
    bool pass = false;
};

/// Fixed point theorem: sum of indices = str(U_T) = chi_T(G), exact.
LefschetzReport verify_lefschetz(const Complex& g, const SimplicialMap& t);

bool koopman_supertrace_check(const Complex& g, const SimplicialMap& t);

struct HeatDeformationReport {
    bool pass = false;
    std::vector<double> deviations;  // |str(e^{-tH} U_T) - chi_T| per time
};

/// str(e^{-tH} U_T) stays at chi_T(G) for every t; requires an automorphism
/// (the commutation with H is what makes the deformation constant).
HeatDeformationReport heat_deformation_check(const Complex& g, const SimplicialMap& t,
                                             const std::vector<double>& times,
                                             double tol = 1e-8);

struct AttractorReport {
    Complex attractor;
    SimplicialMap restricted;        // T restricted to the attractor
    bool closed = false;             // attractor passes the subcomplex validator
    bool invariant = false;          // T(K) = K
    bool bijective = false;          // T|K permutes K's basis
    bool index_sums_agree = false;   // fixed-point index sums over G and K match
    bool lefschetz_agree = false;    // chi_T(G) = chi_T(K)
    bool pass = false;
};

/// K = intersection of forward images, with the verification bundle of the
/// restriction lemmas.
AttractorReport attractor(const Complex& g, const SimplicialMap& t);

struct DynamicalMatrices {
    IntMat l_t, g_t, d_t, dirac_t;
};

/// Basis permutation induced by an automorphism: perm[j] = position of T(x_j).
std::vector<std::size_t> basis_permutation(const Complex& g, const SimplicialMap& t);

/// Dynamically deformed matrices: L_T = L P_T and g_T = g P_T for any basis
/// permutation; d_T composes d with the map on oriented simplices, so its
/// permutation matrix carries the image-tuple sorting parities (the signed
/// Koopman columns). The automorphism overload supplies those signs.
DynamicalMatrices dynamical_matrices(const Complex& g,
                                     const std::vector<std::size_t>& perm,
                                     const std::vector<int>* orientation_signs = nullptr);
DynamicalMatrices dynamical_matrices(const Complex& g, const SimplicialMap& t);

/// Exact check (d_T + d_T^T)^2 = D^2 for an automorphism-induced permutation.
bool dynamical_dirac_check(const Complex& g, const SimplicialMap& t);

/// Deviation max |(d_T+d_T^T)^2 - D^2| for an arbitrary basis permutation;
/// reported, not asserted, since conjugation need not preserve the square.
long long dynamical_dirac_deviation(const Complex& g,
                                    const std::vector<std::size_t>& perm);

struct DynamicalZeta {
    std::vector<Rational> series;        // coefficients of s^0..s^order
    std::vector<Rational> numerator;     // closed form: prod over odd k of det(I - s A_k)
    std::vector<Rational> denominator;   // prod over even k
    std::vector<long long> lefschetz_numbers;  // chi_{T^k}, k = 1..order
    bool series_matches_closed_form = false;
};

/// Exponential generating function of the Lefschetz numbers of the iterates
/// of an automorphism, with its rational closed form from the induced maps
/// on cohomology.
DynamicalZeta dynamical_zeta(const Complex& g, const SimplicialMap& t, int order);

}  // namespace connlab
