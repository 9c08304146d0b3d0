#include "connlab/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "connlab/exact.hpp"
#include "connlab/operators.hpp"
#include "connlab/spectra.hpp"

namespace connlab {

namespace {

// Parity of the permutation sorting `tuple`; 0 when entries repeat.
int sorting_signature(const std::vector<Vertex>& tuple) {
    int inversions = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.size(); ++j) {
            if (tuple[i] == tuple[j]) return 0;
            if (tuple[i] > tuple[j]) ++inversions;
        }
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

SimplicialMap::SimplicialMap(const Complex& g, std::vector<Vertex> domain,
                             std::vector<Vertex> image)
    : domain_(std::move(domain)), image_(std::move(image)) {
    if (domain_.size() != image_.size())
        throw std::invalid_argument("vertex map arrays must be parallel");
    if (!std::is_sorted(domain_.begin(), domain_.end()) ||
        std::adjacent_find(domain_.begin(), domain_.end()) != domain_.end())
        throw std::invalid_argument("map domain must be strictly sorted");
    if (domain_ != g.vertex_set())
        throw std::invalid_argument("map domain must be the vertex set of the complex");

    image_pos_.resize(g.size());
    image_sign_.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& vs = g.simplex(i).vertices();
        std::vector<Vertex> tuple(vs.size());
        for (std::size_t k = 0; k < vs.size(); ++k) tuple[k] = apply(vs[k]);
        std::vector<Vertex> uniq = tuple;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        const auto pos = g.index_of(Simplex(uniq));
        if (!pos)
            throw std::invalid_argument("not a simplicial map: image of " +
                                        g.simplex(i).to_string() + " is " +
                                        Simplex(uniq).to_string() +
                                        ", which is not in the complex");
        image_pos_[i] = *pos;
        image_sign_[i] = sorting_signature(tuple);
    }
    std::vector<Vertex> sorted_image = image_;
    std::sort(sorted_image.begin(), sorted_image.end());
    automorphism_ = sorted_image == domain_;
}

Vertex SimplicialMap::apply(Vertex v) const {
    const auto it = std::lower_bound(domain_.begin(), domain_.end(), v);
    if (it == domain_.end() || *it != v)
        throw std::invalid_argument("vertex not in map domain");
    return image_[static_cast<std::size_t>(it - domain_.begin())];
}

SimplicialMap SimplicialMap::compose_with(const Complex& g,
                                          const SimplicialMap& inner) const {
    std::vector<Vertex> composed(inner.image_.size());
    for (std::size_t i = 0; i < composed.size(); ++i)
        composed[i] = apply(inner.image_[i]);
    return SimplicialMap(g, inner.domain_, std::move(composed));
}

SimplicialMap validate_map(const Complex& g, const std::vector<Vertex>& image) {
    return SimplicialMap(g, g.vertex_set(), image);
}

SimplicialMap identity_map(const Complex& g) {
    return validate_map(g, g.vertex_set());
}

std::vector<SimplicialMap> find_automorphisms(const Complex& g, std::size_t limit,
                                              std::size_t vertex_cap) {
    const auto vs = g.vertex_set();
    if (vs.size() > vertex_cap)
        throw std::invalid_argument("automorphism search beyond the vertex cap");
    // adjacency of the 1-skeleton over vertex indices
    const std::size_t nv = vs.size();
    std::vector<char> adj(nv * nv, 0);
    for (const Simplex& s : g.simplices()) {
        if (s.dim() != 1) continue;
        const auto a = static_cast<std::size_t>(
            std::lower_bound(vs.begin(), vs.end(), s.vertices()[0]) - vs.begin());
        const auto b = static_cast<std::size_t>(
            std::lower_bound(vs.begin(), vs.end(), s.vertices()[1]) - vs.begin());
        adj[a * nv + b] = adj[b * nv + a] = 1;
    }

    std::vector<SimplicialMap> out;
    std::vector<std::size_t> assign(nv);
    std::vector<char> used(nv, 0);
    // depth-first over edge-compatible assignments
    auto recurse = [&](auto&& self, std::size_t depth) -> bool {
        if (limit && out.size() >= limit) return false;
        if (depth == nv) {
            std::vector<Vertex> image(nv);
            for (std::size_t i = 0; i < nv; ++i) image[i] = vs[assign[i]];
            try {
                SimplicialMap t(g, vs, image);
                if (t.is_automorphism()) out.push_back(std::move(t));
            } catch (const std::invalid_argument&) {
                // edge-preserving but not simplicial on higher faces
            }
            return true;
        }
        for (std::size_t w = 0; w < nv; ++w) {
            if (used[w]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < depth && ok; ++j)
                ok = adj[depth * nv + j] == adj[assign[j] * nv + w];
            if (!ok) continue;
            used[w] = 1;
            assign[depth] = w;
            if (!self(self, depth + 1)) { used[w] = 0; return false; }
            used[w] = 0;
        }
        return true;
    };
    if (nv == 0) {
        out.emplace_back(g, std::vector<Vertex>{}, std::vector<Vertex>{});
        return out;
    }
    recurse(recurse, 0);
    return out;
}

IntMat koopman(const Complex& g, const SimplicialMap& t) {
    IntMat u(g.size(), g.size());
    for (std::size_t j = 0; j < g.size(); ++j)
        if (!t.degenerate(j)) u(t.image_position(j), j) = t.image_sign(j);
    return u;
}

FixedPointReport fixed_points(const Complex& g, const SimplicialMap& t) {
    FixedPointReport rep;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (t.image_position(i) != i) continue;
        rep.fixed.push_back(i);
        const int idx = g.simplex(i).omega() * t.image_sign(i);
        rep.indices.push_back(idx);
        rep.index_sum += idx;
    }
    return rep;
}

long long lefschetz_number(const Complex& g, const SimplicialMap& t) {
    const std::size_t n = g.size();
    if (n == 0) return 0;
    const BigMat q = kernel_basis(hodge(g));
    const std::size_t b = q.cols();
    if (b == 0) return 0;
    const BigMat u = to_big(koopman(g, t));
    // str(P U) with P = Q (Q^T Q)^{-1} Q^T reduces to tr(B Z) with
    // Z = Q^T U Omega Q, Omega = diag(omega), in the small kernel dimension.
    BigMat omega_q(n, b);
    for (std::size_t i = 0; i < n; ++i) {
        const int w = g.simplex(i).omega();
        for (std::size_t j = 0; j < b; ++j) omega_q(i, j) = w * q(i, j);
    }
    const BigMat z = q.transpose() * (u * omega_q);
    RatMat gram(b, b);
    const BigMat qtq = q.transpose() * q;
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < b; ++j) gram(i, j) = Rational(qtq(i, j));
    const RatMat gram_inv = rat_inverse(gram);
    Rational str(0);
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < b; ++j)
            str += gram_inv(i, j) * Rational(z(j, i));
    str.canonicalize();
    if (str.get_den() != 1)
        throw std::runtime_error("lefschetz number came out non-integer");
    return static_cast<long long>(str.get_num().get_si());
}

LefschetzReport verify_lefschetz(const Complex& g, const SimplicialMap& t) {
    LefschetzReport rep;
    rep.index_sum = fixed_points(g, t).index_sum;
    const IntMat u = koopman(g, t);
    long long str_u = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        str_u += g.simplex(i).omega() * u(i, i);
    rep.koopman_supertrace = str_u;
    rep.lefschetz = lefschetz_number(g, t);
    rep.pass = rep.index_sum == rep.koopman_supertrace &&
               rep.index_sum == rep.lefschetz;
    return rep;
}

bool koopman_supertrace_check(const Complex& g, const SimplicialMap& t) {
    const IntMat u = koopman(g, t);
    long long str_u = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        str_u += g.simplex(i).omega() * u(i, i);
    return str_u == fixed_points(g, t).index_sum;
}

HeatDeformationReport heat_deformation_check(const Complex& g, const SimplicialMap& t,
                                             const std::vector<double>& times,
                                             double tol) {
    if (!t.is_automorphism())
        throw std::invalid_argument(
            "heat deformation requires an automorphism (Koopman must commute with H)");
    HeatDeformationReport rep;
    const long long chi_t = lefschetz_number(g, t);
    const EigenSystem es = eigen_system(to_real(hodge(g)));
    const std::size_t n = g.size();
    for (double time : times) {
        // str(e^{-tH} U) = sum_x omega(x) sign_x E(x, T(x))
        double str = 0.0;
        for (std::size_t x = 0; x < n; ++x) {
            const std::size_t tx = t.image_position(x);
            double e_entry = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                e_entry += es.vectors(x, j) * std::exp(-time * es.values[j]) *
                           es.vectors(tx, j);
            str += g.simplex(x).omega() * t.image_sign(x) * e_entry;
        }
        rep.deviations.push_back(std::abs(str - static_cast<double>(chi_t)));
    }
    rep.pass = std::all_of(rep.deviations.begin(), rep.deviations.end(),
                           [tol](double d) { return d <= tol; });
    return rep;
}

AttractorReport attractor(const Complex& g, const SimplicialMap& t) {
    std::set<std::size_t> current;
    for (std::size_t i = 0; i < g.size(); ++i) current.insert(i);
    for (;;) {
        std::set<std::size_t> next;
        for (std::size_t i : current) next.insert(t.image_position(i));
        if (next.size() == current.size()) break;
        current.swap(next);
    }

    std::vector<Simplex> ks;
    for (std::size_t i : current) ks.push_back(g.simplex(i));
    Complex k = Complex::from_simplices(ks);  // throws if not closed

    std::vector<Vertex> kv = k.vertex_set();
    std::vector<Vertex> kimage(kv.size());
    for (std::size_t i = 0; i < kv.size(); ++i) kimage[i] = t.apply(kv[i]);
    SimplicialMap tk(k, kv, kimage);

    AttractorReport rep{k, tk};
    rep.closed = true;  // from_simplices validated closedness
    std::set<std::size_t> image;
    for (std::size_t i : current) image.insert(t.image_position(i));
    rep.invariant = image == current;
    rep.bijective = tk.is_automorphism();
    rep.index_sums_agree =
        fixed_points(g, t).index_sum == fixed_points(k, tk).index_sum;
    rep.lefschetz_agree = lefschetz_number(g, t) == lefschetz_number(k, tk);
    rep.pass = rep.closed && rep.invariant && rep.bijective &&
               rep.index_sums_agree && rep.lefschetz_agree;
    return rep;
}

std::vector<std::size_t> basis_permutation(const Complex& g, const SimplicialMap& t) {
    if (!t.is_automorphism())
        throw std::invalid_argument("basis permutation requires an automorphism");
    std::vector<std::size_t> perm(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) perm[i] = t.image_position(i);
    return perm;
}

static IntMat permutation_matrix(std::size_t n, const std::vector<std::size_t>& perm,
                                 const std::vector<int>* signs = nullptr) {
    if (perm.size() != n)
        throw std::invalid_argument("permutation length must match the basis");
    std::vector<char> seen(n, 0);
    for (std::size_t p : perm) {
        if (p >= n || seen[p])
            throw std::invalid_argument("not a permutation of the basis");
        seen[p] = 1;
    }
    IntMat p_mat(n, n);
    for (std::size_t j = 0; j < n; ++j)
        p_mat(perm[j], j) = signs ? (*signs)[j] : 1;
    return p_mat;
}

DynamicalMatrices dynamical_matrices(const Complex& g,
                                     const std::vector<std::size_t>& perm,
                                     const std::vector<int>* orientation_signs) {
    const IntMat p = permutation_matrix(g.size(), perm);
    DynamicalMatrices dm;
    dm.l_t = connection_matrix(g) * p;
    dm.g_t = green_matrix(g) * p;
    // the exterior derivative composes with the map on ORIENTED simplices:
    // the column of y carries the sorting parity of the image tuple, which
    // is what keeps (d_T + d_T^T)^2 = D^2 exact for automorphisms
    const IntMat p_signed =
        orientation_signs ? permutation_matrix(g.size(), perm, orientation_signs) : p;
    dm.d_t = exterior_derivative(g) * p_signed;
    dm.dirac_t = dm.d_t + dm.d_t.transpose();
    return dm;
}

DynamicalMatrices dynamical_matrices(const Complex& g, const SimplicialMap& t) {
    const auto perm = basis_permutation(g, t);
    std::vector<int> signs(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) signs[i] = t.image_sign(i);
    return dynamical_matrices(g, perm, &signs);
}

bool dynamical_dirac_check(const Complex& g, const SimplicialMap& t) {
    const DynamicalMatrices dm = dynamical_matrices(g, t);
    return dm.dirac_t * dm.dirac_t == hodge(g);
}

long long dynamical_dirac_deviation(const Complex& g,
                                    const std::vector<std::size_t>& perm) {
    const DynamicalMatrices dm = dynamical_matrices(g, perm);
    const IntMat diff = dm.dirac_t * dm.dirac_t - hodge(g);
    long long worst = 0;
    for (std::size_t i = 0; i < diff.rows(); ++i)
        for (std::size_t j = 0; j < diff.cols(); ++j)
            worst = std::max(worst, std::abs(diff(i, j)));
    return worst;
}

namespace {

// polynomial helpers over rationals, coefficient vectors low order first
std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                               const std::vector<Rational>& b) {
    std::vector<Rational> c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

std::vector<Rational> series_div(const std::vector<Rational>& num,
                                 const std::vector<Rational>& den,
                                 std::size_t order) {
    // den[0] must be 1 (det(I - 0) = 1)
    std::vector<Rational> q(order + 1, Rational(0));
    for (std::size_t n = 0; n <= order; ++n) {
        Rational acc = n < num.size() ? num[n] : Rational(0);
        for (std::size_t k = 1; k <= n && k < den.size(); ++k)
            acc -= den[k] * q[n - k];
        q[n] = acc;
    }
    return q;
}

// det(I - s A) for a rational square matrix, via its characteristic
// polynomial: coefficient of s^m is c_{b-m}.
std::vector<Rational> det_one_minus_s(const RatMat& a) {
    const std::size_t b = a.rows();
    std::vector<Rational> c(b + 1, Rational(0));
    c[b] = 1;
    if (b > 0) {
        RatMat m = a;
        c[b - 1] = -m.trace();
        for (std::size_t k = 2; k <= b; ++k) {
            for (std::size_t i = 0; i < b; ++i) m(i, i) += c[b - k + 1];
            m = a * m;
            c[b - k] = -m.trace() / Rational(static_cast<long>(k));
        }
    }
    std::vector<Rational> out(b + 1);
    for (std::size_t m = 0; m <= b; ++m) out[m] = c[b - m];
    return out;
}

}  // namespace

DynamicalZeta dynamical_zeta(const Complex& g, const SimplicialMap& t, int order) {
    if (!t.is_automorphism())
        throw std::invalid_argument("dynamical zeta requires an automorphism");
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    DynamicalZeta dz;

    // Lefschetz numbers of the iterates drive the exponential series
    SimplicialMap iterate = t;
    for (int k = 1; k <= order; ++k) {
        dz.lefschetz_numbers.push_back(lefschetz_number(g, iterate));
        if (k < order) iterate = t.compose_with(g, iterate);
    }
    dz.series.assign(static_cast<std::size_t>(order) + 1, Rational(0));
    dz.series[0] = 1;
    for (int n = 1; n <= order; ++n) {
        Rational acc(0);
        for (int k = 1; k <= n; ++k)
            acc += to_rat(dz.lefschetz_numbers[static_cast<std::size_t>(k - 1)]) *
                   dz.series[static_cast<std::size_t>(n - k)];
        dz.series[static_cast<std::size_t>(n)] = acc / Rational(n);
    }

    // closed form from the induced maps on the kernels of the Hodge blocks
    dz.numerator = {Rational(1)};
    dz.denominator = {Rational(1)};
    const IntMat u = koopman(g, t);
    for (int k = 0; k <= g.dimension(); ++k) {
        const auto [lo, hi] = g.block_range(k);
        std::vector<std::size_t> keep(hi - lo);
        std::iota(keep.begin(), keep.end(), lo);
        const BigMat qk = kernel_basis(hodge_block(g, k));
        const std::size_t b = qk.cols();
        if (b == 0) continue;
        const IntMat uk = u.principal_submatrix(keep);
        // induced map on the kernel: solve (Q^T Q) X = Q^T U Q
        RatMat gram(b, b), rhs(b, b);
        const BigMat qtq = qk.transpose() * qk;
        const BigMat quq = qk.transpose() * (to_big(uk) * qk);
        for (std::size_t i = 0; i < b; ++i)
            for (std::size_t j = 0; j < b; ++j) {
                gram(i, j) = Rational(qtq(i, j));
                rhs(i, j) = Rational(quq(i, j));
            }
        const RatMat induced = rat_solve(gram, rhs);
        const auto factor = det_one_minus_s(induced);
        if (k % 2 == 1) dz.numerator = poly_mul(dz.numerator, factor);
        else dz.denominator = poly_mul(dz.denominator, factor);
    }

    const auto closed_series =
        series_div(dz.numerator, dz.denominator, static_cast<std::size_t>(order));
    dz.series_matches_closed_form = true;
    for (std::size_t i = 0; i < dz.series.size(); ++i)
        if (dz.series[i] != closed_series[i]) {
            dz.series_matches_closed_form = false;
            break;
        }
    return dz;
}

}  // namespace connlab
