#include "connlab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "connlab/exact.hpp"

namespace connlab {

namespace {

double pythag(double a, double b) { return std::hypot(a, b); }

// Householder reduction to tridiagonal form, Numerical Recipes style.
// On exit d holds the diagonal and e the subdiagonal (e[0] unused); when
// vectors is set, z is replaced by the accumulated orthogonal matrix.
void tred2(RealMat& z, std::vector<double>& d, std::vector<double>& e, bool vectors) {
    const int n = static_cast<int>(z.rows());
    for (int i = n - 1; i > 0; --i) {
        const int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::abs(z(i, k));
            if (scale == 0.0) {
                e[i] = z(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    z(i, k) /= scale;
                    h += z(i, k) * z(i, k);
                }
                double f = z(i, l);
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                z(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    if (vectors) z(j, i) = z(i, j) / h;
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += z(j, k) * z(i, k);
                    for (int k = j + 1; k <= l; ++k) g += z(k, j) * z(i, k);
                    e[j] = g / h;
                    f += e[j] * z(i, j);
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = z(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k) z(j, k) -= f * e[k] + g * z(i, k);
                }
            }
        } else {
            e[i] = z(i, l);
        }
        d[i] = h;
    }
    if (vectors) d[0] = 0.0;
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) {
        if (vectors) {
            if (d[i] != 0.0) {
                for (int j = 0; j < i; ++j) {
                    double g = 0.0;
                    for (int k = 0; k < i; ++k) g += z(i, k) * z(k, j);
                    for (int k = 0; k < i; ++k) z(k, j) -= g * z(k, i);
                }
            }
            d[i] = z(i, i);
            z(i, i) = 1.0;
            for (int j = 0; j < i; ++j) z(j, i) = z(i, j) = 0.0;
        } else {
            d[i] = z(i, i);
        }
    }
}

// QL with implicit shifts on a tridiagonal (d, e); rotates the columns of z
// alongside when vectors is set.
void tqli(std::vector<double>& d, std::vector<double>& e, RealMat& z, bool vectors) {
    const int n = static_cast<int>(d.size());
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) + dd == dd) break;
            }
            if (m != l) {
                if (iter++ == 50)
                    throw std::runtime_error("eigensolver failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = pythag(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    e[i + 1] = r = pythag(f, g);
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    d[i + 1] = g + (p = s * r);
                    g = c * r - b;
                    if (vectors) {
                        for (int k = 0; k < n; ++k) {
                            f = z(k, i + 1);
                            z(k, i + 1) = s * z(k, i) + c * f;
                            z(k, i) = c * z(k, i) - s * f;
                        }
                    }
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

void require_symmetric(const RealMat& a, double sym_tol) {
    a.require_square();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j)
            if (std::abs(a(i, j) - a(j, i)) > sym_tol)
                throw std::invalid_argument("matrix is not symmetric");
}

// Shared driver: descending eigenvalues, optional eigenvectors.
void eigh(const RealMat& a, std::vector<double>& values, RealMat& vectors,
          bool with_vectors, double sym_tol) {
    require_symmetric(a, sym_tol);
    const std::size_t n = a.rows();
    values.assign(n, 0.0);
    if (n == 0) return;
    RealMat z = a;
    // symmetrize so roundoff in the input cannot bias the reduction
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            z(i, j) = z(j, i) = 0.5 * (a(i, j) + a(j, i));
    std::vector<double> d(n), e(n);
    tred2(z, d, e, with_vectors);
    tqli(d, e, z, with_vectors);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return d[x] > d[y]; });
    for (std::size_t j = 0; j < n; ++j) values[j] = d[order[j]];
    if (with_vectors) {
        vectors = RealMat(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) vectors(i, j) = z(i, order[j]);
    }
}

double residual_of(const RealMat& a, const std::vector<double>& values,
                   const RealMat& vectors) {
    const std::size_t n = a.rows();
    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double norm2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double r = -values[j] * vectors(i, j);
            for (std::size_t k = 0; k < n; ++k) r += a(i, k) * vectors(k, j);
            norm2 += r * r;
        }
        worst = std::max(worst, std::sqrt(norm2));
    }
    return worst;
}

}  // namespace

double Spectrum::spectral_radius() const {
    double r = 0.0;
    for (double v : values) r = std::max(r, std::abs(v));
    return r;
}

Spectrum spectrum_of(const RealMat& a, bool with_vectors, double sym_tol) {
    Spectrum s;
    RealMat vectors;
    eigh(a, s.values, vectors, with_vectors, sym_tol);
    s.cumulative.resize(s.values.size());
    std::partial_sum(s.values.begin(), s.values.end(), s.cumulative.begin());
    if (with_vectors && !s.values.empty())
        s.residual_bound = residual_of(a, s.values, vectors);
    return s;
}

EigenSystem eigen_system(const RealMat& a, double sym_tol) {
    EigenSystem es;
    eigh(a, es.values, es.vectors, true, sym_tol);
    return es;
}

Spectrum spectrum_from_values(std::vector<double> values) {
    std::sort(values.begin(), values.end(), std::greater<>());
    Spectrum s;
    s.values = std::move(values);
    s.cumulative.resize(s.values.size());
    std::partial_sum(s.values.begin(), s.values.end(), s.cumulative.begin());
    return s;
}

Signature signature(const Spectrum& s, double zero_tol) {
    Signature sig;
    for (double v : s.values) {
        if (std::abs(v) <= zero_tol) ++sig.zeros;
        else if (v > 0) ++sig.positives;
        else ++sig.negatives;
    }
    return sig;
}

bool interlace_check(const Spectrum& outer, const Spectrum& inner, double tol) {
    if (inner.size() + 1 != outer.size())
        throw std::invalid_argument("interlace check needs |inner| = |outer| - 1");
    return interlace_check_nested(outer, inner, tol);
}

bool interlace_check_nested(const Spectrum& outer, const Spectrum& inner, double tol) {
    if (inner.size() > outer.size())
        throw std::invalid_argument("inner spectrum larger than outer");
    const std::size_t j = outer.size() - inner.size();
    for (std::size_t k = 0; k < inner.size(); ++k) {
        if (inner.values[k] > outer.values[k] + tol) return false;
        if (inner.values[k] < outer.values[k + j] - tol) return false;
    }
    return true;
}

bool degree_bound_check(const Spectrum& s, const std::vector<long long>& degrees,
                        double tol) {
    if (s.size() != degrees.size())
        throw std::invalid_argument("degree bound check needs equal lengths");
    for (std::size_t j = 0; j < degrees.size(); ++j)
        if (s.values[j] > static_cast<double>(degrees[j]) + tol) return false;
    return true;
}

std::vector<double> loewner_margins(const Spectrum& a, const Spectrum& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("loewner comparison needs equal lengths");
    std::vector<double> m(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        m[k] = a.cumulative[k] - b.cumulative[k];
    return m;
}

std::vector<long long> betti(const Complex& g) {
    std::vector<long long> b;
    for (int k = 0; k <= g.dimension(); ++k) {
        const IntMat hk = hodge_block(g, k);
        b.push_back(static_cast<long long>(hk.rows()) -
                    static_cast<long long>(rank_exact(hk)));
    }
    return b;
}

McKeanSingerReport mckean_singer_check(const Complex& g, int n_max) {
    McKeanSingerReport rep;
    rep.supertraces.assign(static_cast<std::size_t>(n_max), BigInt(0));
    rep.str_identity = g.euler_characteristic();
    // per-block powers: str(H^m) = sum_k (-1)^k tr(H_k^m)
    for (int k = 0; k <= g.dimension(); ++k) {
        const IntMat hk = hodge_block(g, k);
        const int sign = k % 2 == 0 ? 1 : -1;
        try {
            IntMat p = hk;
            for (int m = 1; m <= n_max; ++m) {
                if (m > 1) p = p * hk;
                rep.supertraces[static_cast<std::size_t>(m - 1)] += sign * to_bigint(p.trace());
            }
        } catch (const std::overflow_error&) {
            const BigMat bk = to_big(hk);
            BigMat p = bk;
            for (int m = 1; m <= n_max; ++m) {
                if (m > 1) p = p * bk;
                rep.supertraces[static_cast<std::size_t>(m - 1)] += sign * p.trace();
            }
        }
    }
    rep.pass = rep.str_identity == g.euler_characteristic() &&
               std::all_of(rep.supertraces.begin(), rep.supertraces.end(),
                           [](const BigInt& t) { return t == 0; });
    return rep;
}

Rational analytic_torsion(const Complex& g) {
    Rational a(1);
    for (int k = 1; k <= g.dimension(); ++k) {
        const BigInt pd = pseudo_determinant(hodge_block(g, k));
        BigInt power;
        mpz_pow_ui(power.get_mpz_t(), pd.get_mpz_t(), static_cast<unsigned long>(k));
        if (k % 2 == 1) a *= Rational(power);
        else a /= Rational(power);
    }
    a.canonicalize();
    return a;
}

double zeta(const Spectrum& s, double exponent, double zero_tol) {
    double sum = 0.0;
    for (double v : s.values)
        if (v > zero_tol) sum += std::pow(v, -exponent);
    return sum;
}

PerronReport perron_check(const IntMat& m, const Spectrum& s, double gap_tol) {
    m.require_square();
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (m(i, j) < 0)
                throw std::invalid_argument("perron check needs a nonnegative matrix");
    PerronReport rep;
    if (n == 0 || s.size() != n) throw std::invalid_argument("spectrum size mismatch");
    rep.gap = n >= 2 ? s.values[0] - s.values[1] : std::abs(s.values[0]);
    rep.unique_top = n == 1 || rep.gap > gap_tol;

    bool diagonal_positive = true;
    for (std::size_t i = 0; i < n; ++i)
        if (m(i, i) <= 0) { diagonal_positive = false; break; }
    if (diagonal_positive) {
        // with positive diagonal, primitivity = connectivity of the
        // nonzero-pattern graph (M^diameter is then entrywise positive)
        std::vector<char> seen(n, 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            const std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < n; ++j)
                if (m(i, j) != 0 && !seen[j]) { seen[j] = 1; stack.push_back(j); }
        }
        rep.primitive = std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
    } else {
        // boolean power walk, bounded by n
        std::vector<char> reach(n * n, 0), cur(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) cur[i * n + j] = m(i, j) != 0;
        for (std::size_t r = 1; r <= n && !rep.primitive; ++r) {
            if (r > 1) {
                std::vector<char> next(n * n, 0);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t k = 0; k < n; ++k)
                        if (cur[i * n + k])
                            for (std::size_t j = 0; j < n; ++j)
                                if (m(k, j) != 0) next[i * n + j] = 1;
                cur.swap(next);
            }
            rep.primitive = std::all_of(cur.begin(), cur.end(), [](char c) { return c; });
        }
    }
    rep.pass = rep.unique_top && rep.primitive;
    return rep;
}

}  // namespace connlab
