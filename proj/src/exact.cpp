#include "connlab/exact.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace connlab {

namespace {

// One fraction-free elimination step entry update. The int64 variant widens
// to 128 bits internally and throws if the exact quotient leaves the range.
inline long long bareiss_update(long long aij, long long pivot, long long aik,
                                long long akj, long long prev) {
    __int128 t = static_cast<__int128>(aij) * pivot - static_cast<__int128>(aik) * akj;
    t /= prev;  // exact by the Bareiss identity
    if (t > INT64_MAX || t < INT64_MIN)
        throw std::overflow_error("bareiss entry exceeds 64-bit range");
    return static_cast<long long>(t);
}

inline BigInt bareiss_update(const BigInt& aij, const BigInt& pivot, const BigInt& aik,
                             const BigInt& akj, const BigInt& prev) {
    BigInt t = aij * pivot - aik * akj;
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
    return t;
}

template <class T>
T bareiss_det(Matrix<T> m) {
    m.require_square();
    const std::size_t n = m.rows();
    if (n == 0) return T{1};
    int sign = 1;
    T prev{1};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == T{}) {
            std::size_t swap_row = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (m(i, k) != T{}) { swap_row = i; break; }
            if (swap_row == k) return T{};  // whole column zero
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
            sign = -sign;
        }
        const T pivot = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = bareiss_update(m(i, j), pivot, m(i, k), m(k, j), prev);
            m(i, k) = T{};
        }
        prev = pivot;
    }
    T d = m(n - 1, n - 1);
    return sign > 0 ? d : T(-d);
}

template <class T>
std::size_t bareiss_rank(Matrix<T> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    T prev{1};
    while (r < rows && r < cols) {
        // full pivoting: any nonzero entry in the trailing submatrix
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = r; i < rows && pi == rows; ++i)
            for (std::size_t j = r; j < cols; ++j)
                if (m(i, j) != T{}) { pi = i; pj = j; break; }
        if (pi == rows) break;
        if (pi != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(pi, j));
        if (pj != r)
            for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, r), m(i, pj));
        const T pivot = m(r, r);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = r + 1; j < cols; ++j)
                m(i, j) = bareiss_update(m(i, j), pivot, m(i, r), m(r, j), prev);
            m(i, r) = T{};
        }
        prev = pivot;
        ++r;
    }
    return r;
}

}  // namespace

BigInt det_exact(const IntMat& a) {
    try {
        return to_bigint(bareiss_det(a));
    } catch (const std::overflow_error&) {
        return bareiss_det(to_big(a));
    }
}

std::size_t rank_exact(const IntMat& a) {
    try {
        return bareiss_rank(a);
    } catch (const std::overflow_error&) {
        return bareiss_rank(to_big(a));
    }
}

std::vector<BigInt> char_poly(const IntMat& a) {
    a.require_square();
    const std::size_t n = a.rows();
    std::vector<BigInt> c(n + 1);
    c[n] = 1;
    if (n == 0) return c;
    const BigMat A = to_big(a);
    BigMat M = A;
    c[n - 1] = -M.trace();
    for (std::size_t k = 2; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i) M(i, i) += c[n - k + 1];
        M = A * M;
        BigInt t = -M.trace();
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), BigInt(k).get_mpz_t());
        c[n - k] = t;
    }
    return c;
}

static std::size_t lowest_nonzero_coeff(const std::vector<BigInt>& c) {
    std::size_t r = 0;
    while (r < c.size() && c[r] == 0) ++r;
    return r;
}

BigInt pseudo_determinant(const IntMat& a) {
    const auto c = char_poly(a);
    const std::size_t n = a.rows();
    const std::size_t r = lowest_nonzero_coeff(c);
    BigInt d = c[r];
    if ((n - r) % 2 != 0) d = -d;
    return d;
}

Rational pseudo_inverse_trace(const IntMat& a) {
    const auto c = char_poly(a);
    const std::size_t r = lowest_nonzero_coeff(c);
    if (r + 1 >= c.size()) return Rational(0);
    Rational t(-c[r + 1], c[r]);
    t.canonicalize();
    return t;
}

namespace {

// rational polynomial helpers for the square-freeness certificate;
// coefficients low order first, normalized to drop leading zeros
void trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Rational> poly_mod(std::vector<Rational> r, const std::vector<Rational>& d) {
    while (r.size() >= d.size()) {
        const Rational f = r.back() / d.back();
        const std::size_t shift = r.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= f * d[i];
        trim(r);
        if (r.empty()) break;
    }
    return r;
}

}  // namespace

std::size_t char_poly_repeated_root_degree(const IntMat& a) {
    const auto c = char_poly(a);
    std::vector<Rational> p(c.size()), dp;
    for (std::size_t i = 0; i < c.size(); ++i) p[i] = Rational(c[i]);
    for (std::size_t i = 1; i < c.size(); ++i)
        dp.push_back(Rational(c[i]) * to_rat(static_cast<long long>(i)));
    trim(p);
    trim(dp);
    // euclidean gcd over the rationals
    while (!dp.empty()) {
        std::vector<Rational> r = poly_mod(p, dp);
        p = std::move(dp);
        dp = std::move(r);
    }
    return p.empty() ? 0 : p.size() - 1;
}

// Reduced row echelon form over rationals; returns pivot column list.
static std::vector<std::size_t> rref(RatMat& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols && r < rows; ++j) {
        std::size_t p = r;
        while (p < rows && m(p, j) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t k = 0; k < cols; ++k) std::swap(m(r, k), m(p, k));
        const Rational inv = 1 / m(r, j);
        for (std::size_t k = j; k < cols; ++k) m(r, k) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, j) == 0) continue;
            const Rational f = m(i, j);
            for (std::size_t k = j; k < cols; ++k) m(i, k) -= f * m(r, k);
        }
        pivots.push_back(j);
        ++r;
    }
    return pivots;
}

BigMat kernel_basis(const IntMat& a) {
    const std::size_t n = a.cols();
    RatMat m = to_rational(a);
    const auto pivots = rref(m);
    std::vector<char> is_pivot(n, 0);
    for (std::size_t j : pivots) is_pivot[j] = 1;
    const std::size_t k = n - pivots.size();
    BigMat basis(n, k);
    std::size_t col = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        // rational kernel vector: x_j = 1, x_{pivot_i} = -m(i, j)
        std::vector<Rational> x(n, Rational(0));
        x[j] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -m(i, j);
        BigInt den_lcm = 1;
        for (const auto& q : x) den_lcm = ::lcm(den_lcm, BigInt(q.get_den()));
        BigInt gcd = 0;
        std::vector<BigInt> ix(n);
        for (std::size_t i = 0; i < n; ++i) {
            ix[i] = Rational(x[i] * den_lcm).get_num();
            gcd = ::gcd(gcd, ix[i]);
        }
        if (gcd == 0) gcd = 1;
        for (std::size_t i = 0; i < n; ++i) {
            mpz_divexact(ix[i].get_mpz_t(), ix[i].get_mpz_t(), gcd.get_mpz_t());
            basis(i, col) = ix[i];
        }
        ++col;
    }
    return basis;
}

RatMat rat_solve(const RatMat& a, const RatMat& b) {
    a.require_square();
    const std::size_t n = a.rows();
    if (b.rows() != n) throw std::invalid_argument("matrix shape mismatch");
    const std::size_t w = b.cols();
    RatMat m(n, n + w);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < w; ++j) m(i, n + j) = b(i, j);
    }
    if (n == 0) return RatMat(0, w);
    const auto pivots = rref(m);
    if (pivots.size() != n || pivots.back() >= n)
        throw std::invalid_argument("singular matrix in rational solve");
    RatMat x(n, w);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < w; ++j) x(i, j) = m(i, n + j);
    return x;
}

RatMat rat_inverse(const RatMat& a) {
    return rat_solve(a, RatMat::identity(a.rows()));
}

}  // namespace connlab
