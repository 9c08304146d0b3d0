#include "connlab/operators.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace connlab {

int boundary_sign(const Simplex& x, const Simplex& y) {
    if (x.dim() != y.dim() + 1 || !y.subset_of(x)) return 0;
    const auto& xv = x.vertices();
    const auto& yv = y.vertices();
    std::size_t i = 0;
    while (i < yv.size() && xv[i] == yv[i]) ++i;
    return i % 2 == 0 ? 1 : -1;
}

IntMat exterior_derivative(const Complex& g) {
    const std::size_t n = g.size();
    IntMat d(n, n);
    // only adjacent dimension blocks can couple
    for (std::size_t i = 0; i < n; ++i) {
        const Simplex& x = g.simplex(i);
        if (x.dim() == 0) continue;
        const auto [lo, hi] = g.block_range(x.dim() - 1);
        for (std::size_t j = lo; j < hi; ++j)
            d(i, j) = boundary_sign(x, g.simplex(j));
    }
    return d;
}

IntMat dirac(const Complex& g) {
    IntMat d = exterior_derivative(g);
    return d + d.transpose();
}

namespace {

// facet incidence block: rows = k-simplices, cols = (k-1)-simplices
IntMat incidence_block(const Complex& g, int k) {
    const auto [lo, hi] = g.block_range(k);
    const auto [plo, phi] = g.block_range(k - 1);
    IntMat b(hi - lo, phi - plo);
    for (std::size_t i = lo; i < hi; ++i)
        for (std::size_t j = plo; j < phi; ++j)
            b(i - lo, j - plo) = boundary_sign(g.simplex(i), g.simplex(j));
    return b;
}

}  // namespace

IntMat hodge_block(const Complex& g, int k) {
    if (k < 0 || k > g.dimension())
        throw std::invalid_argument("hodge block dimension out of range");
    const auto [lo, hi] = g.block_range(k);
    IntMat h(hi - lo, hi - lo);
    if (k > 0) {
        const IntMat b = incidence_block(g, k);
        h += b * b.transpose();
    }
    if (k < g.dimension()) {
        const IntMat c = incidence_block(g, k + 1);
        h += c.transpose() * c;
    }
    return h;
}

IntMat hodge(const Complex& g) {
    // assembled block by block; D*D touches only adjacent-dimension pairs
    IntMat h(g.size(), g.size());
    for (int k = 0; k <= g.dimension(); ++k) {
        const auto [lo, hi] = g.block_range(k);
        const IntMat hk = hodge_block(g, k);
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = lo; j < hi; ++j) h(i, j) = hk(i - lo, j - lo);
    }
    return h;
}

namespace {

// Bitset rows packed into 64-bit words, for fast pairwise intersection
// tests over stars and vertex sets.
struct BitRows {
    std::size_t words;
    std::vector<std::uint64_t> bits;
    BitRows(std::size_t rows, std::size_t width)
        : words((width + 63) / 64), bits(rows * words, 0) {}
    void set(std::size_t r, std::size_t b) { bits[r * words + b / 64] |= 1ULL << (b % 64); }
    const std::uint64_t* row(std::size_t r) const { return bits.data() + r * words; }
    bool intersects(std::size_t r, std::size_t s) const {
        const auto* a = row(r);
        const auto* b = row(s);
        for (std::size_t w = 0; w < words; ++w)
            if (a[w] & b[w]) return true;
        return false;
    }
};

}  // namespace

IntMat connection_matrix(const Complex& g) {
    const std::size_t n = g.size();
    const auto vs = g.vertex_set();
    auto vindex = [&](Vertex v) {
        return static_cast<std::size_t>(
            std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    BitRows vb(n, vs.size());
    for (std::size_t i = 0; i < n; ++i)
        for (Vertex v : g.simplex(i).vertices()) vb.set(i, vindex(v));
    IntMat l(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        l(i, i) = 1;
        for (std::size_t j = i + 1; j < n; ++j)
            if (vb.intersects(i, j)) l(i, j) = l(j, i) = 1;
    }
    return l;
}

IntMat green_matrix(const Complex& g) {
    const std::size_t n = g.size();
    // stars split by dimension parity so chi of an intersection is a
    // popcount difference
    BitRows even(n, n), odd(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j : g.star(i))
            (g.simplex(j).dim() % 2 == 0 ? even : odd).set(i, j);
    const std::size_t words = even.words;
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const int wi = g.simplex(i).omega();
        for (std::size_t j = i; j < n; ++j) {
            long long chi = 0;
            const auto *ae = even.row(i), *be = even.row(j);
            const auto *ao = odd.row(i), *bo = odd.row(j);
            for (std::size_t w = 0; w < words; ++w)
                chi += __builtin_popcountll(ae[w] & be[w]) -
                       __builtin_popcountll(ao[w] & bo[w]);
            const long long val = wi * g.simplex(j).omega() * chi;
            m(i, j) = m(j, i) = val;
        }
    }
    return m;
}

static std::vector<long long> descending_row_sums(const IntMat& m) {
    std::vector<long long> deg(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) deg[i] += m(i, j);
    std::sort(deg.begin(), deg.end(), std::greater<>());
    return deg;
}

std::vector<long long> connection_degrees(const Complex& g) {
    return descending_row_sums(connection_matrix(g));
}

std::vector<long long> dirac_degrees(const Complex& g) {
    return descending_row_sums(signless(dirac(g)));
}

IntMat signless(const IntMat& m) { return m.abs(); }

IntMat submatrix_delete(const IntMat& m, const std::vector<std::size_t>& positions) {
    m.require_square();
    const std::size_t n = m.rows();
    std::vector<char> drop(n, 0);
    for (std::size_t p : positions) {
        if (p >= n) throw std::invalid_argument("delete position out of range");
        drop[p] = 1;
    }
    std::vector<std::size_t> keep;
    keep.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        if (!drop[i]) keep.push_back(i);
    return m.principal_submatrix(keep);
}

}  // namespace connlab
