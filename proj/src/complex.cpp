#include "connlab/complex.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace connlab {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty())
        throw std::invalid_argument("simplex must be a nonempty vertex set");
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw std::invalid_argument("simplex vertices must be distinct");
    if (vertices_.front() <= 0)
        throw std::invalid_argument("vertex ids must be positive integers");
}

bool Simplex::contains(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::subset_of(const Simplex& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(),
                         vertices_.begin(), vertices_.end());
}

bool Simplex::intersects(const Simplex& other) const {
    auto a = vertices_.begin();
    auto b = other.vertices_.begin();
    while (a != vertices_.end() && b != other.vertices_.end()) {
        if (*a == *b) return true;
        if (*a < *b) ++a; else ++b;
    }
    return false;
}

std::string Simplex::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) os << ',';
        os << vertices_[i];
    }
    os << '}';
    return os.str();
}

// ---------------------------------------------------------------------------
// Graph

static void check_vertex_count(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
}

Graph Graph::complete(int n) {
    check_vertex_count(n);
    Graph g;
    g.n_vertices = n;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) g.edges.emplace_back(a, b);
    return g;
}

Graph Graph::cycle(int n) {
    check_vertex_count(n);
    if (n < 3) throw std::invalid_argument("cycle graph needs at least 3 vertices");
    Graph g;
    g.n_vertices = n;
    for (int a = 1; a < n; ++a) g.edges.emplace_back(a, a + 1);
    g.edges.emplace_back(1, n);
    std::sort(g.edges.begin(), g.edges.end());  // adjacency is a binary search
    return g;
}

Graph Graph::path(int n) {
    check_vertex_count(n);
    Graph g;
    g.n_vertices = n;
    for (int a = 1; a < n; ++a) g.edges.emplace_back(a, a + 1);
    return g;
}

Graph Graph::complete_multipartite(const std::vector<int>& parts) {
    Graph g;
    for (int p : parts) {
        if (p <= 0) throw std::invalid_argument("part sizes must be positive");
        g.n_vertices += p;
    }
    std::vector<int> part_of;
    part_of.reserve(g.n_vertices);
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (int i = 0; i < parts[p]; ++i) part_of.push_back(static_cast<int>(p));
    for (int a = 1; a <= g.n_vertices; ++a)
        for (int b = a + 1; b <= g.n_vertices; ++b)
            if (part_of[a - 1] != part_of[b - 1]) g.edges.emplace_back(a, b);
    return g;
}

// Bounded uniform draw by rejection, so the sampling is reproducible across
// standard library implementations (std::uniform_int_distribution is not).
static std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw;
    do { draw = rng(); } while (draw >= limit);
    return draw % bound;
}

Graph Graph::random(int n, long long m, std::uint64_t seed) {
    check_vertex_count(n);
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > max_edges)
        throw std::invalid_argument("edge count out of range for simple graph");
    Graph g;
    g.n_vertices = n;
    std::vector<std::pair<Vertex, Vertex>> all;
    all.reserve(static_cast<std::size_t>(max_edges));
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) all.emplace_back(a, b);
    std::mt19937_64 rng(seed);
    // Partial Fisher-Yates: the first m slots end up a uniform m-subset.
    for (long long i = 0; i < m; ++i) {
        const auto j = i + static_cast<long long>(
                               uniform_below(rng, static_cast<std::uint64_t>(max_edges - i)));
        std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(j)]);
    }
    g.edges.assign(all.begin(), all.begin() + static_cast<std::size_t>(m));
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

// ---------------------------------------------------------------------------
// FVector

long long FVector::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0LL);
}

// ---------------------------------------------------------------------------
// Complex

static void check_cap(std::size_t n, std::size_t cap) {
    if (n > cap)
        throw std::invalid_argument("complex exceeds the configured simplex cap (" +
                                    std::to_string(n) + " > " + std::to_string(cap) + ")");
}

Complex Complex::closure(const std::vector<std::vector<Vertex>>& sets, std::size_t cap) {
    std::set<Simplex> acc;
    for (const auto& raw : sets) {
        Simplex top(raw);  // validates nonempty, distinct, positive
        const auto& vs = top.vertices();
        const std::size_t k = vs.size();
        if (k > 63) throw std::invalid_argument("simplex with more than 63 vertices");
        // all nonempty subsets
        for (std::uint64_t mask = 1; mask < (1ULL << k); ++mask) {
            std::vector<Vertex> sub;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1ULL << i)) sub.push_back(vs[i]);
            acc.emplace(std::move(sub));
            if (acc.size() > cap) check_cap(acc.size(), cap);
        }
    }
    Complex g;
    g.simplices_.assign(acc.begin(), acc.end());
    check_cap(g.simplices_.size(), cap);
    return g;
}

Complex Complex::from_simplices(std::vector<Simplex> simplices, std::size_t cap) {
    std::sort(simplices.begin(), simplices.end());
    if (std::adjacent_find(simplices.begin(), simplices.end()) != simplices.end())
        throw std::invalid_argument("duplicate simplex in complex");
    check_cap(simplices.size(), cap);
    Complex g;
    g.simplices_ = std::move(simplices);
    // subset-closedness: removing any single vertex of a simplex must stay inside
    for (const Simplex& s : g.simplices_) {
        if (s.dim() == 0) continue;
        const auto& vs = s.vertices();
        for (std::size_t skip = 0; skip < vs.size(); ++skip) {
            std::vector<Vertex> face;
            face.reserve(vs.size() - 1);
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (i != skip) face.push_back(vs[i]);
            if (!g.contains(Simplex(face)))
                throw std::invalid_argument("complex not closed under subsets: missing face " +
                                            Simplex(face).to_string() + " of " + s.to_string());
        }
    }
    return g;
}

// Depth-first clique enumeration; candidates are always larger-id vertices
// adjacent to everything in the current clique.
static void extend_cliques(const Graph& g, std::vector<Vertex>& clique,
                           const std::vector<Vertex>& candidates,
                           std::vector<Simplex>& out, std::size_t cap) {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const Vertex v = candidates[i];
        clique.push_back(v);
        out.emplace_back(clique);
        check_cap(out.size(), cap);
        std::vector<Vertex> next;
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
        if (!next.empty()) extend_cliques(g, clique, next, out, cap);
        clique.pop_back();
    }
}

Complex Complex::whitney(const Graph& g, std::size_t cap) {
    std::vector<Vertex> all(static_cast<std::size_t>(g.n_vertices));
    std::iota(all.begin(), all.end(), 1);
    std::vector<Simplex> cliques;
    std::vector<Vertex> clique;
    extend_cliques(g, clique, all, cliques, cap);
    return from_simplices(std::move(cliques), cap);
}

Complex Complex::one_skeleton(const Graph& g, std::size_t cap) {
    std::vector<Simplex> simplices;
    for (int v = 1; v <= g.n_vertices; ++v) simplices.push_back(Simplex({v}));
    for (const auto& [a, b] : g.edges) simplices.push_back(Simplex({a, b}));
    return from_simplices(std::move(simplices), cap);
}

Complex Complex::random(int n_vertices, long long n_edges, std::uint64_t seed,
                        std::size_t cap) {
    // the vertices alone already blow the cap; fail before sampling edges
    check_cap(static_cast<std::size_t>(std::max(n_vertices, 0)), cap);
    return whitney(Graph::random(n_vertices, n_edges, seed), cap);
}

std::optional<std::size_t> Complex::index_of(const Simplex& s) const {
    auto it = std::lower_bound(simplices_.begin(), simplices_.end(), s);
    if (it == simplices_.end() || !(*it == s)) return std::nullopt;
    return static_cast<std::size_t>(it - simplices_.begin());
}

int Complex::dimension() const {
    return simplices_.empty() ? -1 : simplices_.back().dim();
}

FVector Complex::f_vector() const {
    FVector f;
    f.counts.assign(static_cast<std::size_t>(dimension() + 1), 0);
    for (const Simplex& s : simplices_) f.counts[static_cast<std::size_t>(s.dim())]++;
    return f;
}

std::pair<std::size_t, std::size_t> Complex::block_range(int k) const {
    if (k < 0 || k > dimension())
        throw std::invalid_argument("dimension block out of range");
    auto lo = std::partition_point(simplices_.begin(), simplices_.end(),
                                   [k](const Simplex& s) { return s.dim() < k; });
    auto hi = std::partition_point(lo, simplices_.end(),
                                   [k](const Simplex& s) { return s.dim() <= k; });
    return {static_cast<std::size_t>(lo - simplices_.begin()),
            static_cast<std::size_t>(hi - simplices_.begin())};
}

long long Complex::euler_characteristic() const {
    long long chi = 0;
    for (const Simplex& s : simplices_) chi += s.omega();
    return chi;
}

int Complex::fermi_characteristic() const {
    int phi = 1;
    for (const Simplex& s : simplices_) phi *= s.omega();
    return phi;
}

std::vector<std::size_t> Complex::star(std::size_t i) const {
    if (i >= size()) throw std::invalid_argument("simplex index out of range");
    std::vector<std::size_t> out;
    const Simplex& x = simplices_[i];
    for (std::size_t j = 0; j < size(); ++j)
        if (x.subset_of(simplices_[j])) out.push_back(j);
    return out;
}

std::vector<std::size_t> Complex::core(std::size_t i) const {
    if (i >= size()) throw std::invalid_argument("simplex index out of range");
    std::vector<std::size_t> out;
    const Simplex& x = simplices_[i];
    // subsets of x all live at positions <= i in the canonical order
    for (std::size_t j = 0; j <= i; ++j)
        if (simplices_[j].subset_of(x)) out.push_back(j);
    return out;
}

void Complex::check_positions(const std::vector<std::size_t>& positions) const {
    for (std::size_t p : positions)
        if (p >= size()) throw std::invalid_argument("basis position out of range");
}

bool Complex::is_closed(const std::vector<std::size_t>& positions) const {
    check_positions(positions);
    std::vector<char> in(size(), 0);
    for (std::size_t p : positions) in[p] = 1;
    for (std::size_t p : positions) {
        const Simplex& s = simplices_[p];
        if (s.dim() == 0) continue;
        const auto& vs = s.vertices();
        for (std::size_t skip = 0; skip < vs.size(); ++skip) {
            std::vector<Vertex> face;
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (i != skip) face.push_back(vs[i]);
            auto idx = index_of(Simplex(face));
            if (!idx || !in[*idx]) return false;
        }
    }
    return true;
}

bool Complex::is_open(const std::vector<std::size_t>& positions) const {
    check_positions(positions);
    std::vector<char> in(size(), 0);
    for (std::size_t p : positions) in[p] = 1;
    std::vector<std::size_t> complement;
    for (std::size_t j = 0; j < size(); ++j)
        if (!in[j]) complement.push_back(j);
    return is_closed(complement);
}

std::vector<Vertex> Complex::vertex_set() const {
    std::vector<Vertex> vs;
    for (const Simplex& s : simplices_) {
        if (s.dim() > 0) break;  // vertices form the leading block
        vs.push_back(s.vertices()[0]);
    }
    return vs;
}

std::vector<std::size_t> Complex::maximal_simplices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (star(i).size() == 1) out.push_back(i);
    return out;
}

bool Complex::connected() const {
    if (empty()) return true;
    const auto vs = vertex_set();
    if (vs.size() <= 1) return true;
    // union-find over vertices, joined along edges
    std::vector<std::size_t> parent(vs.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto vindex = [&](Vertex v) {
        return static_cast<std::size_t>(
            std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    for (const Simplex& s : simplices_) {
        if (s.dim() != 1) continue;
        auto a = find(vindex(s.vertices()[0]));
        auto b = find(vindex(s.vertices()[1]));
        if (a != b) parent[a] = b;
    }
    const auto root = find(0);
    for (std::size_t i = 1; i < vs.size(); ++i)
        if (find(i) != root) return false;
    return true;
}

}  // namespace connlab
