#include <doctest.h>

#include <algorithm>
#include <set>

#include "connlab/complex.hpp"

using namespace connlab;

namespace {

// independent clique oracle: test every vertex subset directly
std::set<std::vector<Vertex>> brute_force_cliques(const Graph& g) {
    std::set<std::vector<Vertex>> cliques;
    const int n = g.n_vertices;
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
        std::vector<Vertex> vs;
        for (int v = 1; v <= n; ++v)
            if (mask & (1ULL << (v - 1))) vs.push_back(v);
        bool ok = true;
        for (std::size_t i = 0; i < vs.size() && ok; ++i)
            for (std::size_t j = i + 1; j < vs.size() && ok; ++j)
                ok = g.adjacent(vs[i], vs[j]);
        if (ok) cliques.insert(vs);
    }
    return cliques;
}

bool subset_closed(const Complex& g) {
    for (const Simplex& s : g.simplices()) {
        const auto& vs = s.vertices();
        for (std::uint64_t mask = 1; mask + 1 < (1ULL << vs.size()); ++mask) {
            std::vector<Vertex> sub;
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (mask & (1ULL << i)) sub.push_back(vs[i]);
            if (!g.contains(Simplex(sub))) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("simplex canonical form") {
    Simplex s({3, 1, 2});
    CHECK(s.vertices() == std::vector<Vertex>{1, 2, 3});
    CHECK(s.dim() == 2);
    CHECK(s.omega() == 1);
    CHECK(Simplex({1, 2}).omega() == -1);
    CHECK_THROWS_AS(Simplex({}), std::invalid_argument);
    CHECK_THROWS_AS(Simplex({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Simplex({0, 1}), std::invalid_argument);
}

TEST_CASE("closure of an edge") {
    const Complex g = Complex::closure({{1, 2}});
    REQUIRE(g.size() == 3);
    CHECK(g.simplex(0) == Simplex({1}));
    CHECK(g.simplex(1) == Simplex({2}));
    CHECK(g.simplex(2) == Simplex({1, 2}));
}

TEST_CASE("closure edge cases") {
    CHECK(Complex::closure({}).size() == 0);
    CHECK(Complex::closure({{1, 2, 3}}).size() == 7);  // all nonempty subsets
    CHECK_THROWS_AS(Complex::closure({{}}), std::invalid_argument);
    // idempotence
    const Complex g = Complex::closure({{1, 2, 3}, {3, 4}});
    std::vector<std::vector<Vertex>> again;
    for (const Simplex& s : g.simplices()) again.push_back(s.vertices());
    CHECK(Complex::closure(again).simplices() == g.simplices());
}

TEST_CASE("whitney complexes against the brute-force clique oracle") {
    for (const Graph& graph :
         {Graph::cycle(4), Graph::complete(3), Graph::complete(4), Graph::path(5),
          Graph::octahedron(), Graph::random(7, 12, 99)}) {
        const Complex g = Complex::whitney(graph);
        const auto expect = brute_force_cliques(graph);
        REQUIRE(g.size() == expect.size());
        for (const Simplex& s : g.simplices()) CHECK(expect.count(s.vertices()) == 1);
        CHECK(subset_closed(g));
    }
    CHECK(Complex::whitney(Graph::cycle(4)).size() == 8);
    CHECK(Complex::whitney(Graph::complete(3)).size() == 7);
    // isolated vertices: no edges
    Graph iso;
    iso.n_vertices = 3;
    CHECK(Complex::whitney(iso).size() == 3);
}

TEST_CASE("random complexes are deterministic per seed") {
    const Complex a = Complex::random(6, 9, 42);
    const Complex b = Complex::random(6, 9, 42);
    CHECK(a.simplices() == b.simplices());
    CHECK(Complex::random(6, 0, 7).size() == 6);
    CHECK(Complex::random(4, 6, 3).size() == 15);  // whitney(K_4) = 2^4 - 1
    CHECK_THROWS_AS(Complex::random(4, 7, 1), std::invalid_argument);
    CHECK(subset_closed(Complex::random(8, 17, 5)));
}

TEST_CASE("euler and fermi characteristics") {
    CHECK(Complex::whitney(Graph::complete(3)).euler_characteristic() == 1);
    CHECK(Complex::whitney(Graph::cycle(4)).euler_characteristic() == 0);
    CHECK(Complex::closure({{1}}).euler_characteristic() == 1);
    CHECK(Complex::closure({{1, 2}}).fermi_characteristic() == -1);
    CHECK(Complex::closure({{1}}).fermi_characteristic() == 1);
    CHECK(Complex::whitney(Graph::cycle(4)).fermi_characteristic() == 1);
    // octahedron is a 2-sphere
    CHECK(Complex::whitney(Graph::octahedron()).euler_characteristic() == 2);
}

TEST_CASE("f-vector and alternating sum") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const Complex g = Complex::random(7, 12, seed);
        const FVector f = g.f_vector();
        CHECK(f.total() == static_cast<long long>(g.size()));
        long long alt = 0;
        for (std::size_t k = 0; k < f.counts.size(); ++k)
            alt += (k % 2 == 0 ? f.counts[k] : -f.counts[k]);
        CHECK(alt == g.euler_characteristic());
        for (long long c : f.counts) CHECK(c >= 1);
    }
}

TEST_CASE("star and core") {
    const Complex g = Complex::closure({{1, 2}});
    const auto star1 = g.star(*g.index_of(Simplex({1})));
    CHECK(star1 == std::vector<std::size_t>{0, 2});  // {1} and {1,2}
    const auto core_edge = g.core(*g.index_of(Simplex({1, 2})));
    CHECK(core_edge.size() == 3);
    // star of a facet is the facet alone
    const auto star_edge = g.star(2);
    CHECK(star_edge == std::vector<std::size_t>{2});
    CHECK_THROWS_AS(g.star(17), std::invalid_argument);
}

TEST_CASE("open and closed subsets") {
    const Complex g = Complex::closure({{1, 2}});
    // U = {{1},{1,2}}: open, not closed
    const std::vector<std::size_t> u{0, 2};
    CHECK(g.is_open(u));
    CHECK_FALSE(g.is_closed(u));
    // whole complex: both
    const std::vector<std::size_t> all{0, 1, 2};
    CHECK(g.is_open(all));
    CHECK(g.is_closed(all));
    // {{1,2}} alone: star of the edge, open
    CHECK(g.is_open({2}));
    CHECK_FALSE(g.is_closed({2}));
    CHECK_THROWS_AS(g.is_open({9}), std::invalid_argument);
}

TEST_CASE("stars partition into an open set and a closed complement") {
    const Complex g = Complex::random(6, 8, 11);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto star = g.star(i);
        CHECK(g.is_open(star));
        std::vector<char> in(g.size(), 0);
        for (std::size_t p : star) in[p] = 1;
        std::vector<std::size_t> complement;
        for (std::size_t j = 0; j < g.size(); ++j)
            if (!in[j]) complement.push_back(j);
        CHECK(g.is_closed(complement));
    }
}

TEST_CASE("maximal simplices and connectivity") {
    const Complex k3 = Complex::whitney(Graph::complete(3));
    CHECK(k3.maximal_simplices() == std::vector<std::size_t>{6});
    CHECK(k3.connected());
    CHECK_FALSE(Complex::closure({{1}, {2}}).connected());
    CHECK(Complex().connected());
    CHECK(Complex::one_skeleton(Graph::complete(3)).dimension() == 1);
    CHECK(Complex::one_skeleton(Graph::complete(3)).size() == 6);
}

TEST_CASE("simplex cap is enforced") {
    CHECK_THROWS_AS(Complex::whitney(Graph::complete(5), 16), std::invalid_argument);
    CHECK_NOTHROW(Complex::whitney(Graph::complete(5), 31));
}

TEST_CASE("from_simplices rejects non-closed input") {
    CHECK_THROWS_AS(Complex::from_simplices({Simplex({1, 2})}), std::invalid_argument);
    CHECK_THROWS_AS(Complex::from_simplices({Simplex({1}), Simplex({1})}),
                    std::invalid_argument);
}
