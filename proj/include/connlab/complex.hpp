#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "connlab/simplex.hpp"

namespace connlab {

/// Simple undirected graph on vertices 1..n, used as input to the clique
/// (Whitney) complex construction.
struct Graph {
    int n_vertices = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;  // each (a,b) with a<b

    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);
    static Graph complete_multipartite(const std::vector<int>& parts);
    /// Octahedron boundary = complete tripartite K_{2,2,2}.
    static Graph octahedron() { return complete_multipartite({2, 2, 2}); }
    /// Uniformly sampled simple graph with m of the n(n-1)/2 possible edges.
    static Graph random(int n, long long m, std::uint64_t seed);

    bool adjacent(Vertex a, Vertex b) const;
};

/// f-vector: counts of simplices per dimension.
struct FVector {
    std::vector<long long> counts;  // counts[k] = f_k
    long long total() const;
};

/// A finite abstract simplicial complex: an ordered basis of simplices,
/// closed under nonempty subsets. The basis order is (dim ascending, then
/// lexicographic), which makes every dimension block contiguous and every
/// basis prefix itself a subcomplex.
class Complex {
public:
    static constexpr std::size_t kDefaultCap = 4096;

    Complex() = default;

    /// Smallest complex containing every input set.
    static Complex closure(const std::vector<std::vector<Vertex>>& sets,
                           std::size_t cap = kDefaultCap);
    /// Validates an explicit simplex list: no duplicates, subset-closed.
    static Complex from_simplices(std::vector<Simplex> simplices,
                                  std::size_t cap = kDefaultCap);
    /// Clique complex of a graph: simplices are exactly the nonempty cliques.
    static Complex whitney(const Graph& g, std::size_t cap = kDefaultCap);
    /// The graph itself as a 1-dimensional complex: vertices and edges only.
    static Complex one_skeleton(const Graph& g, std::size_t cap = kDefaultCap);
    /// Whitney complex of a seeded uniform random graph; deterministic per seed.
    static Complex random(int n_vertices, long long n_edges, std::uint64_t seed,
                          std::size_t cap = kDefaultCap);

    std::size_t size() const { return simplices_.size(); }
    bool empty() const { return simplices_.empty(); }
    const Simplex& simplex(std::size_t i) const { return simplices_[i]; }
    const std::vector<Simplex>& simplices() const { return simplices_; }

    /// Basis position of a simplex, or nullopt if absent.
    std::optional<std::size_t> index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return index_of(s).has_value(); }

    /// Maximal simplex dimension q, or -1 for the empty complex.
    int dimension() const;
    FVector f_vector() const;
    /// Half-open basis index range [first,last) of the k-dimensional block.
    std::pair<std::size_t, std::size_t> block_range(int k) const;

    long long euler_characteristic() const;
    int fermi_characteristic() const;  // product of omegas, +1 or -1

    /// Star U(x) = {y : x subset y} and core C(x) = {y : y subset x},
    /// both as sorted basis positions; x belongs to both.
    std::vector<std::size_t> star(std::size_t i) const;
    std::vector<std::size_t> core(std::size_t i) const;

    /// A subset of basis positions is closed iff subset-closed within G,
    /// open iff its complement is closed.
    bool is_closed(const std::vector<std::size_t>& positions) const;
    bool is_open(const std::vector<std::size_t>& positions) const;

    /// Sorted vertex ids (the 0-dimensional simplices).
    std::vector<Vertex> vertex_set() const;
    /// Positions of facets (simplices not contained in any other simplex).
    std::vector<std::size_t> maximal_simplices() const;

    /// True when the 1-skeleton (equivalently the connection graph) is
    /// connected; vacuously true for the empty complex.
    bool connected() const;

private:
    std::vector<Simplex> simplices_;  // sorted in canonical order
    void check_positions(const std::vector<std::size_t>& positions) const;
};

}  // namespace connlab
