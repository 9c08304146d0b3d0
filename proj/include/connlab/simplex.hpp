#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace connlab {

using Vertex = int;

/// A simplex is a nonempty set of positive integer vertex ids, kept in
/// strictly increasing order. dim = |vertices| - 1, omega = (-1)^dim.
class Simplex {
public:
    explicit Simplex(std::vector<Vertex> vertices);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    int omega() const { return dim() % 2 == 0 ? 1 : -1; }
    std::size_t card() const { return vertices_.size(); }

    bool contains(Vertex v) const;
    bool subset_of(const Simplex& other) const;
    bool intersects(const Simplex& other) const;

    /// Canonical order: dimension ascending, then lexicographic on vertices.
    friend bool operator<(const Simplex& a, const Simplex& b) {
        if (a.vertices_.size() != b.vertices_.size())
            return a.vertices_.size() < b.vertices_.size();
        return a.vertices_ < b.vertices_;
    }
    friend bool operator==(const Simplex& a, const Simplex& b) {
        return a.vertices_ == b.vertices_;
    }
    friend bool operator!=(const Simplex& a, const Simplex& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::vector<Vertex> vertices_;
};

}  // namespace connlab
