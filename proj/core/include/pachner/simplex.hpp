#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pachner {

using Vertex = std::int32_t;

/// A finite set of vertex ids kept strictly increasing. The default value is
/// the empty simplex (dimension -1).
class Simplex {
public:
    Simplex() = default;
    Simplex(std::initializer_list<Vertex> vertices);
    /// Sorts the input. Throws BadVertexId on ids < 1 or repeated ids.
    explicit Simplex(std::vector<Vertex> vertices);

    /// Trusts the caller: `sorted` must already be strictly increasing.
    static Simplex from_sorted(std::vector<Vertex> sorted);

    int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const noexcept { return vertices_.size(); }
    bool empty() const noexcept { return vertices_.empty(); }
    std::span<const Vertex> vertices() const noexcept { return vertices_; }
    Vertex operator[](std::size_t k) const { return vertices_[k]; }
    auto begin() const noexcept { return vertices_.begin(); }
    auto end() const noexcept { return vertices_.end(); }

    bool contains(Vertex v) const;
    bool is_face_of(const Simplex& other) const;
    bool disjoint(const Simplex& other) const;

    Simplex unite(const Simplex& other) const;
    Simplex minus(const Simplex& other) const;
    Simplex without(Vertex v) const;
    Simplex with(Vertex v) const;

    /// Codimension-one faces. A vertex has the single ridge {}; the empty
    /// simplex has none.
    std::vector<Simplex> ridges() const;
    /// All faces including the empty simplex and the simplex itself.
    std::vector<Simplex> all_faces() const;
    /// Faces with exactly `k + 1` vertices.
    std::vector<Simplex> faces_of_dim(int k) const;

    std::string to_string() const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b)
    {
        return a.vertices_ <=> b.vertices_;
    }

private:
    std::vector<Vertex> vertices_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

} // namespace pachner

template <>
struct std::hash<pachner::Simplex> : pachner::SimplexHash {};
