#include "pachner/simplex.hpp"

#include <algorithm>
#include <iterator>

#include "pachner/error.hpp"

namespace pachner {

Simplex::Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices))
{
    std::sort(vertices_.begin(), vertices_.end());
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
        if (vertices_[k] < 1)
            throw Error(ErrorKind::BadVertexId, "vertex id " + std::to_string(vertices_[k]) + " < 1");
        if (k > 0 && vertices_[k] == vertices_[k - 1])
            throw Error(ErrorKind::BadVertexId, "vertex " + std::to_string(vertices_[k]) + " repeated");
    }
}

Simplex Simplex::from_sorted(std::vector<Vertex> sorted)
{
    Simplex s;
    s.vertices_ = std::move(sorted);
    return s;
}

bool Simplex::contains(Vertex v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const
{
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

bool Simplex::disjoint(const Simplex& other) const
{
    auto a = vertices_.begin();
    auto b = other.vertices_.begin();
    while (a != vertices_.end() && b != other.vertices_.end()) {
        if (*a == *b)
            return false;
        if (*a < *b)
            ++a;
        else
            ++b;
    }
    return true;
}

Simplex Simplex::unite(const Simplex& other) const
{
    std::vector<Vertex> out;
    out.reserve(vertices_.size() + other.vertices_.size());
    std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end(),
                   std::back_inserter(out));
    return from_sorted(std::move(out));
}

Simplex Simplex::minus(const Simplex& other) const
{
    std::vector<Vertex> out;
    std::set_difference(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end(),
                        std::back_inserter(out));
    return from_sorted(std::move(out));
}

Simplex Simplex::without(Vertex v) const
{
    std::vector<Vertex> out;
    out.reserve(vertices_.size());
    for (Vertex w : vertices_)
        if (w != v)
            out.push_back(w);
    return from_sorted(std::move(out));
}

Simplex Simplex::with(Vertex v) const
{
    if (contains(v))
        return *this;
    std::vector<Vertex> out = vertices_;
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return from_sorted(std::move(out));
}

std::vector<Simplex> Simplex::ridges() const
{
    std::vector<Simplex> out;
    out.reserve(vertices_.size());
    for (Vertex v : vertices_)
        out.push_back(without(v));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Simplex> Simplex::all_faces() const
{
    const std::size_t m = vertices_.size();
    std::vector<Simplex> out;
    out.reserve(std::size_t{1} << m);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<Vertex> face;
        for (std::size_t k = 0; k < m; ++k)
            if (mask & (1u << k))
                face.push_back(vertices_[k]);
        out.push_back(from_sorted(std::move(face)));
    }
    return out;
}

std::vector<Simplex> Simplex::faces_of_dim(int k) const
{
    std::vector<Simplex> out;
    const int m = static_cast<int>(vertices_.size());
    const int size = k + 1;
    if (size < 0 || size > m)
        return out;
    // Lexicographic combinations of positions.
    std::vector<int> pos(size);
    for (int t = 0; t < size; ++t)
        pos[t] = t;
    while (true) {
        std::vector<Vertex> face(size);
        for (int t = 0; t < size; ++t)
            face[t] = vertices_[pos[t]];
        out.push_back(from_sorted(std::move(face)));
        int t = size - 1;
        while (t >= 0 && pos[t] == m - size + t)
            --t;
        if (t < 0)
            break;
        ++pos[t];
        for (int u = t + 1; u < size; ++u)
            pos[u] = pos[u - 1] + 1;
    }
    return out;
}

std::string Simplex::to_string() const
{
    std::string out = "{";
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
        if (k)
            out += ',';
        out += std::to_string(vertices_[k]);
    }
    return out + "}";
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ull ^ s.size();
    for (Vertex v : s) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

} // namespace pachner
