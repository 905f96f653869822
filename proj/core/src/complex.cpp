#include "pachner/complex.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "pachner/error.hpp"

namespace pachner {

FacetComplex::FacetComplex(std::vector<Simplex> facets, int dim, std::optional<std::string> name)
    : facets_(std::move(facets)), dim_(dim), name_(std::move(name))
{
    std::sort(facets_.begin(), facets_.end());
    for (std::size_t k = 0; k < facets_.size(); ++k) {
        if (facets_[k].dim() != dim_)
            throw Error(ErrorKind::NotPure, "facet " + facets_[k].to_string() + " has dimension " +
                                                std::to_string(facets_[k].dim()) + ", expected " +
                                                std::to_string(dim_));
        if (k > 0 && facets_[k] == facets_[k - 1])
            throw Error(ErrorKind::DuplicateFacet, "facet " + facets_[k].to_string() + " listed twice");
    }
}

FacetComplex FacetComplex::empty(int dim)
{
    return FacetComplex({}, dim);
}

FacetComplex FacetComplex::void_complex()
{
    return FacetComplex({Simplex{}}, -1);
}

FacetComplex FacetComplex::of_simplex(const Simplex& s)
{
    return FacetComplex({s}, s.dim());
}

FacetComplex FacetComplex::boundary_of(const Simplex& s)
{
    return FacetComplex(s.ridges(), s.dim() - 1);
}

FacetComplex FacetComplex::with_name(std::optional<std::string> name) const
{
    FacetComplex out = *this;
    out.name_ = std::move(name);
    return out;
}

bool FacetComplex::is_empty() const noexcept
{
    return facets_.empty() || (facets_.size() == 1 && facets_.front().empty());
}

std::vector<Vertex> FacetComplex::vertices() const
{
    std::set<Vertex> seen;
    for (const Simplex& f : facets_)
        seen.insert(f.begin(), f.end());
    return {seen.begin(), seen.end()};
}

Vertex FacetComplex::max_vertex() const
{
    Vertex m = 0;
    for (const Simplex& f : facets_)
        if (!f.empty())
            m = std::max(m, f.vertices().back());
    return m;
}

bool FacetComplex::has_facet(const Simplex& s) const
{
    return std::binary_search(facets_.begin(), facets_.end(), s);
}

bool FacetComplex::has_face(const Simplex& s) const
{
    return std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& f) { return s.is_face_of(f); });
}

std::vector<Simplex> FacetComplex::facets_containing(const Simplex& s) const
{
    std::vector<Simplex> out;
    for (const Simplex& f : facets_)
        if (s.is_face_of(f))
            out.push_back(f);
    return out;
}

FaceSet FacetComplex::face_set() const
{
    FaceSet out;
    for (const Simplex& f : facets_)
        for (Simplex& face : f.all_faces())
            out.insert(std::move(face));
    return out;
}

std::vector<Simplex> FacetComplex::faces_of_dim(int k) const
{
    FaceSet seen;
    for (const Simplex& f : facets_)
        for (Simplex& face : f.faces_of_dim(k))
            seen.insert(std::move(face));
    std::vector<Simplex> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

FacetComplex build_complex(const std::vector<std::vector<Vertex>>& facets, std::optional<std::string> name)
{
    if (facets.empty())
        throw Error(ErrorKind::ParseError, "no facets given");
    std::vector<Simplex> simplices;
    simplices.reserve(facets.size());
    for (const auto& f : facets) {
        if (f.empty())
            throw Error(ErrorKind::ParseError, "empty facet");
        simplices.emplace_back(f);
    }
    const int dim = simplices.front().dim();
    return FacetComplex(std::move(simplices), dim, std::move(name));
}

std::vector<std::size_t> face_counts(const FacetComplex& c)
{
    std::vector<std::size_t> counts(c.dim() >= 0 ? c.dim() + 1 : 0, 0);
    for (const Simplex& face : c.face_set())
        if (!face.empty())
            ++counts[face.dim()];
    return counts;
}

long long euler_characteristic(const FacetComplex& c)
{
    long long chi = 0;
    const auto counts = face_counts(c);
    for (std::size_t k = 0; k < counts.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(counts[k]);
    return chi;
}

FacetComplex link(const FacetComplex& c, const Simplex& s)
{
    std::vector<Simplex> out;
    for (const Simplex& f : c.facets())
        if (s.is_face_of(f))
            out.push_back(f.minus(s));
    if (out.empty())
        throw Error(ErrorKind::NotAFace, s.to_string() + " is not a face");
    return FacetComplex(std::move(out), c.dim() - s.dim() - 1);
}

FacetComplex star(const FacetComplex& c, const Simplex& s)
{
    auto out = c.facets_containing(s);
    if (out.empty())
        throw Error(ErrorKind::NotAFace, s.to_string() + " is not a face");
    return FacetComplex(std::move(out), c.dim());
}

FacetComplex join(const FacetComplex& a, const FacetComplex& b)
{
    const auto va = a.vertices();
    for (Vertex v : b.vertices())
        if (std::binary_search(va.begin(), va.end(), v))
            throw Error(ErrorKind::VertexClash, "vertex " + std::to_string(v) + " on both sides of a join");
    std::vector<Simplex> out;
    out.reserve(a.num_facets() * b.num_facets());
    for (const Simplex& x : a.facets())
        for (const Simplex& y : b.facets())
            out.push_back(x.unite(y));
    return FacetComplex(std::move(out), a.dim() + b.dim() + 1);
}

FacetComplex join(const Simplex& a, const FacetComplex& b)
{
    return join(FacetComplex::of_simplex(a), b);
}

FacetComplex join(const FacetComplex& a, const Simplex& b)
{
    return join(a, FacetComplex::of_simplex(b));
}

FacetComplex join(const Simplex& a, const Simplex& b)
{
    return join(FacetComplex::of_simplex(a), FacetComplex::of_simplex(b));
}

FacetComplex boundary_complex(const FacetComplex& c)
{
    std::unordered_map<Simplex, int, SimplexHash> degree;
    for (const Simplex& f : c.facets())
        for (Simplex& r : f.ridges())
            ++degree[std::move(r)];
    std::vector<Simplex> out;
    for (const auto& [ridge, d] : degree) {
        if (d >= 3)
            throw Error(ErrorKind::NotPseudomanifold,
                        "ridge " + ridge.to_string() + " lies in " + std::to_string(d) + " facets");
        if (d == 1)
            out.push_back(ridge);
    }
    return FacetComplex(std::move(out), c.dim() - 1);
}

FacetComplex double_complex(const FacetComplex& c)
{
    const FacetComplex boundary = boundary_complex(c);
    if (boundary.is_empty())
        throw Error(ErrorKind::ClosedInput, "double needs a nonempty boundary");
    const FaceSet boundary_faces = boundary.face_set();
    const auto boundary_vertices = boundary.vertices();
    auto on_boundary = [&](Vertex v) {
        return std::binary_search(boundary_vertices.begin(), boundary_vertices.end(), v);
    };
    for (const Simplex& face : c.face_set()) {
        if (face.empty() || boundary_faces.count(face))
            continue;
        if (std::all_of(face.begin(), face.end(), on_boundary))
            throw Error(ErrorKind::DegenerateDouble,
                        "interior face " + face.to_string() +
                            " has all vertices on the boundary; apply interior 0-moves first");
    }
    const Vertex offset = c.max_vertex();
    std::vector<Simplex> out = c.facets();
    for (const Simplex& f : c.facets()) {
        std::vector<Vertex> copy;
        for (Vertex v : f)
            copy.push_back(on_boundary(v) ? v : v + offset);
        out.emplace_back(std::move(copy));
    }
    return FacetComplex(std::move(out), c.dim(), c.name() ? std::optional(*c.name() + "-double") : std::nullopt);
}

namespace {

std::vector<Simplex> relabel(const FacetComplex& d, const std::map<Vertex, Vertex>& map)
{
    std::vector<Simplex> out;
    out.reserve(d.num_facets());
    for (const Simplex& f : d.facets()) {
        std::vector<Vertex> vs;
        for (Vertex v : f)
            vs.push_back(map.at(v));
        out.emplace_back(std::move(vs));
    }
    return out;
}

// Fresh ids for every cell vertex not yet mapped, ascending.
void assign_fresh(const FacetComplex& d, std::map<Vertex, Vertex>& map, Vertex next)
{
    for (Vertex v : d.vertices())
        if (!map.count(v))
            map[v] = next++;
}

} // namespace

ImplantResult implant(const FacetComplex& c, const Simplex& f, const FacetComplex& d,
                      const std::vector<Vertex>& labels)
{
    if (!c.has_facet(f))
        throw Error(ErrorKind::NotAFacet, f.to_string() + " is not a facet");
    if (d.dim() != c.dim())
        throw Error(ErrorKind::BoundaryMismatch, "cell dimension " + std::to_string(d.dim()) +
                                                     " differs from complex dimension " + std::to_string(c.dim()));
    if (labels.size() != f.size())
        throw Error(ErrorKind::BoundaryMismatch, "need " + std::to_string(f.size()) + " boundary labels");
    const Simplex label_simplex{std::vector<Vertex>(labels)};
    if (boundary_complex(d) != FacetComplex::boundary_of(label_simplex))
        throw Error(ErrorKind::BoundaryMismatch,
                    "cell boundary is not the boundary of the simplex " + label_simplex.to_string());

    ImplantResult result;
    for (std::size_t k = 0; k < labels.size(); ++k)
        result.vertex_map[labels[k]] = f[k];
    assign_fresh(d, result.vertex_map, c.max_vertex() + 1);

    std::vector<Simplex> out;
    for (const Simplex& g : c.facets())
        if (g != f)
            out.push_back(g);
    for (Simplex& g : relabel(d, result.vertex_map))
        out.push_back(std::move(g));
    result.complex = FacetComplex(std::move(out), c.dim(), c.name());
    return result;
}

FacetComplex implant(const FacetComplex& c, const Simplex& f, const FacetComplex& d)
{
    return implant(c, f, d, boundary_complex(d).vertices()).complex;
}

ImplantResult implant_along_face(const FacetComplex& c, const Simplex& f, const Simplex& g,
                                 const FacetComplex& d, const std::vector<Vertex>& window_labels, Vertex apex)
{
    if (!c.has_facet(f))
        throw Error(ErrorKind::NotAFacet, f.to_string() + " is not a facet");
    if (!g.is_face_of(f) || g.size() + 1 != f.size())
        throw Error(ErrorKind::NotAFace, g.to_string() + " is not a codimension-one face of " + f.to_string());
    if (!boundary_complex(c).has_facet(g))
        throw Error(ErrorKind::NotABoundaryFace, g.to_string() + " is not on the boundary");
    if (d.dim() != c.dim() || window_labels.size() != g.size())
        throw Error(ErrorKind::BoundaryMismatch, "cell does not fit facet " + f.to_string());

    // The cell boundary must be apex * d(window simplex) plus a window whose
    // own boundary is d(window simplex).
    const Simplex window_simplex{std::vector<Vertex>(window_labels)};
    const FacetComplex cell_boundary = boundary_complex(d);
    std::vector<Simplex> around_apex;
    std::vector<Simplex> window;
    for (const Simplex& r : cell_boundary.facets())
        (r.contains(apex) ? around_apex : window).push_back(r);
    const FacetComplex expected_cone = join(Simplex{apex}, FacetComplex::boundary_of(window_simplex));
    if (FacetComplex(around_apex, c.dim() - 1) != expected_cone || window.empty() ||
        boundary_complex(FacetComplex(window, c.dim() - 1)) != FacetComplex::boundary_of(window_simplex))
        throw Error(ErrorKind::BoundaryMismatch, "cell boundary is not a subdivided simplex boundary");

    ImplantResult result;
    const Simplex opposite = f.minus(g);
    std::vector<Vertex> sorted_labels = window_labels;
    std::sort(sorted_labels.begin(), sorted_labels.end());
    for (std::size_t k = 0; k < sorted_labels.size(); ++k)
        result.vertex_map[sorted_labels[k]] = g[k];
    result.vertex_map[apex] = opposite[0];
    assign_fresh(d, result.vertex_map, c.max_vertex() + 1);

    std::vector<Simplex> out;
    for (const Simplex& h : c.facets())
        if (h != f)
            out.push_back(h);
    for (Simplex& h : relabel(d, result.vertex_map))
        out.push_back(std::move(h));
    result.complex = FacetComplex(std::move(out), c.dim(), c.name());
    return result;
}

} // namespace pachner
