#include "pachner/moves.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "json.hpp"
#include "pachner/error.hpp"

namespace pachner {

namespace {

using nlohmann::json;

std::vector<Vertex> simplex_json(const Simplex& s)
{
    return {s.begin(), s.end()};
}

Simplex simplex_from(const json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_array())
        throw Error(ErrorKind::ParseError, std::string("missing array field \"") + key + "\"");
    std::vector<Vertex> vs;
    for (const json& v : j.at(key)) {
        if (!v.is_number_integer())
            throw Error(ErrorKind::ParseError, std::string("non-integer vertex in \"") + key + "\"");
        vs.push_back(v.get<Vertex>());
    }
    return Simplex(std::move(vs));
}

template <class Move>
Move move_from_json(std::string_view text, std::string_view kind)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    if (!j.is_object() || !j.contains("kind") || j.at("kind") != kind)
        throw Error(ErrorKind::ParseError, "expected a move record of kind \"" + std::string(kind) + "\"");
    if (!j.contains("i") || !j.at("i").is_number_integer())
        throw Error(ErrorKind::ParseError, "missing integer field \"i\"");
    return Move{simplex_from(j, "sigma"), simplex_from(j, "tau"), j.at("i").get<int>()};
}

std::string move_to_json(std::string_view kind, const Simplex& sigma, const Simplex& tau, int i)
{
    nlohmann::ordered_json j;
    j["kind"] = kind;
    j["sigma"] = simplex_json(sigma);
    j["tau"] = simplex_json(tau);
    j["i"] = i;
    return j.dump();
}

// face -> facets containing it, for faces of one fixed dimension.
std::unordered_map<Simplex, std::vector<const Simplex*>, SimplexHash> incidence_of_dim(const FacetComplex& c,
                                                                                      int k)
{
    std::unordered_map<Simplex, std::vector<const Simplex*>, SimplexHash> out;
    for (const Simplex& f : c.facets())
        for (Simplex& s : f.faces_of_dim(k))
            out[std::move(s)].push_back(&f);
    return out;
}

FaceSet ridge_set(const FacetComplex& boundary)
{
    return FaceSet(boundary.facets().begin(), boundary.facets().end());
}

} // namespace

std::string BistellarMove::to_json() const { return move_to_json("bistellar", sigma, tau, i); }
BistellarMove BistellarMove::from_json(std::string_view text) { return move_from_json<BistellarMove>(text, "bistellar"); }
std::string ShellingMove::to_json() const { return move_to_json("shelling", sigma, tau, i); }
ShellingMove ShellingMove::from_json(std::string_view text) { return move_from_json<ShellingMove>(text, "shelling"); }

BistellarMove resolve(const FacetComplex& c, const BistellarMove& m)
{
    if (m.i == 0 && m.tau.empty())
        return {m.sigma, Simplex{c.max_vertex() + 1}, 0};
    return m;
}

std::optional<std::string> bistellar_violation(const FacetComplex& c, const BistellarMove& m)
{
    const int n = c.dim();
    if (m.i < 0 || m.i > n)
        return "type " + std::to_string(m.i) + " outside 0.." + std::to_string(n);
    if (m.sigma.dim() != n - m.i)
        return "sigma " + m.sigma.to_string() + " must have dimension " + std::to_string(n - m.i);
    if (m.i == 0) {
        if (!c.has_facet(m.sigma))
            return "sigma " + m.sigma.to_string() + " is not a facet";
        if (m.tau.empty())
            return std::nullopt;
        if (m.tau.size() != 1)
            return "tau of a 0-move must be a single vertex";
        if (c.has_face(m.tau))
            return "vertex " + m.tau.to_string() + " already in the complex";
        return std::nullopt;
    }
    if (m.tau.dim() != m.i)
        return "tau " + m.tau.to_string() + " must have dimension " + std::to_string(m.i);
    if (!m.sigma.disjoint(m.tau))
        return "sigma and tau share a vertex";
    if (!c.has_face(m.sigma))
        return "sigma " + m.sigma.to_string() + " is not a face";
    if (link(c, m.sigma) != FacetComplex::boundary_of(m.tau))
        return "link of " + m.sigma.to_string() + " is not the boundary of " + m.tau.to_string();
    if (c.has_face(m.tau))
        return "tau " + m.tau.to_string() + " is already a face";
    return std::nullopt;
}

bool is_legal(const FacetComplex& c, const BistellarMove& m) { return !bistellar_violation(c, m); }

std::vector<BistellarMove> enumerate_bistellar(const FacetComplex& c, std::optional<int> type)
{
    const int n = c.dim();
    std::vector<BistellarMove> out;
    if (c.is_empty())
        return out;
    if (!type || *type == 0)
        for (const Simplex& f : c.facets())
            out.push_back({f, Simplex{}, 0});
    std::optional<FaceSet> faces;
    for (int i = 1; i <= n; ++i) {
        if (type && *type != i)
            continue;
        if (!faces)
            faces = c.face_set();
        for (const auto& [sigma, containing] : incidence_of_dim(c, n - i)) {
            if (containing.size() != static_cast<std::size_t>(i) + 1)
                continue;
            std::set<Vertex> rest;
            for (const Simplex* f : containing)
                for (Vertex v : f->minus(sigma))
                    rest.insert(v);
            if (rest.size() != static_cast<std::size_t>(i) + 1)
                continue;
            Simplex tau = Simplex::from_sorted({rest.begin(), rest.end()});
            if (faces->contains(tau))
                continue;
            out.push_back({sigma, std::move(tau), i});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FacetComplex apply_bistellar(const FacetComplex& c, const BistellarMove& move)
{
    if (auto why = bistellar_violation(c, move))
        throw Error(ErrorKind::IllegalMove, *why);
    const BistellarMove m = resolve(c, move);
    FaceSet removed;
    for (const Simplex& r : m.tau.ridges())
        removed.insert(m.sigma.unite(r));
    std::vector<Simplex> facets;
    facets.reserve(c.num_facets() + m.sigma.size());
    for (const Simplex& f : c.facets())
        if (!removed.contains(f))
            facets.push_back(f);
    for (const Simplex& r : m.sigma.ridges())
        facets.push_back(r.unite(m.tau));
    return FacetComplex(std::move(facets), c.dim(), c.name());
}

namespace {

std::optional<std::string> shelling_violation_in(const FacetComplex& c, const ShellingMove& m,
                                                 const FaceSet& boundary_faces)
{
    const int n = c.dim();
    if (m.i < 0 || m.i > n - 1)
        return "type " + std::to_string(m.i) + " outside 0.." + std::to_string(n - 1);
    if (m.sigma.dim() != m.i)
        return "sigma " + m.sigma.to_string() + " must have dimension " + std::to_string(m.i);
    if (m.tau.empty())
        return "tau must be nonempty";
    if (!m.sigma.disjoint(m.tau))
        return "sigma and tau share a vertex";
    const Simplex facet = m.sigma.unite(m.tau);
    if (!c.has_facet(facet))
        return facet.to_string() + " is not a facet";
    if (boundary_faces.contains(m.tau))
        return "tau " + m.tau.to_string() + " lies in the boundary";
    for (const Simplex& r : m.tau.ridges()) {
        if (!boundary_faces.contains(r))
            return "face " + r.to_string() + " of tau is not in the boundary";
        const Simplex part = m.sigma.unite(r);
        if (!boundary_faces.contains(part))
            return "face " + part.to_string() + " of sigma * d(tau) is not in the boundary";
    }
    return std::nullopt;
}

} // namespace

std::optional<std::string> shelling_violation(const FacetComplex& c, const ShellingMove& m)
{
    FacetComplex boundary;
    try {
        boundary = boundary_complex(c);
    } catch (const Error& e) {
        return std::string(e.what());
    }
    if (boundary.is_empty())
        return "complex is closed";
    return shelling_violation_in(c, m, boundary.face_set());
}

bool is_legal(const FacetComplex& c, const ShellingMove& m) { return !shelling_violation(c, m); }

std::vector<ShellingMove> enumerate_shellings(const FacetComplex& c)
{
    const FacetComplex boundary = boundary_complex(c);
    if (boundary.is_empty())
        throw Error(ErrorKind::ClosedInput, "shellings need a nonempty boundary");
    std::vector<ShellingMove> out;
    if (c.num_facets() < 2)
        return out;
    const FaceSet bfaces = boundary.face_set();
    for (const Simplex& f : c.facets()) {
        for (const Simplex& sigma : f.all_faces()) {
            if (sigma.empty() || sigma == f)
                continue;
            ShellingMove m{sigma, f.minus(sigma), sigma.dim()};
            if (!shelling_violation_in(c, m, bfaces))
                out.push_back(std::move(m));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FacetComplex apply_shelling(const FacetComplex& c, const ShellingMove& m)
{
    if (c.num_facets() == 1 && c.has_facet(m.sigma.unite(m.tau)))
        throw Error(ErrorKind::EmptyResult, "shelling the last facet would empty the complex");
    if (auto why = shelling_violation(c, m))
        throw Error(ErrorKind::IllegalShelling, *why);
    const Simplex facet = m.sigma.unite(m.tau);
    std::vector<Simplex> facets;
    facets.reserve(c.num_facets() - 1);
    for (const Simplex& f : c.facets())
        if (f != facet)
            facets.push_back(f);
    return FacetComplex(std::move(facets), c.dim(), c.name());
}

BistellarMove induced_boundary_move(const FacetComplex& c, const ShellingMove& m)
{
    const FacetComplex after = apply_shelling(c, m);
    const BistellarMove induced{m.sigma, m.tau, c.dim() - 1 - m.i};
    const FacetComplex before_boundary = boundary_complex(c);
    const FacetComplex after_boundary = boundary_complex(after);
    try {
        if (apply_bistellar(before_boundary, induced) == after_boundary)
            return induced;
    } catch (const Error& e) {
        throw Error(ErrorKind::IllegalShelling, std::string("induced boundary move is illegal: ") + e.what());
    }
    throw Error(ErrorKind::IllegalShelling, "boundary change is not the move " + induced.to_json());
}

FacetComplex star_subdivide_along_face(const FacetComplex& c, const Simplex& f, const Simplex& g)
{
    if (!c.has_facet(f))
        throw Error(ErrorKind::NotAFacet, f.to_string() + " is not a facet");
    if (g.dim() != f.dim() - 1 || !g.is_face_of(f))
        throw Error(ErrorKind::NotAFace, g.to_string() + " is not a codimension-one face of " + f.to_string());
    if (!ridge_set(boundary_complex(c)).contains(g))
        throw Error(ErrorKind::NotABoundaryFace, g.to_string() + " does not lie in the boundary");
    const Vertex w = c.max_vertex() + 1;
    const Vertex apex = c.max_vertex() + 2;
    std::vector<Simplex> facets;
    for (const Simplex& h : c.facets())
        if (h != f)
            facets.push_back(h);
    for (const Simplex& r : f.ridges())
        if (r != g)
            facets.push_back(r.with(apex));
    for (const Simplex& r : g.ridges())
        facets.push_back(r.with(w).with(apex));
    return FacetComplex(std::move(facets), c.dim(), c.name());
}

std::vector<std::pair<Simplex, Simplex>> one_face_exposed(const FacetComplex& c)
{
    const FacetComplex boundary = boundary_complex(c);
    if (boundary.is_empty())
        throw Error(ErrorKind::ClosedInput, "one-face exposure needs a nonempty boundary");
    const FaceSet ridges = ridge_set(boundary);
    const auto bverts = boundary.vertices();
    std::vector<std::pair<Simplex, Simplex>> out;
    for (const Simplex& f : c.facets()) {
        std::optional<Simplex> exposed;
        int count = 0;
        for (const Simplex& r : f.ridges())
            if (ridges.contains(r)) {
                exposed = r;
                ++count;
            }
        if (count != 1)
            continue;
        const Vertex opposite = f.minus(*exposed)[0];
        if (std::binary_search(bverts.begin(), bverts.end(), opposite))
            continue;
        out.emplace_back(f, *exposed);
    }
    return out;
}

} // namespace pachner
