#include "pachner/manifold.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <unordered_map>

#include "pachner/error.hpp"
#include "pachner/moves.hpp"

namespace pachner {

std::string to_string(ManifoldStatus status)
{
    switch (status) {
    case ManifoldStatus::VerifiedClosed: return "verified-closed";
    case ManifoldStatus::VerifiedWithBoundary: return "verified-with-boundary";
    case ManifoldStatus::PseudomanifoldOnly: return "pseudomanifold-only";
    case ManifoldStatus::Unverified: return "unverified";
    case ManifoldStatus::Failed: return "failed";
    }
    return "unknown";
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

ManifoldCertificate failed(const Simplex& witness, std::string detail, bool exact)
{
    return {ManifoldStatus::Failed, std::move(detail), exact, witness};
}

// Ridge -> indices of the facets containing it.
std::unordered_map<Simplex, std::vector<std::size_t>, SimplexHash> ridge_incidence(const FacetComplex& c)
{
    std::unordered_map<Simplex, std::vector<std::size_t>, SimplexHash> out;
    for (std::size_t k = 0; k < c.num_facets(); ++k)
        for (Simplex& r : c.facets()[k].ridges())
            out[std::move(r)].push_back(k);
    return out;
}

std::optional<Simplex> overfull_ridge(const FacetComplex& c)
{
    std::optional<Simplex> worst;
    for (const auto& [ridge, facets] : ridge_incidence(c))
        if (facets.size() >= 3 && (!worst || ridge < *worst))
            worst = ridge;
    return worst;
}

bool vertex_connected(const FacetComplex& k)
{
    const auto vs = k.vertices();
    if (vs.empty())
        return true;
    std::map<Vertex, std::size_t> index;
    for (std::size_t t = 0; t < vs.size(); ++t)
        index[vs[t]] = t;
    UnionFind uf(vs.size());
    for (const Simplex& f : k.facets())
        for (std::size_t t = 1; t < f.size(); ++t)
            uf.unite(index[f[0]], index[f[t]]);
    const std::size_t root = uf.find(0);
    for (std::size_t t = 1; t < vs.size(); ++t)
        if (uf.find(t) != root)
            return false;
    return true;
}

bool is_simplex_boundary(const FacetComplex& k)
{
    const std::size_t expected = static_cast<std::size_t>(k.dim()) + 2;
    return k.dim() >= 0 && k.num_facets() == expected && k.vertices().size() == expected;
}

} // namespace

ManifoldCertificate pseudomanifold_report(const FacetComplex& c)
{
    const bool exact = c.dim() <= 3;
    if (c.is_empty())
        return failed(Simplex{}, "empty complex", exact);
    const auto incidence = ridge_incidence(c);
    if (auto ridge = overfull_ridge(c))
        return failed(*ridge, "ridge " + ridge->to_string() + " lies in " +
                                  std::to_string(incidence.at(*ridge).size()) + " facets", exact);
    UnionFind uf(c.num_facets());
    bool has_boundary = false;
    for (const auto& [ridge, facets] : incidence) {
        if (facets.size() == 2)
            uf.unite(facets[0], facets[1]);
        else
            has_boundary = true;
    }
    const std::size_t root = uf.find(0);
    for (std::size_t k = 1; k < c.num_facets(); ++k)
        if (uf.find(k) != root)
            return failed(c.facets()[k], "not strongly connected: facet " + c.facets()[k].to_string() +
                                             " is unreachable from " + c.facets()[0].to_string(), exact);
    return {has_boundary ? ManifoldStatus::VerifiedWithBoundary : ManifoldStatus::VerifiedClosed,
            has_boundary ? "pseudomanifold with boundary" : "closed pseudomanifold", exact, std::nullopt};
}

LinkShape recognize_low_dim(const FacetComplex& k)
{
    switch (k.dim()) {
    case -1:
        return k == FacetComplex::void_complex() ? LinkShape::Sphere : LinkShape::Other;
    case 0:
        if (k.num_facets() == 2)
            return LinkShape::Sphere;
        return k.num_facets() == 1 ? LinkShape::Disk : LinkShape::Other;
    case 1: {
        if (k.num_facets() == 0 || !vertex_connected(k))
            return LinkShape::Other;
        std::map<Vertex, int> degree;
        for (const Simplex& e : k.facets())
            for (Vertex v : e)
                ++degree[v];
        int ends = 0;
        for (const auto& [v, d] : degree) {
            if (d == 1)
                ++ends;
            else if (d != 2)
                return LinkShape::Other;
        }
        if (ends == 0)
            return LinkShape::Sphere;
        return ends == 2 ? LinkShape::Disk : LinkShape::Other;
    }
    case 2: {
        if (k.num_facets() == 0 || overfull_ridge(k) || !vertex_connected(k))
            return LinkShape::Other;
        bool boundary = false;
        for (Vertex v : k.vertices()) {
            const LinkShape s = recognize_low_dim(link(k, Simplex{v}));
            if (s == LinkShape::Other)
                return LinkShape::Other;
            boundary = boundary || s == LinkShape::Disk;
        }
        const long long chi = euler_characteristic(k);
        if (!boundary)
            return chi == 2 ? LinkShape::Sphere : LinkShape::Other;
        return chi == 1 ? LinkShape::Disk : LinkShape::Other;
    }
    default:
        throw Error(ErrorKind::UnsupportedDimension, "exact recognition only up to dimension 2");
    }
}

bool reduce_to_simplex_boundary(const FacetComplex& k, int budget, std::uint64_t seed)
{
    const int d = k.dim();
    if (d < 1)
        return recognize_low_dim(k) == LinkShape::Sphere;
    std::mt19937_64 rng(seed);
    FacetComplex current = k;
    for (int step = 0; step <= budget; ++step) {
        if (is_simplex_boundary(current))
            return true;
        if (step == budget)
            break;
        const auto moves = enumerate_bistellar(current);
        // Highest reducing type first: those remove faces.
        const BistellarMove* chosen = nullptr;
        for (int type = d; type > d / 2 && !chosen; --type)
            for (const BistellarMove& m : moves)
                if (m.i == type) {
                    chosen = &m;
                    break;
                }
        std::vector<const BistellarMove*> pool;
        if (!chosen) {
            for (const BistellarMove& m : moves)
                if (m.i >= 1 && 2 * m.i <= d)
                    pool.push_back(&m);
            if (pool.empty())
                for (const BistellarMove& m : moves)
                    pool.push_back(&m);
            if (pool.empty())
                return false;
            chosen = pool[rng() % pool.size()];
        }
        current = apply_bistellar(current, *chosen);
    }
    return false;
}

ManifoldCertificate verify_manifold(const FacetComplex& c, const ManifoldCheckOptions& options)
{
    const bool exact = c.dim() <= 3;
    if (c.is_empty())
        return failed(Simplex{}, "empty complex", exact);
    if (auto ridge = overfull_ridge(c))
        return failed(*ridge, "ridge " + ridge->to_string() + " lies in three or more facets", exact);

    bool has_boundary = false;
    std::optional<Vertex> undecided;
    for (Vertex v : c.vertices()) {
        const FacetComplex lk = link(c, Simplex{v});
        if (exact) {
            const LinkShape shape = recognize_low_dim(lk);
            if (shape == LinkShape::Other)
                return failed(Simplex{v}, "link of vertex " + std::to_string(v) + " is neither a sphere nor a disk",
                              exact);
            has_boundary = has_boundary || shape == LinkShape::Disk;
            continue;
        }
        FacetComplex closed = lk;
        try {
            const FacetComplex lk_boundary = boundary_complex(lk);
            if (!lk_boundary.is_empty()) {
                has_boundary = true;
                const Simplex cone_point{lk.max_vertex() + 1};
                std::vector<Simplex> facets = lk.facets();
                for (const Simplex& r : lk_boundary.facets())
                    facets.push_back(r.with(cone_point[0]));
                closed = FacetComplex(std::move(facets), lk.dim());
            }
        } catch (const Error&) {
            return failed(Simplex{v}, "link of vertex " + std::to_string(v) + " is not a pseudomanifold", exact);
        }
        if (!pseudomanifold_report(closed).verified())
            return failed(Simplex{v}, "link of vertex " + std::to_string(v) + " is not a connected pseudomanifold",
                          exact);
        if (!undecided && !reduce_to_simplex_boundary(closed, options.reduction_budget, options.seed + v))
            undecided = v;
    }
    if (undecided)
        return {ManifoldStatus::Unverified,
                "link of vertex " + std::to_string(*undecided) + " not reduced within the move budget", false,
                Simplex{*undecided}};
    const auto status = has_boundary ? ManifoldStatus::VerifiedWithBoundary : ManifoldStatus::VerifiedClosed;
    return {status, exact ? "all vertex links recognized exactly" : "all vertex links reduced to simplex boundaries",
            exact, std::nullopt};
}

} // namespace pachner
