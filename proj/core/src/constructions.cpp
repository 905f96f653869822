#include "pachner/constructions.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "json.hpp"
#include "pachner/error.hpp"
#include "pachner/fvector.hpp"
#include "pachner/manifold.hpp"

namespace pachner {

using nlohmann::json;
using nlohmann::ordered_json;

FacetComplex boundary_of_simplex(int n)
{
    if (n < 0)
        throw Error(ErrorKind::UnsupportedDimension, "sphere dimension must be nonnegative");
    std::vector<Vertex> vs(static_cast<std::size_t>(n) + 2);
    for (std::size_t k = 0; k < vs.size(); ++k)
        vs[k] = static_cast<Vertex>(k + 1);
    return FacetComplex::boundary_of(Simplex::from_sorted(vs)).with_name("sphere" + std::to_string(n) + "_min");
}

namespace {

using Facets = std::vector<std::vector<Vertex>>;

Facets torus7()
{
    Facets out;
    for (int i = 0; i < 7; ++i) {
        auto v = [&](int k) { return static_cast<Vertex>((i + k) % 7 + 1); };
        out.push_back({v(0), v(1), v(3)});
        out.push_back({v(0), v(2), v(3)});
    }
    return out;
}

Facets icosahedron()
{
    // 1 top, 2..6 upper ring, 7..11 lower ring, 12 bottom.
    Facets out;
    for (int k = 0; k < 5; ++k) {
        const Vertex u0 = 2 + k, u1 = 2 + (k + 1) % 5;
        const Vertex l0 = 7 + k, l1 = 7 + (k + 1) % 5;
        out.push_back({1, u0, u1});
        out.push_back({u0, u1, l0});
        out.push_back({u1, l0, l1});
        out.push_back({12, l0, l1});
    }
    return out;
}

Facets cone_over_cycle(int length)
{
    const Vertex apex = length + 1;
    Facets out;
    for (int k = 0; k < length; ++k)
        out.push_back({static_cast<Vertex>(k + 1), static_cast<Vertex>((k + 1) % length + 1), apex});
    return out;
}

Facets cone_over_sphere(int n)
{
    Facets out;
    const Vertex apex = n + 3;
    const FacetComplex sphere = boundary_of_simplex(n);
    for (const Simplex& f : sphere.facets()) {
        std::vector<Vertex> vs(f.begin(), f.end());
        vs.push_back(apex);
        out.push_back(std::move(vs));
    }
    return out;
}

Facets sphere_facets(int n)
{
    Facets out;
    const FacetComplex sphere = boundary_of_simplex(n);
    for (const Simplex& f : sphere.facets())
        out.emplace_back(f.begin(), f.end());
    return out;
}

struct Entry {
    FixtureInfo info;
    std::function<Facets()> facets;
};

const std::vector<Entry>& entries()
{
    static const std::vector<Entry> table = {
        {{"sphere1_min", {3, 3}, 0}, [] { return sphere_facets(1); }},
        {{"sphere2_min", {4, 6, 4}, 2}, [] { return sphere_facets(2); }},
        {{"sphere3_min", {5, 10, 10, 5}, 0}, [] { return sphere_facets(3); }},
        {{"sphere4_min", {6, 15, 20, 15, 6}, 2}, [] { return sphere_facets(4); }},
        {{"icosahedron", {12, 30, 20}, 2}, icosahedron},
        {{"bipyramid", {5, 9, 6}, 2},
         [] { return Facets{{1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5}, {1, 3, 5}, {2, 3, 5}}; }},
        {{"torus7", {7, 21, 14}, 0}, torus7},
        {{"rp2_6", {6, 15, 10}, 1},
         [] {
             return Facets{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                           {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}};
         }},
        {{"triangle", {3, 3, 1}, 1}, [] { return Facets{{1, 2, 3}}; }},
        {{"disk_two", {4, 5, 2}, 1}, [] { return Facets{{1, 2, 3}, {2, 3, 4}}; }},
        {{"disk_cone", {4, 6, 3}, 1}, [] { return cone_over_cycle(3); }},
        {{"disk_square", {5, 8, 4}, 1}, [] { return cone_over_cycle(4); }},
        {{"disk_hexagon", {7, 12, 6}, 1}, [] { return cone_over_cycle(6); }},
        {{"ball3_two", {5, 9, 7, 2}, 1}, [] { return Facets{{1, 2, 3, 4}, {2, 3, 4, 5}}; }},
        {{"ball3_cone", {5, 10, 10, 4}, 1}, [] { return cone_over_sphere(2); }},
        {{"ball4_cone", {6, 15, 20, 15, 5}, 1}, [] { return cone_over_sphere(3); }},
    };
    return table;
}

} // namespace

const std::vector<FixtureInfo>& fixture_catalog()
{
    static const std::vector<FixtureInfo> catalog = [] {
        std::vector<FixtureInfo> out;
        for (const Entry& e : entries())
            out.push_back(e.info);
        return out;
    }();
    return catalog;
}

FacetComplex fixture(std::string_view name)
{
    for (const Entry& e : entries()) {
        if (e.info.name != name)
            continue;
        FacetComplex c = build_complex(e.facets(), e.info.name);
        const FVector fv = f_vector(c);
        std::vector<long long> counts;
        for (const Integer& v : fv.f)
            counts.push_back(static_cast<long long>(v));
        if (counts != e.info.expected_f || euler_characteristic(c) != e.info.expected_chi)
            throw Error(ErrorKind::InternalAssertFailed,
                        "fixture " + e.info.name + " has f = " + format_fvector(fv) + ", expected otherwise");
        return c;
    }
    throw Error(ErrorKind::UnknownFixture, "no fixture named \"" + std::string(name) + "\"");
}

// ---------------------------------------------------------------------------
// Plump cells

namespace {

bool touches(const Simplex& s, const std::vector<Vertex>& sorted_labels)
{
    return std::any_of(s.begin(), s.end(), [&](Vertex v) {
        return std::binary_search(sorted_labels.begin(), sorted_labels.end(), v);
    });
}

// Vertices a move may touch. A 0-move with a placeholder only owns sigma.
Simplex support(const BistellarMove& m) { return m.sigma.unite(m.tau); }

std::vector<std::vector<BistellarMove>> interior_moves_by_type(const FacetComplex& disk,
                                                               const std::vector<Vertex>& labels)
{
    std::vector<std::vector<BistellarMove>> out(static_cast<std::size_t>(disk.dim()) + 1);
    for (BistellarMove& m : enumerate_bistellar(disk))
        if (!touches(support(m), labels))
            out[static_cast<std::size_t>(m.i)].push_back(std::move(m));
    return out;
}

// One interior move per type, pairwise vertex-disjoint when asked. Depth-first
// over types in ascending order, candidates in enumeration order.
std::optional<std::map<int, BistellarMove>> choose_prepared(const FacetComplex& disk,
                                                            const std::vector<Vertex>& labels, bool disjoint)
{
    const auto by_type = interior_moves_by_type(disk, labels);
    for (const auto& list : by_type)
        if (list.empty())
            return std::nullopt;
    std::map<int, BistellarMove> chosen;
    if (!disjoint) {
        for (std::size_t i = 0; i < by_type.size(); ++i)
            chosen[static_cast<int>(i)] = by_type[i].front();
        return chosen;
    }
    long nodes = 0;
    std::set<Vertex> used;
    std::function<bool(std::size_t)> search = [&](std::size_t type) {
        if (type == by_type.size())
            return true;
        for (const BistellarMove& m : by_type[type]) {
            if (++nodes > 200000)
                return false;
            const Simplex s = support(m);
            if (std::any_of(s.begin(), s.end(), [&](Vertex v) { return used.count(v) > 0; }))
                continue;
            used.insert(s.begin(), s.end());
            chosen[static_cast<int>(type)] = m;
            if (search(type + 1))
                return true;
            for (Vertex v : s)
                used.erase(v);
            chosen.erase(static_cast<int>(type));
        }
        return false;
    };
    if (search(0))
        return chosen;
    return std::nullopt;
}

std::string facet_diff(const FacetComplex& before, const FacetComplex& after)
{
    std::string out;
    for (const Simplex& f : before.facets())
        if (!after.has_facet(f))
            out += " -" + f.to_string();
    for (const Simplex& f : after.facets())
        if (!before.has_facet(f))
            out += " +" + f.to_string();
    return out.empty() ? " (none)" : out;
}

CellCertificate fail(CellCertificate cert, std::string witness)
{
    cert.passed = false;
    cert.witness = std::move(witness);
    return cert;
}

} // namespace

PlumpCell plump_from_disk(const FacetComplex& disk, const std::vector<Vertex>& boundary_labels)
{
    PlumpCell cell{disk.dim(), disk, boundary_labels, {}};
    std::sort(cell.boundary_labels.begin(), cell.boundary_labels.end());
    const auto by_type = interior_moves_by_type(disk, cell.boundary_labels);
    for (std::size_t i = 0; i < by_type.size(); ++i)
        if (!by_type[i].empty())
            cell.prepared_moves[static_cast<int>(i)] = by_type[i].front();
    return cell;
}

PlumpCell build_plump_cell(int n, std::uint64_t seed, const PlumpOptions& options)
{
    if (n < 1)
        throw Error(ErrorKind::UnsupportedDimension, "plump cells need n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<Vertex> labels;
    for (Vertex v = 1; v <= n + 1; ++v)
        labels.push_back(v);
    const Simplex top = Simplex::from_sorted(labels);
    FacetComplex disk = apply_bistellar(FacetComplex::of_simplex(top), {top, Simplex{}, 0});

    for (int step = 0; step <= options.budget; ++step) {
        if (auto prepared = choose_prepared(disk, labels, options.disjoint_supports)) {
            PlumpCell cell{n, disk.with_name("plump" + std::to_string(n)), labels, std::move(*prepared)};
            const CellCertificate cert = verify_plump(cell);
            if (!cert.passed)
                throw Error(ErrorKind::InternalAssertFailed, "built plump cell fails its check: " + cert.witness);
            return cell;
        }
        if (step == options.budget)
            break;
        const bool has_interior_facet = std::any_of(disk.facets().begin(), disk.facets().end(),
                                                    [&](const Simplex& f) { return !touches(f, labels); });
        if (!has_interior_facet) {
            std::size_t best = top.size() + 1;
            std::vector<const Simplex*> ties;
            for (const Simplex& f : disk.facets()) {
                const auto on_boundary = static_cast<std::size_t>(
                    std::count_if(f.begin(), f.end(), [&](Vertex v) { return v <= n + 1; }));
                if (on_boundary < best) {
                    best = on_boundary;
                    ties.clear();
                }
                if (on_boundary == best)
                    ties.push_back(&f);
            }
            const Simplex target = *ties[rng() % ties.size()];
            disk = apply_bistellar(disk, {target, Simplex{}, 0});
            continue;
        }
        std::vector<BistellarMove> pool;
        const auto by_type = interior_moves_by_type(disk, labels);
        const int max_type = n == 1 ? 0 : n - 1;
        for (int i = 0; i <= max_type; ++i)
            pool.insert(pool.end(), by_type[static_cast<std::size_t>(i)].begin(),
                        by_type[static_cast<std::size_t>(i)].end());
        disk = apply_bistellar(disk, pool[rng() % pool.size()]);
    }
    throw Error(ErrorKind::BudgetExhausted, "no plump " + std::to_string(n) + "-cell within " +
                                                std::to_string(options.budget) + " growth steps for seed " +
                                                std::to_string(seed));
}

CellCertificate verify_plump(const PlumpCell& cell)
{
    CellCertificate cert;
    const int n = cell.disk.dim();
    if (cell.disk.is_empty() || n != cell.n)
        return fail(cert, "disk dimension " + std::to_string(n) + " does not match n = " + std::to_string(cell.n));
    if (cell.boundary_labels.size() != static_cast<std::size_t>(n) + 1)
        return fail(cert, "expected " + std::to_string(n + 1) + " boundary labels");

    std::vector<Vertex> labels = cell.boundary_labels;
    std::sort(labels.begin(), labels.end());
    Simplex label_simplex;
    try {
        label_simplex = Simplex(labels);
    } catch (const Error& e) {
        return fail(cert, std::string("boundary labels: ") + e.what());
    }
    FacetComplex boundary;
    try {
        boundary = boundary_complex(cell.disk);
    } catch (const Error& e) {
        return fail(cert, e.what());
    }
    if (boundary != FacetComplex::boundary_of(label_simplex))
        return fail(cert, "boundary is not the boundary of the simplex " + label_simplex.to_string());
    cert.checks.push_back("boundary = boundary of " + label_simplex.to_string());

    const ManifoldCertificate disk_cert = verify_manifold(cell.disk);
    if (disk_cert.status != ManifoldStatus::VerifiedWithBoundary)
        return fail(cert, "not certified as a disk: " + to_string(disk_cert.status) + ", " + disk_cert.detail);
    cert.checks.push_back("vertex links are spheres and disks");

    std::string missing;
    for (int i = 0; i <= n; ++i)
        if (!cell.prepared_moves.count(i))
            missing += (missing.empty() ? "" : ",") + std::to_string(i);
    if (!missing.empty())
        return fail(cert, "no prepared move of type " + missing);

    for (const auto& [type, move] : cell.prepared_moves) {
        const std::string tag = "prepared " + std::to_string(type) + "-move";
        if (move.i != type)
            return fail(cert, tag + " has type " + std::to_string(move.i));
        if (touches(support(move), labels))
            return fail(cert, tag + " touches a boundary vertex");
        if (auto why = bistellar_violation(cell.disk, move))
            return fail(cert, tag + " is illegal: " + *why);
        const FacetComplex after = apply_bistellar(cell.disk, move);
        for (Vertex v : labels)
            if (star(after, Simplex{v}) != star(cell.disk, Simplex{v}))
                return fail(cert, tag + " changes the star of boundary vertex " + std::to_string(v));
        cert.checks.push_back(tag + " legal, boundary stars unchanged");
    }
    cert.passed = true;
    return cert;
}

// ---------------------------------------------------------------------------
// Mold cells

MoldCell build_mold_cell(int n, std::uint64_t seed, const MoldOptions& options)
{
    if (n != 2 && n != 3)
        throw Error(ErrorKind::UnsupportedDimension, "mold cells are built for n = 2 and n = 3 only");
    PlumpCell plump = build_plump_cell(n - 1, seed, {options.budget, true});

    // Window labels 1..n; interior vertices move up by one so the apex is n + 1.
    const Vertex apex = n + 1;
    auto shift = [&](Vertex v) { return v <= n ? v : v + 1; };
    auto shift_simplex = [&](const Simplex& s) {
        std::vector<Vertex> vs;
        for (Vertex v : s)
            vs.push_back(shift(v));
        return Simplex(std::move(vs));
    };
    std::vector<Simplex> window_facets;
    for (const Simplex& f : plump.disk.facets())
        window_facets.push_back(shift_simplex(f));
    PlumpCell window{n - 1, FacetComplex(window_facets, n - 1, "window"), plump.boundary_labels, {}};
    for (const auto& [type, m] : plump.prepared_moves)
        window.prepared_moves[type] = {shift_simplex(m.sigma), shift_simplex(m.tau), m.i};

    // Fire every prepared move; their supports are disjoint so order is irrelevant.
    const Vertex fresh = window.disk.max_vertex() + 1;
    FacetComplex fired = window.disk;
    std::map<int, BistellarMove> resolved;
    for (const auto& [type, m] : window.prepared_moves) {
        BistellarMove r = m;
        if (r.i == 0)
            r.tau = Simplex{fresh};
        resolved[type] = r;
        fired = apply_bistellar(fired, r);
    }

    std::vector<Simplex> facets;
    for (const Simplex& f : fired.facets())
        facets.push_back(f.with(apex));
    for (const auto& [type, m] : resolved)
        facets.push_back(m.sigma.unite(m.tau));

    MoldCell cell;
    cell.n = n;
    cell.disk = FacetComplex(std::move(facets), n, "mold" + std::to_string(n));
    cell.window = std::move(window);
    cell.apex = apex;
    for (const auto& [type, m] : resolved)
        cell.prepared_shellings[type] = ShellingMove{m.sigma, m.tau, m.sigma.dim()};

    const CellCertificate cert = verify_mold(cell);
    if (!cert.passed)
        throw Error(ErrorKind::InternalAssertFailed, "built mold cell fails its check: " + cert.witness);
    return cell;
}

CellCertificate verify_mold(const MoldCell& cell)
{
    CellCertificate cert;
    const int n = cell.disk.dim();
    if (cell.disk.is_empty() || n != cell.n || cell.window.n != n - 1)
        return fail(cert, "dimensions of disk and window do not fit n = " + std::to_string(cell.n));

    const CellCertificate window_cert = verify_plump(cell.window);
    if (!window_cert.passed)
        return fail(cert, "window is not a plump cell: " + window_cert.witness);
    cert.checks.push_back("window is a plump " + std::to_string(n - 1) + "-cell");

    std::vector<Vertex> labels = cell.window.boundary_labels;
    std::sort(labels.begin(), labels.end());
    const Simplex window_simplex = Simplex::from_sorted(labels);
    const auto window_vertices = cell.window.disk.vertices();
    if (std::binary_search(window_vertices.begin(), window_vertices.end(), cell.apex))
        return fail(cert, "apex " + std::to_string(cell.apex) + " lies in the window");

    FacetComplex boundary;
    try {
        boundary = boundary_complex(cell.disk);
    } catch (const Error& e) {
        return fail(cert, e.what());
    }
    std::vector<Simplex> expected = cell.window.disk.facets();
    for (const Simplex& r : window_simplex.ridges())
        expected.push_back(r.with(cell.apex));
    if (boundary != FacetComplex(expected, n - 1))
        return fail(cert, "boundary is not the window plus the cone over its rim");
    cert.checks.push_back("boundary = window + apex * rim");

    const ManifoldCertificate disk_cert = verify_manifold(cell.disk);
    if (disk_cert.status != ManifoldStatus::VerifiedWithBoundary)
        return fail(cert, "not certified as a disk: " + to_string(disk_cert.status) + ", " + disk_cert.detail);
    cert.checks.push_back("vertex links are spheres and disks");

    std::vector<Vertex> outside = labels;
    outside.push_back(cell.apex);
    for (int i = 0; i <= n - 1; ++i) {
        const std::string tag = "shelling for window " + std::to_string(i) + "-move";
        const auto it = cell.prepared_shellings.find(i);
        if (it == cell.prepared_shellings.end())
            return fail(cert, "no prepared shelling inducing a " + std::to_string(i) + "-move");
        const ShellingMove& sh = it->second;
        if (sh.i != n - 1 - i)
            return fail(cert, tag + " has type " + std::to_string(sh.i) + ", expected " + std::to_string(n - 1 - i));
        if (auto why = shelling_violation(cell.disk, sh))
            return fail(cert, tag + " is illegal: " + *why);
        BistellarMove induced;
        try {
            induced = induced_boundary_move(cell.disk, sh);
        } catch (const Error& e) {
            return fail(cert, tag + ": " + e.what());
        }
        BistellarMove wanted = cell.window.prepared_moves.at(i);
        if (wanted.i == 0 && wanted.tau.empty())
            wanted.tau = induced.tau;
        if (induced != wanted)
            return fail(cert, tag + " induces " + induced.to_json() + " instead of " + wanted.to_json() +
                                  "; boundary diff " + facet_diff(boundary, boundary_complex(apply_shelling(cell.disk, sh))));
        const FacetComplex after = apply_shelling(cell.disk, sh);
        for (Vertex v : outside)
            if (star(after, Simplex{v}) != star(cell.disk, Simplex{v}))
                return fail(cert, tag + " changes the star of " + std::to_string(v));
        cert.checks.push_back(tag + " legal, induces " + induced.to_json());
    }
    cert.passed = true;
    return cert;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

ordered_json facets_json(const FacetComplex& c)
{
    auto out = ordered_json::array();
    for (const Simplex& f : c.facets())
        out.push_back(std::vector<Vertex>(f.begin(), f.end()));
    return out;
}

FacetComplex facets_from(const json& j, int n)
{
    if (!j.is_array())
        throw Error(ErrorKind::ParseError, "\"facets\" must be an array");
    const auto facets = j.get<std::vector<std::vector<Vertex>>>();
    if (facets.empty())
        throw Error(ErrorKind::ParseError, "cell has no facets");
    FacetComplex c = build_complex(facets);
    if (c.dim() != n)
        throw Error(ErrorKind::ParseError, "cell facets do not have dimension " + std::to_string(n));
    return c;
}

ordered_json plump_object(const PlumpCell& cell)
{
    ordered_json j;
    j["kind"] = "plump";
    j["n"] = cell.n;
    j["boundary_labels"] = cell.boundary_labels;
    j["facets"] = facets_json(cell.disk);
    auto moves = ordered_json::array();
    for (const auto& [type, m] : cell.prepared_moves)
        moves.push_back(ordered_json::parse(m.to_json()));
    j["prepared_moves"] = std::move(moves);
    return j;
}

PlumpCell plump_from_object(const json& j)
{
    if (!j.is_object() || j.value("kind", "") != "plump")
        throw Error(ErrorKind::ParseError, "not a plump cell record");
    PlumpCell cell;
    cell.n = j.at("n").get<int>();
    cell.boundary_labels = j.at("boundary_labels").get<std::vector<Vertex>>();
    cell.disk = facets_from(j.at("facets"), cell.n);
    for (const json& m : j.at("prepared_moves")) {
        const BistellarMove move = BistellarMove::from_json(m.dump());
        cell.prepared_moves[move.i] = move;
    }
    return cell;
}

json parse_object(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

template <class F>
auto guarded(F&& f)
{
    try {
        return f();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

} // namespace

std::string plump_to_json(const PlumpCell& cell) { return plump_object(cell).dump() + "\n"; }

PlumpCell plump_from_json(std::string_view text)
{
    const json j = parse_object(text);
    return guarded([&] { return plump_from_object(j); });
}

std::string mold_to_json(const MoldCell& cell)
{
    ordered_json j;
    j["kind"] = "mold";
    j["n"] = cell.n;
    j["apex"] = cell.apex;
    j["facets"] = facets_json(cell.disk);
    j["window"] = plump_object(cell.window);
    auto shellings = ordered_json::array();
    for (const auto& [type, sh] : cell.prepared_shellings) {
        ordered_json s = ordered_json::parse(sh.to_json());
        s["induces"] = type;
        shellings.push_back(std::move(s));
    }
    j["prepared_shellings"] = std::move(shellings);
    return j.dump() + "\n";
}

MoldCell mold_from_json(std::string_view text)
{
    const json j = parse_object(text);
    return guarded([&] {
        if (!j.is_object() || j.value("kind", "") != "mold")
            throw Error(ErrorKind::ParseError, "not a mold cell record");
        MoldCell cell;
        cell.n = j.at("n").get<int>();
        cell.apex = j.at("apex").get<Vertex>();
        cell.disk = facets_from(j.at("facets"), cell.n);
        cell.window = plump_from_object(j.at("window"));
        for (const json& s : j.at("prepared_shellings")) {
            json move = s;
            const int induces = move.at("induces").get<int>();
            move.erase("induces");
            cell.prepared_shellings[induces] = ShellingMove::from_json(move.dump());
        }
        return cell;
    });
}

} // namespace pachner
