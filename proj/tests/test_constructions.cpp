#include <gtest/gtest.h>

#include "pachner/constructions.hpp"
#include "pachner/error.hpp"
#include "pachner/fvector.hpp"
#include "pachner/manifold.hpp"
#include "pachner/moves.hpp"

using namespace pachner;

namespace {

BistellarMove through(const BistellarMove& m, const std::map<Vertex, Vertex>& map)
{
    auto image = [&](const Simplex& s) {
        std::vector<Vertex> vs;
        for (Vertex v : s)
            vs.push_back(map.at(v));
        return Simplex(std::move(vs));
    };
    return {image(m.sigma), image(m.tau), m.i};
}

bool has_check_failure(const CellCertificate& cert)
{
    return !cert.passed && !cert.witness.empty();
}

} // namespace

TEST(BoundaryOfSimplex, Examples)
{
    EXPECT_EQ(f_vector(boundary_of_simplex(2)).f, (std::vector<Integer>{4, 6, 4}));
    EXPECT_EQ(f_vector(boundary_of_simplex(3)).f, (std::vector<Integer>{5, 10, 10, 5}));
    EXPECT_EQ(boundary_of_simplex(0), build_complex({{1}, {2}}));
}

TEST(Fixtures, LoadAndVerify)
{
    for (const FixtureInfo& info : fixture_catalog()) {
        const FacetComplex c = fixture(info.name);
        EXPECT_EQ(c.name(), info.name);
        EXPECT_EQ(euler_characteristic(c), info.expected_chi) << info.name;
        EXPECT_TRUE(verify_manifold(c).verified()) << info.name;
    }
    EXPECT_EQ(fixture("torus7").num_facets(), 14u);
    EXPECT_EQ(fixture("rp2_6").num_facets(), 10u);
    EXPECT_EQ(euler_characteristic(fixture("rp2_6")), 1);
    try {
        fixture("klein_bottle_9000");
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnknownFixture);
    }
}

TEST(Plump, PathExample)
{
    // a=1, b=2 on the boundary; x=4, y=5, z=6 inside.
    const FacetComplex path = build_complex({{1, 4}, {4, 5}, {5, 6}, {2, 6}});
    const PlumpCell cell = plump_from_disk(path, {1, 2});
    ASSERT_EQ(cell.prepared_moves.size(), 2u);
    EXPECT_EQ(cell.prepared_moves.at(0).sigma, (Simplex{4, 5}));
    EXPECT_EQ(cell.prepared_moves.at(1), (BistellarMove{Simplex{5}, Simplex{4, 6}, 1}));
    EXPECT_TRUE(verify_plump(cell).passed) << verify_plump(cell).witness;
}

TEST(Plump, BuildsAndCertifiesLowDimensions)
{
    for (int n = 1; n <= 3; ++n)
        for (std::uint64_t seed : {1u, 2u, 7u}) {
            const PlumpCell cell = build_plump_cell(n, seed);
            const CellCertificate cert = verify_plump(cell);
            EXPECT_TRUE(cert.passed) << n << " " << seed << " " << cert.witness;
            EXPECT_EQ(cell.prepared_moves.size(), static_cast<std::size_t>(n) + 1);
            EXPECT_EQ(cell.boundary_labels.size(), static_cast<std::size_t>(n) + 1);
            EXPECT_EQ(verify_manifold(cell.disk).status, ManifoldStatus::VerifiedWithBoundary);
            for (const auto& [i, m] : cell.prepared_moves)
                EXPECT_EQ(m.i, i);
        }
}

TEST(Plump, DisjointSupportsOption)
{
    for (int n = 1; n <= 2; ++n) {
        const PlumpCell cell = build_plump_cell(n, 3, {.budget = 400, .disjoint_supports = true});
        EXPECT_TRUE(verify_plump(cell).passed);
        std::set<Vertex> seen;
        for (const auto& [i, m] : cell.prepared_moves)
            for (Vertex v : m.sigma.unite(m.tau))
                EXPECT_TRUE(seen.insert(v).second) << "shared vertex " << v;
    }
}

TEST(Plump, Deterministic)
{
    EXPECT_EQ(plump_to_json(build_plump_cell(3, 11)), plump_to_json(build_plump_cell(3, 11)));
}

TEST(Plump, RejectsBareSimplexAndTampering)
{
    const FacetComplex tri = build_complex({{1, 2, 3}});
    const CellCertificate bare = verify_plump(plump_from_disk(tri, {1, 2, 3}));
    EXPECT_TRUE(has_check_failure(bare));

    const PlumpCell good = build_plump_cell(2, 5);

    PlumpCell dropped = good;
    dropped.prepared_moves.erase(1);
    const CellCertificate c1 = verify_plump(dropped);
    EXPECT_TRUE(has_check_failure(c1));
    EXPECT_NE(c1.witness.find('1'), std::string::npos) << c1.witness;

    PlumpCell touching = good;
    for (const Simplex& f : good.disk.facets())
        if (f.contains(good.boundary_labels[0])) {
            touching.prepared_moves[0] = BistellarMove{f, Simplex{}, 0};
            break;
        }
    EXPECT_TRUE(has_check_failure(verify_plump(touching)));

    PlumpCell holed = good;
    std::vector<Simplex> fs = good.disk.facets();
    fs.erase(fs.begin() + static_cast<long>(fs.size() / 2));
    holed.disk = FacetComplex(fs, 2);
    EXPECT_TRUE(has_check_failure(verify_plump(holed)));

    PlumpCell relabeled = good;
    relabeled.boundary_labels = {1, 2, 100};
    EXPECT_TRUE(has_check_failure(verify_plump(relabeled)));

    PlumpCell illegal = good;
    illegal.prepared_moves[1].tau = illegal.prepared_moves[1].tau.with(999).without(illegal.prepared_moves[1].tau[0]);
    EXPECT_TRUE(has_check_failure(verify_plump(illegal)));
}

TEST(Plump, JsonRoundTrip)
{
    const PlumpCell cell = build_plump_cell(2, 9);
    const std::string js = plump_to_json(cell);
    const PlumpCell back = plump_from_json(js);
    EXPECT_EQ(back.disk, cell.disk);
    EXPECT_EQ(back.prepared_moves, cell.prepared_moves);
    EXPECT_EQ(plump_to_json(back), js);
    EXPECT_THROW(plump_from_json("{\"kind\":\"mold\"}"), Error);
}

TEST(Plump, ImplantPreservesResidualsAndPreparedMoves)
{
    for (const char* name : {"sphere2_min", "torus7", "rp2_6", "sphere3_min"}) {
        const FacetComplex c = fixture(name);
        const PlumpCell cell = build_plump_cell(c.dim(), 4);
        for (const Simplex& f : c.facets()) {
            const ImplantResult r = implant(c, f, cell.disk, cell.boundary_labels);
            EXPECT_EQ(euler_characteristic(r.complex), euler_characteristic(c));
            EXPECT_TRUE(is_zero(ds_residual_closed(f_vector(r.complex)))) << name;
            for (const auto& [i, m] : cell.prepared_moves) {
                const BistellarMove moved = through(m, r.vertex_map);
                EXPECT_TRUE(is_legal(r.complex, moved)) << name << " " << moved.to_json();
                const FacetComplex after = apply_bistellar(r.complex, moved);
                for (Vertex v : f)
                    EXPECT_EQ(star(after, Simplex{v}), star(r.complex, Simplex{v})) << name;
            }
        }
    }
}

TEST(Mold, BuildsAndCertifies)
{
    for (int n = 2; n <= 3; ++n)
        for (std::uint64_t seed : {1u, 7u}) {
            const MoldCell cell = build_mold_cell(n, seed);
            const CellCertificate cert = verify_mold(cell);
            EXPECT_TRUE(cert.passed) << n << " " << seed << " " << cert.witness;
            EXPECT_EQ(cell.window.n, n - 1);
            EXPECT_EQ(cell.prepared_shellings.size(), static_cast<std::size_t>(n));
            EXPECT_EQ(verify_manifold(cell.disk).status, ManifoldStatus::VerifiedWithBoundary);
            for (const auto& [i, sh] : cell.prepared_shellings) {
                EXPECT_EQ(sh.i, n - 1 - i);
                const BistellarMove induced = induced_boundary_move(cell.disk, sh);
                const BistellarMove expected = resolve(boundary_complex(cell.disk), cell.window.prepared_moves.at(i));
                EXPECT_EQ(induced.i, expected.i);
                EXPECT_EQ(induced.sigma, expected.sigma);
                if (i > 0)
                    EXPECT_EQ(induced.tau, expected.tau);
                EXPECT_EQ(apply_bistellar(boundary_complex(cell.disk), induced),
                          boundary_complex(apply_shelling(cell.disk, sh)));
            }
        }
}

TEST(Mold, UnsupportedDimensions)
{
    for (int n : {1, 4, 5}) {
        try {
            build_mold_cell(n, 1);
            ADD_FAILURE() << n;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::UnsupportedDimension);
        }
    }
}

TEST(Mold, RejectsTampering)
{
    const MoldCell good = build_mold_cell(3, 2);
    ASSERT_TRUE(verify_mold(good).passed);

    MoldCell holed = good;
    std::vector<Simplex> fs = good.disk.facets();
    fs.pop_back();
    holed.disk = FacetComplex(fs, 3);
    EXPECT_TRUE(has_check_failure(verify_mold(holed)));

    MoldCell swapped = good;
    std::swap(swapped.prepared_shellings[0], swapped.prepared_shellings[1]);
    EXPECT_TRUE(has_check_failure(verify_mold(swapped)));

    MoldCell dropped = good;
    dropped.prepared_shellings.erase(2);
    EXPECT_TRUE(has_check_failure(verify_mold(dropped)));

    MoldCell bad_window = good;
    bad_window.window.prepared_moves.erase(0);
    EXPECT_TRUE(has_check_failure(verify_mold(bad_window)));
}

TEST(Mold, JsonRoundTrip)
{
    const MoldCell cell = build_mold_cell(2, 3);
    const std::string js = mold_to_json(cell);
    const MoldCell back = mold_from_json(js);
    EXPECT_EQ(back.disk, cell.disk);
    EXPECT_EQ(back.prepared_shellings, cell.prepared_shellings);
    EXPECT_EQ(mold_to_json(back), js);
    EXPECT_TRUE(verify_mold(back).passed);
}
