#include <gtest/gtest.h>

#include <filesystem>

#include "oracles.hpp"
#include "pachner/constructions.hpp"
#include "pachner/equalizer.hpp"
#include "pachner/error.hpp"
#include "pachner/io.hpp"
#include "pachner/moves.hpp"

using namespace pachner;

namespace {

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InternalAssertFailed;
}

std::size_t count_kind(const MoveLog& log, StepKind kind)
{
    std::size_t n = 0;
    for (const LogRecord& r : log.records)
        n += r.kind == kind;
    return n;
}

FacetComplex walked(const char* name, std::uint64_t seed, int steps)
{
    oracle::Rng rng(seed);
    return oracle::random_walk(fixture(name), rng, steps);
}

void expect_sound(const FacetComplex& c1, const FacetComplex& c2, const EqualizeResult& r)
{
    EXPECT_EQ(f_vector(r.c1_star), f_vector(r.c2_star));
    EXPECT_EQ(replay(c1, r.log1), r.c1_star);
    EXPECT_EQ(replay(c2, r.log2), r.c2_star);
    EXPECT_EQ(write_facet_list(replay(c1, parse_jsonl(write_jsonl(r.log1)))), write_facet_list(r.c1_star));
    for (const StageReport& s : r.report)
        for (const FVector* fv : {&s.f1, &s.f2}) {
            if (s.boundary_f1)
                EXPECT_TRUE(is_zero(ds_residual_boundary(*fv, fv == &s.f1 ? *s.boundary_f1 : *s.boundary_f2)))
                    << s.stage;
            else
                EXPECT_TRUE(is_zero(ds_residual_closed(*fv))) << s.stage;
        }
}

} // namespace

TEST(EqualizeClosed, SphereAndIcosahedron)
{
    const FacetComplex a = fixture("sphere2_min"), b = fixture("icosahedron");
    const EqualizeResult r = equalize_closed(a, b);
    ASSERT_TRUE(r.plan);
    EXPECT_EQ(r.plan->to_string(), "0:+8; N=8");
    expect_sound(a, b, r);
    // Everything except the planned moves happens symmetrically.
    EXPECT_EQ(r.log1.size() - r.log2.size(), 8u);
    EXPECT_EQ(count_kind(r.log1, StepKind::Implant), count_kind(r.log2, StepKind::Implant));
    EXPECT_EQ(count_kind(r.log1, StepKind::Implant), 8u);
}

TEST(EqualizeClosed, TorusAgainstShuffledTorus)
{
    const FacetComplex a = fixture("torus7");
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const FacetComplex b = walked("torus7", seed, 5);
        const EqualizeResult r = equalize_closed(a, b, {.seed = seed});
        expect_sound(a, b, r);
        EXPECT_EQ(r.log1.size() - r.log2.size(), static_cast<std::size_t>(r.plan->total_moves()));
    }
}

TEST(EqualizeClosed, ThreeSpheres)
{
    const FacetComplex a = fixture("sphere3_min");
    const FacetComplex b = walked("sphere3_min", 8, 6);
    const EqualizeResult r = equalize_closed(a, b);
    expect_sound(a, b, r);
    EXPECT_EQ(r.log1.size() - r.log2.size(), static_cast<std::size_t>(r.plan->total_moves()));
}

TEST(EqualizeClosed, IdenticalInputsGiveEmptyPlan)
{
    const FacetComplex a = fixture("rp2_6");
    const EqualizeResult r = equalize_closed(a, a);
    EXPECT_EQ(r.plan->to_string(), "N=0");
    EXPECT_EQ(r.c1_star, r.c2_star);
}

TEST(EqualizeClosed, Preconditions)
{
    EXPECT_EQ(kind_of([] { equalize_closed(fixture("sphere2_min"), fixture("torus7")); }), ErrorKind::ChiMismatch);
    EXPECT_EQ(kind_of([] { equalize_closed(fixture("sphere2_min"), fixture("sphere3_min")); }),
              ErrorKind::DimensionMismatch);
    EXPECT_EQ(kind_of([] { equalize_closed(fixture("disk_cone"), fixture("disk_square")); }), ErrorKind::NotClosed);
}

TEST(EqualizeClosed, Deterministic)
{
    const FacetComplex a = fixture("torus7"), b = walked("torus7", 4, 5);
    const EqualizeResult r1 = equalize_closed(a, b, {.seed = 9});
    const EqualizeResult r2 = equalize_closed(a, b, {.seed = 9});
    EXPECT_EQ(report_json(r1), report_json(r2));
    EXPECT_EQ(write_jsonl(r1.log1), write_jsonl(r2.log1));
    EXPECT_EQ(write_jsonl(r1.log2), write_jsonl(r2.log2));
}

TEST(EqualizeBoundary, DisksOfDifferentPerimeter)
{
    const FacetComplex a = fixture("disk_cone"), b = fixture("disk_square");
    const EqualizeResult r = equalize_boundary(a, b);
    ASSERT_TRUE(r.boundary_plan);
    EXPECT_EQ(f_vector(boundary_complex(r.c1_star)), f_vector(boundary_complex(r.c2_star)));
    EXPECT_EQ(replay(a, r.log1), r.c1_star);
    EXPECT_EQ(replay(b, r.log2), r.c2_star);
    EXPECT_EQ(count_kind(r.log1, StepKind::Shelling), static_cast<std::size_t>(r.boundary_plan->total_moves()));
    EXPECT_EQ(count_kind(r.log2, StepKind::Shelling), 0u);
}

TEST(EqualizeBoundary, ThreeBalls)
{
    const FacetComplex a = fixture("ball3_cone"), b = fixture("ball3_two");
    const EqualizeResult r = equalize_boundary(a, b);
    EXPECT_EQ(f_vector(boundary_complex(r.c1_star)), f_vector(boundary_complex(r.c2_star)));
    EXPECT_EQ(replay(a, r.log1), r.c1_star);
    EXPECT_EQ(replay(b, r.log2), r.c2_star);
}

TEST(EqualizeBoundary, SameInputGivesZeroPlan)
{
    const FacetComplex a = fixture("disk_hexagon");
    const EqualizeResult r = equalize_boundary(a, a);
    EXPECT_EQ(r.boundary_plan->to_string(), "N=0");
    EXPECT_EQ(r.c1_star, r.c2_star);
    EXPECT_EQ(count_kind(r.log1, StepKind::Shelling), 0u);
}

TEST(EqualizeBoundary, Preconditions)
{
    EXPECT_EQ(kind_of([] { equalize_boundary(fixture("ball4_cone"), fixture("ball4_cone")); }),
              ErrorKind::UnsupportedDimension);
    EXPECT_EQ(kind_of([] { equalize_boundary(fixture("sphere2_min"), fixture("disk_cone")); }),
              ErrorKind::ClosedInput);
}

TEST(EqualizeFull, DisksAgreeInFAndBoundaryF)
{
    const FacetComplex a = fixture("disk_cone"), b = fixture("disk_hexagon");
    const EqualizeResult r = equalize_full(a, b);
    expect_sound(a, b, r);
    EXPECT_EQ(f_vector(boundary_complex(r.c1_star)), f_vector(boundary_complex(r.c2_star)));
    ASSERT_GE(r.report.size(), 2u);
    // The interior stage never touches the boundary.
    const FacetComplex b1 = replay(a, r.log1);
    EXPECT_EQ(write_facet_list(boundary_complex(b1)), write_facet_list(boundary_complex(r.c1_star)));
}

TEST(EqualizeFull, BoundaryUnchangedByInteriorStage)
{
    const FacetComplex a = fixture("disk_two"), b = fixture("disk_square");
    const EqualizeResult full = equalize_full(a, b, {.seed = 3});
    const EqualizeResult stage1 = equalize_boundary(a, b, {.seed = 3});
    EXPECT_EQ(write_facet_list(boundary_complex(full.c1_star)), write_facet_list(boundary_complex(stage1.c1_star)));
    EXPECT_EQ(write_facet_list(boundary_complex(full.c2_star)), write_facet_list(boundary_complex(stage1.c2_star)));
    expect_sound(a, b, full);
}

TEST(EqualizeFull, RejectsChiMismatchAfterBoundaryStage)
{
    // Removing a triangle from the projective plane leaves a Moebius band:
    // its boundary is a circle like the disk's, but chi is 0 instead of 1.
    std::vector<Simplex> fs = fixture("rp2_6").facets();
    fs.erase(fs.begin());
    const FacetComplex mobius(fs, 2);
    ASSERT_EQ(euler_characteristic(mobius), 0);
    EXPECT_EQ(kind_of([&] { equalize_full(fixture("disk_cone"), mobius); }), ErrorKind::ChiMismatch);
}

TEST(WriteResult, WritesAllFiles)
{
    const std::filesystem::path dir = std::filesystem::temp_directory_path() / "pachner_eq_test";
    std::filesystem::remove_all(dir);
    const EqualizeResult r = equalize_closed(fixture("sphere2_min"), fixture("bipyramid"));
    write_result(r, dir);
    for (const char* f : {"c1.fl", "c2.fl", "log1.jsonl", "log2.jsonl", "report.json"})
        EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
    EXPECT_EQ(load_complex(dir / "c1.fl"), r.c1_star);
    EXPECT_EQ(read_file(dir / "report.json"), report_json(r));
    std::filesystem::remove_all(dir);
}
