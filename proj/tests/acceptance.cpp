// Acceptance suite: one PASS/FAIL line per criterion, each under a pinned
// wall-clock limit. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pachner/constructions.hpp"
#include "pachner/equalizer.hpp"
#include "pachner/error.hpp"
#include "pachner/fvector.hpp"
#include "pachner/io.hpp"
#include "pachner/manifold.hpp"
#include "pachner/move_log.hpp"
#include "pachner/moves.hpp"

using namespace pachner;

namespace {

constexpr double limit_ds = 1.0;
constexpr double limit_moves = 10.0;
constexpr double limit_solver = 5.0;
constexpr double limit_qmatrix = 5.0;
constexpr double limit_double = 5.0;
constexpr double limit_plump_each = 30.0;
constexpr double limit_mold_each = 60.0;
constexpr double limit_shelling = 10.0;
constexpr double limit_subdivide = 10.0;
constexpr double limit_closed_each = 10.0;
constexpr double limit_full = 30.0;
constexpr double limit_determinism = 120.0;

constexpr std::uint64_t seed = 1;

// Collects failures; a criterion passes when nothing was recorded.
struct Check {
    std::vector<std::string> failures;
    std::vector<std::pair<std::string, double>> timed; // sub-run, seconds

    void expect(bool ok, const std::string& what)
    {
        if (!ok)
            failures.push_back(what);
    }
    template <class F>
    auto within(const std::string& what, double limit, F&& f)
    {
        const auto t0 = std::chrono::steady_clock::now();
        auto out = f();
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        timed.emplace_back(what, s);
        expect(s < limit, what + " took " + std::to_string(s) + " s (limit " + std::to_string(limit) + " s)");
        return out;
    }
};

std::vector<FacetComplex> fixtures_where(const std::function<bool(const FacetComplex&)>& keep)
{
    std::vector<FacetComplex> out;
    for (const FixtureInfo& info : fixture_catalog()) {
        FacetComplex c = fixture(info.name);
        if (keep(c))
            out.push_back(std::move(c));
    }
    return out;
}

bool bounded(const FacetComplex& c)
{
    return !boundary_complex(c).is_empty();
}

std::vector<Integer> delta(const FacetComplex& before, const FacetComplex& after)
{
    const FVector a = f_vector(before), b = f_vector(after);
    std::vector<Integer> out;
    for (std::size_t k = 0; k < a.f.size(); ++k)
        out.push_back(b.f[k] - a.f[k]);
    return out;
}

std::string label(const FacetComplex& c)
{
    return c.name().value_or("?");
}

void ds(Check& chk)
{
    for (int n = 1; n <= 6; ++n)
        chk.expect(is_zero(ds_residual_closed(f_vector(boundary_of_simplex(n)))), "closed residual on sphere n=" + std::to_string(n));
    for (const char* name : {"icosahedron", "torus7", "rp2_6"})
        chk.expect(is_zero(ds_residual_closed(f_vector(fixture(name)))), std::string("closed residual on ") + name);
    for (const FacetComplex& c : fixtures_where(bounded))
        chk.expect(is_zero(ds_residual_boundary(f_vector(c), f_vector(boundary_complex(c)))),
                   "boundary residual on " + label(c));
}

void move_delta(Check& chk)
{
    std::size_t count = 0;
    for (const FacetComplex& c : fixtures_where([](const FacetComplex& c) { return c.dim() >= 2 && c.dim() <= 4; }))
        for (const BistellarMove& m : enumerate_bistellar(c)) {
            ++count;
            chk.expect(delta(c, apply_bistellar(c, m)) == d_vector(c.dim(), m.i).d, label(c) + " " + m.to_json());
        }
    chk.expect(count > 0, "no moves enumerated");
    for (int n = 0; n <= 10; ++n)
        for (int i = 0; i <= n; ++i) {
            const auto d = d_vector(n, i).d, e = d_vector(n, n - i).d;
            for (int k = 0; k <= n; ++k) {
                chk.expect(e[static_cast<std::size_t>(k)] == -d[static_cast<std::size_t>(k)], "antisymmetry n=" + std::to_string(n));
                if (2 * i == n)
                    chk.expect(d[static_cast<std::size_t>(k)] == 0, "middle zero n=" + std::to_string(n));
            }
        }
}

void solver(Check& chk)
{
    oracle::Rng rng(seed);
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + rng.below(6);
        std::vector<Rational> lower{n % 2 == 0 ? Rational(1 + rng.below(3)) : Rational(0)};
        for (int j = 0; j <= lower_half(n); ++j)
            lower.emplace_back(20 + rng.below(200));
        const RationalFVector base = complete_f(lower, n);
        chk.expect(is_zero(ds_residual_closed(base)), "base not consistent");
        VirtualMovePlan plan{n, {}};
        for (int i = 0; i <= lower_half(n); ++i)
            plan.x.emplace_back(rng.below(21) - 10);
        const RationalFVector target = apply_virtual(base, plan);
        const VirtualMovePlan found = solve_virtual_plan(base, target);
        const RationalFVector reached = apply_virtual(base, found);
        chk.expect(reached.f == target.f && reached.f_minus1 == target.f_minus1, "pair " + std::to_string(t));
    }
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= lower_half(n); ++k)
            for (int i = k; i <= lower_half(n); ++i) {
                const Integer d = d_vector(n, i).d[static_cast<std::size_t>(k)];
                chk.expect(d == (i == k ? 1 : 0), "reduced matrix entry n=" + std::to_string(n));
            }
}

void qmatrix(Check& chk)
{
    for (int n = 1; n <= 6; ++n)
        try {
            q_matrix(n);
        } catch (const Error& e) {
            chk.expect(false, e.what());
        }
    const QMatrix q2 = q_matrix(2), q3 = q_matrix(3);
    chk.expect(q2.at(1, -1) == -6 && q2.at(1, 0) == 3 && q2.at(2, -1) == -4 && q2.at(2, 0) == 2, "n=2 coefficients");
    chk.expect(q3.at(2, -1) == 0 && q3.at(2, 0) == -2 && q3.at(2, 1) == 2 && q3.at(3, 0) == -1 && q3.at(3, 1) == 1,
               "n=3 coefficients");
    std::vector<FacetComplex> closed = fixtures_where([](const FacetComplex& c) { return c.dim() >= 1 && !bounded(c); });
    for (int n = 1; n <= 6; ++n)
        closed.push_back(boundary_of_simplex(n).with_name("sphere" + std::to_string(n)));
    for (const FacetComplex& c : closed) {
        const FVector fv = f_vector(c);
        std::vector<Rational> lower{fv.f_minus1};
        for (int j = 0; j <= lower_half(c.dim()); ++j)
            lower.emplace_back(fv.f[static_cast<std::size_t>(j)]);
        const RationalFVector full = complete_f(lower, c.dim());
        chk.expect(full.f == to_rational(fv).f, "complete_f on " + label(c));
    }
}

void doubling(Check& chk)
{
    std::size_t admissible = 0;
    for (const FacetComplex& c : fixtures_where(bounded)) {
        FacetComplex d;
        try {
            d = double_complex(c);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::DegenerateDouble)
                continue;
            throw;
        }
        ++admissible;
        const FVector fc = f_vector(c), fb = f_vector(boundary_complex(c)), fd = f_vector(d);
        for (int k = 0; k <= c.dim(); ++k) {
            const Integer b = k < c.dim() ? fb.f[static_cast<std::size_t>(k)] : Integer(0);
            chk.expect(fd.f[static_cast<std::size_t>(k)] == 2 * fc.f[static_cast<std::size_t>(k)] - b,
                       "f_" + std::to_string(k) + " of double " + label(c));
        }
        chk.expect(verify_manifold(d).status == ManifoldStatus::VerifiedClosed, "double of " + label(c) + " not closed");
    }
    chk.expect(admissible > 0, "no admissible fixture");
}

std::string plump_run(Check& chk, int n)
{
    const PlumpCell cell = chk.within("plump n=" + std::to_string(n), limit_plump_each, [&] {
        return build_plump_cell(n, seed);
    });
    const CellCertificate cert = verify_plump(cell);
    chk.expect(cert.passed, "plump n=" + std::to_string(n) + ": " + cert.witness);
    return plump_to_json(cell);
}

void plump(Check& chk)
{
    for (int n = 1; n <= 3; ++n)
        plump_run(chk, n);
    chk.expect(!verify_plump(plump_from_disk(build_complex({{1, 2, 3}}), {1, 2, 3})).passed, "bare simplex accepted");
    const PlumpCell good = build_plump_cell(2, seed);
    std::vector<PlumpCell> tampered;
    for (const auto& [i, m] : good.prepared_moves) {
        PlumpCell t = good;
        t.prepared_moves.erase(i);
        tampered.push_back(t);
    }
    for (std::size_t k = 0; k < good.disk.num_facets(); ++k) {
        PlumpCell t = good;
        std::vector<Simplex> fs = good.disk.facets();
        fs.erase(fs.begin() + static_cast<long>(k));
        t.disk = FacetComplex(fs, 2);
        tampered.push_back(t);
    }
    for (const Simplex& f : good.disk.facets())
        for (Vertex v : good.boundary_labels)
            if (f.contains(v)) {
                PlumpCell t = good;
                t.prepared_moves[0] = BistellarMove{f, Simplex{}, 0};
                tampered.push_back(t);
            }
    {
        PlumpCell t = good;
        t.boundary_labels.back() += 100;
        tampered.push_back(t);
    }
    for (std::size_t k = 0; k < tampered.size(); ++k)
        chk.expect(!verify_plump(tampered[k]).passed, "tampered cell " + std::to_string(k) + " accepted");
}

std::string mold_run(Check& chk, int n)
{
    const MoldCell cell = chk.within("mold n=" + std::to_string(n), limit_mold_each, [&] {
        return build_mold_cell(n, seed);
    });
    const CellCertificate cert = verify_mold(cell);
    chk.expect(cert.passed, "mold n=" + std::to_string(n) + ": " + cert.witness);
    const FacetComplex before = boundary_complex(cell.disk);
    for (int i = 0; i < n; ++i) {
        const auto sh = cell.prepared_shellings.find(i);
        if (sh == cell.prepared_shellings.end()) {
            chk.expect(false, "missing shelling for type " + std::to_string(i));
            continue;
        }
        const FacetComplex after = boundary_complex(apply_shelling(cell.disk, sh->second));
        const FacetComplex expected = apply_bistellar(before, cell.window.prepared_moves.at(i));
        // Explicit diff: removed and added boundary facets must coincide.
        chk.expect(after == expected, "mold n=" + std::to_string(n) + " type " + std::to_string(i) + " boundary diff");
    }
    return mold_to_json(cell);
}

void mold(Check& chk)
{
    for (int n = 2; n <= 3; ++n)
        mold_run(chk, n);
}

void shelling(Check& chk)
{
    for (const FacetComplex& c : fixtures_where(bounded)) {
        const FacetComplex before = boundary_complex(c);
        for (const ShellingMove& m : enumerate_shellings(c)) {
            const BistellarMove b = induced_boundary_move(c, m);
            chk.expect(b.i == c.dim() - 1 - m.i, label(c) + " type of " + m.to_json());
            chk.expect(apply_bistellar(before, b) == boundary_complex(apply_shelling(c, m)), label(c) + " " + m.to_json());
        }
    }
}

void subdivision(Check& chk)
{
    std::size_t cases = 0;
    for (const FacetComplex& c : fixtures_where([](const FacetComplex& c) {
             return (c.dim() == 2 || c.dim() == 3) && bounded(c) && verify_manifold(c).status == ManifoldStatus::VerifiedWithBoundary;
         })) {
        const FacetComplex b = boundary_complex(c);
        for (const Simplex& f : c.facets())
            for (const Simplex& g : f.ridges()) {
                if (!b.has_facet(g))
                    continue;
                ++cases;
                const FacetComplex out = star_subdivide_along_face(c, f, g);
                // The new facets along g are the ones through the subdivision vertex.
                const Vertex w = c.max_vertex() + 1;
                std::size_t fresh = 0;
                for (const auto& [facet, face] : one_face_exposed(out))
                    fresh += facet.contains(w);
                chk.expect(fresh == static_cast<std::size_t>(c.dim()), label(c) + " " + f.to_string() + "/" + g.to_string());
            }
    }
    chk.expect(cases > 0, "no exposed facets to subdivide");
}

std::string closed_run(Check& chk, const std::string& what, const FacetComplex& a, const FacetComplex& b)
{
    const EqualizeResult r = chk.within(what, limit_closed_each, [&] {
        return equalize_closed(a, b, {.seed = seed});
    });
    chk.expect(f_vector(r.c1_star) == f_vector(r.c2_star), what + " f-vectors differ");
    const std::string out1 = write_facet_list(r.c1_star), out2 = write_facet_list(r.c2_star);
    chk.expect(write_facet_list(replay(a, parse_jsonl(write_jsonl(r.log1)))) == out1, what + " log1 replay");
    chk.expect(write_facet_list(replay(b, parse_jsonl(write_jsonl(r.log2)))) == out2, what + " log2 replay");
    return out1 + out2 + write_jsonl(r.log1) + write_jsonl(r.log2) + report_json(r);
}

FacetComplex shuffled_torus()
{
    oracle::Rng rng(seed);
    return oracle::random_walk(fixture("torus7"), rng, 5);
}

std::string closed_pairs(Check& chk)
{
    std::string out = closed_run(chk, "sphere vs icosahedron", fixture("sphere2_min"), fixture("icosahedron"));
    return out + closed_run(chk, "torus vs shuffled torus", fixture("torus7"), shuffled_torus());
}

void closed(Check& chk)
{
    closed_pairs(chk);
}

std::string full_run(Check& chk)
{
    const FacetComplex a = fixture("disk_cone"), b = fixture("disk_hexagon");
    const EqualizeResult r = chk.within("equalize_full", limit_full, [&] {
        return equalize_full(a, b, {.seed = seed});
    });
    chk.expect(f_vector(r.c1_star) == f_vector(r.c2_star), "f differs");
    chk.expect(f_vector(boundary_complex(r.c1_star)) == f_vector(boundary_complex(r.c2_star)), "boundary f differs");
    chk.expect(replay(a, r.log1) == r.c1_star && replay(b, r.log2) == r.c2_star, "replay");
    const EqualizeResult stage1 = equalize_boundary(a, b, {.seed = seed});
    chk.expect(write_facet_list(boundary_complex(stage1.c1_star)) == write_facet_list(boundary_complex(r.c1_star)),
               "interior stage changed the first boundary");
    chk.expect(write_facet_list(boundary_complex(stage1.c2_star)) == write_facet_list(boundary_complex(r.c2_star)),
               "interior stage changed the second boundary");
    return write_facet_list(r.c1_star) + write_facet_list(r.c2_star) + write_jsonl(r.log1) + write_jsonl(r.log2) +
           report_json(r);
}

void full(Check& chk)
{
    full_run(chk);
}

void determinism(Check& chk)
{
    auto everything = [](Check& c) {
        std::string s;
        for (int n = 1; n <= 3; ++n)
            s += plump_run(c, n);
        for (int n = 2; n <= 3; ++n)
            s += mold_run(c, n);
        s += closed_pairs(c);
        return s + full_run(c);
    };
    Check first, second;
    const std::string a = chk.within("first run", limit_determinism, [&] { return everything(first); });
    const std::string b = chk.within("second run", limit_determinism, [&] { return everything(second); });
    chk.expect(a == b, "outputs differ between runs");
    chk.expect(first.failures.empty() && second.failures.empty(), "a repeated criterion failed");
}

struct Criterion {
    int id;
    std::string name;
    double limit; // whole criterion, seconds
    std::function<void(Check&)> body;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "Dehn-Sommerville residuals vanish on fixtures", limit_ds, ds},
        {2, "move deltas match d-vectors; antisymmetry and middle zero", limit_moves, move_delta},
        {3, "virtual solver recovers 100 seeded plans", limit_solver, solver},
        {4, "q-matrix is integral and completes closed f-vectors", limit_qmatrix, qmatrix},
        {5, "doubling formula on bounded fixtures", limit_double, doubling},
        {6, "plump cells certify for n=1,2,3; tampering rejected", 3 * limit_plump_each, plump},
        {7, "mold cells certify for n=2,3 with matching boundary diffs", 2 * limit_mold_each, mold},
        {8, "shelling and boundary move coupling", limit_shelling, shelling},
        {9, "star subdivision creates n one-face-exposed facets", limit_subdivide, subdivision},
        {10, "closed equalizer on sphere and torus pairs", 2 * limit_closed_each, closed},
        {11, "full equalizer on two disks", limit_full, full},
        {12, "repeated runs are byte-identical", 2 * limit_determinism, determinism},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        Check chk;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.body(chk);
        } catch (const std::exception& e) {
            chk.failures.push_back(std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (s >= c.limit)
            chk.failures.push_back("took " + std::to_string(s) + " s (limit " + std::to_string(c.limit) + " s)");
        const bool ok = chk.failures.empty();
        failed += !ok;
        std::ostringstream line;
        line << (ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << " (" << static_cast<long>(s * 1000) << " ms)";
        std::printf("%s\n", line.str().c_str());
        for (const auto& [what, t] : chk.timed)
            std::printf("         %s: %ld ms\n", what.c_str(), static_cast<long>(t * 1000));
        for (std::size_t k = 0; k < chk.failures.size() && k < 10; ++k)
            std::printf("         - %s\n", chk.failures[k].c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
