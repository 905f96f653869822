#include "pachner/equalizer.hpp"

#include <algorithm>

#include "json.hpp"
#include "pachner/constructions.hpp"
#include "pachner/error.hpp"
#include "pachner/io.hpp"
#include "pachner/manifold.hpp"

namespace pachner {

namespace {

struct Side {
    FacetComplex c;
    MoveLog log;
};

FVector difference(const FVector& a, const FVector& b)
{
    FVector d = a;
    d.f_minus1 -= b.f_minus1;
    for (std::size_t k = 0; k < d.f.size(); ++k)
        d.f[k] -= b.f[k];
    return d;
}

StageReport snapshot(std::string stage, const Side& a, const Side& b, bool with_boundary)
{
    StageReport r{std::move(stage), f_vector(a.c), f_vector(b.c), std::nullopt, std::nullopt};
    if (with_boundary) {
        r.boundary_f1 = f_vector(boundary_complex(a.c));
        r.boundary_f2 = f_vector(boundary_complex(b.c));
    }
    return r;
}

void require_pseudomanifold(const FacetComplex& c, bool closed, const char* which)
{
    const ManifoldCertificate cert = pseudomanifold_report(c);
    if (closed && cert.status != ManifoldStatus::VerifiedClosed)
        throw Error(ErrorKind::NotClosed, std::string(which) + " is not a closed pseudomanifold: " + cert.detail);
    if (!closed && cert.status != ManifoldStatus::VerifiedWithBoundary) {
        if (cert.status == ManifoldStatus::VerifiedClosed)
            throw Error(ErrorKind::ClosedInput, std::string(which) + " has no boundary");
        throw Error(ErrorKind::NotPseudomanifold, std::string(which) + ": " + cert.detail);
    }
}

int as_count(const Integer& v)
{
    if (v > 1000000)
        throw Error(ErrorKind::BudgetExhausted, "plan needs " + v.str() + " moves");
    return static_cast<int>(v);
}

// Symmetric 0-moves on the lexicographically first facet until both sides
// hold more than `needed` facets.
void pad_facets(Side& a, Side& b, std::size_t needed)
{
    const std::size_t have = std::min(a.c.num_facets(), b.c.num_facets());
    const std::size_t k = needed + 1 > have ? needed + 1 - have : 0;
    for (std::size_t j = 0; j < k; ++j)
        for (Side* s : {&a, &b})
            s->c = record_step(s->log, s->c, StepKind::ZeroMove, BistellarMove{s->c.facets().front(), Simplex{}, 0});
}

BistellarMove mapped(const BistellarMove& m, const std::map<Vertex, Vertex>& map)
{
    auto image = [&](const Simplex& s) {
        std::vector<Vertex> vs;
        for (Vertex v : s)
            vs.push_back(map.at(v));
        return Simplex(std::move(vs));
    };
    return {image(m.sigma), image(m.tau), m.i};
}

void record_implant(Side& s, ImplantStep step, const ImplantResult& r)
{
    s.log.records.push_back({StepKind::Implant, std::move(step), f_vector(s.c), f_vector(r.complex)});
    s.c = r.complex;
}

// Implants the plump cell into the first `count` facets of both sides and
// fires the planned moves in the cells of side a.
void implant_and_fire(Side& a, Side& b, const VirtualMovePlan& plan, const EqualizeOptions& options,
                      std::vector<StageReport>& report, const std::string& prefix, bool with_boundary)
{
    const int n = a.c.dim();
    const int count = as_count(plan.total_moves());
    const FVector gap = difference(f_vector(b.c), f_vector(a.c));

    pad_facets(a, b, static_cast<std::size_t>(count));
    report.push_back(snapshot(prefix + "prepared", a, b, with_boundary));
    if (count == 0)
        return;

    const PlumpCell cell = build_plump_cell(n, options.seed, {options.budget, false});
    std::vector<std::map<Vertex, Vertex>> maps;
    for (Side* s : {&a, &b}) {
        const std::vector<Simplex> targets(s->c.facets().begin(), s->c.facets().begin() + count);
        for (const Simplex& f : targets) {
            const ImplantResult r = implant(s->c, f, cell.disk, cell.boundary_labels);
            record_implant(*s, ImplantStep{f, cell.disk, cell.boundary_labels, std::nullopt, 0}, r);
            if (s == &a)
                maps.push_back(r.vertex_map);
        }
    }
    if (difference(f_vector(b.c), f_vector(a.c)) != gap)
        throw Error(ErrorKind::InternalAssertFailed, "implants changed the f-vector difference");
    report.push_back(snapshot(prefix + "implanted", a, b, with_boundary));

    const std::vector<int> types = plan.move_types();
    for (std::size_t j = 0; j < types.size(); ++j) {
        const BistellarMove m = mapped(cell.prepared_moves.at(types[j]), maps[j]);
        a.c = record_step(a.log, a.c, types[j] == 0 ? StepKind::ZeroMove : StepKind::Bistellar, m);
    }
}

void assert_equal_f(const Side& a, const Side& b, const char* what)
{
    if (f_vector(a.c) != f_vector(b.c))
        throw Error(ErrorKind::InternalAssertFailed, std::string(what) + ": f-vectors differ, " +
                                                         format_fvector(f_vector(a.c)) + " vs " +
                                                         format_fvector(f_vector(b.c)));
}

void assert_equal_boundary_f(const Side& a, const Side& b, const char* what)
{
    const FVector fa = f_vector(boundary_complex(a.c));
    const FVector fb = f_vector(boundary_complex(b.c));
    if (fa != fb)
        throw Error(ErrorKind::InternalAssertFailed, std::string(what) + ": boundary f-vectors differ, " +
                                                         format_fvector(fa) + " vs " + format_fvector(fb));
}

void check_same_dimension(const FacetComplex& c1, const FacetComplex& c2)
{
    if (c1.dim() != c2.dim())
        throw Error(ErrorKind::DimensionMismatch,
                    "dimensions " + std::to_string(c1.dim()) + " and " + std::to_string(c2.dim()) + " differ");
}

// A facet to subdivide: one-face-exposed first, otherwise any facet with a
// boundary ridge.
std::pair<Simplex, Simplex> subdivision_target(const FacetComplex& c)
{
    const auto exposed = one_face_exposed(c);
    if (!exposed.empty())
        return exposed.front();
    const FacetComplex boundary = boundary_complex(c);
    for (const Simplex& f : c.facets())
        for (const Simplex& r : f.ridges())
            if (boundary.has_facet(r))
                return {f, r};
    throw Error(ErrorKind::NoExposedFacet, "no facet meets the boundary in a codimension-one face");
}

void boundary_stage(Side& a, Side& b, const EqualizeOptions& options, EqualizeResult& result)
{
    const int n = a.c.dim();
    const FacetComplex boundary1 = boundary_complex(a.c);
    const FacetComplex boundary2 = boundary_complex(b.c);
    if (euler_characteristic(boundary1) != euler_characteristic(boundary2))
        throw Error(ErrorKind::ChiBoundaryMismatch, "boundary Euler characteristics " +
                                                        std::to_string(euler_characteristic(boundary1)) + " and " +
                                                        std::to_string(euler_characteristic(boundary2)) + " differ");
    const VirtualMovePlan plan = solve_virtual_plan(f_vector(boundary1), f_vector(boundary2));
    const int count = as_count(plan.total_moves());
    result.boundary_plan = plan;
    result.report.push_back(snapshot("input", a, b, true));
    const FVector gap = difference(f_vector(boundary2), f_vector(boundary1));

    while (one_face_exposed(a.c).size() <= static_cast<std::size_t>(count) ||
           one_face_exposed(b.c).size() <= static_cast<std::size_t>(count)) {
        for (Side* s : {&a, &b}) {
            auto [f, g] = subdivision_target(s->c);
            s->c = record_step(s->log, s->c, StepKind::StarSubdivide, SubdivideStep{f, g});
        }
    }
    result.report.push_back(snapshot("boundary-prepared", a, b, true));
    if (count == 0)
        return;

    const MoldCell cell = build_mold_cell(n, options.seed, {options.budget});
    std::vector<Vertex> window_labels = cell.window.boundary_labels;
    std::sort(window_labels.begin(), window_labels.end());
    std::vector<std::map<Vertex, Vertex>> maps;
    for (Side* s : {&a, &b}) {
        const auto exposed = one_face_exposed(s->c);
        const std::vector<std::pair<Simplex, Simplex>> targets(exposed.begin(), exposed.begin() + count);
        for (const auto& [f, g] : targets) {
            const ImplantResult r = implant_along_face(s->c, f, g, cell.disk, window_labels, cell.apex);
            record_implant(*s, ImplantStep{f, cell.disk, window_labels, g, cell.apex}, r);
            if (s == &a)
                maps.push_back(r.vertex_map);
        }
    }
    if (difference(f_vector(boundary_complex(b.c)), f_vector(boundary_complex(a.c))) != gap)
        throw Error(ErrorKind::InternalAssertFailed, "mold implants changed the boundary f-vector difference");
    result.report.push_back(snapshot("molds-implanted", a, b, true));

    const std::vector<int> types = plan.move_types();
    for (std::size_t j = 0; j < types.size(); ++j) {
        const ShellingMove& sh = cell.prepared_shellings.at(types[j]);
        auto image = [&](const Simplex& s) {
            std::vector<Vertex> vs;
            for (Vertex v : s)
                vs.push_back(maps[j].at(v));
            return Simplex(std::move(vs));
        };
        a.c = record_step(a.log, a.c, StepKind::Shelling, ShellingMove{image(sh.sigma), image(sh.tau), sh.i});
    }
    assert_equal_boundary_f(a, b, "boundary stage");
    result.report.push_back(snapshot("boundary-equalized", a, b, true));
}

EqualizeResult finish(Side& a, Side& b, EqualizeResult result, const EqualizeOptions& options)
{
    result.c1_star = a.c;
    result.c2_star = b.c;
    result.log1 = std::move(a.log);
    result.log2 = std::move(b.log);
    result.seed = options.seed;
    result.budget = options.budget;
    return result;
}

} // namespace

EqualizeResult equalize_closed(const FacetComplex& c1, const FacetComplex& c2, const EqualizeOptions& options)
{
    check_same_dimension(c1, c2);
    require_pseudomanifold(c1, true, "first complex");
    require_pseudomanifold(c2, true, "second complex");
    if (euler_characteristic(c1) != euler_characteristic(c2))
        throw Error(ErrorKind::ChiMismatch, "Euler characteristics " + std::to_string(euler_characteristic(c1)) +
                                                " and " + std::to_string(euler_characteristic(c2)) + " differ");
    EqualizeResult result;
    const VirtualMovePlan plan = solve_virtual_plan(f_vector(c1), f_vector(c2));
    result.plan = plan;
    Side a{c1, {}}, b{c2, {}};
    result.report.push_back(snapshot("input", a, b, false));
    implant_and_fire(a, b, plan, options, result.report, "", false);
    assert_equal_f(a, b, "closed equalization");
    result.report.push_back(snapshot("equalized", a, b, false));
    return finish(a, b, std::move(result), options);
}

EqualizeResult equalize_boundary(const FacetComplex& c1, const FacetComplex& c2, const EqualizeOptions& options)
{
    check_same_dimension(c1, c2);
    if (c1.dim() != 2 && c1.dim() != 3)
        throw Error(ErrorKind::UnsupportedDimension, "bounded equalization supports n = 2 and n = 3");
    require_pseudomanifold(c1, false, "first complex");
    require_pseudomanifold(c2, false, "second complex");
    EqualizeResult result;
    Side a{c1, {}}, b{c2, {}};
    boundary_stage(a, b, options, result);
    return finish(a, b, std::move(result), options);
}

EqualizeResult equalize_full(const FacetComplex& c1, const FacetComplex& c2, const EqualizeOptions& options)
{
    check_same_dimension(c1, c2);
    if (c1.dim() != 2 && c1.dim() != 3)
        throw Error(ErrorKind::UnsupportedDimension, "bounded equalization supports n = 2 and n = 3");
    require_pseudomanifold(c1, false, "first complex");
    require_pseudomanifold(c2, false, "second complex");
    EqualizeResult result;
    Side a{c1, {}}, b{c2, {}};
    boundary_stage(a, b, options, result);

    if (euler_characteristic(a.c) != euler_characteristic(b.c))
        throw Error(ErrorKind::ChiMismatch, "Euler characteristics " + std::to_string(euler_characteristic(a.c)) +
                                                " and " + std::to_string(euler_characteristic(b.c)) + " differ");
    const FacetComplex boundary1 = boundary_complex(a.c);
    const FacetComplex boundary2 = boundary_complex(b.c);
    const VirtualMovePlan plan = solve_virtual_plan(hat_f(f_vector(a.c), f_vector(boundary1)),
                                                    hat_f(f_vector(b.c), f_vector(boundary2)));
    result.plan = plan;
    implant_and_fire(a, b, plan, options, result.report, "interior-", true);
    if (boundary_complex(a.c) != boundary1 || boundary_complex(b.c) != boundary2)
        throw Error(ErrorKind::InternalAssertFailed, "interior stage touched a boundary");
    assert_equal_f(a, b, "full equalization");
    assert_equal_boundary_f(a, b, "full equalization");
    result.report.push_back(snapshot("equalized", a, b, true));
    return finish(a, b, std::move(result), options);
}

namespace {

nlohmann::ordered_json stage_json(const StageReport& r)
{
    nlohmann::ordered_json j;
    j["stage"] = r.stage;
    j["f1"] = format_fvector(r.f1, true);
    j["f2"] = format_fvector(r.f2, true);
    if (r.boundary_f1) {
        j["boundary_f1"] = format_fvector(*r.boundary_f1, true);
        j["boundary_f2"] = format_fvector(*r.boundary_f2, true);
    }
    return j;
}

} // namespace

std::string report_json(const EqualizeResult& result)
{
    nlohmann::ordered_json j;
    j["seed"] = result.seed;
    j["budget"] = result.budget;
    if (result.boundary_plan) {
        j["boundary_plan"] = result.boundary_plan->to_string();
        j["boundary_moves"] = result.boundary_plan->total_moves().str();
    }
    if (result.plan) {
        j["plan"] = result.plan->to_string();
        j["moves"] = result.plan->total_moves().str();
    }
    j["log1_records"] = result.log1.size();
    j["log2_records"] = result.log2.size();
    auto stages = nlohmann::ordered_json::array();
    for (const StageReport& r : result.report)
        stages.push_back(stage_json(r));
    j["stages"] = std::move(stages);
    j["final_f1"] = format_fvector(f_vector(result.c1_star), true);
    j["final_f2"] = format_fvector(f_vector(result.c2_star), true);
    j["f_equal"] = f_vector(result.c1_star) == f_vector(result.c2_star);
    if (result.boundary_plan) {
        const FVector b1 = f_vector(boundary_complex(result.c1_star));
        const FVector b2 = f_vector(boundary_complex(result.c2_star));
        j["final_boundary_f1"] = format_fvector(b1, true);
        j["final_boundary_f2"] = format_fvector(b2, true);
        j["boundary_f_equal"] = b1 == b2;
    }
    return j.dump(2) + "\n";
}

void write_result(const EqualizeResult& result, const std::filesystem::path& dir)
{
    std::filesystem::create_directories(dir);
    write_file(dir / "c1.fl", write_facet_list(result.c1_star));
    write_file(dir / "c2.fl", write_facet_list(result.c2_star));
    write_file(dir / "log1.jsonl", write_jsonl(result.log1));
    write_file(dir / "log2.jsonl", write_jsonl(result.log2));
    write_file(dir / "report.json", report_json(result));
}

} // namespace pachner
