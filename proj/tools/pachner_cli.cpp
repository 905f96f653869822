// pachner: command-line front end to the pachner library.
//
// Inputs are facet-list or JSON files; `fixture:<name>` loads a built-in
// complex instead. Exit codes: 0 ok, 2 parse, 3 illegal move, 4 failed
// precondition, 5 internal assertion, 6 budget exhausted.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "pachner/complex.hpp"
#include "pachner/constructions.hpp"
#include "pachner/equalizer.hpp"
#include "pachner/error.hpp"
#include "pachner/fvector.hpp"
#include "pachner/io.hpp"
#include "pachner/manifold.hpp"
#include "pachner/move_log.hpp"
#include "pachner/moves.hpp"

using namespace pachner;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitIllegal = 3;
constexpr int kExitPrecondition = 4;
constexpr int kExitInternal = 5;
constexpr int kExitBudget = 6;

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::NotPure:
    case ErrorKind::DuplicateFacet:
    case ErrorKind::BadVertexId:
    case ErrorKind::UnknownFixture:
        return kExitParse;
    case ErrorKind::IllegalMove:
    case ErrorKind::IllegalShelling:
    case ErrorKind::ReplayMismatch:
    case ErrorKind::NotAFace:
    case ErrorKind::NotAFacet:
    case ErrorKind::NotABoundaryFace:
    case ErrorKind::EmptyResult:
    case ErrorKind::VertexClash:
        return kExitIllegal;
    case ErrorKind::InternalAssertFailed:
    case ErrorKind::VerificationFailed:
        return kExitInternal;
    case ErrorKind::BudgetExhausted:
        return kExitBudget;
    default:
        return kExitPrecondition;
    }
}

struct Globals {
    std::uint64_t seed = 1;
    int budget = 400;
    std::string format = "text";
    bool json() const { return format == "json"; }
};

FacetComplex load_input(const std::string& source)
{
    constexpr std::string_view prefix = "fixture:";
    if (source.rfind(prefix, 0) == 0)
        return fixture(source.substr(prefix.size()));
    return load_complex(source);
}

std::vector<Vertex> parse_ids(const std::string& text)
{
    std::vector<Vertex> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long v = std::stol(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
            out.push_back(static_cast<Vertex>(v));
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "bad vertex list '" + text + "'");
        }
    }
    return out;
}

Simplex parse_simplex(const std::string& text) { return Simplex(parse_ids(text)); }

void emit_complex(const FacetComplex& c, const std::string& out)
{
    if (out.empty() || out == "-")
        std::cout << write_facet_list(c);
    else
        write_file(out, write_facet_list(c));
}

void emit_log(const MoveLog& log, const std::string& out, const std::string& log_path)
{
    std::string path = log_path;
    if (path.empty() && !out.empty() && out != "-")
        path = out + ".log.jsonl";
    if (!path.empty())
        write_file(path, write_jsonl(log));
}

std::string rationals(const std::vector<Rational>& v)
{
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k)
        out += (k ? "," : "") + v[k].str();
    return out;
}

// ---------------------------------------------------------------------------

int cmd_fvec(const Globals& g, const std::string& path)
{
    const FacetComplex c = load_input(path);
    const FVector fv = f_vector(c);
    const long long chi = euler_characteristic(c);
    const FacetComplex boundary = boundary_complex(c);
    ordered_json j;
    j["f"] = format_fvector(fv);
    j["chi"] = chi;
    std::string line = "f = " + format_fvector(fv) + "; chi = " + std::to_string(chi);
    if (boundary.is_empty()) {
        const auto residual = ds_residual_closed(fv);
        const bool ok = is_zero(residual);
        j["ds"] = ok ? "closed-ok" : "closed-residual " + rationals(residual);
        line += "; DS: " + j["ds"].get<std::string>();
    } else {
        const FVector bf = f_vector(boundary);
        const auto residual = ds_residual_boundary(fv, bf);
        const bool ok = is_zero(residual);
        j["boundary_f"] = format_fvector(bf);
        j["ds_boundary"] = ok ? "ok" : "residual " + rationals(residual);
        line += "; boundary f = " + format_fvector(bf) + "; DS(2): " + j["ds_boundary"].get<std::string>();
    }
    std::cout << (g.json() ? j.dump() : line) << "\n";
    return kExitOk;
}

int check_cell(const Globals& g, const std::string& text)
{
    const auto kind = nlohmann::json::parse(text).value("kind", "");
    CellCertificate cert;
    if (kind == "plump")
        cert = verify_plump(plump_from_json(text));
    else if (kind == "mold")
        cert = verify_mold(mold_from_json(text));
    else
        throw Error(ErrorKind::ParseError, "unknown cell kind \"" + kind + "\"");
    if (g.json()) {
        ordered_json j;
        j["cell"] = kind;
        j["passed"] = cert.passed;
        j["witness"] = cert.witness;
        j["checks"] = cert.checks;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << kind << " cell: " << (cert.passed ? "certified" : "FAILED") << "\n";
        for (const std::string& c : cert.checks)
            std::cout << "  ok: " << c << "\n";
        if (!cert.passed)
            std::cout << "  witness: " << cert.witness << "\n";
    }
    return cert.passed ? kExitOk : kExitPrecondition;
}

int cmd_check(const Globals& g, const std::string& path)
{
    if (path.rfind("fixture:", 0) != 0) {
        const std::string text = read_file(path);
        const auto start = text.find_first_not_of(" \t\r\n");
        if (start != std::string::npos && text[start] == '{' && text.find("\"kind\"") != std::string::npos)
            return check_cell(g, text);
    }
    const FacetComplex c = load_input(path);
    ManifoldCheckOptions options;
    options.seed = g.seed;
    options.reduction_budget = std::max(g.budget, 1) * 10;
    const ManifoldCertificate cert = verify_manifold(c, options);
    if (g.json()) {
        ordered_json j;
        j["status"] = to_string(cert.status);
        j["detail"] = cert.detail;
        j["checked_dim_exact"] = cert.checked_dim_exact;
        if (cert.witness)
            j["witness"] = std::vector<Vertex>(cert.witness->begin(), cert.witness->end());
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "status = " << to_string(cert.status) << "; exact = " << (cert.checked_dim_exact ? "yes" : "no")
                  << "; " << cert.detail;
        if (cert.witness)
            std::cout << "; witness = " << cert.witness->to_string();
        std::cout << "\n";
    }
    return cert.verified() ? kExitOk : kExitPrecondition;
}

int cmd_moves(const Globals& g, const std::string& path, std::optional<int> type)
{
    const FacetComplex c = load_input(path);
    for (const BistellarMove& m : enumerate_bistellar(c, type)) {
        if (g.json())
            std::cout << m.to_json() << "\n";
        else
            std::cout << "i=" << m.i << " sigma=" << m.sigma.to_string()
                      << " tau=" << (m.tau.empty() ? std::string("{new}") : m.tau.to_string()) << "\n";
    }
    return kExitOk;
}

int cmd_apply(const std::string& path, const std::string& move, const std::string& out, const std::string& log_path)
{
    const FacetComplex c = load_input(path);
    const BistellarMove m = BistellarMove::from_json(move);
    MoveLog log;
    const FacetComplex next = record_step(log, c, m.i == 0 ? StepKind::ZeroMove : StepKind::Bistellar, m);
    emit_complex(next, out);
    emit_log(log, out, log_path);
    std::cerr << "f " << format_fvector(log.records[0].f_before) << " -> " << format_fvector(log.records[0].f_after)
              << "\n";
    return kExitOk;
}

int cmd_shell(const Globals& g, const std::string& path, const std::string& move, const std::string& out,
              const std::string& log_path)
{
    const FacetComplex c = load_input(path);
    if (move.empty()) {
        for (const ShellingMove& m : enumerate_shellings(c)) {
            const BistellarMove induced = induced_boundary_move(c, m);
            if (g.json()) {
                ordered_json j = ordered_json::parse(m.to_json());
                j["induced"] = ordered_json::parse(induced.to_json());
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "i=" << m.i << " sigma=" << m.sigma.to_string() << " tau=" << m.tau.to_string()
                          << " induces boundary " << induced.i << "-move\n";
            }
        }
        return kExitOk;
    }
    const ShellingMove m = ShellingMove::from_json(move);
    const BistellarMove induced = induced_boundary_move(c, m);
    MoveLog log;
    const FacetComplex next = record_step(log, c, StepKind::Shelling, m);
    emit_complex(next, out);
    emit_log(log, out, log_path);
    std::cerr << "induced boundary move " << induced.to_json() << "\n";
    return kExitOk;
}

int cmd_subdivide(const std::string& path, const std::string& facet, const std::string& face, const std::string& out,
                  const std::string& log_path)
{
    const FacetComplex c = load_input(path);
    MoveLog log;
    const FacetComplex next =
        record_step(log, c, StepKind::StarSubdivide, SubdivideStep{parse_simplex(facet), parse_simplex(face)});
    emit_complex(next, out);
    emit_log(log, out, log_path);
    return kExitOk;
}

int cmd_double(const std::string& path, const std::string& out)
{
    const FacetComplex c = load_input(path);
    const FacetComplex d = double_complex(c);
    emit_complex(d, out);
    std::cerr << "f " << format_fvector(f_vector(c)) << " -> " << format_fvector(f_vector(d)) << "\n";
    return kExitOk;
}

int cmd_dvec(const Globals& g, int n, std::optional<int> type)
{
    if (n < 0)
        throw Error(ErrorKind::DimensionMismatch, "n must be nonnegative");
    ordered_json all = ordered_json::array();
    for (int i = 0; i <= n; ++i) {
        if (type && *type != i)
            continue;
        const DVector d = d_vector(n, i);
        std::string line;
        for (std::size_t k = 0; k < d.d.size(); ++k)
            line += (k ? "," : "") + d.d[k].str();
        if (g.json()) {
            ordered_json j;
            j["n"] = n;
            j["i"] = i;
            j["d"] = line;
            all.push_back(j);
        } else {
            std::cout << "d(" << n << "," << i << ") = " << line << "\n";
        }
    }
    if (g.json())
        std::cout << all.dump() << "\n";
    return kExitOk;
}

int cmd_solve(const Globals& g, std::optional<int> n, const std::string& from, const std::string& to)
{
    const FVector src = parse_fvector(from);
    const FVector dst = parse_fvector(to);
    if (n && (src.n != *n || dst.n != *n))
        throw Error(ErrorKind::DimensionMismatch, "vectors must have " + std::to_string(*n + 1) + " entries");
    const VirtualMovePlan plan = solve_virtual_plan(src, dst);
    if (g.json()) {
        ordered_json j;
        j["n"] = plan.n;
        std::vector<std::string> xs;
        for (const Integer& x : plan.x)
            xs.push_back(x.str());
        j["x"] = xs;
        j["N"] = plan.total_moves().str();
        j["plan"] = plan.to_string();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << plan.to_string() << "\n";
    }
    return kExitOk;
}

void print_certificate(const std::string& what, const CellCertificate& cert, const Globals& g)
{
    std::cout << what << ": " << (cert.passed ? "certified" : "FAILED") << "; seed = " << g.seed
              << "; budget = " << g.budget << "\n";
    for (const std::string& c : cert.checks)
        std::cout << "  ok: " << c << "\n";
    if (!cert.passed)
        std::cout << "  witness: " << cert.witness << "\n";
}

int cmd_plump(const Globals& g, int n, const std::string& out)
{
    const PlumpCell cell = build_plump_cell(n, g.seed, {g.budget, false});
    const CellCertificate cert = verify_plump(cell);
    const std::string text = plump_to_json(cell);
    if (out.empty() || out == "-")
        std::cout << text;
    else
        write_file(out, text);
    print_certificate("plump " + std::to_string(n) + "-cell, " + std::to_string(cell.disk.num_facets()) + " facets",
                      cert, g);
    return cert.passed ? kExitOk : kExitInternal;
}

int cmd_mold(const Globals& g, int n, const std::string& out)
{
    const MoldCell cell = build_mold_cell(n, g.seed, {g.budget});
    const CellCertificate cert = verify_mold(cell);
    const std::string text = mold_to_json(cell);
    if (out.empty() || out == "-")
        std::cout << text;
    else
        write_file(out, text);
    print_certificate("mold " + std::to_string(n) + "-cell, " + std::to_string(cell.disk.num_facets()) + " facets",
                      cert, g);
    return cert.passed ? kExitOk : kExitInternal;
}

int cmd_equalize(const Globals& g, const std::string& a, const std::string& b, const std::string& out, bool boundary,
                 bool full)
{
    if (boundary && full)
        throw Error(ErrorKind::ParseError, "--boundary and --full exclude each other");
    const FacetComplex c1 = load_input(a);
    const FacetComplex c2 = load_input(b);
    const EqualizeOptions options{g.seed, g.budget};
    const EqualizeResult result = full ? equalize_full(c1, c2, options)
                                  : boundary ? equalize_boundary(c1, c2, options)
                                             : equalize_closed(c1, c2, options);
    if (replay(c1, result.log1) != result.c1_star || replay(c2, result.log2) != result.c2_star)
        throw Error(ErrorKind::InternalAssertFailed, "replaying the logs does not reproduce the outputs");
    if (!out.empty())
        write_result(result, out);
    if (g.json()) {
        std::cout << report_json(result);
        return kExitOk;
    }
    std::cout << "seed = " << result.seed << "; budget = " << result.budget << "\n";
    if (result.boundary_plan)
        std::cout << "boundary plan: " << result.boundary_plan->to_string() << "\n";
    if (result.plan)
        std::cout << "plan: " << result.plan->to_string() << "\n";
    for (const StageReport& r : result.report) {
        std::cout << r.stage << ": f1 = " << format_fvector(r.f1) << "; f2 = " << format_fvector(r.f2);
        if (r.boundary_f1)
            std::cout << "; boundary f1 = " << format_fvector(*r.boundary_f1)
                      << "; boundary f2 = " << format_fvector(*r.boundary_f2);
        std::cout << "\n";
    }
    std::cout << "logs replayed: " << result.log1.size() << " + " << result.log2.size() << " records\n";
    return kExitOk;
}

int cmd_replay(const std::string& path, const std::string& log_path, const std::string& expect,
               const std::string& out)
{
    const FacetComplex c = load_input(path);
    const MoveLog log = parse_jsonl(read_file(log_path));
    const FacetComplex result = replay(c, log);
    if (!expect.empty() && load_input(expect) != result)
        throw Error(ErrorKind::ReplayMismatch, "replayed complex differs from " + expect);
    if (!out.empty())
        emit_complex(result, out);
    std::cerr << log.size() << " records replayed; f = " << format_fvector(f_vector(result)) << "\n";
    return kExitOk;
}

int budget_default()
{
    if (const char* env = std::getenv("PACHNER_BUDGET")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
        }
    }
    return 400;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bistellar moves, shellings and f-vector equalization for simplicial manifolds.\n"
                 "Inputs: facet-list or JSON files, or fixture:<name> for a built-in complex.\n"
                 "Exit codes: 0 ok, 2 parse, 3 illegal move, 4 precondition, 5 internal assertion, 6 budget.",
                 "pachner"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    g.budget = budget_default();
    app.add_option("--seed", g.seed, "seed for every randomized search")->capture_default_str();
    app.add_option("--budget", g.budget, "growth budget for cell builders (env PACHNER_BUDGET)")
        ->capture_default_str();
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string in, in2, out, log_path, move, facet, face, expect, from, to;
    std::optional<int> type, n_opt;
    int n = 2;
    bool boundary = false, full = false;
    std::function<int()> run;

    auto* fvec = app.add_subcommand("fvec", "f-vector, Euler characteristic and Dehn-Sommerville status");
    fvec->add_option("input", in)->required();
    fvec->callback([&] { run = [&] { return cmd_fvec(g, in); }; });

    auto* check = app.add_subcommand("check", "manifold certificate, or verify a plump/mold cell JSON");
    check->add_option("input", in)->required();
    check->callback([&] { run = [&] { return cmd_check(g, in); }; });

    auto* moves = app.add_subcommand("moves", "list legal bistellar moves");
    moves->add_option("input", in)->required();
    moves->add_option("-i,--type", type, "only moves of this type");
    moves->callback([&] { run = [&] { return cmd_moves(g, in, type); }; });

    auto* apply = app.add_subcommand("apply", "apply one bistellar move");
    apply->add_option("input", in)->required();
    apply->add_option("--move", move, R"(JSON record {"kind":"bistellar","sigma":[..],"tau":[..],"i":k})")
        ->required();
    apply->add_option("-o,--output", out, "output facet list (default stdout)");
    apply->add_option("--log", log_path, "one-record move log (default <output>.log.jsonl)");
    apply->callback([&] { run = [&] { return cmd_apply(in, move, out, log_path); }; });

    auto* shell = app.add_subcommand("shell", "list legal shellings, or apply one with --move");
    shell->add_option("input", in)->required();
    shell->add_option("--move", move, R"(JSON record {"kind":"shelling","sigma":[..],"tau":[..],"i":k})");
    shell->add_option("-o,--output", out, "output facet list (default stdout)");
    shell->add_option("--log", log_path, "one-record move log (default <output>.log.jsonl)");
    shell->callback([&] { run = [&] { return cmd_shell(g, in, move, out, log_path); }; });

    auto* subdivide = app.add_subcommand("subdivide", "star subdivision of a facet along a boundary face");
    subdivide->add_option("input", in)->required();
    subdivide->add_option("--facet", facet, "comma separated vertex ids")->required();
    subdivide->add_option("--face", face, "comma separated vertex ids")->required();
    subdivide->add_option("-o,--output", out, "output facet list (default stdout)");
    subdivide->add_option("--log", log_path, "one-record move log (default <output>.log.jsonl)");
    subdivide->callback([&] { run = [&] { return cmd_subdivide(in, facet, face, out, log_path); }; });

    auto* dbl = app.add_subcommand("double", "glue two copies along the boundary");
    dbl->add_option("input", in)->required();
    dbl->add_option("-o,--output", out, "output facet list (default stdout)");
    dbl->callback([&] { run = [&] { return cmd_double(in, out); }; });

    auto* dvec = app.add_subcommand("dvec", "f-vector change of bistellar moves");
    dvec->add_option("-n", n, "dimension")->required();
    dvec->add_option("-i,--type", type, "only this move type");
    dvec->callback([&] { run = [&] { return cmd_dvec(g, n, type); }; });

    auto* solve = app.add_subcommand("solve", "virtual move plan between two f-vectors");
    solve->add_option("-n", n_opt, "dimension (checked against the vectors)");
    solve->add_option("--from", from, "f_0,...,f_n (optionally prefixed by chi/2=r,)")->required();
    solve->add_option("--to", to, "f_0,...,f_n (optionally prefixed by chi/2=r,)")->required();
    solve->callback([&] { run = [&] { return cmd_solve(g, n_opt, from, to); }; });

    auto* plump = app.add_subcommand("plump", "build and certify a plump cell");
    plump->add_option("-n", n, "dimension")->required();
    plump->add_option("-o,--output", out, "cell JSON (default stdout)");
    plump->callback([&] { run = [&] { return cmd_plump(g, n, out); }; });

    auto* mold = app.add_subcommand("mold", "build and certify a mold cell (n = 2, 3)");
    mold->add_option("-n", n, "dimension")->required();
    mold->add_option("-o,--output", out, "cell JSON (default stdout)");
    mold->callback([&] { run = [&] { return cmd_mold(g, n, out); }; });

    auto* equalize = app.add_subcommand("equalize", "retriangulate two manifolds to equal f-vectors");
    equalize->add_option("first", in)->required();
    equalize->add_option("second", in2)->required();
    equalize->add_option("-o,--output", out, "result directory");
    equalize->add_flag("--boundary", boundary, "equalize boundary f-vectors (n = 2, 3)");
    equalize->add_flag("--full", full, "equalize f and boundary f-vectors (n = 2, 3)");
    equalize->callback([&] { run = [&] { return cmd_equalize(g, in, in2, out, boundary, full); }; });

    auto* rep = app.add_subcommand("replay", "re-apply a move log with full legality checks");
    rep->add_option("input", in)->required();
    rep->add_option("log", log_path)->required();
    rep->add_option("--expect", expect, "complex the replay must reproduce");
    rep->add_option("-o,--output", out, "write the replayed complex");
    rep->callback([&] { run = [&] { return cmd_replay(in, log_path, expect, out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }
    try {
        return run();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: ParseError: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}
