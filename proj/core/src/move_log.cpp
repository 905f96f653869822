#include "pachner/move_log.hpp"

#include "json.hpp"
#include "pachner/error.hpp"

namespace pachner {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view to_string(StepKind kind)
{
    switch (kind) {
    case StepKind::Bistellar: return "bistellar";
    case StepKind::ZeroMove: return "zero-move";
    case StepKind::Shelling: return "shelling";
    case StepKind::Implant: return "implant";
    case StepKind::StarSubdivide: return "star-subdivide";
    }
    return "unknown";
}

namespace {

StepKind kind_from_string(std::string_view s)
{
    for (StepKind k : {StepKind::Bistellar, StepKind::ZeroMove, StepKind::Shelling, StepKind::Implant,
                       StepKind::StarSubdivide})
        if (to_string(k) == s)
            return k;
    throw Error(ErrorKind::ParseError, "unknown record kind \"" + std::string(s) + "\"");
}

ordered_json simplex_json(const Simplex& s) { return ordered_json(std::vector<Vertex>(s.begin(), s.end())); }

Simplex simplex_from(const json& j)
{
    if (!j.is_array())
        throw Error(ErrorKind::ParseError, "simplex must be an integer array");
    std::vector<Vertex> vs;
    for (const json& v : j) {
        if (!v.is_number_integer())
            throw Error(ErrorKind::ParseError, "vertex id is not an integer");
        vs.push_back(v.get<Vertex>());
    }
    return Simplex(std::move(vs));
}

const json& field(const json& j, const char* key)
{
    if (!j.contains(key))
        throw Error(ErrorKind::ParseError, std::string("record lacks \"") + key + "\"");
    return j.at(key);
}

ordered_json step_json(StepKind kind, const Step& step)
{
    ordered_json j;
    j["kind"] = to_string(kind);
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, BistellarMove> || std::is_same_v<T, ShellingMove>) {
                j["sigma"] = simplex_json(s.sigma);
                j["tau"] = simplex_json(s.tau);
                j["i"] = s.i;
            } else if constexpr (std::is_same_v<T, ImplantStep>) {
                j["facet"] = simplex_json(s.facet);
                auto cell = ordered_json::array();
                for (const Simplex& f : s.cell.facets())
                    cell.push_back(simplex_json(f));
                j["cell"] = std::move(cell);
                j["labels"] = s.labels;
                if (s.window_face) {
                    j["window_face"] = simplex_json(*s.window_face);
                    j["apex"] = s.apex;
                }
            } else {
                j["facet"] = simplex_json(s.facet);
                j["face"] = simplex_json(s.face);
            }
        },
        step);
    return j;
}

Step step_from(StepKind kind, const json& j)
{
    switch (kind) {
    case StepKind::Bistellar:
    case StepKind::ZeroMove:
        return BistellarMove{simplex_from(field(j, "sigma")), simplex_from(field(j, "tau")), field(j, "i").get<int>()};
    case StepKind::Shelling:
        return ShellingMove{simplex_from(field(j, "sigma")), simplex_from(field(j, "tau")), field(j, "i").get<int>()};
    case StepKind::Implant: {
        ImplantStep s;
        s.facet = simplex_from(field(j, "facet"));
        std::vector<std::vector<Vertex>> cell;
        for (const json& f : field(j, "cell"))
            cell.push_back(f.get<std::vector<Vertex>>());
        s.cell = build_complex(cell);
        s.labels = field(j, "labels").get<std::vector<Vertex>>();
        if (j.contains("window_face")) {
            s.window_face = simplex_from(j.at("window_face"));
            s.apex = field(j, "apex").get<Vertex>();
        }
        return s;
    }
    case StepKind::StarSubdivide:
        return SubdivideStep{simplex_from(field(j, "facet")), simplex_from(field(j, "face"))};
    }
    throw Error(ErrorKind::ParseError, "unknown record kind");
}

bool kind_matches(StepKind kind, const Step& step)
{
    switch (kind) {
    case StepKind::Bistellar:
        return std::holds_alternative<BistellarMove>(step) && std::get<BistellarMove>(step).i != 0;
    case StepKind::ZeroMove:
        return std::holds_alternative<BistellarMove>(step) && std::get<BistellarMove>(step).i == 0;
    case StepKind::Shelling: return std::holds_alternative<ShellingMove>(step);
    case StepKind::Implant: return std::holds_alternative<ImplantStep>(step);
    case StepKind::StarSubdivide: return std::holds_alternative<SubdivideStep>(step);
    }
    return false;
}

} // namespace

FacetComplex apply_step(const FacetComplex& c, StepKind kind, const Step& step)
{
    if (!kind_matches(kind, step))
        throw Error(ErrorKind::IllegalMove, "record kind " + std::string(to_string(kind)) + " does not fit its step");
    switch (kind) {
    case StepKind::Bistellar:
    case StepKind::ZeroMove: return apply_bistellar(c, std::get<BistellarMove>(step));
    case StepKind::Shelling: return apply_shelling(c, std::get<ShellingMove>(step));
    case StepKind::StarSubdivide: {
        const auto& s = std::get<SubdivideStep>(step);
        return star_subdivide_along_face(c, s.facet, s.face);
    }
    case StepKind::Implant: {
        const auto& s = std::get<ImplantStep>(step);
        if (s.window_face)
            return implant_along_face(c, s.facet, *s.window_face, s.cell, s.labels, s.apex).complex;
        return implant(c, s.facet, s.cell, s.labels).complex;
    }
    }
    throw Error(ErrorKind::IllegalMove, "unknown step");
}

FacetComplex record_step(MoveLog& log, const FacetComplex& c, StepKind kind, Step step)
{
    if (auto* m = std::get_if<BistellarMove>(&step))
        *m = resolve(c, *m);
    FacetComplex next = apply_step(c, kind, step);
    log.records.push_back({kind, std::move(step), f_vector(c), f_vector(next)});
    return next;
}

FacetComplex replay(const FacetComplex& c, const MoveLog& log)
{
    FacetComplex current = c;
    for (std::size_t k = 0; k < log.records.size(); ++k) {
        const LogRecord& r = log.records[k];
        const auto mismatch = [&](const std::string& why) {
            return Error(ErrorKind::ReplayMismatch, "record " + std::to_string(k) + ": " + why);
        };
        if (f_vector(current) != r.f_before)
            throw mismatch("f_before " + format_fvector(r.f_before) + " but the complex has " +
                           format_fvector(f_vector(current)));
        try {
            current = apply_step(current, r.kind, r.step);
        } catch (const Error& e) {
            throw mismatch(e.what());
        }
        const FVector after = f_vector(current);
        if (after != r.f_after)
            throw mismatch("f_after " + format_fvector(r.f_after) + " but replay gives " + format_fvector(after));
        if (const auto* m = std::get_if<BistellarMove>(&r.step)) {
            const DVector d = d_vector(current.dim(), m->i);
            for (std::size_t i = 0; i < after.f.size(); ++i)
                if (after.f[i] - r.f_before.f[i] != d.d[i])
                    throw mismatch("f-vector change differs from the d-vector");
        }
    }
    return current;
}

std::string record_to_json(const LogRecord& record)
{
    ordered_json j = step_json(record.kind, record.step);
    j["f_before"] = format_fvector(record.f_before, true);
    j["f_after"] = format_fvector(record.f_after, true);
    return j.dump();
}

std::string write_jsonl(const MoveLog& log)
{
    std::string out;
    for (const LogRecord& r : log.records)
        out += record_to_json(r) + "\n";
    return out;
}

MoveLog parse_jsonl(std::string_view text)
{
    MoveLog log;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string_view::npos)
            continue;
        try {
            const json j = json::parse(line);
            const StepKind kind = kind_from_string(field(j, "kind").get<std::string>());
            log.records.push_back({kind, step_from(kind, j), parse_fvector(field(j, "f_before").get<std::string>()),
                                   parse_fvector(field(j, "f_after").get<std::string>())});
        } catch (const json::exception& e) {
            throw Error(ErrorKind::ParseError, "log line " + std::to_string(line_no) + ": " + e.what());
        } catch (const Error& e) {
            throw Error(ErrorKind::ParseError, "log line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return log;
}

} // namespace pachner
