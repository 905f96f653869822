#include "pachner/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "pachner/error.hpp"

namespace pachner {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<Vertex> parse_line(std::string_view line, std::size_t line_no)
{
    std::vector<Vertex> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == ','))
            ++pos;
        if (pos == line.size())
            break;
        long long value = 0;
        const auto [end, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
        if (ec != std::errc() || (end != line.data() + line.size() && *end != ' ' && *end != '\t' && *end != ','))
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": not an integer list");
        if (value < 1 || value > std::numeric_limits<Vertex>::max())
            throw Error(ErrorKind::BadVertexId,
                        "line " + std::to_string(line_no) + ": vertex id " + std::to_string(value) + " out of range");
        out.push_back(static_cast<Vertex>(value));
        pos = static_cast<std::size_t>(end - line.data());
    }
    return out;
}

} // namespace

FacetComplex parse_facet_list(std::string_view text)
{
    std::vector<std::vector<Vertex>> facets;
    std::optional<std::string> name;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty())
            continue;
        if (line.front() == '#') {
            const std::string_view body = trim(line.substr(1));
            if (!name && facets.empty() && body.starts_with("name:"))
                name = std::string(trim(body.substr(5)));
            continue;
        }
        facets.push_back(parse_line(line, line_no));
    }
    return build_complex(facets, std::move(name));
}

std::string write_facet_list(const FacetComplex& c)
{
    std::string out;
    if (c.name())
        out += "# name: " + *c.name() + "\n";
    for (const Simplex& f : c.facets()) {
        bool first = true;
        for (Vertex v : f) {
            if (!first)
                out += ' ';
            out += std::to_string(v);
            first = false;
        }
        out += '\n';
    }
    return out;
}

FacetComplex parse_complex_json(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    if (!j.is_object() || !j.contains("facets") || !j.at("facets").is_array())
        throw Error(ErrorKind::ParseError, "expected an object with a \"facets\" array");
    std::vector<std::vector<Vertex>> facets;
    for (const auto& f : j.at("facets")) {
        if (!f.is_array())
            throw Error(ErrorKind::ParseError, "facet is not an array");
        std::vector<Vertex> vs;
        for (const auto& v : f) {
            if (!v.is_number_integer())
                throw Error(ErrorKind::ParseError, "vertex id is not an integer");
            const auto value = v.get<long long>();
            if (value < 1 || value > std::numeric_limits<Vertex>::max())
                throw Error(ErrorKind::BadVertexId, "vertex id " + std::to_string(value) + " out of range");
            vs.push_back(static_cast<Vertex>(value));
        }
        facets.push_back(std::move(vs));
    }
    std::optional<std::string> name;
    if (j.contains("name")) {
        if (!j.at("name").is_string())
            throw Error(ErrorKind::ParseError, "\"name\" must be a string");
        name = j.at("name").get<std::string>();
    }
    return build_complex(facets, std::move(name));
}

std::string write_complex_json(const FacetComplex& c)
{
    nlohmann::ordered_json j;
    if (c.name())
        j["name"] = *c.name();
    auto facets = nlohmann::ordered_json::array();
    for (const Simplex& f : c.facets())
        facets.push_back(std::vector<Vertex>(f.begin(), f.end()));
    j["facets"] = std::move(facets);
    return j.dump() + "\n";
}

FacetComplex parse_complex(std::string_view text)
{
    const auto start = text.find_first_not_of(" \t\r\n");
    if (start != std::string_view::npos && text[start] == '{')
        return parse_complex_json(text);
    return parse_facet_list(text);
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::ParseError, "cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view content)
{
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorKind::ParseError, "cannot write " + path.string());
    out << content;
}

FacetComplex load_complex(const std::filesystem::path& path)
{
    FacetComplex c = parse_complex(read_file(path));
    if (!c.name())
        c = c.with_name(path.stem().string());
    return c;
}

} // namespace pachner
