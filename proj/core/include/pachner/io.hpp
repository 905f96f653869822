#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "pachner/complex.hpp"

namespace pachner {

/// Facet-list text: `#` comments, one facet per line. A leading
/// `# name: <label>` line carries the name.
FacetComplex parse_facet_list(std::string_view text);
/// Canonical text form: sorted facets, one per line.
std::string write_facet_list(const FacetComplex& c);

/// {"name": ..., "facets": [[...], ...]}
FacetComplex parse_complex_json(std::string_view text);
std::string write_complex_json(const FacetComplex& c);

/// Picks the format from the content (JSON when it starts with '{').
FacetComplex parse_complex(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);
FacetComplex load_complex(const std::filesystem::path& path);

} // namespace pachner
