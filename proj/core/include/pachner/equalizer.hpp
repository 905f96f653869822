#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pachner/complex.hpp"
#include "pachner/fvector.hpp"
#include "pachner/move_log.hpp"

namespace pachner {

struct StageReport {
    std::string stage;
    FVector f1, f2;
    std::optional<FVector> boundary_f1, boundary_f2;
};

struct EqualizeResult {
    FacetComplex c1_star;
    FacetComplex c2_star;
    MoveLog log1;
    MoveLog log2;
    /// Plan on f (closed) or on the hat-f-vectors (stage 2 of the full run).
    std::optional<VirtualMovePlan> plan;
    /// Plan on the boundary f-vectors (bounded runs).
    std::optional<VirtualMovePlan> boundary_plan;
    std::vector<StageReport> report;
    std::uint64_t seed = 0;
    int budget = 0;
};

struct EqualizeOptions {
    std::uint64_t seed = 1;
    /// Growth budget handed to the plump/mold cell builders.
    int budget = 400;
};

/// Closed n-manifolds with equal Euler characteristic: symmetric 0-moves and
/// plump-cell implants, then the planned moves fired inside C1's cells.
EqualizeResult equalize_closed(const FacetComplex& c1, const FacetComplex& c2,
                               const EqualizeOptions& options = {});

/// Bounded 2- and 3-manifolds with equal boundary Euler characteristic:
/// star subdivisions and mold-cell implants, then planned shellings in C1.
EqualizeResult equalize_boundary(const FacetComplex& c1, const FacetComplex& c2,
                                 const EqualizeOptions& options = {});

/// equalize_boundary followed by interior equalization of the hat-f-vectors.
EqualizeResult equalize_full(const FacetComplex& c1, const FacetComplex& c2,
                             const EqualizeOptions& options = {});

/// Writes c1.fl, c2.fl, log1.jsonl, log2.jsonl and report.json.
void write_result(const EqualizeResult& result, const std::filesystem::path& dir);
std::string report_json(const EqualizeResult& result);

} // namespace pachner
