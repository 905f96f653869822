#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pachner/complex.hpp"
#include "pachner/fvector.hpp"
#include "pachner/moves.hpp"

namespace pachner {

enum class StepKind { Bistellar, ZeroMove, Shelling, Implant, StarSubdivide };

std::string_view to_string(StepKind kind);

/// A cell glued into a facet. Without `window_face` the cell boundary is the
/// boundary of the simplex on `labels` (glued to the facet vertices in
/// ascending order). With it, `labels` are the window boundary labels glued
/// to `window_face` and `apex` goes to the opposite vertex.
struct ImplantStep {
    Simplex facet;
    FacetComplex cell;
    std::vector<Vertex> labels;
    std::optional<Simplex> window_face;
    Vertex apex = 0;

    friend bool operator==(const ImplantStep&, const ImplantStep&) = default;
};

struct SubdivideStep {
    Simplex facet;
    Simplex face;

    friend bool operator==(const SubdivideStep&, const SubdivideStep&) = default;
};

using Step = std::variant<BistellarMove, ShellingMove, ImplantStep, SubdivideStep>;

struct LogRecord {
    StepKind kind = StepKind::Bistellar;
    Step step;
    FVector f_before;
    FVector f_after;
};

struct MoveLog {
    std::vector<LogRecord> records;

    std::size_t size() const { return records.size(); }
    bool empty() const { return records.empty(); }
};

/// Applies one step with full legality checking.
FacetComplex apply_step(const FacetComplex& c, StepKind kind, const Step& step);

/// Applies the step to `c`, appends the record and returns the result.
FacetComplex record_step(MoveLog& log, const FacetComplex& c, StepKind kind, Step step);

/// Re-applies every record; throws ReplayMismatch naming the failing index.
FacetComplex replay(const FacetComplex& c, const MoveLog& log);

/// One JSON object per line.
std::string write_jsonl(const MoveLog& log);
MoveLog parse_jsonl(std::string_view text);
std::string record_to_json(const LogRecord& record);

} // namespace pachner
