#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pachner/complex.hpp"
#include "pachner/moves.hpp"

namespace pachner {

/// Boundary of the (n+1)-simplex on vertices 1..n+2.
FacetComplex boundary_of_simplex(int n);

struct FixtureInfo {
    std::string name;
    std::vector<long long> expected_f; // f_0..f_n
    long long expected_chi;
};

/// Named complexes from the built-in corpus; f-vector and Euler
/// characteristic are checked against the stored expectations on load.
FacetComplex fixture(std::string_view name);
const std::vector<FixtureInfo>& fixture_catalog();

/// Outcome of a cell verifier. `witness` explains the first failure.
struct CellCertificate {
    bool passed = false;
    std::string witness;
    std::vector<std::string> checks;
};

/// A PL n-disk whose boundary is the boundary of an n-simplex and which
/// carries, for every type i, an interior bistellar i-move leaving the star
/// of every boundary vertex untouched.
struct PlumpCell {
    int n = 0;
    FacetComplex disk;
    std::vector<Vertex> boundary_labels;
    std::map<int, BistellarMove> prepared_moves;
};

struct PlumpOptions {
    int budget = 400;
    /// Ask for prepared moves with pairwise disjoint vertex supports so that
    /// all of them can fire simultaneously.
    bool disjoint_supports = false;
};

/// Grows a cell from a coned simplex by seeded interior moves until every
/// move type is available, then certifies it. Throws BudgetExhausted.
PlumpCell build_plump_cell(int n, std::uint64_t seed, const PlumpOptions& options = {});

/// Fills prepared moves by exhaustive search for the first interior legal
/// move of each type. Types without one are left out.
PlumpCell plump_from_disk(const FacetComplex& disk, const std::vector<Vertex>& boundary_labels);

CellCertificate verify_plump(const PlumpCell& cell);

/// A PL n-disk with boundary equal to the boundary of an n-simplex in which
/// one (n-1)-face is replaced by a plump (n-1)-cell window. For every window
/// move type i it carries an elementary (n-1-i)-shelling inducing the
/// window's prepared i-move.
struct MoldCell {
    int n = 0;
    FacetComplex disk;
    PlumpCell window;
    Vertex apex = 0;
    std::map<int, ShellingMove> prepared_shellings; // keyed by induced type i
};

struct MoldOptions {
    int budget = 400;
};

/// Supported for n in {2, 3}. Throws UnsupportedDimension or BudgetExhausted.
MoldCell build_mold_cell(int n, std::uint64_t seed, const MoldOptions& options = {});

CellCertificate verify_mold(const MoldCell& cell);

std::string plump_to_json(const PlumpCell& cell);
PlumpCell plump_from_json(std::string_view text);
std::string mold_to_json(const MoldCell& cell);
MoldCell mold_from_json(std::string_view text);

} // namespace pachner
