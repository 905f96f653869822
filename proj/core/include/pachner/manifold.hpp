#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pachner/complex.hpp"

namespace pachner {

enum class ManifoldStatus {
    VerifiedClosed,
    VerifiedWithBoundary,
    PseudomanifoldOnly,
    Unverified,
    Failed,
};

std::string to_string(ManifoldStatus status);

/// How far a complex has been machine-checked. A Failed certificate always
/// names a witness simplex.
struct ManifoldCertificate {
    ManifoldStatus status = ManifoldStatus::Unverified;
    std::string detail;
    bool checked_dim_exact = false;
    std::optional<Simplex> witness;

    bool verified() const
    {
        return status == ManifoldStatus::VerifiedClosed ||
               status == ManifoldStatus::VerifiedWithBoundary;
    }
};

/// Ridge degrees in {1, 2} and strong connectedness.
ManifoldCertificate pseudomanifold_report(const FacetComplex& c);

struct ManifoldCheckOptions {
    /// Bistellar moves allowed per vertex link above dimension 3.
    int reduction_budget = 4000;
    std::uint64_t seed = 1;
};

/// Vertex links must be spheres or disks. Exact up to dimension 3; above
/// that each link is reduced towards the boundary of a simplex by bistellar
/// moves and the result is Unverified when the budget runs out.
ManifoldCertificate verify_manifold(const FacetComplex& c, const ManifoldCheckOptions& options = {});

enum class LinkShape { Sphere, Disk, Other };

/// Exact PL sphere / disk recognition for complexes of dimension <= 2.
LinkShape recognize_low_dim(const FacetComplex& k);

/// Tries to bring a closed pseudomanifold to the boundary of a simplex by
/// bistellar moves. True means it is certainly a PL sphere; false only means
/// the budget ran out.
bool reduce_to_simplex_boundary(const FacetComplex& k, int budget, std::uint64_t seed);

} // namespace pachner
