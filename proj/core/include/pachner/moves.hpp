#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pachner/complex.hpp"

namespace pachner {

/// T^{n,i}_{sigma,tau}: replaces sigma * d(tau) by d(sigma) * tau.
///
/// dim(sigma) = n - i and dim(tau) = i. For i = 0, tau is one fresh vertex;
/// an empty tau is a placeholder resolved to max_vertex + 1 on application.
struct BistellarMove {
    Simplex sigma;
    Simplex tau;
    int i = 0;

    /// The reverse move T^{n,n-i}_{tau,sigma}.
    BistellarMove inverse(int n) const { return {tau, sigma, n - i}; }
    std::string to_json() const;
    static BistellarMove from_json(std::string_view text);

    friend bool operator==(const BistellarMove&, const BistellarMove&) = default;
    friend auto operator<=>(const BistellarMove& a, const BistellarMove& b)
    {
        if (auto c = a.i <=> b.i; c != 0)
            return c;
        if (auto c = a.sigma <=> b.sigma; c != 0)
            return c;
        return a.tau <=> b.tau;
    }
};

/// Elementary i-shelling removing the facet sigma * tau, i = dim(sigma).
struct ShellingMove {
    Simplex sigma;
    Simplex tau;
    int i = 0;

    std::string to_json() const;
    static ShellingMove from_json(std::string_view text);

    friend bool operator==(const ShellingMove&, const ShellingMove&) = default;
    friend auto operator<=>(const ShellingMove& a, const ShellingMove& b)
    {
        if (auto c = a.i <=> b.i; c != 0)
            return c;
        if (auto c = a.sigma <=> b.sigma; c != 0)
            return c;
        return a.tau <=> b.tau;
    }
};

/// Fills the fresh vertex of a placeholder 0-move.
BistellarMove resolve(const FacetComplex& c, const BistellarMove& m);

/// Reason the move is illegal in `c`, or nullopt when it is legal.
std::optional<std::string> bistellar_violation(const FacetComplex& c, const BistellarMove& m);
bool is_legal(const FacetComplex& c, const BistellarMove& m);

/// All legal moves (of type `i` only when given), sorted by (i, sigma, tau).
/// 0-moves appear once per facet with a placeholder tau.
std::vector<BistellarMove> enumerate_bistellar(const FacetComplex& c, std::optional<int> i = {});

/// Throws IllegalMove with the reason.
FacetComplex apply_bistellar(const FacetComplex& c, const BistellarMove& m);

std::optional<std::string> shelling_violation(const FacetComplex& c, const ShellingMove& m);
bool is_legal(const FacetComplex& c, const ShellingMove& m);

/// Legal shellings, sorted by (i, sigma, tau). Shelling the last facet is
/// never offered. Throws ClosedInput on a closed complex.
std::vector<ShellingMove> enumerate_shellings(const FacetComplex& c);

/// Throws IllegalShelling or EmptyResult.
FacetComplex apply_shelling(const FacetComplex& c, const ShellingMove& m);

/// The (n-1)-dimensional bistellar (n-1-i)-move relating the boundary
/// after the shelling to the boundary before it. Checked by recomputing both
/// boundaries.
BistellarMove induced_boundary_move(const FacetComplex& c, const ShellingMove& m);

/// Star subdivision of facet `f` along its boundary face `g`: a 0-move on
/// `g` (new vertex w = max + 1) followed by coning the subdivided boundary
/// of `f` from a new apex (max + 2).
FacetComplex star_subdivide_along_face(const FacetComplex& c, const Simplex& f, const Simplex& g);

/// (facet, boundary face) pairs of facets meeting the boundary in exactly
/// one codimension-one face. Throws ClosedInput.
std::vector<std::pair<Simplex, Simplex>> one_face_exposed(const FacetComplex& c);

} // namespace pachner
