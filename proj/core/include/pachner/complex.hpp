#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pachner/simplex.hpp"

namespace pachner {

using FaceSet = std::unordered_set<Simplex, SimplexHash>;

/// A pure simplicial complex stored by its maximal simplices.
///
/// Facets are kept sorted lexicographically and pairwise distinct; every
/// facet has dimension `dim()`. Values are immutable: every operation in
/// this library returns a new complex.
///
/// Two degenerate values matter. The empty complex has no facets at all
/// (the boundary of a closed complex). The void complex `{{}}` holds only
/// the empty simplex; it is the boundary of a vertex and the link of a
/// facet.
class FacetComplex {
public:
    FacetComplex() = default;

    /// Canonicalizes and validates. Throws NotPure or DuplicateFacet.
    FacetComplex(std::vector<Simplex> facets, int dim, std::optional<std::string> name = {});

    static FacetComplex empty(int dim);
    static FacetComplex void_complex();
    /// Complex generated by a single simplex.
    static FacetComplex of_simplex(const Simplex& s);
    /// Boundary of a single simplex, dimension dim(s) - 1.
    static FacetComplex boundary_of(const Simplex& s);

    int dim() const noexcept { return dim_; }
    const std::vector<Simplex>& facets() const& noexcept { return facets_; }
    std::vector<Simplex> facets() && { return std::move(facets_); }
    std::size_t num_facets() const noexcept { return facets_.size(); }
    const std::optional<std::string>& name() const noexcept { return name_; }
    FacetComplex with_name(std::optional<std::string> name) const;

    /// True when the complex has no nonempty face.
    bool is_empty() const noexcept;

    std::vector<Vertex> vertices() const;
    Vertex max_vertex() const;

    bool has_facet(const Simplex& s) const;
    bool has_face(const Simplex& s) const;
    std::vector<Simplex> facets_containing(const Simplex& s) const;

    /// Every face, the empty simplex included.
    FaceSet face_set() const;
    /// Sorted faces of dimension k.
    std::vector<Simplex> faces_of_dim(int k) const;

    /// Facet equality; the name is a label and does not take part.
    friend bool operator==(const FacetComplex& a, const FacetComplex& b)
    {
        return a.dim_ == b.dim_ && a.facets_ == b.facets_;
    }

private:
    std::vector<Simplex> facets_;
    int dim_ = -1;
    std::optional<std::string> name_;
};

/// Entry point for untrusted facet lists. Validates ids, purity and
/// duplicates.
FacetComplex build_complex(const std::vector<std::vector<Vertex>>& facets,
                           std::optional<std::string> name = {});

std::vector<std::size_t> face_counts(const FacetComplex& c);
long long euler_characteristic(const FacetComplex& c);

FacetComplex link(const FacetComplex& c, const Simplex& s);
FacetComplex star(const FacetComplex& c, const Simplex& s);
FacetComplex join(const FacetComplex& a, const FacetComplex& b);
FacetComplex join(const Simplex& a, const FacetComplex& b);
FacetComplex join(const FacetComplex& a, const Simplex& b);
FacetComplex join(const Simplex& a, const Simplex& b);

/// Ridges lying in exactly one facet. Throws NotPseudomanifold when a ridge
/// lies in three or more.
FacetComplex boundary_complex(const FacetComplex& c);

/// Two copies glued along the common boundary; interior vertices of the
/// second copy are shifted by the maximal vertex id.
FacetComplex double_complex(const FacetComplex& c);

struct ImplantResult {
    FacetComplex complex;
    /// Cell vertex id -> id in the result.
    std::map<Vertex, Vertex> vertex_map;
};

/// Replaces facet `f` by the disk `d`, whose boundary must be the boundary
/// of the simplex on `labels`. labels[k] is glued to the k-th smallest
/// vertex of `f`; the remaining cell vertices receive fresh ids in
/// ascending order starting at max_vertex(c) + 1.
ImplantResult implant(const FacetComplex& c, const Simplex& f, const FacetComplex& d,
                      const std::vector<Vertex>& labels);
/// As above with labels = the boundary vertices of `d` in ascending order.
FacetComplex implant(const FacetComplex& c, const Simplex& f, const FacetComplex& d);

/// Replaces facet `f`, exposed along the boundary face `g`, by the disk `d`
/// whose boundary is `apex * boundary(window)` plus a subdivided window.
/// window_labels (ascending) are glued to the vertices of `g` in ascending
/// order and `apex` to the vertex of `f` opposite `g`.
ImplantResult implant_along_face(const FacetComplex& c, const Simplex& f, const Simplex& g,
                                 const FacetComplex& d, const std::vector<Vertex>& window_labels,
                                 Vertex apex);

} // namespace pachner
