#ifndef INDECOMP_COMPLEX_HPP
#define INDECOMP_COMPLEX_HPP

#include <optional>
#include <span>
#include <vector>

#include "indecomp/graph.hpp"
#include "indecomp/vertex_set.hpp"

namespace indecomp {

using Face = VertexSet;

/// A simplicial complex on the vertex universe {0..universe-1}, stored by
/// its facets.  The facet list is an antichain in canonical face order.
///
/// Two degenerate complexes are distinguished: the VOID complex has no
/// faces at all (empty facet list), while the IRRELEVANT complex has the
/// empty face as its only face (facet list {∅}).  The irrelevant complex
/// is a simplex; the void complex is not.
class SimplicialComplex {
public:
    /// Normalizes: deduplicates, absorbs dominated candidates, sorts.
    /// An empty candidate list produces the void complex.
    static SimplicialComplex from_facets(int universe, std::vector<Face> candidates);

    static SimplicialComplex void_complex(int universe);
    static SimplicialComplex irrelevant_complex(int universe);

    int universe() const { return universe_; }
    const std::vector<Face>& facets() const { return facets_; }
    int facet_count() const { return static_cast<int>(facets_.size()); }

    bool is_void() const { return facets_.empty(); }
    bool is_irrelevant() const { return facets_.size() == 1 && facets_[0].empty(); }
    /// A complex with exactly one facet (the irrelevant complex counts).
    bool is_simplex() const { return facets_.size() == 1; }

    /// -1 for the irrelevant complex, -2 for the void complex.
    int dimension() const;
    bool is_pure() const;

    bool is_face(Face f) const;
    /// Union of all facets (vertices that are actually faces).
    Face support() const;

    /// Every face including the empty one, sorted by dimension then face
    /// order.  Empty for the void complex.
    std::vector<Face> all_faces() const;
    std::vector<Face> faces_of_dimension(int d) const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    SimplicialComplex(int universe, std::vector<Face> facets)
        : universe_(universe), facets_(std::move(facets)) {}

    int universe_ = 0;
    std::vector<Face> facets_;
};

/// The complex whose faces are the independent sets of g.
SimplicialComplex independence_complex(const Graph& g);

/// link_Δ F = { G : G ∪ F is a face, G ∩ F = ∅ }.  F must be a face.
SimplicialComplex link(const SimplicialComplex& c, Face f);

/// All faces not containing v, on the same universe.
SimplicialComplex delete_vertex(const SimplicialComplex& c, Vertex v);

/// Join on disjoint universes; the second complex is shifted up by the
/// first universe size.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/// The complex generated by all i-dimensional faces.  Requires
/// -1 <= i <= dimension().
SimplicialComplex pure_skeleton(const SimplicialComplex& c, int i);

/// All inclusion-minimal subsets of the universe that are not faces.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& c);

struct FlagResult {
    bool flag = false;
    std::optional<Graph> graph;   // defining graph when flag
};

/// Flag iff every minimal non-face has size 2; the defining graph then
/// has exactly those pairs as edges and satisfies
/// independence_complex(graph) == c.
FlagResult is_flag(const SimplicialComplex& c);

/// The d-dimensional complex on Z/nZ with facets {s, s+2, ..., s+2d} for
/// every s.  Requires n odd and 0 < d < (n-1)/2.  Vertex i here is the
/// 1-based vertex i+1 of the usual presentation.
SimplicialComplex delta_complex(int n, int d);

/// Facets {i, i+1, i+2} mod n for every i; n >= 4.  Vertex i is the
/// 1-based vertex i+1 of the usual presentation.
SimplicialComplex moebius_complex(int n);

/// Removes every face containing f; f must be a nonempty proper face
/// contained in exactly one facet.  Preserves homotopy type.
SimplicialComplex collapse_free_face(const SimplicialComplex& c, Face f);

/// Renames vertices through old_to_new (entries < 0 must not occur in any
/// facet); the map must be injective on the support.
SimplicialComplex relabel(const SimplicialComplex& c, std::span<const int> old_to_new,
                          int new_universe);

}

#endif
