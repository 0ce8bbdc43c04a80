#ifndef INDECOMP_DECOMPOSE_HPP
#define INDECOMP_DECOMPOSE_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "indecomp/complex.hpp"
#include "indecomp/graph.hpp"

namespace indecomp {

/// Certificate of vertex decomposability.  Internal nodes name a shedding
/// vertex (in the labels of the root graph/complex) and carry the
/// certificates for the deletion and the link; leaves mark the base case.
struct SheddingTree {
    enum class Kind { simplex_leaf, edgeless_leaf, shed };

    Kind kind = Kind::simplex_leaf;
    Vertex vertex = -1;
    std::shared_ptr<const SheddingTree> deletion;
    std::shared_ptr<const SheddingTree> link;

    static std::shared_ptr<const SheddingTree> simplex_leaf();
    static std::shared_ptr<const SheddingTree> edgeless_leaf();
    static std::shared_ptr<const SheddingTree> shed(Vertex v,
                                                    std::shared_ptr<const SheddingTree> deletion,
                                                    std::shared_ptr<const SheddingTree> link);

    int node_count() const;
};

using SheddingTreePtr = std::shared_ptr<const SheddingTree>;

/// Graph form of the shedding condition: every maximal independent set of
/// G \ N[v] extends by some x in N(v).  (Checking maximal sets suffices:
/// an extension vertex for a superset works for the subset.)
bool is_shedding_vertex(const Graph& g, Vertex v);
bool is_shedding_vertex(const Graph& g, VertexSet within, Vertex v);

/// Complex form: no face of link_Δ v is a facet of Δ \ v.  Requires {v}
/// to be a face.
bool is_shedding_vertex(const SimplicialComplex& c, Vertex v);

/// All ordered pairs (v, w) with N[v] ⊆ N[w], v != w.  Every reported w
/// is a shedding vertex; this is re-verified and a violation is a logic
/// error.
std::vector<std::pair<Vertex, Vertex>> neighborhood_containment_shedding(const Graph& g);

enum class SearchStatus { yes, no, inconclusive };

struct DecomposeOptions {
    /// Cap on memo entries; exceeding it yields an inconclusive result,
    /// never a "no".
    std::size_t memo_budget = 1'000'000;
};

struct DecomposeResult {
    SearchStatus status = SearchStatus::inconclusive;
    SheddingTreePtr tree;   // set when status == yes
};

/// Exhaustive decision with memoization over induced vertex subsets.
DecomposeResult is_vertex_decomposable(const Graph& g, const DecomposeOptions& opts = {});

/// Complex-level decision; memoized on facet lists.
DecomposeResult is_vertex_decomposable(const SimplicialComplex& c,
                                       const DecomposeOptions& opts = {});

struct ConstructiveResult {
    bool ok = false;
    SheddingTreePtr tree;
    /// Witness chordless cycle of length outside {3, 5} when not ok.
    std::vector<Vertex> witness_cycle;
};

/// Search-free decomposition for graphs with no chordless cycle of length
/// other than 3 or 5: chordal graphs shed a neighbor of a simplicial
/// vertex, the rest shed the middle of a simplicial 3-path.
ConstructiveResult constructive_decomposition(const Graph& g);

struct ValidationResult {
    bool valid = false;
    std::string failure_path;   // e.g. "root/delete/link"
    std::string reason;
};

/// Independently re-verifies every node of a certificate.
ValidationResult validate_shedding_tree(const Graph& g, const SheddingTree& tree);
ValidationResult validate_shedding_tree(const SimplicialComplex& c, const SheddingTree& tree);

}

#endif
