#ifndef INDECOMP_GRAPH_HPP
#define INDECOMP_GRAPH_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "indecomp/vertex_set.hpp"

namespace indecomp {

/// A finite simple graph on vertices 0..n-1 with adjacency stored as one
/// bitmask per vertex.  Adjacency is kept symmetric and irreflexive.
/// Graphs are treated as immutable once built: add_edge is the
/// construction step, every query below is a pure function.
class Graph {
public:
    explicit Graph(int n);

    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

    void add_edge(Vertex u, Vertex v);

    int vertex_count() const { return n_; }
    VertexSet vertices() const { return VertexSet::full(n_); }
    bool has_edge(Vertex u, Vertex v) const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    /// N(v): all vertices adjacent to v.
    VertexSet open_neighborhood(Vertex v) const;
    /// N[v] = N(v) together with v itself.
    VertexSet closed_neighborhood(Vertex v) const;

    /// Adjacency mask without the bounds check; v must be < vertex_count().
    VertexSet adjacency(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }

    void set_label(Vertex v, std::string label);
    const std::string& label(Vertex v) const;
    bool has_labels() const { return !labels_.empty(); }

    /// Structural equality on n and adjacency; labels are ignored.
    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new;   // -1 where dropped
    std::vector<Vertex> new_to_old;
};

/// Subgraph induced on `keep`, with vertices renumbered densely in
/// ascending order of their old ids.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep);

bool is_independent(const Graph& g, VertexSet s);

/// True when the subgraph induced on `within` has no edges.
bool is_edgeless(const Graph& g, VertexSet within);
bool is_connected(const Graph& g);

/// All inclusion-maximal independent sets, in canonical face order.
/// Deterministic regardless of the internal branching.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);
std::vector<VertexSet> maximal_independent_sets(const Graph& g, VertexSet within);

/// Some chordless (induced) cycle whose length is not in `allowed`, or
/// nullopt if every chordless cycle length is allowed.  The returned
/// sequence lists the cycle in traversal order.
std::optional<std::vector<Vertex>> find_chordless_cycle_outside(const Graph& g,
                                                                const std::set<int>& allowed);
std::optional<std::vector<Vertex>> find_chordless_cycle_outside(const Graph& g,
                                                                const std::set<int>& allowed,
                                                                VertexSet within);

/// Verifier used for witnesses: the sequence is a chordless cycle of the
/// induced subgraph on `within`.
bool is_induced_cycle(const Graph& g, const std::vector<Vertex>& cycle, VertexSet within);
bool is_induced_cycle(const Graph& g, const std::vector<Vertex>& cycle);

struct ChordalityResult {
    bool chordal = false;
    /// Perfect elimination order when chordal.
    std::vector<Vertex> elimination_order;
    /// Some induced cycle of length >= 4 when not chordal.
    std::optional<std::vector<Vertex>> witness_cycle;
};

/// Decides chordality by repeated simplicial-vertex elimination.
ChordalityResult is_chordal(const Graph& g);
bool is_chordal_within(const Graph& g, VertexSet within);

/// All v whose closed neighborhood is a clique.
VertexSet simplicial_vertices(const Graph& g);
VertexSet simplicial_vertices(const Graph& g, VertexSet within);

struct Simplicial3Path {
    Vertex w1 = -1;
    Vertex mid = -1;
    Vertex w2 = -1;
};

/// First (lexicographically smallest ordered triple) chordless 3-path
/// w1,v,w2 that cannot be extended on both ends simultaneously to a
/// chordless 5-path.  Exhaustive search.
std::optional<Simplicial3Path> find_simplicial_3_path(const Graph& g);
std::optional<Simplicial3Path> find_simplicial_3_path(const Graph& g, VertexSet within);

enum class TwinStatus { true_twin, false_twin, not_twin };

TwinStatus twin_status(const Graph& g, Vertex v, Vertex w);

/// gamma(G), by exhaustive search over subsets ascending in size.
int domination_number(const Graph& g);
/// i(G): minimum cardinality of a maximal independent set.
int independent_domination_number(const Graph& g);

Graph complement(const Graph& g);

}

#endif
