#ifndef INDECOMP_CONSTRUCTIONS_HPP
#define INDECOMP_CONSTRUCTIONS_HPP

#include "indecomp/graph.hpp"

namespace indecomp {

Graph cycle_graph(int n);        // n >= 3
Graph path_graph(int n);         // n >= 1
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph edgeless_graph(int n);
/// n disjoint edges {2i, 2i+1} on 2n vertices.
Graph disjoint_edges(int n);

/// Vertex-disjoint union; the second graph is relabeled by an offset of
/// a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

struct CliqueStar {
    Graph graph;
    Vertex new_vertex;
};

/// Adds a new vertex adjacent to exactly the clique k ("starring k").
/// The new vertex is simplicial and every member of k is a shedding
/// vertex of the result.  k must induce a clique.
CliqueStar clique_star(const Graph& g, VertexSet k);

struct Attached3Path {
    Graph graph;
    Vertex w1, w2, v;
};

/// Adds w1 ~ k1, w2 ~ k2 and v ~ {w1, w2}, where k1 and k2 are disjoint
/// subsets of a common clique.  v is a shedding vertex of the result.
Attached3Path attach_simplicial_3_path(const Graph& g, VertexSet k1, VertexSet k2);

/// New vertex w with N[w] = N[v] (edge vw present).
Graph add_true_twin(const Graph& g, Vertex v);
/// New vertex w with N(w) = N(v) (no edge vw).
Graph add_false_twin(const Graph& g, Vertex v);

/// Vertex (i, j) of a product maps to id i * b.vertex_count() + j; labels
/// record the pair.
Graph cartesian_product(const Graph& a, const Graph& b);
Graph direct_product(const Graph& a, const Graph& b);

}

#endif
