#include "indecomp/constructions.hpp"

#include <stdexcept>
#include <string>

namespace indecomp {

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: n must be >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: sides must be >= 1");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph edgeless_graph(int n) {
    if (n < 1) throw std::invalid_argument("edgeless_graph: n must be >= 1");
    return Graph(n);
}

Graph disjoint_edges(int n) {
    if (n < 1) throw std::invalid_argument("disjoint_edges: n must be >= 1");
    Graph g(2 * n);
    for (int i = 0; i < n; ++i) g.add_edge(2 * i, 2 * i + 1);
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.vertex_count() + b.vertex_count());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    int offset = a.vertex_count();
    for (auto [u, v] : b.edges()) g.add_edge(u + offset, v + offset);
    return g;
}

namespace {

void require_clique(const Graph& g, VertexSet k, const char* op) {
    if (!k.subset_of(g.vertices()))
        throw std::out_of_range(std::string(op) + ": vertex set exceeds the graph");
    for (Vertex u : k)
        if (!k.without(u).subset_of(g.adjacency(u)))
            throw std::invalid_argument(std::string(op) + ": " + k.to_string() +
                                        " does not induce a clique");
}

}

CliqueStar clique_star(const Graph& g, VertexSet k) {
    require_clique(g, k, "clique_star");
    Graph out(g.vertex_count() + 1);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    Vertex w = g.vertex_count();
    for (Vertex u : k) out.add_edge(w, u);
    return {std::move(out), w};
}

Attached3Path attach_simplicial_3_path(const Graph& g, VertexSet k1, VertexSet k2) {
    if (k1.intersects(k2))
        throw std::invalid_argument("attach_simplicial_3_path: k1 and k2 must be disjoint");
    require_clique(g, k1 | k2, "attach_simplicial_3_path");
    Graph out(g.vertex_count() + 3);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    Vertex w1 = g.vertex_count();
    Vertex w2 = g.vertex_count() + 1;
    Vertex v = g.vertex_count() + 2;
    for (Vertex u : k1) out.add_edge(w1, u);
    for (Vertex u : k2) out.add_edge(w2, u);
    out.add_edge(v, w1);
    out.add_edge(v, w2);
    return {std::move(out), w1, w2, v};
}

namespace {

Graph add_twin(const Graph& g, Vertex v, bool adjacent) {
    if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("add_twin: vertex out of range");
    Graph out(g.vertex_count() + 1);
    for (auto [a, b] : g.edges()) out.add_edge(a, b);
    Vertex w = g.vertex_count();
    for (Vertex u : g.adjacency(v)) out.add_edge(w, u);
    if (adjacent) out.add_edge(w, v);
    return out;
}

}

Graph add_true_twin(const Graph& g, Vertex v) { return add_twin(g, v, true); }
Graph add_false_twin(const Graph& g, Vertex v) { return add_twin(g, v, false); }

namespace {

Graph product(const Graph& a, const Graph& b, bool cartesian) {
    int na = a.vertex_count(), nb = b.vertex_count();
    Graph g(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            g.set_label(i * nb + j, "(" + std::to_string(i) + "," + std::to_string(j) + ")");
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            for (int i2 = 0; i2 < na; ++i2)
                for (int j2 = 0; j2 < nb; ++j2) {
                    if (i * nb + j >= i2 * nb + j2) continue;
                    bool edge;
                    if (cartesian)
                        edge = (i == i2 && b.has_edge(j, j2)) || (j == j2 && a.has_edge(i, i2));
                    else
                        edge = a.has_edge(i, i2) && b.has_edge(j, j2);
                    if (edge) g.add_edge(i * nb + j, i2 * nb + j2);
                }
    return g;
}

}

Graph cartesian_product(const Graph& a, const Graph& b) { return product(a, b, true); }
Graph direct_product(const Graph& a, const Graph& b) { return product(a, b, false); }

}
