#include "indecomp/decompose.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace indecomp {

SheddingTreePtr SheddingTree::simplex_leaf() {
    auto node = std::make_shared<SheddingTree>();
    node->kind = Kind::simplex_leaf;
    return node;
}

SheddingTreePtr SheddingTree::edgeless_leaf() {
    auto node = std::make_shared<SheddingTree>();
    node->kind = Kind::edgeless_leaf;
    return node;
}

SheddingTreePtr SheddingTree::shed(Vertex v, SheddingTreePtr deletion, SheddingTreePtr link) {
    auto node = std::make_shared<SheddingTree>();
    node->kind = Kind::shed;
    node->vertex = v;
    node->deletion = std::move(deletion);
    node->link = std::move(link);
    return node;
}

int SheddingTree::node_count() const {
    if (kind != Kind::shed) return 1;
    return 1 + deletion->node_count() + link->node_count();
}

bool is_shedding_vertex(const Graph& g, VertexSet within, Vertex v) {
    if (!within.contains(v))
        throw std::out_of_range("is_shedding_vertex: vertex not in the subgraph");
    VertexSet rest = within - g.closed_neighborhood(v);
    VertexSet nv = g.adjacency(v) & within;
    for (VertexSet s : maximal_independent_sets(g, rest)) {
        bool extends = false;
        for (Vertex x : nv)
            if (!g.adjacency(x).intersects(s)) {
                extends = true;
                break;
            }
        if (!extends) return false;
    }
    return true;
}

bool is_shedding_vertex(const Graph& g, Vertex v) {
    return is_shedding_vertex(g, g.vertices(), v);
}

bool is_shedding_vertex(const SimplicialComplex& c, Vertex v) {
    if (!c.is_face(Face::single(v)))
        throw std::invalid_argument("is_shedding_vertex: {" + std::to_string(v) +
                                    "} is not a face");
    SimplicialComplex lk = link(c, Face::single(v));
    SimplicialComplex del = delete_vertex(c, v);
    for (Face d : del.facets())
        if (lk.is_face(d)) return false;
    return true;
}

std::vector<std::pair<Vertex, Vertex>> neighborhood_containment_shedding(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (Vertex w = 0; w < g.vertex_count(); ++w) {
            if (v == w) continue;
            if (g.closed_neighborhood(v).subset_of(g.closed_neighborhood(w))) {
                if (!is_shedding_vertex(g, w))
                    throw std::logic_error("neighborhood containment did not yield a shedding vertex");
                out.emplace_back(v, w);
            }
        }
    return out;
}

namespace {

struct BudgetExceeded {};

// Candidate order: shed targets of containment pairs first, simplicial
// vertex neighbors next, then everything else.  Certificates thus match
// the cheap constructions whenever they apply.
std::vector<Vertex> shedding_candidates(const Graph& g, VertexSet within) {
    std::vector<Vertex> order;
    VertexSet seen;
    auto push = [&](Vertex v) {
        if (!seen.contains(v)) {
            seen |= VertexSet::single(v);
            order.push_back(v);
        }
    };
    for (Vertex v : within)
        for (Vertex w : within) {
            if (v == w) continue;
            VertexSet nv = (g.closed_neighborhood(v) & within);
            VertexSet nw = (g.closed_neighborhood(w) & within);
            if (nv.subset_of(nw)) push(w);
        }
    for (Vertex u : simplicial_vertices(g, within))
        for (Vertex w : g.adjacency(u) & within) push(w);
    for (Vertex v : within) push(v);
    return order;
}

struct GraphSearch {
    const Graph& g;
    std::size_t budget;
    std::unordered_map<std::uint64_t, DecomposeResult> memo;

    DecomposeResult decide(VertexSet within) {
        auto it = memo.find(within.bits());
        if (it != memo.end()) return it->second;
        DecomposeResult res = compute(within);
        if (memo.size() >= budget) throw BudgetExceeded{};
        memo.emplace(within.bits(), res);
        return res;
    }

    DecomposeResult compute(VertexSet within) {
        if (is_edgeless(g, within)) return {SearchStatus::yes, SheddingTree::edgeless_leaf()};
        for (Vertex v : shedding_candidates(g, within)) {
            if (!is_shedding_vertex(g, within, v)) continue;
            DecomposeResult del = decide(within.without(v));
            if (del.status != SearchStatus::yes) continue;
            DecomposeResult lnk = decide(within - g.closed_neighborhood(v));
            if (lnk.status != SearchStatus::yes) continue;
            return {SearchStatus::yes, SheddingTree::shed(v, del.tree, lnk.tree)};
        }
        return {SearchStatus::no, nullptr};
    }
};

}

DecomposeResult is_vertex_decomposable(const Graph& g, const DecomposeOptions& opts) {
    GraphSearch search{g, opts.memo_budget, {}};
    try {
        return search.decide(g.vertices());
    } catch (const BudgetExceeded&) {
        return {SearchStatus::inconclusive, nullptr};
    }
}

namespace {

struct ComplexSearch {
    std::size_t budget;
    std::map<std::pair<int, std::vector<std::uint64_t>>, DecomposeResult> memo;

    static std::pair<int, std::vector<std::uint64_t>> key(const SimplicialComplex& c) {
        std::vector<std::uint64_t> bits;
        bits.reserve(c.facets().size());
        for (Face f : c.facets()) bits.push_back(f.bits());
        return {c.universe(), std::move(bits)};
    }

    DecomposeResult decide(const SimplicialComplex& c) {
        auto k = key(c);
        auto it = memo.find(k);
        if (it != memo.end()) return it->second;
        DecomposeResult res = compute(c);
        if (memo.size() >= budget) throw BudgetExceeded{};
        memo.emplace(std::move(k), res);
        return res;
    }

    DecomposeResult compute(const SimplicialComplex& c) {
        if (c.is_simplex()) return {SearchStatus::yes, SheddingTree::simplex_leaf()};
        for (Vertex v : c.support()) {
            if (!is_shedding_vertex(c, v)) continue;
            DecomposeResult del = decide(delete_vertex(c, v));
            if (del.status != SearchStatus::yes) continue;
            DecomposeResult lnk = decide(link(c, Face::single(v)));
            if (lnk.status != SearchStatus::yes) continue;
            return {SearchStatus::yes, SheddingTree::shed(v, del.tree, lnk.tree)};
        }
        return {SearchStatus::no, nullptr};
    }
};

}

DecomposeResult is_vertex_decomposable(const SimplicialComplex& c, const DecomposeOptions& opts) {
    if (c.is_void())
        throw std::invalid_argument("is_vertex_decomposable: void complex");
    ComplexSearch search{opts.memo_budget, {}};
    try {
        return search.decide(c);
    } catch (const BudgetExceeded&) {
        return {SearchStatus::inconclusive, nullptr};
    }
}

namespace {

SheddingTreePtr constructive_node(const Graph& g, VertexSet within) {
    if (is_edgeless(g, within)) return SheddingTree::edgeless_leaf();
    Vertex shed = -1;
    if (is_chordal_within(g, within)) {
        // Neighbor of a simplicial vertex; a chordal graph with an edge
        // always has a simplicial vertex with a neighbor.
        for (Vertex u : simplicial_vertices(g, within)) {
            VertexSet nbrs = g.adjacency(u) & within;
            if (!nbrs.empty()) {
                shed = nbrs.min();
                break;
            }
        }
        if (shed < 0) throw std::logic_error("chordal graph with an edge lacks a shedding target");
    } else {
        auto path = find_simplicial_3_path(g, within);
        if (!path)
            throw std::logic_error(
                "5-chordal graph with a chordless 3-path lacks a simplicial 3-path");
        shed = path->mid;
    }
    if (!is_shedding_vertex(g, within, shed))
        throw std::logic_error("constructive decomposition selected a non-shedding vertex");
    return SheddingTree::shed(shed, constructive_node(g, within.without(shed)),
                              constructive_node(g, within - g.closed_neighborhood(shed)));
}

}

ConstructiveResult constructive_decomposition(const Graph& g) {
    if (auto cycle = find_chordless_cycle_outside(g, {3, 5}))
        return {false, nullptr, *cycle};
    return {true, constructive_node(g, g.vertices()), {}};
}

namespace {

ValidationResult invalid(std::string path, std::string reason) {
    return {false, std::move(path), std::move(reason)};
}

ValidationResult validate_graph_node(const Graph& g, VertexSet within, const SheddingTree& node,
                                     const std::string& path) {
    if (node.kind != SheddingTree::Kind::shed) {
        if (!is_edgeless(g, within))
            return invalid(path, "leaf reached but the remaining graph has an edge");
        return {true, {}, {}};
    }
    Vertex v = node.vertex;
    if (v < 0 || v >= g.vertex_count() || !within.contains(v))
        return invalid(path, "shedding vertex " + std::to_string(v) + " not in the subgraph");
    if (!node.deletion || !node.link) return invalid(path, "missing branch");
    if (!is_shedding_vertex(g, within, v))
        return invalid(path, "vertex " + std::to_string(v) + " fails the shedding condition");
    ValidationResult del =
        validate_graph_node(g, within.without(v), *node.deletion, path + "/delete");
    if (!del.valid) return del;
    return validate_graph_node(g, within - g.closed_neighborhood(v), *node.link, path + "/link");
}

ValidationResult validate_complex_node(const SimplicialComplex& c, const SheddingTree& node,
                                       const std::string& path) {
    if (node.kind != SheddingTree::Kind::shed) {
        if (!c.is_simplex()) return invalid(path, "leaf reached but the complex is not a simplex");
        return {true, {}, {}};
    }
    Vertex v = node.vertex;
    if (v < 0 || v >= c.universe() || !c.is_face(Face::single(v)))
        return invalid(path, "shedding vertex " + std::to_string(v) + " is not a face");
    if (!node.deletion || !node.link) return invalid(path, "missing branch");
    if (!is_shedding_vertex(c, v))
        return invalid(path, "vertex " + std::to_string(v) + " fails the shedding condition");
    ValidationResult del =
        validate_complex_node(delete_vertex(c, v), *node.deletion, path + "/delete");
    if (!del.valid) return del;
    return validate_complex_node(link(c, Face::single(v)), *node.link, path + "/link");
}

}

ValidationResult validate_shedding_tree(const Graph& g, const SheddingTree& tree) {
    return validate_graph_node(g, g.vertices(), tree, "root");
}

ValidationResult validate_shedding_tree(const SimplicialComplex& c, const SheddingTree& tree) {
    if (c.is_void()) return invalid("root", "void complex");
    return validate_complex_node(c, tree, "root");
}

}
