#include "indecomp/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace indecomp {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    if (n > kMaxVertices)
        throw std::invalid_argument("graph: vertex count " + std::to_string(n) +
                                    " exceeds the cap of " + std::to_string(kMaxVertices));
    adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("graph: vertex " + std::to_string(v) + " out of range [0, " +
                                std::to_string(n_) + ")");
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)] |= VertexSet::single(v);
    adj_[static_cast<std::size_t>(v)] |= VertexSet::single(u);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u)].contains(v);
}

int Graph::edge_count() const {
    int total = 0;
    for (const auto& a : adj_) total += a.size();
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet Graph::open_neighborhood(Vertex v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)].with(v);
}

void Graph::set_label(Vertex v, std::string label) {
    check_vertex(v);
    if (labels_.empty()) labels_.resize(static_cast<std::size_t>(n_));
    labels_[static_cast<std::size_t>(v)] = std::move(label);
}

const std::string& Graph::label(Vertex v) const {
    check_vertex(v);
    static const std::string empty;
    if (labels_.empty()) return empty;
    return labels_[static_cast<std::size_t>(v)];
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep) {
    if (!keep.subset_of(g.vertices()))
        throw std::out_of_range("induced_subgraph: vertex set exceeds the graph");
    std::vector<int> old_to_new(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<Vertex> new_to_old;
    for (Vertex v : keep) {
        old_to_new[static_cast<std::size_t>(v)] = static_cast<int>(new_to_old.size());
        new_to_old.push_back(v);
    }
    Graph sub(keep.size());
    for (Vertex v : keep) {
        if (g.has_labels()) sub.set_label(old_to_new[static_cast<std::size_t>(v)], g.label(v));
        for (Vertex w : g.adjacency(v) & keep)
            if (v < w)
                sub.add_edge(old_to_new[static_cast<std::size_t>(v)],
                             old_to_new[static_cast<std::size_t>(w)]);
    }
    return {std::move(sub), std::move(old_to_new), std::move(new_to_old)};
}

bool is_independent(const Graph& g, VertexSet s) {
    if (!s.subset_of(g.vertices()))
        throw std::out_of_range("is_independent: vertex set exceeds the graph");
    for (Vertex v : s)
        if (g.adjacency(v).intersects(s)) return false;
    return true;
}

bool is_edgeless(const Graph& g, VertexSet within) {
    for (Vertex v : within)
        if (g.adjacency(v).intersects(within)) return false;
    return true;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    VertexSet seen = VertexSet::single(0);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex v : frontier) next |= g.adjacency(v);
        frontier = next - seen;
        seen |= next;
    }
    return seen == g.vertices();
}

namespace {

// Bron-Kerbosch with pivoting, run on the complement adjacency so the
// maximal cliques reported are exactly the maximal independent sets.
void bron_kerbosch(const Graph& g, VertexSet within, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    auto compat = [&](Vertex v) { return (within - g.adjacency(v)).without(v); };
    Vertex pivot = -1;
    int best = -1;
    for (Vertex u : p | x) {
        int c = (p & compat(u)).size();
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    VertexSet candidates = p - compat(pivot);
    for (Vertex v : candidates) {
        bron_kerbosch(g, within, r.with(v), p & compat(v), x & compat(v), out);
        p = p.without(v);
        x = x.with(v);
    }
}

}

std::vector<VertexSet> maximal_independent_sets(const Graph& g, VertexSet within) {
    if (!within.subset_of(g.vertices()))
        throw std::out_of_range("maximal_independent_sets: vertex set exceeds the graph");
    std::vector<VertexSet> out;
    bron_kerbosch(g, within, VertexSet{}, within, VertexSet{}, out);
    std::sort(out.begin(), out.end(), face_less);
    return out;
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    return maximal_independent_sets(g, g.vertices());
}

namespace {

// DFS over induced paths rooted at the minimum vertex of the cycle being
// sought.  Each induced cycle with minimum vertex s shows up as a path
// s,...,last plus a closing vertex adjacent to both ends and nothing else.
bool chordless_cycle_dfs(const Graph& g, VertexSet within, const std::set<int>& allowed,
                         std::vector<Vertex>& path, VertexSet path_set, VertexSet middle_set,
                         std::vector<Vertex>& found) {
    Vertex s = path.front();
    Vertex last = path.back();
    for (Vertex w : g.adjacency(last) & within) {
        if (w <= s || path_set.contains(w)) continue;
        if (g.adjacency(w).intersects(middle_set)) continue;
        bool closes = path.size() >= 2 && g.has_edge(w, s);
        if (closes) {
            int len = static_cast<int>(path.size()) + 1;
            if (!allowed.contains(len)) {
                found = path;
                found.push_back(w);
                return true;
            }
        } else if (path.size() == 1 || !g.has_edge(w, s)) {
            path.push_back(w);
            VertexSet mid = middle_set;
            if (path.size() > 2) mid |= VertexSet::single(path[path.size() - 2]);
            if (chordless_cycle_dfs(g, within, allowed, path, path_set.with(w), mid, found))
                return true;
            path.pop_back();
        }
    }
    return false;
}

}

std::optional<std::vector<Vertex>> find_chordless_cycle_outside(const Graph& g,
                                                                const std::set<int>& allowed,
                                                                VertexSet within) {
    for (int len : allowed)
        if (len < 3) throw std::invalid_argument("cycle lengths must be >= 3");
    std::vector<Vertex> found;
    for (Vertex s : within) {
        std::vector<Vertex> path{s};
        if (chordless_cycle_dfs(g, within, allowed, path, VertexSet::single(s), VertexSet{}, found)) {
            if (!is_induced_cycle(g, found, within))
                throw std::logic_error("find_chordless_cycle_outside: search returned a non-cycle");
            return found;
        }
    }
    return std::nullopt;
}

std::optional<std::vector<Vertex>> find_chordless_cycle_outside(const Graph& g,
                                                                const std::set<int>& allowed) {
    return find_chordless_cycle_outside(g, allowed, g.vertices());
}

bool is_induced_cycle(const Graph& g, const std::vector<Vertex>& cycle, VertexSet within) {
    std::size_t k = cycle.size();
    if (k < 3) return false;
    VertexSet seen;
    for (Vertex v : cycle) {
        if (v < 0 || v >= g.vertex_count() || !within.contains(v) || seen.contains(v)) return false;
        seen |= VertexSet::single(v);
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.has_edge(cycle[i], cycle[j]) != consecutive) return false;
        }
    return true;
}

bool is_induced_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
    return is_induced_cycle(g, cycle, g.vertices());
}

namespace {

bool simplicial_in(const Graph& g, VertexSet within, Vertex v) {
    VertexSet nbrs = g.adjacency(v) & within;
    for (Vertex u : nbrs)
        if (!nbrs.without(u).subset_of(g.adjacency(u))) return false;
    return true;
}

bool elimination_order_within(const Graph& g, VertexSet within, std::vector<Vertex>* order) {
    VertexSet rest = within;
    while (!rest.empty()) {
        Vertex found = -1;
        for (Vertex v : rest)
            if (simplicial_in(g, rest, v)) {
                found = v;
                break;
            }
        if (found < 0) return false;
        if (order) order->push_back(found);
        rest = rest.without(found);
    }
    return true;
}

}

ChordalityResult is_chordal(const Graph& g) {
    ChordalityResult res;
    res.chordal = elimination_order_within(g, g.vertices(), &res.elimination_order);
    if (!res.chordal) {
        res.elimination_order.clear();
        res.witness_cycle = find_chordless_cycle_outside(g, {3});
        if (!res.witness_cycle)
            throw std::logic_error("is_chordal: elimination stuck but no induced cycle found");
    }
    return res;
}

bool is_chordal_within(const Graph& g, VertexSet within) {
    return elimination_order_within(g, within, nullptr);
}

VertexSet simplicial_vertices(const Graph& g, VertexSet within) {
    VertexSet out;
    for (Vertex v : within)
        if (simplicial_in(g, within, v)) out |= VertexSet::single(v);
    return out;
}

VertexSet simplicial_vertices(const Graph& g) { return simplicial_vertices(g, g.vertices()); }

namespace {

// A chordless 3-path w1,v,w2 extends when there are v0 ~ w1 and v4 ~ w2
// making v0,w1,v,w2,v4 chordless; non-extendability is checked over all
// such pairs.
bool three_path_extends(const Graph& g, VertexSet within, Vertex w1, Vertex v, Vertex w2) {
    VertexSet blocked_left = g.closed_neighborhood(v) | g.closed_neighborhood(w2);
    VertexSet left = (g.adjacency(w1) & within) - blocked_left;
    VertexSet blocked_right = g.closed_neighborhood(v) | g.closed_neighborhood(w1);
    VertexSet right = (g.adjacency(w2) & within) - blocked_right;
    for (Vertex a : left) {
        VertexSet partners = right - g.closed_neighborhood(a);
        if (!partners.empty()) return true;
    }
    return false;
}

}

std::optional<Simplicial3Path> find_simplicial_3_path(const Graph& g, VertexSet within) {
    for (Vertex w1 : within)
        for (Vertex v : g.adjacency(w1) & within)
            for (Vertex w2 : g.adjacency(v) & within) {
                if (w2 == w1 || g.has_edge(w1, w2)) continue;
                if (!three_path_extends(g, within, w1, v, w2))
                    return Simplicial3Path{w1, v, w2};
            }
    return std::nullopt;
}

std::optional<Simplicial3Path> find_simplicial_3_path(const Graph& g) {
    return find_simplicial_3_path(g, g.vertices());
}

TwinStatus twin_status(const Graph& g, Vertex v, Vertex w) {
    if (v == w) throw std::invalid_argument("twin_status: vertices must be distinct");
    if (g.adjacency(v).without(w) != g.adjacency(w).without(v)) return TwinStatus::not_twin;
    return g.has_edge(v, w) ? TwinStatus::true_twin : TwinStatus::false_twin;
}

namespace {

// Iterate subsets ascending in size; Gosper's hack walks the k-subsets.
template <typename Pred>
int smallest_subset_size(int n, Pred&& good) {
    for (int k = 1; k <= n; ++k) {
        std::uint64_t mask = (std::uint64_t{1} << k) - 1;
        std::uint64_t limit = std::uint64_t{1} << n;
        while (mask < limit) {
            if (good(VertexSet::from_bits(mask))) return k;
            std::uint64_t c = mask & (~mask + 1);
            std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    throw std::logic_error("smallest_subset_size: no subset satisfies the predicate");
}

}

namespace {

void check_search_scale(const Graph& g, const char* op) {
    if (g.vertex_count() > 30)
        throw std::invalid_argument(std::string(op) + ": exhaustive search capped at 30 vertices");
}

}

int domination_number(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("domination_number: empty graph");
    check_search_scale(g, "domination_number");
    VertexSet all = g.vertices();
    return smallest_subset_size(g.vertex_count(), [&](VertexSet s) {
        VertexSet covered;
        for (Vertex v : s) covered |= g.closed_neighborhood(v);
        return covered == all;
    });
}

int independent_domination_number(const Graph& g) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("independent_domination_number: empty graph");
    check_search_scale(g, "independent_domination_number");
    VertexSet all = g.vertices();
    return smallest_subset_size(g.vertex_count(), [&](VertexSet s) {
        if (!is_independent(g, s)) return false;
        VertexSet covered;
        for (Vertex v : s) covered |= g.closed_neighborhood(v);
        return covered == all;
    });
}

Graph complement(const Graph& g) {
    Graph out(g.vertex_count());
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = u + 1; v < g.vertex_count(); ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

}
