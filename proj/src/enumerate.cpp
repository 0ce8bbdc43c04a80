#include "indecomp/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace indecomp {

namespace {

// Branch-and-bound over vertex orderings.  The code packs, for each
// position j in turn, the adjacency bits of position j against positions
// 0..j-1; prefixes that already exceed the best code are cut.
struct CanonicalSearch {
    const Graph& g;
    int n;
    int total_bits;
    std::uint64_t best;
    std::vector<Vertex> perm;
    std::uint64_t used = 0;

    void dfs(int depth, std::uint64_t partial, int bits) {
        if (depth == n) {
            best = std::min(best, partial);
            return;
        }
        for (Vertex v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            std::uint64_t newbits = 0;
            for (int i = 0; i < depth; ++i)
                newbits = (newbits << 1) | (g.adjacency(v).contains(perm[static_cast<std::size_t>(i)]) ? 1 : 0);
            std::uint64_t cand = (partial << depth) | newbits;
            int cand_bits = bits + depth;
            if (cand > (best >> (total_bits - cand_bits))) continue;
            perm[static_cast<std::size_t>(depth)] = v;
            used |= std::uint64_t{1} << v;
            dfs(depth + 1, cand, cand_bits);
            used &= ~(std::uint64_t{1} << v);
        }
    }
};

std::uint64_t code_of_identity(const Graph& g) {
    std::uint64_t code = 0;
    for (int j = 1; j < g.vertex_count(); ++j)
        for (int i = 0; i < j; ++i)
            code = (code << 1) | (g.has_edge(j, i) ? 1 : 0);
    return code;
}

}

std::uint64_t canonical_code(const Graph& g) {
    int n = g.vertex_count();
    if (n > 11) throw std::invalid_argument("canonical_code: supported up to 11 vertices");
    if (n <= 1) return 0;
    CanonicalSearch search{g, n, n * (n - 1) / 2, code_of_identity(g),
                           std::vector<Vertex>(static_cast<std::size_t>(n)), 0};
    search.dfs(0, 0, 0);
    return search.best;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    auto degrees = [](const Graph& g) {
        std::vector<int> d;
        for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(g.adjacency(v).size());
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees(a) != degrees(b)) return false;
    return canonical_code(a) == canonical_code(b);
}

namespace {

std::vector<Graph> enumerate_uncached(int n, const std::vector<Graph>& smaller) {
    if (n == 1) return {Graph(1)};
    std::map<std::uint64_t, Graph> classes;
    for (const Graph& base : smaller) {
        std::uint64_t limit = std::uint64_t{1} << (n - 1);
        for (std::uint64_t mask = 0; mask < limit; ++mask) {
            Graph g(n);
            for (auto [u, v] : base.edges()) g.add_edge(u, v);
            for (Vertex u = 0; u < n - 1; ++u)
                if ((mask >> u) & 1) g.add_edge(n - 1, u);
            std::uint64_t code = canonical_code(g);
            classes.try_emplace(code, std::move(g));
        }
    }
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto& [code, g] : classes) out.push_back(std::move(g));
    return out;
}

std::mutex cache_mutex;
std::map<int, std::vector<Graph>> cache;

const std::vector<Graph>& cached_enumeration(int n) {
    std::scoped_lock lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    for (int k = 1; k <= n; ++k)
        if (!cache.contains(k))
            cache.emplace(k, enumerate_uncached(k, k > 1 ? cache.at(k - 1) : std::vector<Graph>{}));
    return cache.at(n);
}

}

std::vector<Graph> enumerate_graphs(int n) {
    if (n < 1 || n > 11) throw std::invalid_argument("enumerate_graphs: n must be in [1, 11]");
    return cached_enumeration(n);
}

std::vector<Graph> enumerate_graphs_up_to(int n) {
    std::vector<Graph> out;
    for (int k = 1; k <= n; ++k) {
        const auto reps = enumerate_graphs(k);
        out.insert(out.end(), reps.begin(), reps.end());
    }
    return out;
}

Graph random_graph(int n, double edge_probability, std::mt19937_64& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(edge_probability);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

}
