// Test-side oracles: brute-force reimplementations kept independent of the
// library code paths they check.
#ifndef INDECOMP_TEST_HELPERS_HPP
#define INDECOMP_TEST_HELPERS_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "indecomp/graph.hpp"

namespace test_oracle {

using indecomp::Graph;
using indecomp::Vertex;
using indecomp::VertexSet;

inline bool independent(const Graph& g, std::uint64_t mask) {
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (!((mask >> u) & 1)) continue;
        for (Vertex v = u + 1; v < g.vertex_count(); ++v)
            if (((mask >> v) & 1) && g.has_edge(u, v)) return false;
    }
    return true;
}

/// Every independent subset of `within`, by scanning all 2^n masks.
inline std::vector<std::uint64_t> all_independent_sets(const Graph& g, VertexSet within) {
    std::vector<std::uint64_t> out;
    std::uint64_t limit = std::uint64_t{1} << g.vertex_count();
    for (std::uint64_t mask = 0; mask < limit; ++mask)
        if ((mask & ~within.bits()) == 0 && independent(g, mask)) out.push_back(mask);
    return out;
}

/// Maximal independent sets by filtering the full enumeration.
inline std::vector<std::uint64_t> brute_force_mis(const Graph& g, VertexSet within) {
    std::vector<std::uint64_t> independents = all_independent_sets(g, within);
    std::vector<std::uint64_t> out;
    for (std::uint64_t s : independents) {
        bool maximal = true;
        for (Vertex v : within)
            if (!((s >> v) & 1) && independent(g, s | (std::uint64_t{1} << v))) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// All induced cycles as vertex sets, found by checking every subset for
/// being a cycle (every member has exactly two neighbors inside, the
/// subset is connected, and the count of inside-edges equals its size).
inline std::vector<std::uint64_t> all_induced_cycle_sets(const Graph& g) {
    std::vector<std::uint64_t> out;
    std::uint64_t limit = std::uint64_t{1} << g.vertex_count();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        int size = std::popcount(mask);
        if (size < 3) continue;
        VertexSet s = VertexSet::from_bits(mask);
        bool degree_two = true;
        for (Vertex v : s)
            if ((g.adjacency(v) & s).size() != 2) {
                degree_two = false;
                break;
            }
        if (!degree_two) continue;
        // connected?
        VertexSet seen = VertexSet::single(s.min());
        VertexSet frontier = seen;
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex v : frontier) next |= g.adjacency(v) & s;
            frontier = next - seen;
            seen |= next;
        }
        if (seen == s) out.push_back(mask);
    }
    return out;
}

/// The literal predicate for a simplicial 3-path: w1,v,w2 is a chordless
/// 3-path and no pair (a, b) makes a,w1,v,w2,b a chordless 5-path.
inline bool literal_simplicial_3_path(const Graph& g, Vertex w1, Vertex v, Vertex w2) {
    if (w1 == v || v == w2 || w1 == w2) return false;
    if (!g.has_edge(w1, v) || !g.has_edge(v, w2) || g.has_edge(w1, w2)) return false;
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
        if (a == w1 || a == v || a == w2) continue;
        for (Vertex b = 0; b < g.vertex_count(); ++b) {
            if (b == w1 || b == v || b == w2 || b == a) continue;
            bool chordless_five = g.has_edge(a, w1) && g.has_edge(b, w2) && !g.has_edge(a, v) &&
                                  !g.has_edge(a, w2) && !g.has_edge(a, b) && !g.has_edge(b, v) &&
                                  !g.has_edge(b, w1);
            if (chordless_five) return false;
        }
    }
    return true;
}

inline std::vector<std::array<Vertex, 3>> all_simplicial_3_paths(const Graph& g) {
    std::vector<std::array<Vertex, 3>> out;
    for (Vertex w1 = 0; w1 < g.vertex_count(); ++w1)
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            for (Vertex w2 = w1 + 1; w2 < g.vertex_count(); ++w2)
                if (literal_simplicial_3_path(g, w1, v, w2)) out.push_back({w1, v, w2});
    return out;
}

}

#endif
