#ifndef INDECOMP_ENUMERATE_HPP
#define INDECOMP_ENUMERATE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "indecomp/graph.hpp"

namespace indecomp {

/// Label-independent code: the minimum, over all vertex orderings, of the
/// adjacency bits read off position by position.  Supports n <= 11.
std::uint64_t canonical_code(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

/// One representative per isomorphism class on exactly n vertices,
/// deterministic order.
std::vector<Graph> enumerate_graphs(int n);

/// Representatives for 1..n vertices, smaller sizes first.
std::vector<Graph> enumerate_graphs_up_to(int n);

/// G(n, p) with the given generator.
Graph random_graph(int n, double edge_probability, std::mt19937_64& rng);

}

#endif
