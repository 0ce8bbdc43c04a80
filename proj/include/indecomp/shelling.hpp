#ifndef INDECOMP_SHELLING_HPP
#define INDECOMP_SHELLING_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "indecomp/decompose.hpp"

namespace indecomp {

struct ShellingCheck {
    bool valid = false;
    /// 0-based position of the first facet violating the condition; -1
    /// when valid.
    int failing_index = -1;
};

/// Non-pure shelling condition: for each position j there is, for every
/// earlier facet F_i, some earlier F_k with F_i ∩ F_j ⊆ F_k ∩ F_j and
/// |F_j \ F_k| = 1.  The order must be a permutation of the facets.
ShellingCheck is_shelling(const SimplicialComplex& c, std::span<const Face> order);

/// Shelling extracted from a shedding tree: the order of Δ \ v followed
/// by the facets of v * link_Δ v in the order of the link's shelling.
/// The tree must validate against c.
std::vector<Face> shelling_from_tree(const SimplicialComplex& c, const SheddingTree& tree);

struct ShellingSearch {
    SearchStatus status = SearchStatus::inconclusive;
    std::vector<Face> order;   // set when status == yes
};

/// DFS over facet orders with prefix pruning and dead-prefix memoization.
/// Facet counts above the cap return inconclusive, never "no".
ShellingSearch is_shellable_bruteforce(const SimplicialComplex& c, int facet_cap = 12);

/// Some induced cycle of length 4 or >= 6, if any.  Absence certifies
/// that g is vertex decomposable, shellable and sequentially
/// Cohen-Macaulay.
std::optional<std::vector<Vertex>> find_flag_obstruction(const Graph& g);

struct ObstructionCheck {
    SearchStatus status = SearchStatus::inconclusive;
    bool obstruction = false;
    std::string detail;
};

/// True when c is not shellable while every member of the checked family
/// of proper subcomplexes is.  The family is restricted to single-facet
/// deletions and single-vertex deletions; the full subcomplex lattice is
/// not searched, and `detail` records the scope.
ObstructionCheck verify_obstruction(const SimplicialComplex& c, int facet_cap = 12);

struct ShellabilityDecision {
    SearchStatus status = SearchStatus::inconclusive;
    std::vector<Face> order;
    std::string method;         // "shedding-tree", "scm-obstruction", "exhaustive"
    int failing_skeleton = -1;  // set for scm-obstruction refusals
};

/// Composite decision: a shedding tree yields an order, a failing pure
/// skeleton refutes, and brute force settles whatever remains within the
/// facet cap.
ShellabilityDecision decide_shellable(const SimplicialComplex& c, int facet_cap = 12,
                                      std::size_t vd_budget = 1'000'000);
ShellabilityDecision decide_shellable(const Graph& g, int facet_cap = 12,
                                      std::size_t vd_budget = 1'000'000);

}

#endif
