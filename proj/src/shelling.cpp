#include "indecomp/shelling.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "indecomp/homology.hpp"

namespace indecomp {

namespace {

bool step_ok(const std::vector<Face>& order, std::size_t j, Face fj) {
    for (std::size_t i = 0; i < j; ++i) {
        Face inter = order[i] & fj;
        bool covered = false;
        for (std::size_t k = 0; k < j; ++k)
            if ((fj - order[k]).size() == 1 && inter.subset_of(order[k])) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

}

ShellingCheck is_shelling(const SimplicialComplex& c, std::span<const Face> order) {
    std::vector<Face> sorted(order.begin(), order.end());
    std::sort(sorted.begin(), sorted.end(), face_less);
    if (sorted != c.facets())
        throw std::invalid_argument("is_shelling: order is not a permutation of the facets");
    std::vector<Face> prefix;
    prefix.reserve(order.size());
    for (std::size_t j = 0; j < order.size(); ++j) {
        if (j > 0 && !step_ok(prefix, j, order[j]))
            return {false, static_cast<int>(j)};
        prefix.push_back(order[j]);
    }
    return {true, -1};
}

std::vector<Face> shelling_from_tree(const SimplicialComplex& c, const SheddingTree& tree) {
    if (tree.kind != SheddingTree::Kind::shed) {
        if (!c.is_simplex())
            throw std::invalid_argument("shelling_from_tree: leaf on a non-simplex");
        return {c.facets().front()};
    }
    Vertex v = tree.vertex;
    if (!c.is_face(Face::single(v)))
        throw std::invalid_argument("shelling_from_tree: tree vertex is not a face");
    if (!tree.deletion || !tree.link)
        throw std::invalid_argument("shelling_from_tree: malformed tree");
    std::vector<Face> order = shelling_from_tree(delete_vertex(c, v), *tree.deletion);
    for (Face f : shelling_from_tree(link(c, Face::single(v)), *tree.link))
        order.push_back(f.with(v));
    return order;
}

namespace {

struct BruteForce {
    const std::vector<Face>& facets;
    std::vector<Face> order;
    std::vector<bool> used;
    std::unordered_set<std::uint64_t> dead;   // facet-index subsets with no completion

    bool dfs(std::uint64_t placed) {
        if (order.size() == facets.size()) return true;
        if (dead.contains(placed)) return false;
        for (std::size_t cand = 0; cand < facets.size(); ++cand) {
            if (used[cand]) continue;
            if (!order.empty() && !step_ok(order, order.size(), facets[cand])) continue;
            used[cand] = true;
            order.push_back(facets[cand]);
            if (dfs(placed | (std::uint64_t{1} << cand))) return true;
            order.pop_back();
            used[cand] = false;
        }
        dead.insert(placed);
        return false;
    }
};

}

ShellingSearch is_shellable_bruteforce(const SimplicialComplex& c, int facet_cap) {
    // the dead-prefix memo indexes facet subsets by machine word
    if (c.facet_count() > std::min(facet_cap, 64)) return {SearchStatus::inconclusive, {}};
    if (c.facet_count() <= 1) return {SearchStatus::yes, c.facets()};
    BruteForce search{c.facets(), {}, std::vector<bool>(c.facets().size(), false), {}};
    if (search.dfs(0)) return {SearchStatus::yes, std::move(search.order)};
    return {SearchStatus::no, {}};
}

std::optional<std::vector<Vertex>> find_flag_obstruction(const Graph& g) {
    return find_chordless_cycle_outside(g, {3, 5});
}

ObstructionCheck verify_obstruction(const SimplicialComplex& c, int facet_cap) {
    ShellingSearch whole = is_shellable_bruteforce(c, facet_cap);
    if (whole.status == SearchStatus::inconclusive)
        return {SearchStatus::inconclusive, false, "facet count exceeds the brute-force cap"};
    if (whole.status == SearchStatus::yes)
        return {SearchStatus::yes, false, "the complex itself is shellable"};

    // Checked family: every proper induced restriction (all faces inside a
    // proper subset of the support).  Minimality under restrictions is the
    // notion the obstruction results are stated for; arbitrary subcomplexes
    // are not searched.
    Face support = c.support();
    std::uint64_t full = support.bits();
    for (std::uint64_t bits = (full - 1) & full;; bits = (bits - 1) & full) {
        Face keep = Face::from_bits(bits);
        std::vector<Face> candidates;
        for (Face f : c.facets()) candidates.push_back(f & keep);
        SimplicialComplex sub = SimplicialComplex::from_facets(c.universe(), std::move(candidates));
        ShellingSearch s = is_shellable_bruteforce(sub, facet_cap);
        if (s.status == SearchStatus::inconclusive)
            return {SearchStatus::inconclusive, false,
                    "restriction to " + keep.to_string() + " exceeds the facet cap"};
        if (s.status == SearchStatus::no)
            return {SearchStatus::yes, false,
                    "restriction to " + keep.to_string() + " is not shellable"};
        if (bits == 0) break;
    }
    return {SearchStatus::yes, true,
            "not shellable; every proper induced restriction is shellable"};
}

ShellabilityDecision decide_shellable(const SimplicialComplex& c, int facet_cap,
                                      std::size_t vd_budget) {
    DecomposeResult vd = is_vertex_decomposable(c, {vd_budget});
    if (vd.status == SearchStatus::yes) {
        std::vector<Face> order = shelling_from_tree(c, *vd.tree);
        if (!is_shelling(c, order).valid)
            throw std::logic_error("decide_shellable: tree-derived order is not a shelling");
        return {SearchStatus::yes, std::move(order), "shedding-tree", -1};
    }
    SequentiallyCmResult scm = is_sequentially_cohen_macaulay(c);
    if (!scm.scm) return {SearchStatus::no, {}, "scm-obstruction", scm.failing_skeleton};
    ShellingSearch bf = is_shellable_bruteforce(c, facet_cap);
    return {bf.status, std::move(bf.order), "exhaustive", -1};
}

ShellabilityDecision decide_shellable(const Graph& g, int facet_cap, std::size_t vd_budget) {
    SimplicialComplex ig = independence_complex(g);
    DecomposeResult vd = is_vertex_decomposable(g, {vd_budget});
    if (vd.status == SearchStatus::yes) {
        std::vector<Face> order = shelling_from_tree(ig, *vd.tree);
        if (!is_shelling(ig, order).valid)
            throw std::logic_error("decide_shellable: tree-derived order is not a shelling");
        return {SearchStatus::yes, std::move(order), "shedding-tree", -1};
    }
    SequentiallyCmResult scm = is_sequentially_cohen_macaulay(ig);
    if (!scm.scm) return {SearchStatus::no, {}, "scm-obstruction", scm.failing_skeleton};
    ShellingSearch bf = is_shellable_bruteforce(ig, facet_cap);
    return {bf.status, std::move(bf.order), "exhaustive", -1};
}

}
