#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "indecomp/constructions.hpp"
#include "indecomp/enumerate.hpp"
#include "indecomp/homology.hpp"
#include "indecomp/shelling.hpp"

using namespace indecomp;

namespace {

std::vector<Face> faces(std::initializer_list<std::initializer_list<int>> lists) {
    std::vector<Face> out;
    for (auto l : lists) {
        Face f;
        for (int v : l) f = f.with(v);
        out.push_back(f);
    }
    return out;
}

}

TEST_CASE("is_shelling") {
    SUBCASE("the walk around I(C5) shells") {
        auto c = independence_complex(cycle_graph(5));
        auto order = faces({{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
        CHECK(is_shelling(c, order).valid);
    }
    SUBCASE("I(C4) fails at the second facet in either order") {
        auto c = independence_complex(cycle_graph(4));
        auto fwd = faces({{0, 2}, {1, 3}});
        auto bwd = faces({{1, 3}, {0, 2}});
        ShellingCheck a = is_shelling(c, fwd);
        ShellingCheck b = is_shelling(c, bwd);
        CHECK_FALSE(a.valid);
        CHECK(a.failing_index == 1);
        CHECK_FALSE(b.valid);
        CHECK(b.failing_index == 1);
    }
    SUBCASE("a single facet always shells") {
        auto c = SimplicialComplex::from_facets(3, faces({{0, 1, 2}}));
        CHECK(is_shelling(c, c.facets()).valid);
    }
    SUBCASE("non-permutations are rejected") {
        auto c = independence_complex(cycle_graph(4));
        CHECK_THROWS_AS(is_shelling(c, faces({{0, 2}})), std::invalid_argument);
        CHECK_THROWS_AS(is_shelling(c, faces({{0, 2}, {0, 2}})), std::invalid_argument);
    }
}

TEST_CASE("shelling from a shedding tree") {
    SUBCASE("C5") {
        auto res = is_vertex_decomposable(cycle_graph(5));
        REQUIRE(res.status == SearchStatus::yes);
        auto c = independence_complex(cycle_graph(5));
        auto order = shelling_from_tree(c, *res.tree);
        CHECK(is_shelling(c, order).valid);
    }
    SUBCASE("a simplex leaf gives the one-facet order") {
        auto c = SimplicialComplex::from_facets(2, faces({{0, 1}}));
        auto order = shelling_from_tree(c, *SheddingTree::simplex_leaf());
        REQUIRE(order.size() == 1);
        CHECK(order[0] == Face::of({0, 1}));
    }
    SUBCASE("trees from the constructive algorithm shell their chordal graphs") {
        int checked = 0;
        for (const Graph& g : enumerate_graphs_up_to(6)) {
            if (!is_chordal(g).chordal) continue;
            ++checked;
            auto res = constructive_decomposition(g);
            REQUIRE(res.ok);
            auto c = independence_complex(g);
            REQUIRE(is_shelling(c, shelling_from_tree(c, *res.tree)).valid);
        }
        CHECK(checked > 100);
    }
    SUBCASE("every decomposable complex up to 7 vertices yields a valid shelling") {
        for (const Graph& g : enumerate_graphs_up_to(7)) {
            auto res = is_vertex_decomposable(g);
            if (res.status != SearchStatus::yes) continue;
            auto c = independence_complex(g);
            REQUIRE(is_shelling(c, shelling_from_tree(c, *res.tree)).valid);
        }
    }
}

TEST_CASE("brute-force shellability") {
    SUBCASE("I(C7) is not shellable") {
        CHECK(is_shellable_bruteforce(independence_complex(cycle_graph(7))).status ==
              SearchStatus::no);
    }
    SUBCASE("I(C6) is not shellable") {
        CHECK(is_shellable_bruteforce(independence_complex(cycle_graph(6))).status ==
              SearchStatus::no);
    }
    SUBCASE("I(C5) is shellable with a verifiable order") {
        auto c = independence_complex(cycle_graph(5));
        auto res = is_shellable_bruteforce(c);
        REQUIRE(res.status == SearchStatus::yes);
        CHECK(is_shelling(c, res.order).valid);
    }
    SUBCASE("exceeding the cap is inconclusive") {
        auto c = independence_complex(cycle_graph(6));
        CHECK(is_shellable_bruteforce(c, 2).status == SearchStatus::inconclusive);
    }
}

TEST_CASE("flag obstructions") {
    SUBCASE("C4 plus a pendant has the 4-cycle as witness") {
        Graph g(5);
        for (auto [u, v] : cycle_graph(4).edges()) g.add_edge(u, v);
        g.add_edge(0, 4);
        auto cycle = find_flag_obstruction(g);
        REQUIRE(cycle.has_value());
        CHECK(cycle->size() == 4);
        CHECK(is_induced_cycle(g, *cycle));
    }
    SUBCASE("chordal graphs are obstruction-free") {
        for (const Graph& g : enumerate_graphs_up_to(6))
            if (is_chordal(g).chordal) REQUIRE_FALSE(find_flag_obstruction(g).has_value());
    }
    SUBCASE("the incomparability graph of two disjoint edges is C4") {
        // poset a<b, c<d; incomparable pairs: every pair except (a,b), (c,d)
        Graph g(4);
        g.add_edge(0, 2);
        g.add_edge(0, 3);
        g.add_edge(1, 2);
        g.add_edge(1, 3);
        REQUIRE(is_isomorphic(g, cycle_graph(4)));
        auto cycle = find_flag_obstruction(g);
        REQUIRE(cycle.has_value());
        CHECK(cycle->size() == 4);
    }
}

TEST_CASE("obstruction verification") {
    SUBCASE("I(C4), M5, M6 and M7 verify under the restricted family") {
        for (const SimplicialComplex& c :
             {independence_complex(cycle_graph(4)), moebius_complex(5), moebius_complex(6),
              moebius_complex(7)}) {
            ObstructionCheck res = verify_obstruction(c);
            REQUIRE(res.status == SearchStatus::yes);
            CHECK(res.obstruction);
        }
    }
    SUBCASE("I(C5) is not an obstruction (it shells)") {
        ObstructionCheck res = verify_obstruction(independence_complex(cycle_graph(5)));
        REQUIRE(res.status == SearchStatus::yes);
        CHECK_FALSE(res.obstruction);
    }
}

TEST_CASE("non-shellable graphs contain a flag obstruction, up to 7 vertices") {
    for (const Graph& g : enumerate_graphs_up_to(7)) {
        auto bf = is_shellable_bruteforce(independence_complex(g));
        REQUIRE(bf.status != SearchStatus::inconclusive);
        if (bf.status == SearchStatus::no) REQUIRE(find_flag_obstruction(g).has_value());
    }
}

TEST_CASE("the converse fails: a shellable graph may contain an induced 4-cycle") {
    // C4 with a pendant at vertex 0 is vertex decomposable (shed 0), hence
    // shellable, yet the 4-cycle stays induced.
    Graph g(5);
    for (auto [u, v] : cycle_graph(4).edges()) g.add_edge(u, v);
    g.add_edge(0, 4);
    CHECK(is_vertex_decomposable(g).status == SearchStatus::yes);
    CHECK(is_shellable_bruteforce(independence_complex(g)).status == SearchStatus::yes);
    CHECK(find_flag_obstruction(g).has_value());
}

TEST_CASE("implication chain on all graphs up to 6 vertices") {
    for (const Graph& g : enumerate_graphs_up_to(6)) {
        auto ic = independence_complex(g);
        auto vd = is_vertex_decomposable(g);
        auto bf = is_shellable_bruteforce(ic);
        REQUIRE(vd.status != SearchStatus::inconclusive);
        REQUIRE(bf.status != SearchStatus::inconclusive);
        if (vd.status == SearchStatus::yes) REQUIRE(bf.status == SearchStatus::yes);
        if (bf.status == SearchStatus::yes)
            REQUIRE(is_sequentially_cohen_macaulay(ic).scm);
    }
}

namespace {

// Direct form of the shelling condition: the faces of F_j lying in
// earlier facets form a pure complex of dimension dim F_j - 1.
bool geometric_step_ok(const std::vector<Face>& earlier, Face fj) {
    std::vector<Face> inter;
    for (Face fi : earlier) inter.push_back(fi & fj);
    std::vector<Face> maximal;
    for (Face a : inter) {
        bool dominated = false;
        for (Face b : inter)
            if (a != b && a.subset_of(b)) dominated = true;
        if (!dominated && std::find(maximal.begin(), maximal.end(), a) == maximal.end())
            maximal.push_back(a);
    }
    for (Face m : maximal)
        if (m.size() != fj.size() - 1) return false;
    return true;
}

bool geometric_is_shelling(const std::vector<Face>& order) {
    for (std::size_t j = 1; j < order.size(); ++j) {
        std::vector<Face> earlier(order.begin(), order.begin() + static_cast<long>(j));
        if (!geometric_step_ok(earlier, order[j])) return false;
    }
    return true;
}

}

TEST_CASE("the pairwise condition matches the direct geometric check") {
    std::mt19937_64 rng(31);
    for (const Graph& g : enumerate_graphs_up_to(5)) {
        auto c = independence_complex(g);
        std::vector<Face> order = c.facets();
        for (int trial = 0; trial < 6; ++trial) {
            std::shuffle(order.begin(), order.end(), rng);
            REQUIRE(is_shelling(c, order).valid == geometric_is_shelling(order));
        }
    }
    // the Moebius strips, where the wrap-around intersections bite
    for (int n : {5, 6, 7}) {
        auto c = moebius_complex(n);
        std::vector<Face> order = c.facets();
        for (int trial = 0; trial < 30; ++trial) {
            std::shuffle(order.begin(), order.end(), rng);
            REQUIRE(is_shelling(c, order).valid == geometric_is_shelling(order));
        }
    }
}

TEST_CASE("brute force agrees with exhaustive permutation checking on small facet lists") {
    for (const Graph& g : enumerate_graphs_up_to(5)) {
        auto c = independence_complex(g);
        if (c.facet_count() > 5) continue;
        std::vector<Face> order = c.facets();
        std::sort(order.begin(), order.end(), face_less);
        bool any = false;
        do {
            if (is_shelling(c, order).valid) any = true;
        } while (std::next_permutation(order.begin(), order.end(), face_less));
        REQUIRE((is_shellable_bruteforce(c).status == SearchStatus::yes) == any);
    }
}

TEST_CASE("composite shellability decision") {
    SUBCASE("decides C10 despite its facet count") {
        auto decision = decide_shellable(cycle_graph(10));
        CHECK(decision.status == SearchStatus::no);
        CHECK(decision.method == "scm-obstruction");
    }
    SUBCASE("certifies decomposable graphs with an order") {
        auto decision = decide_shellable(path_graph(6));
        REQUIRE(decision.status == SearchStatus::yes);
        CHECK(decision.method == "shedding-tree");
        CHECK(is_shelling(independence_complex(path_graph(6)), decision.order).valid);
    }
}
