#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "indecomp/complex.hpp"
#include "indecomp/constructions.hpp"
#include "indecomp/enumerate.hpp"
#include "helpers.hpp"

using namespace indecomp;

namespace {

SimplicialComplex make(int universe, std::initializer_list<std::initializer_list<int>> facets) {
    std::vector<Face> fs;
    for (auto f : facets) {
        Face face;
        for (int v : f) face = face.with(v);
        fs.push_back(face);
    }
    return SimplicialComplex::from_facets(universe, std::move(fs));
}

// Relabels a complex built on a subgraph back into the labels of the
// parent graph.
SimplicialComplex lift(const SimplicialComplex& c, const std::vector<Vertex>& new_to_old,
                       int universe) {
    std::vector<int> map(static_cast<std::size_t>(c.universe()), -1);
    for (std::size_t i = 0; i < new_to_old.size(); ++i)
        map[i] = new_to_old[i];
    return relabel(c, map, universe);
}

}

TEST_CASE("from_facets normalizes") {
    SUBCASE("duplicates are dropped") {
        auto c = make(3, {{0, 1}, {1, 2}, {0, 1}});
        CHECK(c.facet_count() == 2);
    }
    SUBCASE("dominated candidates are absorbed") {
        auto c = make(2, {{0}, {0, 1}});
        REQUIRE(c.facet_count() == 1);
        CHECK(c.facets()[0] == Face::of({0, 1}));
    }
    SUBCASE("the irrelevant complex") {
        auto c = make(3, {{}});
        CHECK(c.is_irrelevant());
        CHECK(c.is_simplex());
        CHECK(c.dimension() == -1);
    }
    SUBCASE("the void complex") {
        auto c = SimplicialComplex::void_complex(3);
        CHECK(c.is_void());
        CHECK_FALSE(c.is_simplex());
        CHECK(c.dimension() == -2);
    }
    SUBCASE("vertices outside the universe are rejected") {
        CHECK_THROWS_AS(make(2, {{0, 2}}), std::out_of_range);
    }
}

TEST_CASE("independence complexes of the small cycles") {
    SUBCASE("C3: three isolated vertices") {
        auto c = independence_complex(cycle_graph(3));
        REQUIRE(c.facet_count() == 3);
        for (Face f : c.facets()) CHECK(f.size() == 1);
    }
    SUBCASE("C5: the 5-cycle as a 1-complex") {
        auto c = independence_complex(cycle_graph(5));
        CHECK(c.facet_count() == 5);
        CHECK(c.dimension() == 1);
        CHECK(c.is_pure());
    }
    SUBCASE("C7 gives the 7 cyclic triples") {
        auto c = independence_complex(cycle_graph(7));
        REQUIRE(c.facet_count() == 7);
        for (int i = 0; i < 7; ++i)
            CHECK(c.is_face(Face::of({i, (i + 2) % 7, (i + 4) % 7})));
    }
}

TEST_CASE("link") {
    SUBCASE("link of a vertex in I(C5) is the independence complex of the far edge") {
        Graph c5 = cycle_graph(5);
        auto ic = independence_complex(c5);
        auto lk = link(ic, Face::single(0));
        auto sub = induced_subgraph(c5, c5.vertices() - c5.closed_neighborhood(0));
        CHECK(lk == lift(independence_complex(sub.graph), sub.new_to_old, 5));
        REQUIRE(lk.facet_count() == 2);
        CHECK(lk.facets()[0] == Face::single(2));
        CHECK(lk.facets()[1] == Face::single(3));
    }
    SUBCASE("link of the empty face is the complex itself") {
        auto c = independence_complex(cycle_graph(6));
        CHECK(link(c, Face{}) == c);
    }
    SUBCASE("link of a vertex in a full triangle") {
        auto c = make(3, {{0, 1, 2}});
        auto lk = link(c, Face::single(0));
        REQUIRE(lk.facet_count() == 1);
        CHECK(lk.facets()[0] == Face::of({1, 2}));
    }
    SUBCASE("non-faces are rejected") {
        auto c = make(3, {{0, 1}});
        CHECK_THROWS_AS(link(c, Face::of({0, 2})), std::invalid_argument);
    }
}

TEST_CASE("delete_vertex") {
    SUBCASE("triangle minus a vertex is an edge") {
        auto c = make(3, {{0, 1, 2}});
        auto d = delete_vertex(c, 0);
        REQUIRE(d.facet_count() == 1);
        CHECK(d.facets()[0] == Face::of({1, 2}));
    }
    SUBCASE("I(C4) minus vertex 0") {
        auto d = delete_vertex(independence_complex(cycle_graph(4)), 0);
        REQUIRE(d.facet_count() == 2);
        CHECK(d.is_face(Face::of({1, 3})));
        CHECK(d.is_face(Face::single(2)));
        CHECK_FALSE(d.is_face(Face::single(0)));
    }
    SUBCASE("deleting vertices of a simplex steps the dimension down") {
        auto c = make(4, {{0, 1, 2, 3}});
        for (int v = 3; v >= 0; --v) {
            int before = c.dimension();
            c = delete_vertex(c, v);
            CHECK(c.dimension() == before - 1);
        }
        CHECK(c.is_irrelevant());
    }
}

TEST_CASE("link and deletion translate to the graph operations, up to 8 vertices") {
    for (const Graph& g : enumerate_graphs_up_to(8)) {
        auto ic = independence_complex(g);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            auto del_sub = induced_subgraph(g, g.vertices().without(v));
            REQUIRE(delete_vertex(ic, v) ==
                    lift(independence_complex(del_sub.graph), del_sub.new_to_old, g.vertex_count()));
            auto link_sub = induced_subgraph(g, g.vertices() - g.closed_neighborhood(v));
            REQUIRE(link(ic, Face::single(v)) ==
                    lift(independence_complex(link_sub.graph), link_sub.new_to_old,
                         g.vertex_count()));
        }
    }
}

TEST_CASE("join") {
    SUBCASE("join with a point cones") {
        auto c = independence_complex(cycle_graph(4));
        auto cone = join(c, make(1, {{0}}));
        CHECK(cone.facet_count() == c.facet_count());
        for (Face f : cone.facets()) CHECK(f.contains(4));
    }
    SUBCASE("two points joined with two points is the square") {
        auto two = make(2, {{0}, {1}});
        auto square = join(two, two);
        CHECK(square == independence_complex(disjoint_edges(2)));
        CHECK(square.facet_count() == 4);
    }
    SUBCASE("matches the independence complex of a disjoint union") {
        Graph k2 = complete_graph(2);
        CHECK(join(independence_complex(k2), independence_complex(k2)) ==
              independence_complex(disjoint_union(k2, k2)));
    }
    SUBCASE("associative and the irrelevant complex is the identity") {
        auto a = independence_complex(path_graph(2));
        auto b = independence_complex(cycle_graph(3));
        auto c = make(1, {{0}});
        CHECK(join(join(a, b), c) == join(a, join(b, c)));
        auto unit = SimplicialComplex::irrelevant_complex(0);
        CHECK(join(a, unit) == a);
    }
    SUBCASE("join with the void complex is void") {
        auto a = independence_complex(path_graph(2));
        CHECK(join(a, SimplicialComplex::void_complex(1)).is_void());
    }
}

TEST_CASE("pure skeleton") {
    SUBCASE("pure 2-skeleton of I(C6) is two disjoint triangles") {
        auto sk = pure_skeleton(independence_complex(cycle_graph(6)), 2);
        REQUIRE(sk.facet_count() == 2);
        CHECK(sk.facets()[0] == Face::of({0, 2, 4}));
        CHECK(sk.facets()[1] == Face::of({1, 3, 5}));
    }
    SUBCASE("top skeleton of a pure complex is itself") {
        auto c = independence_complex(cycle_graph(5));
        CHECK(pure_skeleton(c, c.dimension()) == c);
    }
    SUBCASE("pure 1-skeleton of I(C4) is two disjoint edges") {
        auto sk = pure_skeleton(independence_complex(cycle_graph(4)), 1);
        REQUIRE(sk.facet_count() == 2);
        CHECK(sk.facets()[0] == Face::of({0, 2}));
        CHECK(sk.facets()[1] == Face::of({1, 3}));
    }
    SUBCASE("out-of-range indices are rejected") {
        auto c = independence_complex(cycle_graph(4));
        CHECK_THROWS_AS(pure_skeleton(c, 2), std::invalid_argument);
        CHECK_THROWS_AS(pure_skeleton(c, -2), std::invalid_argument);
        CHECK(pure_skeleton(c, -1).is_irrelevant());
    }
}

TEST_CASE("minimal non-faces of the M complexes match the listed sets") {
    SUBCASE("M5") {
        auto nf = minimal_nonfaces(moebius_complex(5));
        std::vector<Face> expected = {Face::of({0, 1, 3}), Face::of({1, 2, 4}),
                                      Face::of({0, 2, 3}), Face::of({1, 3, 4}),
                                      Face::of({0, 2, 4})};
        std::sort(expected.begin(), expected.end(), face_less);
        CHECK(nf == expected);
    }
    SUBCASE("M6") {
        auto nf = minimal_nonfaces(moebius_complex(6));
        std::vector<Face> expected = {Face::of({0, 3}), Face::of({1, 4}), Face::of({2, 5}),
                                      Face::of({0, 2, 4}), Face::of({1, 3, 5})};
        std::sort(expected.begin(), expected.end(), face_less);
        CHECK(nf == expected);
    }
    SUBCASE("I(C7) recovers the 7 cycle edges") {
        Graph c7 = cycle_graph(7);
        auto nf = minimal_nonfaces(independence_complex(c7));
        REQUIRE(nf.size() == 7);
        for (Face f : nf) {
            REQUIRE(f.size() == 2);
            auto vs = f.to_vector();
            CHECK(c7.has_edge(vs[0], vs[1]));
        }
    }
}

TEST_CASE("flag recognition") {
    SUBCASE("independence complexes are flag and recover their graph, up to 8 vertices") {
        for (const Graph& g : enumerate_graphs_up_to(8)) {
            FlagResult res = is_flag(independence_complex(g));
            REQUIRE(res.flag);
            REQUIRE(*res.graph == g);
        }
    }
    SUBCASE("M5 and M6 are not flag") {
        CHECK_FALSE(is_flag(moebius_complex(5)).flag);
        CHECK_FALSE(is_flag(moebius_complex(6)).flag);
    }
    SUBCASE("M7 is flag") {
        CHECK(is_flag(moebius_complex(7)).flag);
    }
}

TEST_CASE("delta complexes") {
    SUBCASE("d = 1 is the cycle visiting every other vertex") {
        auto c = delta_complex(7, 1);
        CHECK(c.facet_count() == 7);
        CHECK(c.dimension() == 1);
        for (int s = 0; s < 7; ++s) CHECK(c.is_face(Face::of({s, (s + 2) % 7})));
        CHECK(delta_complex(5, 1).facet_count() == 5);
    }
    SUBCASE("delta(7,2) has 7 facets of dimension 2") {
        auto c = delta_complex(7, 2);
        CHECK(c.facet_count() == 7);
        CHECK(c.is_pure());
        CHECK(c.dimension() == 2);
    }
    SUBCASE("bad parameters are rejected") {
        CHECK_THROWS_AS(delta_complex(6, 1), std::invalid_argument);
        CHECK_THROWS_AS(delta_complex(7, 0), std::invalid_argument);
        CHECK_THROWS_AS(delta_complex(7, 3), std::invalid_argument);
    }
}

TEST_CASE("moebius complexes") {
    SUBCASE("M7 equals I(C7) after the doubling relabel") {
        std::vector<int> map(7);
        for (int i = 0; i < 7; ++i) map[static_cast<std::size_t>(i)] = (2 * i) % 7;
        CHECK(relabel(moebius_complex(7), map, 7) == independence_complex(cycle_graph(7)));
    }
    SUBCASE("M5 has 5 facets, all triangles") {
        auto c = moebius_complex(5);
        CHECK(c.facet_count() == 5);
        CHECK(c.is_pure());
        CHECK(c.dimension() == 2);
    }
    SUBCASE("n below 4 is rejected") {
        CHECK_THROWS_AS(moebius_complex(3), std::invalid_argument);
    }
}

TEST_CASE("collapse of a free face") {
    SUBCASE("free edge of a full triangle") {
        auto c = make(3, {{0, 1, 2}});
        auto collapsed = collapse_free_face(c, Face::of({0, 1}));
        REQUIRE(collapsed.facet_count() == 2);
        CHECK(collapsed.is_face(Face::of({0, 2})));
        CHECK(collapsed.is_face(Face::of({1, 2})));
    }
    SUBCASE("a facet is not free") {
        auto c = make(3, {{0, 1, 2}});
        CHECK_THROWS_AS(collapse_free_face(c, Face::of({0, 1, 2})), std::invalid_argument);
    }
    SUBCASE("faces in several facets are not free") {
        auto c = make(3, {{0, 1}, {1, 2}});
        CHECK_THROWS_AS(collapse_free_face(c, Face::single(1)), std::invalid_argument);
    }
    SUBCASE("collapsing every long diagonal steps delta(n,d) down to delta(n,d-1)") {
        for (auto [n, d] : {std::pair{7, 2}, std::pair{9, 2}, std::pair{9, 3}}) {
            auto c = delta_complex(n, d);
            for (int s = 0; s < n; ++s)
                c = collapse_free_face(c, Face::of({s, (s + 2 * d) % n}));
            CHECK(c == delta_complex(n, d - 1));
        }
    }
}

TEST_CASE("every face lies in a facet and facet lists are antichains") {
    for (const Graph& g : enumerate_graphs_up_to(6)) {
        auto c = independence_complex(g);
        for (Face f : c.all_faces()) REQUIRE(c.is_face(f));
        for (Face a : c.facets())
            for (Face b : c.facets())
                if (a != b) REQUIRE_FALSE(a.subset_of(b));
    }
}
