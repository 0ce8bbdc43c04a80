#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "indecomp/constructions.hpp"
#include "indecomp/decompose.hpp"
#include "indecomp/enumerate.hpp"
#include "indecomp/homology.hpp"
#include "indecomp/io.hpp"
#include "indecomp/shelling.hpp"
#include "indecomp/version.hpp"

namespace py = pybind11;
using namespace indecomp;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

nlohmann::json py_to_json(const py::object& obj) {
    std::string dumped = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
    return nlohmann::json::parse(dumped);
}

std::vector<std::vector<int>> sets_to_lists(const std::vector<VertexSet>& sets) {
    std::vector<std::vector<int>> out;
    out.reserve(sets.size());
    for (VertexSet s : sets) out.push_back(s.to_vector());
    return out;
}

std::vector<Face> lists_to_faces(const std::vector<std::vector<int>>& lists) {
    std::vector<Face> out;
    out.reserve(lists.size());
    for (const auto& l : lists) out.push_back(Face::of(l));
    return out;
}

py::object decompose_to_py(const DecomposeResult& res) {
    py::dict d;
    d["status"] = res.status == SearchStatus::yes ? "yes"
                  : res.status == SearchStatus::no ? "no"
                                                   : "inconclusive";
    d["tree"] = res.tree ? json_to_py(tree_to_json(*res.tree)) : py::none();
    return d;
}

}

PYBIND11_MODULE(indecomp, m) {
    m.doc() = "Vertex decomposability, shellability and Cohen-Macaulayness of graph "
              "independence complexes, with machine-checkable certificates";
    m.attr("__version__") = kVersion;

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def("add_edge", &Graph::add_edge)
        .def("has_edge", &Graph::has_edge)
        .def_property_readonly("n", &Graph::vertex_count)
        .def("edges", &Graph::edges)
        .def("open_neighborhood",
             [](const Graph& g, Vertex v) { return g.open_neighborhood(v).to_vector(); })
        .def("closed_neighborhood",
             [](const Graph& g, Vertex v) { return g.closed_neighborhood(v).to_vector(); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def_static("from_facets",
                    [](int universe, const std::vector<std::vector<int>>& facets) {
                        return SimplicialComplex::from_facets(universe, lists_to_faces(facets));
                    })
        .def_property_readonly("universe", &SimplicialComplex::universe)
        .def_property_readonly("facets",
                               [](const SimplicialComplex& c) { return sets_to_lists(c.facets()); })
        .def_property_readonly("dimension", &SimplicialComplex::dimension)
        .def("is_pure", &SimplicialComplex::is_pure)
        .def("is_simplex", &SimplicialComplex::is_simplex)
        .def("to_json", [](const SimplicialComplex& c) { return json_to_py(complex_to_json(c)); })
        .def("__eq__",
             [](const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; })
        .def("__repr__", [](const SimplicialComplex& c) {
            return "SimplicialComplex(universe=" + std::to_string(c.universe()) +
                   ", facets=" + std::to_string(c.facet_count()) + ")";
        });

    // Generators and constructions.
    m.def("cycle_graph", &cycle_graph);
    m.def("path_graph", &path_graph);
    m.def("complete_graph", &complete_graph);
    m.def("complete_bipartite", &complete_bipartite);
    m.def("edgeless_graph", &edgeless_graph);
    m.def("disjoint_edges", &disjoint_edges);
    m.def("disjoint_union", &disjoint_union);
    m.def("cartesian_product", &cartesian_product);
    m.def("direct_product", &direct_product);
    m.def("add_true_twin", &add_true_twin);
    m.def("add_false_twin", &add_false_twin);
    m.def("clique_star", [](const Graph& g, const std::vector<int>& k) {
        CliqueStar s = clique_star(g, VertexSet::of(k));
        return py::make_tuple(s.graph, s.new_vertex);
    });
    m.def("attach_simplicial_3_path",
          [](const Graph& g, const std::vector<int>& k1, const std::vector<int>& k2) {
              Attached3Path a = attach_simplicial_3_path(g, VertexSet::of(k1), VertexSet::of(k2));
              return py::make_tuple(a.graph, a.w1, a.w2, a.v);
          });
    m.def("complement", &complement);
    m.def("induced_subgraph", [](const Graph& g, const std::vector<int>& keep) {
        InducedSubgraph sub = induced_subgraph(g, VertexSet::of(keep));
        return py::make_tuple(sub.graph, sub.old_to_new);
    });
    m.def("is_isomorphic", &is_isomorphic);

    // Graph queries.
    m.def("is_independent",
          [](const Graph& g, const std::vector<int>& s) { return is_independent(g, VertexSet::of(s)); });
    m.def("maximal_independent_sets",
          [](const Graph& g) { return sets_to_lists(maximal_independent_sets(g)); });
    m.def("find_chordless_cycle_outside",
          [](const Graph& g, const std::vector<int>& allowed) -> py::object {
              auto cycle = find_chordless_cycle_outside(g, std::set<int>(allowed.begin(), allowed.end()));
              if (!cycle) return py::none();
              return py::cast(*cycle);
          });
    m.def("is_chordal", [](const Graph& g) {
        ChordalityResult res = is_chordal(g);
        py::dict d;
        d["chordal"] = res.chordal;
        d["elimination_order"] = res.elimination_order;
        d["witness_cycle"] = res.witness_cycle ? py::cast(*res.witness_cycle) : py::none();
        return d;
    });
    m.def("simplicial_vertices", [](const Graph& g) { return simplicial_vertices(g).to_vector(); });
    m.def("find_simplicial_3_path", [](const Graph& g) -> py::object {
        auto p = find_simplicial_3_path(g);
        if (!p) return py::none();
        return py::make_tuple(p->w1, p->mid, p->w2);
    });
    m.def("twin_status", [](const Graph& g, Vertex v, Vertex w) {
        switch (twin_status(g, v, w)) {
            case TwinStatus::true_twin: return "true-twin";
            case TwinStatus::false_twin: return "false-twin";
            default: return "not-twin";
        }
    });
    m.def("domination_number", &domination_number);
    m.def("independent_domination_number", &independent_domination_number);
    m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text); });
    m.def("format_edge_list", &format_edge_list);

    // Complex operations.
    m.def("independence_complex", &independence_complex);
    m.def("link", [](const SimplicialComplex& c, const std::vector<int>& f) {
        return link(c, Face::of(f));
    });
    m.def("delete_vertex", &delete_vertex);
    m.def("join_complexes", &join);
    m.def("pure_skeleton", &pure_skeleton);
    m.def("minimal_nonfaces",
          [](const SimplicialComplex& c) { return sets_to_lists(minimal_nonfaces(c)); });
    m.def("is_flag", [](const SimplicialComplex& c) {
        FlagResult res = is_flag(c);
        return py::make_tuple(res.flag, res.graph ? py::cast(*res.graph) : py::none());
    });
    m.def("delta_complex", &delta_complex);
    m.def("moebius_complex", &moebius_complex);
    m.def("collapse_free_face", [](const SimplicialComplex& c, const std::vector<int>& f) {
        return collapse_free_face(c, Face::of(f));
    });

    // Homology.
    m.def("reduced_homology",
          [](const SimplicialComplex& c) { return json_to_py(profile_to_json(reduced_homology(c))); });
    m.def("smith_normal_form", [](const std::vector<std::vector<std::int64_t>>& rows) {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
                throw std::invalid_argument("smith_normal_form: ragged matrix");
            for (int j = 0; j < c; ++j)
                m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        return smith_normal_form(std::move(m));
    });
    m.def("is_cohen_macaulay", [](const SimplicialComplex& c) {
        CohenMacaulayResult res = is_cohen_macaulay(c);
        py::dict d;
        d["cm"] = res.cm;
        if (!res.cm && res.failure == CohenMacaulayResult::Failure::homology) {
            d["witness_face"] = res.witness_face.to_vector();
            d["witness_dim"] = res.witness_dim;
        }
        if (!res.cm && res.failure == CohenMacaulayResult::Failure::impure)
            d["impure"] = py::make_tuple(res.impure_a.to_vector(), res.impure_b.to_vector());
        return d;
    });
    m.def("is_sequentially_cohen_macaulay", [](const SimplicialComplex& c) {
        SequentiallyCmResult res = is_sequentially_cohen_macaulay(c);
        py::dict d;
        d["scm"] = res.scm;
        if (!res.scm) d["failing_skeleton"] = res.failing_skeleton;
        return d;
    });
    m.def("homology_vanishing_bound_check", &homology_vanishing_bound_check);

    // Decomposition and shelling.
    m.def("is_shedding_vertex",
          [](const Graph& g, Vertex v) { return is_shedding_vertex(g, v); });
    m.def("is_shedding_vertex_complex",
          [](const SimplicialComplex& c, Vertex v) { return is_shedding_vertex(c, v); });
    m.def("neighborhood_containment_shedding", &neighborhood_containment_shedding);
    m.def(
        "is_vertex_decomposable",
        [](const Graph& g, std::size_t budget) {
            return decompose_to_py(is_vertex_decomposable(g, {budget}));
        },
        py::arg("graph"), py::arg("budget") = 1'000'000);
    m.def(
        "is_vertex_decomposable_complex",
        [](const SimplicialComplex& c, std::size_t budget) {
            return decompose_to_py(is_vertex_decomposable(c, {budget}));
        },
        py::arg("complex"), py::arg("budget") = 1'000'000);
    m.def("constructive_decomposition", [](const Graph& g) {
        ConstructiveResult res = constructive_decomposition(g);
        py::dict d;
        d["ok"] = res.ok;
        d["tree"] = res.tree ? json_to_py(tree_to_json(*res.tree)) : py::none();
        d["witness_cycle"] = res.ok ? py::none() : py::cast(res.witness_cycle);
        return d;
    });
    m.def("validate_shedding_tree", [](const Graph& g, const py::object& tree) {
        ValidationResult res = validate_shedding_tree(g, *tree_from_json(py_to_json(tree)));
        py::dict d;
        d["valid"] = res.valid;
        if (!res.valid) {
            d["failure_path"] = res.failure_path;
            d["reason"] = res.reason;
        }
        return d;
    });
    m.def("is_shelling", [](const SimplicialComplex& c, const std::vector<std::vector<int>>& order) {
        ShellingCheck res = is_shelling(c, lists_to_faces(order));
        py::dict d;
        d["valid"] = res.valid;
        if (!res.valid) d["failing_index"] = res.failing_index;
        return d;
    });
    m.def("shelling_from_tree", [](const SimplicialComplex& c, const py::object& tree) {
        return sets_to_lists(shelling_from_tree(c, *tree_from_json(py_to_json(tree))));
    });
    m.def(
        "is_shellable_bruteforce",
        [](const SimplicialComplex& c, int facet_cap) {
            ShellingSearch res = is_shellable_bruteforce(c, facet_cap);
            py::dict d;
            d["status"] = res.status == SearchStatus::yes ? "yes"
                          : res.status == SearchStatus::no ? "no"
                                                           : "inconclusive";
            d["order"] = res.status == SearchStatus::yes ? py::cast(sets_to_lists(res.order))
                                                         : py::none().cast<py::object>();
            return d;
        },
        py::arg("complex"), py::arg("facet_cap") = 12);
    m.def("find_flag_obstruction", [](const Graph& g) -> py::object {
        auto cycle = find_flag_obstruction(g);
        if (!cycle) return py::none();
        return py::cast(*cycle);
    });
    m.def(
        "verify_obstruction",
        [](const SimplicialComplex& c, int facet_cap) {
            ObstructionCheck res = verify_obstruction(c, facet_cap);
            py::dict d;
            d["status"] = res.status == SearchStatus::yes ? "decided"
                          : res.status == SearchStatus::no ? "decided"
                                                           : "inconclusive";
            d["obstruction"] = res.obstruction;
            d["detail"] = res.detail;
            return d;
        },
        py::arg("complex"), py::arg("facet_cap") = 12);
}
