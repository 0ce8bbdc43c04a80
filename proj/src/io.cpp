#include "indecomp/io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace indecomp {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw std::invalid_argument("edge list, line " + std::to_string(line) + ": " + msg);
}

}

Graph parse_edge_list(std::string_view text) {
    struct PendingEdge {
        int u, v, line;
    };
    std::vector<PendingEdge> edges;
    int declared_n = -1;
    int max_vertex = -1;
    int line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line);
        if (first_content && line[start] == 'p') {
            std::string tag;
            fields >> tag;
            if (tag != "p") parse_fail(line_no, "malformed header, expected \"p <n>\"");
            if (!(fields >> declared_n) || declared_n < 0)
                parse_fail(line_no, "malformed vertex count");
            std::string extra;
            if (fields >> extra) parse_fail(line_no, "trailing tokens after \"p <n>\"");
            first_content = false;
            continue;
        }
        first_content = false;
        int u, v;
        if (!(fields >> u >> v)) parse_fail(line_no, "expected \"<u> <v>\"");
        std::string extra;
        if (fields >> extra) parse_fail(line_no, "trailing tokens after edge");
        if (u < 0 || v < 0) parse_fail(line_no, "negative vertex id");
        if (u == v) parse_fail(line_no, "self-loop at vertex " + std::to_string(u));
        edges.push_back({u, v, line_no});
        max_vertex = std::max({max_vertex, u, v});
    }
    int n = declared_n >= 0 ? declared_n : max_vertex + 1;
    if (n <= 0)
        throw std::invalid_argument("edge list: empty input; declare \"p <n>\" for an edgeless graph");
    if (n > kMaxVertices)
        throw std::invalid_argument("edge list: " + std::to_string(n) + " vertices exceeds the cap of " +
                                    std::to_string(kMaxVertices));
    Graph g(n);
    for (const auto& e : edges) {
        if (e.u >= n || e.v >= n)
            parse_fail(e.line, "vertex id exceeds declared count " + std::to_string(n));
        if (!g.has_edge(e.u, e.v)) g.add_edge(e.u, e.v);
    }
    return g;
}

std::string format_edge_list(const Graph& g) {
    std::string out = "p " + std::to_string(g.vertex_count()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

nlohmann::json complex_to_json(const SimplicialComplex& c) {
    nlohmann::json facets = nlohmann::json::array();
    for (Face f : c.facets()) facets.push_back(f.to_vector());
    return {{"universe", c.universe()}, {"facets", std::move(facets)}};
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("universe") || !j.contains("facets"))
        throw std::invalid_argument("complex JSON: expected {\"universe\": n, \"facets\": [[...]]}");
    if (!j["universe"].is_number_integer())
        throw std::invalid_argument("complex JSON: universe must be an integer");
    int universe = j["universe"].get<int>();
    if (!j["facets"].is_array())
        throw std::invalid_argument("complex JSON: facets must be an array");
    std::vector<Face> facets;
    for (const auto& entry : j["facets"]) {
        if (!entry.is_array()) throw std::invalid_argument("complex JSON: facet must be an array");
        Face f;
        for (const auto& v : entry) {
            if (!v.is_number_integer())
                throw std::invalid_argument("complex JSON: facet entries must be integers");
            int vi = v.get<int>();
            if (vi < 0 || vi >= universe)
                throw std::invalid_argument("complex JSON: vertex " + std::to_string(vi) +
                                            " outside universe " + std::to_string(universe));
            f = f.with(vi);
        }
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(universe, std::move(facets));
}

nlohmann::json profile_to_json(const HomologyProfile& profile) {
    nlohmann::json betti = nlohmann::json::object();
    nlohmann::json torsion = nlohmann::json::object();
    for (int d = -1; d <= profile.top_dimension; ++d) {
        betti[std::to_string(d)] = profile.betti_at(d);
        auto t = profile.torsion_at(d);
        if (!t.empty()) torsion[std::to_string(d)] = t;
    }
    return {{"betti", std::move(betti)}, {"torsion", std::move(torsion)}};
}

nlohmann::json tree_to_json(const SheddingTree& tree) {
    switch (tree.kind) {
        case SheddingTree::Kind::simplex_leaf: return {{"leaf", "simplex"}};
        case SheddingTree::Kind::edgeless_leaf: return {{"leaf", "edgeless"}};
        case SheddingTree::Kind::shed: break;
    }
    return {{"vertex", tree.vertex},
            {"delete", tree_to_json(*tree.deletion)},
            {"link", tree_to_json(*tree.link)}};
}

SheddingTreePtr tree_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("shedding tree JSON: expected an object");
    if (j.contains("leaf")) {
        std::string kind = j["leaf"].get<std::string>();
        if (kind == "simplex") return SheddingTree::simplex_leaf();
        if (kind == "edgeless") return SheddingTree::edgeless_leaf();
        throw std::invalid_argument("shedding tree JSON: unknown leaf kind \"" + kind + "\"");
    }
    if (!j.contains("vertex") || !j.contains("delete") || !j.contains("link"))
        throw std::invalid_argument(
            "shedding tree JSON: expected {\"vertex\", \"delete\", \"link\"} or a leaf");
    return SheddingTree::shed(j["vertex"].get<int>(), tree_from_json(j["delete"]),
                              tree_from_json(j["link"]));
}

nlohmann::json shelling_to_json(const std::vector<Face>& order) {
    nlohmann::json arr = nlohmann::json::array();
    for (Face f : order) arr.push_back(f.to_vector());
    return {{"order", std::move(arr)}};
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    nlohmann::json out = {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
    if (g.has_labels()) {
        nlohmann::json labels = nlohmann::json::array();
        for (Vertex v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
        out["labels"] = std::move(labels);
    }
    return out;
}

}
