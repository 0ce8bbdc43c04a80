#ifndef INDECOMP_IO_HPP
#define INDECOMP_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "indecomp/complex.hpp"
#include "indecomp/decompose.hpp"
#include "indecomp/graph.hpp"
#include "indecomp/homology.hpp"

namespace indecomp {

/// Edge-list text: optional first line "p <n>", then "<u> <v>" lines with
/// 0-based endpoints.  Blank lines and lines starting with '#' are
/// ignored; duplicate and reversed edges are tolerated; self-loops are
/// rejected with the offending line number.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

/// { "universe": n, "facets": [[ints]] }, facets in canonical order, each
/// ascending.
nlohmann::json complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const nlohmann::json& j);

/// { "betti": {"-1": 0, ...}, "torsion": {"1": [2], ...} } — torsion keys
/// only where nonempty.
nlohmann::json profile_to_json(const HomologyProfile& profile);

/// Nested { "vertex": v, "delete": ..., "link": ... } with leaf markers
/// { "leaf": "simplex" | "edgeless" }.
nlohmann::json tree_to_json(const SheddingTree& tree);
SheddingTreePtr tree_from_json(const nlohmann::json& j);

/// { "order": [[ints]] }
nlohmann::json shelling_to_json(const std::vector<Face>& order);

nlohmann::json graph_to_json(const Graph& g);

}

#endif
