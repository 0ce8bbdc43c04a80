#ifndef INDECOMP_REPORT_HPP
#define INDECOMP_REPORT_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "indecomp/complex.hpp"
#include "indecomp/graph.hpp"

namespace indecomp {

/// Raised for unusable inputs (bad files, bad generator expressions, bad
/// option combinations); the CLI maps it to exit code 3.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using InputValue = std::variant<Graph, SimplicialComplex>;

/// Builtin generator grammar for graphs: either a short atom (k5, c7, p4,
/// e3) or "<name>:<args>" with name in {cycle, path, complete, edgeless,
/// bipartite, disjoint-edges, cartesian, direct, union}; product/union
/// arguments are atoms.
Graph parse_generator(const std::string& expr);

/// Resolves an input argument: an existing file is read as complex JSON
/// (when it starts with '{') or as an edge list; otherwise the string is
/// parsed as a graph generator or a complex generator ("delta:n,d",
/// "moebius:n").
InputValue load_input(const std::string& spec);

struct CheckOptions {
    int max_facets = 12;
    std::size_t budget = 1'000'000;
    std::uint64_t seed = 2024;
};

/// A completed command: exit code per answer (0 holds, 1 fails,
/// 2 inconclusive), the JSON report body, and a human-readable summary.
struct Report {
    int exit_code = 0;
    nlohmann::json body;
    std::string human;
};

Report cmd_check(const std::string& kind, const InputValue& input, const CheckOptions& opts);
Report cmd_decompose(const InputValue& input, bool constructive, const CheckOptions& opts);
Report cmd_homology(const InputValue& input, const CheckOptions& opts);
Report cmd_shelling(const InputValue& input, const CheckOptions& opts);
Report cmd_obstruction(const InputValue& input, const CheckOptions& opts);
Report cmd_domination(const InputValue& input, const CheckOptions& opts);
Report cmd_survey(const std::string& family, int max_n, const CheckOptions& opts);

}

#endif
