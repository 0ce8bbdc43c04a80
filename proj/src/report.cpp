#include "indecomp/report.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "indecomp/constructions.hpp"
#include "indecomp/decompose.hpp"
#include "indecomp/enumerate.hpp"
#include "indecomp/homology.hpp"
#include "indecomp/io.hpp"
#include "indecomp/shelling.hpp"
#include "indecomp/version.hpp"

namespace indecomp {

namespace {

using nlohmann::json;

int parse_int(const std::string& s, const std::string& where) {
    try {
        std::size_t pos = 0;
        int value = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return value;
    } catch (...) {
        throw InputError("expected an integer in " + where + ", got \"" + s + "\"");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Graph parse_atom(const std::string& atom) {
    if (atom.size() >= 2) {
        char kind = atom[0];
        bool digits = true;
        for (std::size_t i = 1; i < atom.size(); ++i) digits = digits && std::isdigit(atom[i]);
        if (digits) {
            int n = parse_int(atom.substr(1), "generator atom");
            switch (kind) {
                case 'k': return complete_graph(n);
                case 'c': return cycle_graph(n);
                case 'p': return path_graph(n);
                case 'e': return edgeless_graph(n);
                default: break;
            }
        }
    }
    throw InputError("unknown generator atom \"" + atom + "\" (expected k<n>, c<n>, p<n>, e<n>)");
}

}

Graph parse_generator(const std::string& expr) {
    auto colon = expr.find(':');
    if (colon == std::string::npos) return parse_atom(expr);
    std::string name = expr.substr(0, colon);
    std::vector<std::string> args = split(expr.substr(colon + 1), ',');
    try {
        if (name == "cycle" && args.size() == 1)
            return cycle_graph(parse_int(args[0], expr));
        if (name == "path" && args.size() == 1)
            return path_graph(parse_int(args[0], expr));
        if (name == "complete" && args.size() == 1)
            return complete_graph(parse_int(args[0], expr));
        if (name == "edgeless" && args.size() == 1)
            return edgeless_graph(parse_int(args[0], expr));
        if (name == "bipartite" && args.size() == 2)
            return complete_bipartite(parse_int(args[0], expr), parse_int(args[1], expr));
        if (name == "disjoint-edges" && args.size() == 1)
            return disjoint_edges(parse_int(args[0], expr));
        if (name == "cartesian" && args.size() == 2)
            return cartesian_product(parse_atom(args[0]), parse_atom(args[1]));
        if (name == "direct" && args.size() == 2)
            return direct_product(parse_atom(args[0]), parse_atom(args[1]));
        if (name == "union" && args.size() == 2)
            return disjoint_union(parse_atom(args[0]), parse_atom(args[1]));
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError("generator \"" + expr + "\": " + e.what());
    }
    throw InputError("unknown generator \"" + expr + "\"");
}

InputValue load_input(const std::string& spec) {
    namespace fs = std::filesystem;
    if (fs::exists(spec) && fs::is_regular_file(spec)) {
        std::ifstream in(spec);
        if (!in) throw InputError("cannot read file \"" + spec + "\"");
        std::stringstream buffer;
        buffer << in.rdbuf();
        std::string text = buffer.str();
        std::size_t start = text.find_first_not_of(" \t\r\n");
        if (start == std::string::npos) throw InputError("file \"" + spec + "\" is empty");
        try {
            if (text[start] == '{') return complex_from_json(json::parse(text));
            return parse_edge_list(text);
        } catch (const std::exception& e) {
            throw InputError("file \"" + spec + "\": " + e.what());
        }
    }
    auto colon = spec.find(':');
    std::string name = colon == std::string::npos ? spec : spec.substr(0, colon);
    if (name == "delta" || name == "moebius") {
        std::vector<std::string> args =
            colon == std::string::npos ? std::vector<std::string>{} : split(spec.substr(colon + 1), ',');
        try {
            if (name == "delta" && args.size() == 2)
                return delta_complex(parse_int(args[0], spec), parse_int(args[1], spec));
            if (name == "moebius" && args.size() == 1)
                return moebius_complex(parse_int(args[0], spec));
        } catch (const InputError&) {
            throw;
        } catch (const std::exception& e) {
            throw InputError("generator \"" + spec + "\": " + e.what());
        }
        throw InputError("generator \"" + spec + "\" takes " +
                         (name == "delta" ? std::string("2 arguments") : std::string("1 argument")));
    }
    return parse_generator(spec);
}

namespace {

json input_echo(const InputValue& input) {
    if (std::holds_alternative<Graph>(input)) {
        json j = graph_to_json(std::get<Graph>(input));
        j["kind"] = "graph";
        return j;
    }
    json j = complex_to_json(std::get<SimplicialComplex>(input));
    j["kind"] = "complex";
    return j;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

Report finish(json body, const Timer& timer, int exit_code, std::string human) {
    body["schema"] = 1;
    body["version"] = kVersion;
    body["timing_ms"] = timer.ms();
    return {exit_code, std::move(body), std::move(human)};
}

int status_exit(SearchStatus s) {
    switch (s) {
        case SearchStatus::yes: return 0;
        case SearchStatus::no: return 1;
        case SearchStatus::inconclusive: return 2;
    }
    return 2;
}

const char* status_word(SearchStatus s) {
    switch (s) {
        case SearchStatus::yes: return "yes";
        case SearchStatus::no: return "no";
        case SearchStatus::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

json cm_failure_json(const CohenMacaulayResult& cm) {
    if (cm.failure == CohenMacaulayResult::Failure::impure)
        return {{"kind", "impure"},
                {"facet_a", cm.impure_a.to_vector()},
                {"facet_b", cm.impure_b.to_vector()}};
    return {{"kind", "homology"},
            {"face", cm.witness_face.to_vector()},
            {"dimension", cm.witness_dim}};
}

SimplicialComplex complex_of(const InputValue& input) {
    if (std::holds_alternative<Graph>(input))
        return independence_complex(std::get<Graph>(input));
    return std::get<SimplicialComplex>(input);
}

Report check_vd(const InputValue& input, const CheckOptions& opts) {
    Timer timer;
    json body = {{"command", "check"}, {"question", "vertex-decomposable"},
                 {"input", input_echo(input)}};
    DecomposeResult res;
    if (std::holds_alternative<Graph>(input)) {
        const Graph& g = std::get<Graph>(input);
        res = is_vertex_decomposable(g, {opts.budget});
        if (res.status == SearchStatus::yes) {
            ValidationResult v = validate_shedding_tree(g, *res.tree);
            if (!v.valid) throw std::logic_error("emitted certificate failed validation: " + v.reason);
        }
    } else {
        const SimplicialComplex& c = std::get<SimplicialComplex>(input);
        res = is_vertex_decomposable(c, {opts.budget});
        if (res.status == SearchStatus::yes) {
            ValidationResult v = validate_shedding_tree(c, *res.tree);
            if (!v.valid) throw std::logic_error("emitted certificate failed validation: " + v.reason);
        }
    }
    body["answer"] = status_word(res.status);
    std::string human = "vertex decomposable: ";
    human += status_word(res.status);
    if (res.status == SearchStatus::yes) {
        body["certificate"] = {{"type", "shedding-tree"}, {"tree", tree_to_json(*res.tree)}};
        human += " (shedding tree with " + std::to_string(res.tree->node_count()) + " nodes)";
    } else if (res.status == SearchStatus::no) {
        body["witness"] = {{"type", "exhausted-search"},
                           {"note", "no shedding vertex admits decomposable branches"}};
    } else {
        body["witness"] = {{"type", "budget"}, {"budget", opts.budget}};
    }
    return finish(std::move(body), timer, status_exit(res.status), std::move(human));
}

Report check_shellable(const InputValue& input, const CheckOptions& opts) {
    Timer timer;
    json body = {{"command", "check"}, {"question", "shellable"}, {"input", input_echo(input)}};
    ShellabilityDecision dec;
    if (std::holds_alternative<Graph>(input))
        dec = decide_shellable(std::get<Graph>(input), opts.max_facets, opts.budget);
    else
        dec = decide_shellable(std::get<SimplicialComplex>(input), opts.max_facets, opts.budget);
    body["answer"] = status_word(dec.status);
    body["method"] = dec.method;
    std::string human = "shellable: ";
    human += status_word(dec.status);
    human += " (" + dec.method + ")";
    if (dec.status == SearchStatus::yes)
        body["certificate"] = shelling_to_json(dec.order);
    else if (dec.status == SearchStatus::no && dec.failing_skeleton >= 0)
        body["witness"] = {{"type", "failing-pure-skeleton"}, {"skeleton", dec.failing_skeleton}};
    else if (dec.status == SearchStatus::no)
        body["witness"] = {{"type", "exhausted-search"}};
    else
        body["witness"] = {{"type", "facet-cap"}, {"max_facets", opts.max_facets}};
    return finish(std::move(body), timer, status_exit(dec.status), std::move(human));
}

Report check_scm(const InputValue& input, const CheckOptions& opts, bool sequential) {
    Timer timer;
    const char* question = sequential ? "sequentially-cohen-macaulay" : "cohen-macaulay";
    json body = {{"command", "check"}, {"question", question}, {"input", input_echo(input)}};
    SimplicialComplex c = complex_of(input);
    if (c.is_void()) throw InputError("the void complex is rejected");
    (void)opts;
    bool holds;
    std::string human;
    if (sequential) {
        SequentiallyCmResult res = is_sequentially_cohen_macaulay(c);
        holds = res.scm;
        if (holds) {
            json skeleta = json::array();
            for (int i = 0; i <= c.dimension(); ++i) skeleta.push_back({{"skeleton", i}, {"cm", true}});
            body["certificate"] = {{"type", "skeleton-check"}, {"skeleta", std::move(skeleta)}};
            human = "sequentially Cohen-Macaulay: yes";
        } else {
            body["witness"] = {{"type", "failing-pure-skeleton"},
                               {"skeleton", res.failing_skeleton},
                               {"detail", cm_failure_json(res.detail)}};
            human = "sequentially Cohen-Macaulay: no (pure " +
                    std::to_string(res.failing_skeleton) + "-skeleton fails)";
        }
    } else {
        CohenMacaulayResult res = is_cohen_macaulay(c);
        holds = res.cm;
        if (holds) {
            body["certificate"] = {{"type", "link-check"},
                                   {"note", "all links have vanishing homology below their dimension"}};
            human = "Cohen-Macaulay: yes";
        } else {
            body["witness"] = cm_failure_json(res);
            human = "Cohen-Macaulay: no";
        }
    }
    body["answer"] = holds ? "yes" : "no";
    return finish(std::move(body), timer, holds ? 0 : 1, std::move(human));
}

Report check_chordal(const InputValue& input, const CheckOptions&) {
    Timer timer;
    json body = {{"command", "check"}, {"question", "chordal"}, {"input", input_echo(input)}};
    if (!std::holds_alternative<Graph>(input))
        throw InputError("chordality takes a graph input");
    ChordalityResult res = is_chordal(std::get<Graph>(input));
    body["answer"] = res.chordal ? "yes" : "no";
    std::string human;
    if (res.chordal) {
        body["certificate"] = {{"type", "perfect-elimination-order"},
                               {"order", res.elimination_order}};
        human = "chordal: yes";
    } else {
        body["witness"] = {{"type", "chordless-cycle"}, {"cycle", *res.witness_cycle}};
        human = "chordal: no (induced " + std::to_string(res.witness_cycle->size()) + "-cycle)";
    }
    return finish(std::move(body), timer, res.chordal ? 0 : 1, std::move(human));
}

Report check_class(const InputValue& input, const CheckOptions&) {
    Timer timer;
    json body = {{"command", "check"},
                 {"question", "chordless-cycles-only-3-or-5"},
                 {"input", input_echo(input)}};
    if (!std::holds_alternative<Graph>(input))
        throw InputError("class membership takes a graph input");
    auto cycle = find_chordless_cycle_outside(std::get<Graph>(input), {3, 5});
    std::string human;
    if (!cycle) {
        body["answer"] = "yes";
        body["certificate"] = {{"type", "statement"},
                               {"note", "every chordless cycle has length 3 or 5"}};
        human = "class member: yes";
    } else {
        body["answer"] = "no";
        body["witness"] = {{"type", "chordless-cycle"}, {"cycle", *cycle}};
        human = "class member: no (induced " + std::to_string(cycle->size()) + "-cycle)";
    }
    return finish(std::move(body), timer, cycle ? 1 : 0, std::move(human));
}

}

Report cmd_check(const std::string& kind, const InputValue& input, const CheckOptions& opts) {
    if (kind == "vd") return check_vd(input, opts);
    if (kind == "shellable") return check_shellable(input, opts);
    if (kind == "scm") return check_scm(input, opts, true);
    if (kind == "cm") return check_scm(input, opts, false);
    if (kind == "chordal") return check_chordal(input, opts);
    if (kind == "class") return check_class(input, opts);
    throw InputError("unknown check kind \"" + kind +
                     "\" (expected vd, shellable, scm, cm, chordal, class)");
}

Report cmd_decompose(const InputValue& input, bool constructive, const CheckOptions& opts) {
    Timer timer;
    json body = {{"command", "decompose"},
                 {"constructive", constructive},
                 {"input", input_echo(input)}};
    if (constructive) {
        if (!std::holds_alternative<Graph>(input))
            throw InputError("constructive decomposition takes a graph input");
        const Graph& g = std::get<Graph>(input);
        ConstructiveResult res = constructive_decomposition(g);
        if (!res.ok) {
            body["answer"] = "no";
            body["witness"] = {{"type", "chordless-cycle"}, {"cycle", res.witness_cycle}};
            return finish(std::move(body), timer, 1,
                          "not in the constructive class (induced " +
                              std::to_string(res.witness_cycle.size()) + "-cycle)");
        }
        ValidationResult v = validate_shedding_tree(g, *res.tree);
        if (!v.valid) throw std::logic_error("emitted certificate failed validation: " + v.reason);
        body["answer"] = "yes";
        body["certificate"] = {{"type", "shedding-tree"}, {"tree", tree_to_json(*res.tree)}};
        return finish(std::move(body), timer, 0,
                      "decomposed constructively (" + std::to_string(res.tree->node_count()) +
                          " nodes)");
    }
    Report r = check_vd(input, opts);
    r.body["command"] = "decompose";
    return r;
}

Report cmd_homology(const InputValue& input, const CheckOptions&) {
    Timer timer;
    json body = {{"command", "homology"}, {"input", input_echo(input)}};
    SimplicialComplex c = complex_of(input);
    if (c.is_void()) throw InputError("the void complex is rejected");
    HomologyProfile h = reduced_homology(c);
    body["answer"] = profile_to_json(h);
    std::string human = "reduced homology:";
    for (int d = -1; d <= h.top_dimension; ++d) {
        human += " b" + std::to_string(d) + "=" + std::to_string(h.betti_at(d));
        if (!h.torsion_at(d).empty()) {
            human += " torsion(" + std::to_string(d) + ")=[";
            bool first = true;
            for (auto t : h.torsion_at(d)) {
                if (!first) human += ",";
                human += std::to_string(t);
                first = false;
            }
            human += "]";
        }
    }
    return finish(std::move(body), timer, 0, std::move(human));
}

Report cmd_shelling(const InputValue& input, const CheckOptions& opts) {
    Report r = cmd_check("shellable", input, opts);
    r.body["command"] = "shelling";
    return r;
}

Report cmd_obstruction(const InputValue& input, const CheckOptions&) {
    Timer timer;
    json body = {{"command", "obstruction"}, {"input", input_echo(input)}};
    if (!std::holds_alternative<Graph>(input))
        throw InputError("obstruction search takes a graph input");
    auto cycle = find_flag_obstruction(std::get<Graph>(input));
    if (cycle) {
        body["answer"] = {{"witness_cycle", *cycle}};
        return finish(std::move(body), timer, 1,
                      "flag obstruction found: induced " + std::to_string(cycle->size()) +
                          "-cycle " + VertexSet::of(*cycle).to_string());
    }
    body["answer"] = {{"obstruction", false}};
    return finish(std::move(body), timer, 0,
                  "no flag obstruction: the graph is vertex decomposable, shellable and "
                  "sequentially Cohen-Macaulay");
}

Report cmd_domination(const InputValue& input, const CheckOptions&) {
    Timer timer;
    json body = {{"command", "domination"}, {"input", input_echo(input)}};
    if (!std::holds_alternative<Graph>(input))
        throw InputError("domination numbers take a graph input");
    const Graph& g = std::get<Graph>(input);
    int gamma = domination_number(g);
    int idom = independent_domination_number(g);
    json answer = {{"domination_number", gamma}, {"independent_domination_number", idom}};
    std::string human = "gamma=" + std::to_string(gamma) + " i=" + std::to_string(idom);
    SequentiallyCmResult scm = is_sequentially_cohen_macaulay(independence_complex(g));
    answer["scm"] = scm.scm;
    if (scm.scm) {
        bool bound = homology_vanishing_bound_check(g);
        answer["homology_vanishes_below_i_minus_1"] = bound;
        human += bound ? "; homology vanishes below i-1" : "; BOUND VIOLATED";
        if (!bound) {
            body["answer"] = std::move(answer);
            return finish(std::move(body), timer, 1, std::move(human));
        }
    } else {
        human += "; not sequentially Cohen-Macaulay, bound not applicable";
    }
    body["answer"] = std::move(answer);
    return finish(std::move(body), timer, 0, std::move(human));
}

namespace {

json survey_cycles(int max_n, const CheckOptions& opts, std::string& human, int& exit_code) {
    json instances = json::array();
    std::vector<int> vd_true, shell_true, scm_true;
    for (int n = 3; n <= max_n; ++n) {
        Graph g = cycle_graph(n);
        DecomposeResult vd = is_vertex_decomposable(g, {opts.budget});
        ShellabilityDecision sh = decide_shellable(g, opts.max_facets, opts.budget);
        SequentiallyCmResult scm = is_sequentially_cohen_macaulay(independence_complex(g));
        if (vd.status == SearchStatus::yes) vd_true.push_back(n);
        if (sh.status == SearchStatus::yes) shell_true.push_back(n);
        if (scm.scm) scm_true.push_back(n);
        instances.push_back({{"n", n},
                             {"vertex_decomposable", status_word(vd.status)},
                             {"shellable", status_word(sh.status)},
                             {"scm", scm.scm ? "yes" : "no"}});
        human += "C" + std::to_string(n) + ": vd=" + status_word(vd.status) +
                 " shellable=" + status_word(sh.status) + " scm=" + (scm.scm ? "yes" : "no") + "\n";
    }
    exit_code = 0;
    return {{"instances", std::move(instances)},
            {"summary",
             {{"vertex_decomposable_n", vd_true}, {"shellable_n", shell_true}, {"scm_n", scm_true}}}};
}

json survey_all_graphs(int max_n, const CheckOptions& opts, std::string& human, int& exit_code) {
    if (max_n > 8) throw InputError("survey all-graphs is capped at --max-n 8");
    json instances = json::array();
    int violations = 0;
    int index = 0;
    for (const Graph& g : enumerate_graphs_up_to(max_n)) {
        if (independence_complex(g).facet_count() > opts.max_facets) continue;
        DecomposeResult vd = is_vertex_decomposable(g, {opts.budget});
        ShellingSearch sh = is_shellable_bruteforce(independence_complex(g), opts.max_facets);
        SequentiallyCmResult scm = is_sequentially_cohen_macaulay(independence_complex(g));
        bool violation =
            (vd.status == SearchStatus::yes && sh.status == SearchStatus::no) ||
            (sh.status == SearchStatus::yes && !scm.scm);
        if (violation) ++violations;
        instances.push_back({{"index", index++},
                             {"n", g.vertex_count()},
                             {"edges", graph_to_json(g)["edges"]},
                             {"vertex_decomposable", status_word(vd.status)},
                             {"shellable", status_word(sh.status)},
                             {"scm", scm.scm ? "yes" : "no"},
                             {"implication_violation", violation}});
    }
    human += std::to_string(index) + " graphs surveyed, " + std::to_string(violations) +
             " implication violations\n";
    exit_code = violations == 0 ? 0 : 1;
    return {{"instances", std::move(instances)},
            {"summary", {{"graphs", index}, {"implication_violations", violations}}}};
}

json survey_class(int max_n, const CheckOptions&, std::string& human, int& exit_code) {
    if (max_n > 8) throw InputError("survey class is capped at --max-n 8");
    json instances = json::array();
    int members = 0, failures = 0;
    for (const Graph& g : enumerate_graphs_up_to(max_n)) {
        if (find_chordless_cycle_outside(g, {3, 5})) continue;
        ++members;
        ConstructiveResult res = constructive_decomposition(g);
        bool ok = res.ok && validate_shedding_tree(g, *res.tree).valid;
        if (!ok) ++failures;
        instances.push_back({{"n", g.vertex_count()},
                             {"edges", graph_to_json(g)["edges"]},
                             {"decomposed", ok}});
    }
    human += std::to_string(members) + " class members, " + std::to_string(failures) +
             " decomposition failures\n";
    exit_code = failures == 0 ? 0 : 1;
    return {{"instances", std::move(instances)},
            {"summary", {{"members", members}, {"failures", failures}}}};
}

}

Report cmd_survey(const std::string& family, int max_n, const CheckOptions& opts) {
    Timer timer;
    json body = {{"command", "survey"}, {"family", family}, {"max_n", max_n}};
    if (max_n < 1) throw InputError("survey requires --max-n >= 1");
    std::string human;
    int exit_code = 0;
    json result;
    if (family == "cycles") {
        if (max_n < 3) throw InputError("survey cycles requires --max-n >= 3");
        result = survey_cycles(max_n, opts, human, exit_code);
    } else if (family == "all-graphs") {
        result = survey_all_graphs(max_n, opts, human, exit_code);
    } else if (family == "class") {
        result = survey_class(max_n, opts, human, exit_code);
    } else {
        throw InputError("unknown survey family \"" + family +
                         "\" (expected cycles, all-graphs, class)");
    }
    body["instances"] = std::move(result["instances"]);
    body["summary"] = std::move(result["summary"]);
    return finish(std::move(body), timer, exit_code, std::move(human));
}

}
