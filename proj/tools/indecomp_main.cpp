#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "indecomp/report.hpp"
#include "indecomp/version.hpp"

namespace {

void print_report(const indecomp::Report& report, bool as_json) {
    if (as_json)
        std::cout << report.body.dump(2) << "\n";
    else
        std::cout << report.human << "\n";
}

}

int main(int argc, char** argv) {
    CLI::App app{"Decision procedures and certificates for graph independence complexes"};
    app.set_version_flag("--version", std::string(indecomp::kVersion));
    app.require_subcommand(1);

    bool as_json = false;
    indecomp::CheckOptions opts;
    app.add_flag("--json", as_json, "emit the full JSON report");
    app.add_option("--max-facets", opts.max_facets, "facet cap for brute-force shelling search");
    app.add_option("--budget", opts.budget, "memo budget for the decomposability search");
    app.add_option("--seed", opts.seed, "seed for randomized runs");

    std::string check_kind, check_input;
    auto* check = app.add_subcommand("check", "decide a property of a graph or complex");
    check->add_option("kind", check_kind, "vd | shellable | scm | cm | chordal | class")->required();
    check->add_option("input", check_input, "edge-list file, complex JSON file, or generator")
        ->required();

    std::string decompose_input;
    bool constructive = false;
    auto* decompose = app.add_subcommand("decompose", "produce a shedding-tree certificate");
    decompose->add_option("input", decompose_input, "graph or complex input")->required();
    decompose->add_flag("--constructive", constructive,
                        "use the search-free construction for the 3/5-chordless class");

    std::string homology_input;
    auto* homology = app.add_subcommand("homology", "reduced integral homology");
    homology->add_option("input", homology_input, "graph or complex input")->required();

    std::string shelling_input;
    auto* shelling = app.add_subcommand("shelling", "find or refute a shelling order");
    shelling->add_option("input", shelling_input, "graph or complex input")->required();

    std::string obstruction_input;
    auto* obstruction = app.add_subcommand("obstruction", "search for an induced 4- or >=6-cycle");
    obstruction->add_option("input", obstruction_input, "graph input")->required();

    std::string domination_input;
    auto* domination = app.add_subcommand("domination", "domination numbers and the homology bound");
    domination->add_option("input", domination_input, "graph input")->required();

    std::string family;
    int max_n = 0;
    auto* survey = app.add_subcommand("survey", "run a family of instances and summarize");
    survey->add_option("--family", family, "cycles | all-graphs | class")->required();
    survey->add_option("--max-n", max_n, "largest instance size")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        indecomp::Report report;
        if (*check)
            report = indecomp::cmd_check(check_kind, indecomp::load_input(check_input), opts);
        else if (*decompose)
            report = indecomp::cmd_decompose(indecomp::load_input(decompose_input), constructive,
                                             opts);
        else if (*homology)
            report = indecomp::cmd_homology(indecomp::load_input(homology_input), opts);
        else if (*shelling)
            report = indecomp::cmd_shelling(indecomp::load_input(shelling_input), opts);
        else if (*obstruction)
            report = indecomp::cmd_obstruction(indecomp::load_input(obstruction_input), opts);
        else if (*domination)
            report = indecomp::cmd_domination(indecomp::load_input(domination_input), opts);
        else if (*survey)
            report = indecomp::cmd_survey(family, max_n, opts);
        print_report(report, as_json);
        return report.exit_code;
    } catch (const indecomp::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
