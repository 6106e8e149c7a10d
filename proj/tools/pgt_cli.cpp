// Command-line front door: parse graph files, run predicates and
// constructions, emit witnesses as JSON (diagnostics go to stderr).
//
// Exit codes: 0 computed (whatever the verdict), 2 input error,
// 3 size-limit refusal, 1 internal invariant violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pgt/pgt.hpp"

namespace {

struct Options {
    std::string format = "dimacs";
    std::string file;
    std::string file2;
    std::string mult_spec;
    std::string theorem;
    long long vertex = 0;
    long long new_label = -1;
    std::size_t max_n = 0;
    unsigned jobs = 1;
};

pgt::Graph load_graph(const Options& opt, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw pgt::InputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (opt.format == "graph6") return pgt::parse_graph6(buffer.str());
    return pgt::parse_dimacs(buffer.str());
}

pgt::Label to_internal_vertex(const pgt::Graph& g, long long external) {
    if (external < 1 || static_cast<std::size_t>(external) > g.order()) {
        throw pgt::UnknownVertexError("vertex " + std::to_string(external) + " outside 1.." +
                                      std::to_string(g.order()));
    }
    return g.label_at(static_cast<std::size_t>(external - 1));
}

pgt::MultiplicityMap parse_multiplicities(const pgt::Graph& g, const std::string& spec) {
    pgt::MultiplicityMap m;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw pgt::InputError("bad multiplicity entry '" + item + "', expected v:k");
        }
        long long v = 0, k = 0;
        try {
            v = std::stoll(item.substr(0, colon));
            k = std::stoll(item.substr(colon + 1));
        } catch (const std::exception&) {
            throw pgt::InputError("bad multiplicity entry '" + item + "', expected v:k");
        }
        if (k < 0) throw pgt::InputError("negative multiplicity in '" + item + "'");
        m[to_internal_vertex(g, v)] = static_cast<unsigned>(k);
    }
    return m;
}

void emit(const nlohmann::json& payload) { std::cout << payload.dump() << '\n'; }

int run(const Options& opt, const std::string& command) {
    using namespace pgt;

    if (command == "omega") {
        const Graph g = load_graph(opt, opt.file);
        emit(clique_number_json(g, clique_number(g)));
    } else if (command == "chi") {
        const Graph g = load_graph(opt, opt.file);
        emit(chromatic_number_json(g, chromatic_number(g)));
    } else if (command == "perfect") {
        const Graph g = load_graph(opt, opt.file);
        emit(perfectness_json(g, is_perfect(g)));
    } else if (command == "berge") {
        const Graph g = load_graph(opt, opt.file);
        emit(berge_json(g, is_berge(g)));
    } else if (command == "complement") {
        const Graph g = load_graph(opt, opt.file);
        std::cout << to_dimacs(g.complement());
    } else if (command == "replicate") {
        const Graph g = load_graph(opt, opt.file);
        const Label a = to_internal_vertex(g, opt.vertex);
        Label a2 = fresh_vertex(g);
        if (opt.new_label >= 0) {
            if (opt.new_label < 1) throw InputError("--new-label must be >= 1");
            a2 = static_cast<Label>(opt.new_label - 1);
        }
        std::cout << to_dimacs(replicate_vertex(g, a, a2));
    } else if (command == "expand") {
        const Graph g = load_graph(opt, opt.file);
        std::cout << to_dimacs(clique_expansion(g, parse_multiplicities(g, opt.mult_spec)));
    } else if (command == "iso") {
        const Graph g = load_graph(opt, opt.file);
        const Graph g2 = load_graph(opt, opt.file2);
        emit(iso_json(g, g2, find_isomorphism(g, g2)));
    } else if (command == "extend-coloring") {
        const Graph g = load_graph(opt, opt.file);
        const Label a = to_internal_vertex(g, opt.vertex);
        const Label a2 = fresh_vertex(g);
        const Coloring optimal = chromatic_number(g).witness;
        const CaseTag tag = classify_replication_case(g, a);
        const Coloring extended = extend_coloring(g, optimal, a, a2);
        const Graph g2 = replicate_vertex(g, a, a2);
        emit({{"case", tag == CaseTag::Case2A ? "2A" : "2B"},
              {"coloring", coloring_json(g2, extended)},
              {"colors_used", colors_used(g2, extended).size()},
              {"omega_after", clique_number(g2).value}});
    } else if (command == "verify") {
        Theorem theorem = Theorem::WPGT;
        if (opt.theorem == "wpgt") {
            theorem = Theorem::WPGT;
        } else if (opt.theorem == "spgt") {
            theorem = Theorem::SPGT;
        } else if (opt.theorem == "replication") {
            theorem = Theorem::Replication;
        } else {
            throw InputError("unknown theorem '" + opt.theorem + "'");
        }
        emit(battery_json(run_battery(theorem, opt.max_n, opt.jobs)));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pgt: exact clique, coloring, perfectness and replication analysis of small graphs"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "Input graph format")
        ->check(CLI::IsMember({"dimacs", "graph6"}))
        ->capture_default_str();

    auto* omega = app.add_subcommand("omega", "Clique number with a witness clique");
    omega->add_option("file", opt.file, "graph file")->required();

    auto* chi = app.add_subcommand("chi", "Chromatic number with a witness coloring");
    chi->add_option("file", opt.file, "graph file")->required();

    auto* perfect = app.add_subcommand("perfect", "Perfectness verdict with counterexample subgraph");
    perfect->add_option("file", opt.file, "graph file")->required();

    auto* berge = app.add_subcommand("berge", "Odd hole / odd anti-hole freedom with certificate");
    berge->add_option("file", opt.file, "graph file")->required();

    auto* complement = app.add_subcommand("complement", "Complement graph as DIMACS");
    complement->add_option("file", opt.file, "graph file")->required();

    auto* replicate = app.add_subcommand("replicate", "Replicate a vertex, print DIMACS");
    replicate->add_option("file", opt.file, "graph file")->required();
    replicate->add_option("--vertex", opt.vertex, "vertex to replicate (1-based)")->required();
    replicate->add_option("--new-label", opt.new_label, "label for the copy (1-based)");

    auto* expand = app.add_subcommand("expand", "Replace vertices by cliques, print DIMACS");
    expand->add_option("file", opt.file, "graph file")->required();
    expand->add_option("--mult", opt.mult_spec, "multiplicities as \"v:k,v:k,...\" covering every vertex")
        ->required();

    auto* iso = app.add_subcommand("iso", "Isomorphism test with witness map");
    iso->add_option("file1", opt.file, "first graph file")->required();
    iso->add_option("file2", opt.file2, "second graph file")->required();

    auto* extend = app.add_subcommand("extend-coloring", "Optimal coloring of a one-vertex replication");
    extend->add_option("file", opt.file, "graph file")->required();
    extend->add_option("--vertex", opt.vertex, "vertex to replicate (1-based)")->required();

    auto* verify = app.add_subcommand("verify", "Run a theorem battery over all labeled graphs");
    verify->add_option("--theorem", opt.theorem, "wpgt | spgt | replication")->required();
    verify->add_option("--max-n", opt.max_n, "check all graphs on 0..N vertices")->required();
    verify->add_option("--jobs", opt.jobs, "worker threads");

    try {
        app.parse(argc, argv);
        return run(opt, app.get_subcommands().front()->get_name());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const pgt::SizeLimitError& e) {
        std::cerr << "size limit: " << e.what() << '\n';
        return 3;
    } catch (const pgt::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
