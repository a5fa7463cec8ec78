// magicspec: compute magic spectra of graphs over finite abelian groups,
// construct the product graphs the solvers care about, inspect twin-class
// reductions, and run the verification suites.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gvm/abelian.hpp"
#include "gvm/errors.hpp"
#include "gvm/graph.hpp"
#include "gvm/io.hpp"
#include "gvm/spectrum.hpp"
#include "gvm/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitDomain = 2;
constexpr int kExitBudget = 3;

json result_to_json(const gvm::SpectrumResult& res, bool with_witnesses) {
    json j;
    j["group"] = gvm::to_string(res.group);
    j["constants"] = json::array();
    for (const auto& c : res.constants) j["constants"].push_back(gvm::to_string(c));
    j["is_subgroup"] = res.is_subgroup;
    j["method"] = gvm::to_string(res.method);
    j["labelings_examined"] = res.labelings_examined;
    if (res.disconnected) j["disconnected"] = true;
    if (with_witnesses) {
        json w = json::object();
        for (const auto& [c, l] : res.witnesses) {
            json labels = json::array();
            for (const auto& v : l.values) labels.push_back(gvm::to_string(v));
            w[gvm::to_string(c)] = std::move(labels);
        }
        j["witnesses"] = std::move(w);
    }
    return j;
}

void print_result_text(const gvm::SpectrumResult& res, bool with_witnesses) {
    std::cout << "group: " << gvm::to_string(res.group) << "\n";
    std::cout << "method: " << gvm::to_string(res.method) << "\n";
    std::cout << "labelings_examined: " << res.labelings_examined << "\n";
    std::cout << "constants:";
    if (res.constants.empty()) std::cout << " none";
    for (const auto& c : res.constants) std::cout << " " << gvm::to_string(c);
    std::cout << "\n";
    std::cout << "is_subgroup: " << (res.is_subgroup ? "true" : "false") << "\n";
    if (res.disconnected) std::cout << "disconnected: true\n";
    if (with_witnesses)
        for (const auto& [c, l] : res.witnesses) {
            std::cout << "witness " << gvm::to_string(c) << ":";
            for (const auto& v : l.values) std::cout << " " << gvm::to_string(v);
            std::cout << "\n";
        }
}

void emit_result(const gvm::SpectrumResult& res, const std::string& format,
                 bool with_witnesses) {
    if (format == "json")
        std::cout << result_to_json(res, with_witnesses).dump(2) << "\n";
    else
        print_result_text(res, with_witnesses);
}

gvm::Graph load_graph(const std::string& source) {
    gvm::Graph g = gvm::parse_graph_source(source);
    if (!gvm::is_connected(g))
        std::cerr << "warning: input graph is disconnected\n";
    return g;
}

struct SpectrumArgs {
    std::string graph_source;
    std::string group_text;
    std::string strategy = "auto";
    std::string format = "text";
    long long budget = gvm::kDefaultBudget;
    int jobs = 1;
    bool witnesses = false;
};

void add_common_flags(CLI::App* cmd, SpectrumArgs& args, bool with_strategy) {
    cmd->add_option("--graph", args.graph_source,
                    "graph source: constructor DSL, product expression, or file path")
        ->required();
    cmd->add_option("--group", args.group_text, "group spec, e.g. Z5, Z2xZ3, V4")
        ->required();
    cmd->add_option("--budget", args.budget, "labeling evaluation budget");
    cmd->add_option("--jobs", args.jobs, "parallel workers for the search");
    cmd->add_flag("--witnesses", args.witnesses, "include one labeling per constant");
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    if (with_strategy)
        cmd->add_option("--strategy", args.strategy, "solver choice")
            ->check(CLI::IsMember({"auto", "brute", "reduced"}));
}

int run_spectrum_command(const SpectrumArgs& args, bool force_reduced) {
    gvm::Graph g = load_graph(args.graph_source);
    gvm::AbelianGroup a = gvm::parse_group(args.group_text);
    gvm::Strategy strategy = gvm::Strategy::Auto;
    if (force_reduced || args.strategy == "reduced") strategy = gvm::Strategy::Reduced;
    else if (args.strategy == "brute") strategy = gvm::Strategy::Brute;
    auto res = gvm::spectrum(g, a, strategy, args.budget, args.jobs);
    emit_result(res, args.format, args.witnesses);
    return 0;
}

// closed-form: --family cycle:<n> | kpartite:<sizes> | corona(<h>;<sizes>),
// or --graph <source> with --group Z2.
int run_closed_form(const std::string& family, const std::string& graph_source,
                    const std::string& group_text, const std::string& format,
                    bool witnesses) {
    gvm::AbelianGroup a = gvm::parse_group(group_text);
    if (family.empty()) {
        if (graph_source.empty())
            throw gvm::domain_error(
                "closed-form needs --family, or --graph with --group Z2");
        if (a.order() != 2)
            throw gvm::domain_error(
                "closed-form on an arbitrary graph is only available over Z2");
        emit_result(gvm::z2_spectrum(load_graph(graph_source)), format, witnesses);
        return 0;
    }

    if (family.rfind("cycle:", 0) == 0) {
        int n = std::stoi(family.substr(6));
        emit_result(gvm::cycle_spectrum(n, a), format, witnesses);
        return 0;
    }
    if (family.rfind("kpartite:", 0) == 0) {
        std::vector<int> sizes;
        std::string rest = family.substr(9);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            std::size_t comma = rest.find(',', pos);
            sizes.push_back(std::stoi(rest.substr(pos, comma - pos)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        emit_result(gvm::complete_multipartite_spectrum(sizes, a), format, witnesses);
        return 0;
    }
    if (family.rfind("corona(", 0) == 0 && family.back() == ')') {
        std::string inner = family.substr(7, family.size() - 8);
        // The size list holds no ';', so the last one ends the head graph.
        std::size_t semi = inner.rfind(';');
        if (semi == std::string::npos)
            throw gvm::parse_error("corona family needs 'corona(<h>;n1,n2,...)'");
        gvm::Graph h = gvm::parse_graph_source(inner.substr(0, semi));
        std::vector<int> sizes;
        std::size_t pos = semi + 1;
        while (pos < inner.size()) {
            std::size_t comma = inner.find(',', pos);
            sizes.push_back(std::stoi(inner.substr(pos, comma - pos)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        emit_result(gvm::corona_spectrum(h, sizes, a), format, witnesses);
        return 0;
    }
    throw gvm::parse_error("unknown closed-form family '" + family + "'");
}

int run_construct(const std::string& expression, const std::string& output,
                  const std::string& format) {
    gvm::Graph g = gvm::parse_graph_source(expression);
    if (!output.empty()) {
        gvm::write_edge_list_file(g, output);
        if (format == "json") {
            json j{{"vertices", g.vertex_count()},
                   {"edges", g.edge_count()},
                   {"output", output}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "vertices " << g.vertex_count() << " edges " << g.edge_count()
                      << "\n";
        }
    } else {
        std::cout << gvm::to_edge_list_string(g);
    }
    return 0;
}

int run_reduce(const std::string& graph_source, const std::string& format) {
    gvm::Graph g = gvm::parse_graph_source(graph_source);
    gvm::ReducedGraph rg = gvm::twin_classes(g);
    if (format == "json") {
        json j;
        j["classes"] = rg.classes;
        j["multiplicities"] = rg.multiplicities;
        j["quotient_vertices"] = rg.quotient.vertex_count();
        j["quotient_edges"] = json::array();
        for (auto [u, v] : rg.quotient.edges())
            j["quotient_edges"].push_back(json::array({u, v}));
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "classes:";
    for (const auto& block : rg.classes) {
        std::cout << " {";
        for (std::size_t i = 0; i < block.size(); ++i)
            std::cout << (i ? "," : "") << block[i];
        std::cout << "}";
    }
    std::cout << "\nmultiplicities:";
    for (int m : rg.multiplicities) std::cout << " " << m;
    std::cout << "\nquotient: n=" << rg.quotient.vertex_count() << " edges:";
    for (auto [u, v] : rg.quotient.edges()) std::cout << " " << u << "-" << v;
    std::cout << "\n";
    return 0;
}

int run_verify(const std::string& suite, long long trials, std::uint64_t seed,
               bool seed_given, int jobs, const std::string& format) {
    if (trials > 0 && !seed_given)
        throw gvm::domain_error("--seed is required when --trials > 0");
    gvm::verify::SuiteReport rep = gvm::verify::run_suite(suite, trials, seed, jobs);
    if (format == "json") {
        json j;
        j["suite"] = rep.suite;
        j["trials"] = trials;
        j["seed"] = seed;
        j["cases"] = rep.cases;
        j["skipped"] = rep.skipped;
        j["failures"] = json::array();
        for (const auto& f : rep.failures)
            j["failures"].push_back(json{{"graph", f.graph},
                                         {"group", f.group},
                                         {"expected", f.expected},
                                         {"observed", f.observed}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "suite: " << rep.suite << "\n";
        std::cout << "cases: " << rep.cases << "\n";
        std::cout << "skipped: " << rep.skipped << "\n";
        std::cout << "failures: " << rep.failures.size() << "\n";
        for (const auto& f : rep.failures) {
            std::cout << "--- failure\n";
            std::cout << "group: " << f.group << "\n";
            std::cout << "expected: " << f.expected << "\n";
            std::cout << "observed: " << f.observed << "\n";
            std::cout << "graph:\n" << f.graph;
        }
        std::cout << (rep.passed() ? "PASS" : "FAIL") << "\n";
    }
    return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"magic spectra of graphs over finite abelian groups"};
    app.require_subcommand(1);

    SpectrumArgs spec_args;
    auto* spec_cmd = app.add_subcommand("spec", "compute the magic spectrum");
    add_common_flags(spec_cmd, spec_args, true);

    SpectrumArgs red_args;
    auto* red_cmd =
        app.add_subcommand("redspec", "compute the spectrum via the twin-class solver");
    add_common_flags(red_cmd, red_args, false);

    std::string cf_family, cf_graph, cf_group, cf_format = "text";
    bool cf_witnesses = false;
    auto* cf_cmd = app.add_subcommand("closed-form", "evaluate a closed-form spectrum");
    cf_cmd->add_option("--family", cf_family,
                       "cycle:<n> | kpartite:<s1,s2,...> | corona(<h>;<n1,n2,...>)");
    cf_cmd->add_option("--graph", cf_graph, "graph source (Z2 form only)");
    cf_cmd->add_option("--group", cf_group, "group spec")->required();
    cf_cmd->add_flag("--witnesses", cf_witnesses, "include witness labelings");
    cf_cmd->add_option("--format", cf_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string con_expr, con_output, con_format = "text";
    auto* con_cmd = app.add_subcommand("construct", "build a graph and write an edge list");
    con_cmd->add_option("expression", con_expr, "constructor DSL or product expression")
        ->required();
    con_cmd->add_option("-o,--output", con_output,
                        "edge-list file to write (stdout when omitted)");
    con_cmd->add_option("--format", con_format, "count report format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string reduce_graph, reduce_format = "text";
    auto* reduce_cmd = app.add_subcommand("reduce", "print the twin-class reduction");
    reduce_cmd->add_option("--graph", reduce_graph, "graph source")->required();
    reduce_cmd->add_option("--format", reduce_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string ver_suite = "all", ver_format = "text";
    long long ver_trials = 0;
    std::uint64_t ver_seed = 0;
    int ver_jobs = 1;
    auto* ver_cmd = app.add_subcommand("verify", "run a verification suite");
    ver_cmd->add_option("--suite", ver_suite, "suite name, or 'all'");
    ver_cmd->add_option("--trials", ver_trials, "random cases on top of the fixtures");
    auto* seed_opt = ver_cmd->add_option("--seed", ver_seed, "seed for random cases");
    ver_cmd->add_option("--jobs", ver_jobs, "parallel workers for the solvers");
    ver_cmd->add_option("--format", ver_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*spec_cmd) return run_spectrum_command(spec_args, false);
        if (*red_cmd) return run_spectrum_command(red_args, true);
        if (*cf_cmd)
            return run_closed_form(cf_family, cf_graph, cf_group, cf_format,
                                   cf_witnesses);
        if (*con_cmd) return run_construct(con_expr, con_output, con_format);
        if (*reduce_cmd) return run_reduce(reduce_graph, reduce_format);
        if (*ver_cmd)
            return run_verify(ver_suite, ver_trials, ver_seed, seed_opt->count() > 0,
                              ver_jobs, ver_format);
    } catch (const gvm::budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const gvm::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const gvm::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
