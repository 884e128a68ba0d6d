// rainbow-kit: generate graphs, colour them, verify colourings and run
// experiment batches.
//
// Exit codes: 0 success, 1 bound or verification failure, 2 usage or I/O error.

#include <rainbow/colourers.hpp>
#include <rainbow/experiment.hpp>
#include <rainbow/io.hpp>
#include <rainbow/metrics.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <iterator>

using namespace rainbow;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

std::string slurp(const std::string &path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    return read_file(path);
}

Graph load_graph(const std::string &path) { return parse_graph(slurp(path)); }

void emit(const std::string &out, const std::string &text)
{
    if (out.empty() || out == "-")
        std::cout << text;
    else
        write_file(out, text);
}

std::string with_newline(const json &j) { return j.dump(2) + "\n"; }

struct Common {
    std::string out;
    std::string format = "json";
    std::uint64_t seed = 0;
    bool seed_given = false;
    int cap_edges = 14;
    int cap_depth = 0;
};

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Rainbow colourings: generators, constructive colourers, verifier and exact oracle"};
    app.require_subcommand(1);
    Common common;

    auto add_out = [&](CLI::App *cmd, std::vector<std::string> formats) {
        cmd->add_option("--out", common.out, "Output file (stdout when omitted)");
        cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember(formats));
    };

    // gen
    auto *gen = app.add_subcommand("gen", "Generate a graph from a family");
    std::string family, name;
    std::vector<std::string> params;
    gen->add_option("--family", family, "Family tag")->required();
    gen->add_option("--param,-p", params, "Family parameter key=value (repeatable)");
    gen->add_option("--name", name, "Catalogue name for named-cage");
    gen->add_option("--seed", common.seed, "Seed for random families");
    add_out(gen, {"json", "dot"});

    // metrics
    auto *metrics = app.add_subcommand("metrics", "Diameter, radius, girth, degree and connectivities");
    std::string graph_path;
    metrics->add_option("graph", graph_path, "Graph file (JSON or edge list, - for stdin)")->required();
    add_out(metrics, {"json"});

    // colour
    auto *colour = app.add_subcommand("colour", "Run a constructive colourer and verify the result");
    std::string algorithm = "two-connected";
    int kappa = 0, l = 1;
    double epsilon = 0.0;
    colour->add_option("graph", graph_path, "Graph file")->required();
    colour->add_option("--algorithm,-a", algorithm, "two-connected | chordal | kappa | girth")
        ->check(CLI::IsMember({"two-connected", "chordal", "kappa", "girth"}));
    colour->add_option("--kappa", kappa, "Connectivity to assume (default: computed)");
    colour->add_option("--l", l, "Step parameter of the kappa pipeline");
    colour->add_option("--epsilon", epsilon, "Choose l = ceil(1/epsilon) for the kappa pipeline");
    colour->add_option("--cap-depth", common.cap_depth, "Verifier path-length cap (0 = number of colours)");
    add_out(colour, {"json", "dot"});

    // verify
    auto *verify = app.add_subcommand("verify", "Check that a colouring is rainbow connected");
    std::string colouring_path;
    verify->add_option("graph", graph_path, "Graph file")->required();
    verify->add_option("colouring", colouring_path, "Colouring JSON")->required();
    verify->add_option("--cap-depth", common.cap_depth, "Verifier path-length cap (0 = number of colours)");
    add_out(verify, {"json"});

    // rc-exact
    auto *exact = app.add_subcommand("rc-exact", "Exact rainbow connection number by exhaustive search");
    std::int64_t max_nodes = RcBudget{}.max_nodes;
    exact->add_option("graph", graph_path, "Graph file")->required();
    exact->add_option("--cap-edges", common.cap_edges, "Refuse graphs with more edges");
    exact->add_option("--max-nodes", max_nodes, "Search node budget");
    add_out(exact, {"json"});

    // dominate
    auto *dominate = app.add_subcommand("dominate", "Grow a connected step-dominating set");
    int girth_half = 0;
    dominate->add_option("graph", graph_path, "Graph file")->required();
    dominate->add_option("--l", l, "Step parameter (the set is 2l-step dominating)");
    dominate->add_option("--kappa", kappa, "Connectivity to assume (default: computed)");
    dominate->add_option("--girth-g", girth_half, "Use the girth variant with girth >= 2g + 1");
    add_out(dominate, {"json"});

    // experiment
    auto *experiment = app.add_subcommand("experiment", "Run a batch described by a JSON config");
    std::string config_path;
    std::vector<std::uint64_t> seeds;
    int threads = 0;
    experiment->add_option("config", config_path, "Experiment config JSON")->required();
    experiment->add_option("--seed", seeds, "Seeds for random families (overrides the config)");
    auto *cap_edges_opt = experiment->add_option("--cap-edges", common.cap_edges, "rc-exact edge cap");
    auto *cap_depth_opt = experiment->add_option("--cap-depth", common.cap_depth, "Verifier path-length cap");
    experiment->add_option("--threads", threads, "Worker count (default: RAINBOW_KIT_THREADS or all cores)");
    add_out(experiment, {"csv", "json"});

    // export-dot
    auto *dot = app.add_subcommand("export-dot", "Graphviz export, optionally coloured");
    dot->add_option("graph", graph_path, "Graph file")->required();
    dot->add_option("--colouring", colouring_path, "Colouring JSON to label edges with");
    dot->add_option("--out", common.out, "Output file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*gen) {
            FamilySpec spec{family, {}, name, common.seed};
            for (const auto &p : params) {
                auto eq = p.find('=');
                if (eq == std::string::npos)
                    throw precondition_error("parameter '" + p + "' is not key=value");
                spec.params[p.substr(0, eq)] = std::stoll(p.substr(eq + 1));
            }
            auto g = gen_family(spec);
            emit(common.out, common.format == "dot" ? export_dot(g, std::nullopt, spec.label())
                                                    : with_newline(graph_to_json(g)));
            return exit_ok;
        }

        if (*metrics) {
            auto g = load_graph(graph_path);
            auto j = metrics_to_json(compute_metrics(g));
            j["n"] = g.num_vertices();
            j["m"] = g.num_edges();
            j["chordal"] = is_chordal(g).chordal;
            emit(common.out, with_newline(j));
            return exit_ok;
        }

        if (*colour) {
            auto g = load_graph(graph_path);
            const int k = kappa > 0 ? kappa : vertex_connectivity(g);
            if (epsilon > 0.0)
                l = l_for_epsilon(epsilon);
            const auto start = std::chrono::steady_clock::now();
            EdgeColouring c;
            Rational bound;
            if (algorithm == "two-connected") {
                c = colour_two_connected(g);
                bound = two_connected_bound(g.num_vertices());
            }
            else if (algorithm == "chordal") {
                c = colour_chordal(g, k).colouring;
                bound = chordal_bound(g.num_vertices(), k);
            }
            else if (algorithm == "kappa") {
                c = colour_kappa_pipeline(g, k, l);
                bound = kappa_bound(g.num_vertices(), k, l);
            }
            else {
                auto res = colour_girth_pipeline(g);
                c = res.colouring;
                bound = res.bound;
            }
            const bool ok = verify_rainbow_connected(g, c, {common.cap_depth}).complete();
            const bool within = bound.admits(c.num_colours());
            const double ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            emit(common.out, common.format == "dot" ? export_dot(g, c) : with_newline(colouring_to_json(c)));
            std::cerr << algorithm << ": " << c.num_colours() << " colours, bound " << bound.str() << ", "
                      << (ok ? "verified" : "NOT rainbow connected") << ", " << ms << " ms\n";
            return ok && within ? exit_ok : exit_failed;
        }

        if (*verify) {
            auto g = load_graph(graph_path);
            auto c = colouring_from_json(json::parse(slurp(colouring_path)));
            auto cert = verify_rainbow_connected(g, c, {common.cap_depth});
            emit(common.out, with_newline(certificate_to_json(cert)));
            return cert.complete() ? exit_ok : exit_failed;
        }

        if (*exact) {
            auto g = load_graph(graph_path);
            auto res = rc_exact(g, RcBudget{common.cap_edges, max_nodes});
            json j = {{"status", res.is_exact() ? "exact" : "inconclusive"},
                      {"lower_bound_used", res.lower_bound_used}};
            if (res.is_exact()) {
                j["rc"] = res.rc_value;
                j["witness"] = colouring_to_json(res.witness);
            }
            else
                j["inconclusive_above"] = res.rc_value - 1;
            emit(common.out, with_newline(j));
            return res.is_exact() ? exit_ok : exit_failed;
        }

        if (*dominate) {
            auto g = load_graph(graph_path);
            DominatingSet d;
            if (girth_half > 0)
                d = grow_girth_dominating(g, GrowthParams{1, 1, girth_half, min_degree(g)});
            else
                d = grow_2l_step_dominating(g, GrowthParams{l, kappa > 0 ? kappa : vertex_connectivity(g), 1, 3});
            emit(common.out, with_newline(dominating_to_json(d)));
            return exit_ok;
        }

        if (*experiment) {
            auto cfg = config_from_json(json::parse(read_file(config_path)));
            if (!seeds.empty())
                cfg.seeds = seeds;
            if (cap_edges_opt->count())
                cfg.caps.max_edges = common.cap_edges;
            if (cap_depth_opt->count())
                cfg.caps.max_path_length = common.cap_depth;
            if (threads > 0)
                cfg.threads = threads;
            auto reports = run_experiment(cfg);

            const bool csv = common.format != "json";
            if (!cfg.csv_out.empty())
                write_file(cfg.csv_out, to_csv(reports));
            if (!cfg.json_out.empty())
                write_file(cfg.json_out, with_newline(to_json(reports)));
            if (!common.out.empty() || (cfg.csv_out.empty() && cfg.json_out.empty()))
                emit(common.out, csv ? to_csv(reports) : with_newline(to_json(reports)));

            std::size_t failed = 0;
            for (const auto &r : reports)
                if (!r.passed()) {
                    ++failed;
                    std::cerr << "FAIL " << r.instance << " " << r.params << " " << r.algorithm << ": "
                              << (r.note.empty() ? "bound or verification failed" : r.note) << "\n";
                }
            std::cerr << reports.size() << " runs, " << failed << " failed\n";
            return failed == 0 ? exit_ok : exit_failed;
        }

        if (*dot) {
            auto g = load_graph(graph_path);
            std::optional<EdgeColouring> c;
            if (!colouring_path.empty())
                c = colouring_from_json(json::parse(slurp(colouring_path)));
            emit(common.out, export_dot(g, c));
            return exit_ok;
        }
    }
    catch (const internal_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failed;
    }
    catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
