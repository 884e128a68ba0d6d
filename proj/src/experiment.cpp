#include <rainbow/experiment.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <thread>

namespace rainbow {

using nlohmann::json;

const std::vector<std::string> &known_algorithms()
{
    static const std::vector<std::string> names = {"two-connected", "chordal", "kappa", "girth", "rc-exact",
                                                   "metrics-only"};
    return names;
}

namespace {

bool is_random_family(const std::string &f) { return f == "random-k-connected" || f == "k-tree"; }

std::vector<std::int64_t> parse_values(const std::string &key, const json &v)
{
    if (v.is_number_integer())
        return {v.get<std::int64_t>()};
    if (v.is_array()) {
        std::vector<std::int64_t> out;
        for (const auto &x : v) {
            if (!x.is_number_integer())
                throw precondition_error("parameter " + key + " lists a non-integer");
            out.push_back(x.get<std::int64_t>());
        }
        if (out.empty())
            throw precondition_error("parameter " + key + " lists no values");
        return out;
    }
    if (v.is_string()) {
        auto s = v.get<std::string>();
        auto dots = s.find("..");
        if (dots != std::string::npos) {
            try {
                auto lo = std::stoll(s.substr(0, dots));
                auto hi = std::stoll(s.substr(dots + 2));
                if (lo > hi)
                    throw precondition_error("empty range for " + key);
                std::vector<std::int64_t> out;
                for (auto x = lo; x <= hi; ++x)
                    out.push_back(x);
                return out;
            }
            catch (const std::logic_error &) {
                throw precondition_error("bad range \"" + s + "\" for " + key);
            }
        }
    }
    throw precondition_error("parameter " + key + " must be an integer, an array or \"a..b\"");
}

std::vector<std::uint64_t> parse_seeds(const json &v)
{
    std::vector<std::uint64_t> out;
    for (auto x : parse_values("seeds", v)) {
        if (x < 0)
            throw precondition_error("seeds must be non-negative");
        out.push_back(static_cast<std::uint64_t>(x));
    }
    return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point since)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

int param_or(const FamilySpec &spec, const std::string &key, int fallback)
{
    auto it = spec.params.find(key);
    return it == spec.params.end() ? fallback : static_cast<int>(it->second);
}

} // namespace

ExperimentConfig config_from_json(const json &j)
{
    if (!j.is_object())
        throw precondition_error("config must be a JSON object");
    ExperimentConfig cfg;
    try {
        for (const auto &f : j.at("families")) {
            FamilyRange range;
            range.family = f.at("family").get<std::string>();
            for (const auto &[key, value] : f.items()) {
                if (key == "family")
                    continue;
                if (key == "name")
                    range.name = value.get<std::string>();
                else if (key == "seeds" || key == "seed")
                    range.seeds = parse_seeds(value);
                else
                    range.params[key] = parse_values(key, value);
            }
            cfg.families.push_back(std::move(range));
        }
        for (const auto &a : j.at("algorithms"))
            cfg.algorithms.push_back(a.get<std::string>());
        if (j.contains("seeds"))
            cfg.seeds = parse_seeds(j.at("seeds"));
        if (j.contains("caps")) {
            const auto &c = j.at("caps");
            cfg.caps.max_edges = c.value("max_edges", cfg.caps.max_edges);
            cfg.caps.max_path_length = c.value("max_path_length", cfg.caps.max_path_length);
            cfg.caps.rc_nodes = c.value("rc_nodes", cfg.caps.rc_nodes);
        }
        cfg.l = j.value("l", cfg.l);
        cfg.threads = j.value("threads", cfg.threads);
        if (j.contains("out")) {
            cfg.csv_out = j.at("out").value("csv", std::string());
            cfg.json_out = j.at("out").value("json", std::string());
        }
    }
    catch (const json::exception &ex) {
        throw precondition_error(std::string("malformed experiment config: ") + ex.what());
    }

    if (cfg.families.empty())
        throw precondition_error("config lists no families");
    if (cfg.algorithms.empty())
        throw precondition_error("config lists no algorithms");
    for (const auto &a : cfg.algorithms)
        if (std::find(known_algorithms().begin(), known_algorithms().end(), a) == known_algorithms().end())
            throw precondition_error("unknown algorithm '" + a + "'");
    if (cfg.caps.max_edges <= 0 || cfg.caps.max_path_length < 0 || cfg.caps.rc_nodes <= 0)
        throw precondition_error("caps must be positive");
    if (cfg.l < 0)
        throw precondition_error("l must be non-negative");
    return cfg;
}

std::vector<Instance> expand_instances(const ExperimentConfig &cfg)
{
    std::vector<Instance> out;
    for (const auto &range : cfg.families) {
        std::vector<std::map<std::string, std::int64_t>> combos(1);
        for (const auto &[key, values] : range.params) {
            std::vector<std::map<std::string, std::int64_t>> next;
            for (const auto &c : combos)
                for (auto v : values) {
                    auto extended = c;
                    extended[key] = v;
                    next.push_back(std::move(extended));
                }
            combos = std::move(next);
        }
        std::vector<std::uint64_t> seeds{0};
        if (is_random_family(range.family))
            seeds = range.seeds.empty() ? cfg.seeds : range.seeds;
        for (const auto &params : combos)
            for (auto seed : seeds) {
                char id[16];
                std::snprintf(id, sizeof id, "i%05zu", out.size());
                out.push_back({id, FamilySpec{range.family, params, range.name, seed}});
            }
    }
    return out;
}

BoundReport run_algorithm(const std::string &algorithm, const Graph &g, const GraphMetrics &m,
                          const Instance &instance, const ExperimentConfig &cfg)
{
    BoundReport r;
    r.instance = instance.id;
    r.family = instance.spec.family;
    r.params = instance.spec.label();
    r.algorithm = algorithm;
    r.n = g.num_vertices();
    r.kappa = m.vertex_connectivity;
    r.lambda = m.edge_connectivity;
    r.delta = m.min_degree;
    r.girth = m.girth;
    r.diameter = m.diameter;
    r.seed = instance.spec.seed;

    const VerifyOptions verify{cfg.caps.max_path_length};
    auto check = [&](const EdgeColouring &c) {
        r.colours_used = c.num_colours();
        r.verified = verify_rainbow_connected(g, c, verify).complete();
        if (*r.colours_used < m.diameter)
            r.note = "colouring uses fewer colours than the diameter";
    };

    const auto start = std::chrono::steady_clock::now();
    try {
        if (algorithm == "metrics-only") {
        }
        else if (algorithm == "two-connected") {
            r.bound = two_connected_bound(r.n);
            check(colour_two_connected(g));
        }
        else if (algorithm == "chordal") {
            const int kappa = instance.spec.family == "k-tree" ? param_or(instance.spec, "k", m.vertex_connectivity)
                                                                : m.vertex_connectivity;
            r.bound = chordal_bound(r.n, kappa);
            check(colour_chordal(g, kappa).colouring);
        }
        else if (algorithm == "kappa") {
            const int kappa = param_or(instance.spec, "kappa", m.vertex_connectivity);
            r.bound = kappa_bound(r.n, kappa, cfg.l);
            check(colour_kappa_pipeline(g, kappa, cfg.l));
        }
        else if (algorithm == "girth") {
            auto res = colour_girth_pipeline(g);
            r.bound = res.bound;
            check(res.colouring);
        }
        else if (algorithm == "rc-exact") {
            r.bound = Rational(r.n - 1);
            auto res = rc_exact(g, RcBudget{cfg.caps.max_edges, cfg.caps.rc_nodes});
            if (res.is_exact()) {
                check(res.witness);
                if (res.witness.num_colours() != res.rc_value)
                    r.note = "witness colour count differs from rc";
            }
            else {
                r.colours_used = res.rc_value;
                r.note = "inconclusive above k=" + std::to_string(res.rc_value - 1);
            }
        }
        else
            throw precondition_error("unknown algorithm '" + algorithm + "'");
    }
    catch (const std::exception &ex) {
        r.note = ex.what();
        if (r.note.empty())
            r.note = "error";
    }
    r.runtime_ms = elapsed_ms(start);
    return r;
}

int worker_count(int requested)
{
    if (requested > 0)
        return requested;
    if (const char *env = std::getenv("RAINBOW_KIT_THREADS")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<int>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<BoundReport> run_experiment(const ExperimentConfig &cfg)
{
    auto instances = expand_instances(cfg);
    std::vector<std::vector<BoundReport>> slots(instances.size());
    std::atomic<std::size_t> next{0};

    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < instances.size();) {
            const auto &inst = instances[i];
            Graph g;
            GraphMetrics m;
            std::string failure;
            try {
                g = gen_family(inst.spec);
                m = compute_metrics(g);
            }
            catch (const std::exception &ex) {
                failure = ex.what();
            }
            for (const auto &a : cfg.algorithms) {
                if (failure.empty()) {
                    slots[i].push_back(run_algorithm(a, g, m, inst, cfg));
                    continue;
                }
                BoundReport r;
                r.instance = inst.id;
                r.family = inst.spec.family;
                r.params = inst.spec.label();
                r.algorithm = a;
                r.n = g.num_vertices();
                r.seed = inst.spec.seed;
                r.note = failure;
                slots[i].push_back(std::move(r));
            }
        }
    };

    const int workers = std::min<int>(worker_count(cfg.threads), static_cast<int>(std::max<std::size_t>(1, instances.size())));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w)
        pool.emplace_back(work);
    work();
    for (auto &t : pool)
        t.join();

    std::vector<BoundReport> out;
    for (auto &s : slots)
        for (auto &r : s)
            out.push_back(std::move(r));
    return out;
}

} // namespace rainbow
