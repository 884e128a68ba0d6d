#pragma once

#include <rainbow/generators.hpp>
#include <rainbow/metrics.hpp>
#include <rainbow/report.hpp>

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rainbow {

struct Caps {
    int max_edges = 14;        // rc-exact refuses larger graphs
    int max_path_length = 0;   // verifier depth, 0 = number of colours
    std::int64_t rc_nodes = 200'000'000;
};

/// One family entry; every parameter may list several values and the
/// instances are their cartesian product (times the seeds for random
/// families).
struct FamilyRange {
    std::string family;
    std::string name;
    std::map<std::string, std::vector<std::int64_t>> params;
    std::vector<std::uint64_t> seeds; // overrides the config-wide seeds
};

struct ExperimentConfig {
    std::vector<FamilyRange> families;
    std::vector<std::string> algorithms;
    std::vector<std::uint64_t> seeds{0};
    Caps caps;
    int l = 1; // step parameter of the kappa pipeline
    std::string csv_out;
    std::string json_out;
    int threads = 0; // 0 = RAINBOW_KIT_THREADS or hardware concurrency
};

/// two-connected, chordal, kappa, girth, rc-exact, metrics-only
const std::vector<std::string> &known_algorithms();

/// Parses the JSON config. Parameter values may be an integer, an array of
/// integers or a range string "a..b". Throws precondition_error on invalid
/// input.
ExperimentConfig config_from_json(const nlohmann::json &j);

struct Instance {
    std::string id;
    FamilySpec spec;
};

std::vector<Instance> expand_instances(const ExperimentConfig &cfg);

/// Runs one algorithm on one generated graph. Errors become the report's note.
BoundReport run_algorithm(const std::string &algorithm, const Graph &g, const GraphMetrics &metrics,
                          const Instance &instance, const ExperimentConfig &cfg);

/// All (instance, algorithm) reports, sorted by instance id and then by the
/// configured algorithm order.
std::vector<BoundReport> run_experiment(const ExperimentConfig &cfg);

/// Worker count: `requested` if positive, else RAINBOW_KIT_THREADS, else the
/// hardware concurrency.
int worker_count(int requested);

} // namespace rainbow
