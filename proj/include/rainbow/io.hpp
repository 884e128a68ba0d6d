#pragma once

#include <rainbow/colouring.hpp>
#include <rainbow/dominating.hpp>
#include <rainbow/ears.hpp>
#include <rainbow/graph.hpp>
#include <rainbow/metrics.hpp>

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace rainbow {

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

/// {"n": int, "edges": [[u, v], ...]}
nlohmann::json graph_to_json(const Graph &g);
Graph graph_from_json(const nlohmann::json &j);

/// Accepts the JSON form, or one "u v" pair per line; a line with a single
/// integer fixes n, '#' starts a comment. Without an explicit n the vertex
/// count is the largest id plus one.
Graph parse_graph(const std::string &text);

/// {"num_colours": k, "colour_of": [...]}
nlohmann::json colouring_to_json(const EdgeColouring &c);
EdgeColouring colouring_from_json(const nlohmann::json &j);

/// {"complete": bool, "witnesses": [{"pair": [u, v], "path": [...]}], "failing": [[u, v], ...]}
nlohmann::json certificate_to_json(const RainbowCertificate &cert);

/// {"vertices": [...], "l": int, "trace": [[v, path...], ...]}
nlohmann::json dominating_to_json(const DominatingSet &d);

/// {"path": [...], "parity": "odd" | "even", "tip": v | null}
nlohmann::json ear_to_json(const Ear &e);

nlohmann::json metrics_to_json(const GraphMetrics &m);

/// Graphviz text; with a colouring, edges are labelled by colour id and drawn
/// from a 21-colour palette.
std::string export_dot(const Graph &g, const std::optional<EdgeColouring> &c = std::nullopt,
                       const std::string &name = "G");

} // namespace rainbow
