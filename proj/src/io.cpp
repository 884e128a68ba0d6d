#include <rainbow/io.hpp>

#include <array>
#include <fstream>
#include <sstream>

namespace rainbow {

using nlohmann::json;

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw io_error("cannot write " + path);
    out << content;
    if (!out)
        throw io_error("write failed for " + path);
}

json graph_to_json(const Graph &g)
{
    json edges = json::array();
    for (const auto &e : g.edges())
        edges.push_back({e.u, e.v});
    return {{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json &j)
{
    try {
        const int n = j.at("n").get<int>();
        if (n < 0)
            throw precondition_error("negative vertex count");
        std::vector<Edge> edges;
        for (const auto &e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw precondition_error("edge entry " + e.dump() + " is not a pair");
            edges.push_back({e[0].get<int>(), e[1].get<int>()});
        }
        return Graph(n, std::move(edges));
    }
    catch (const json::exception &ex) {
        throw precondition_error(std::string("malformed graph JSON: ") + ex.what());
    }
}

Graph parse_graph(const std::string &text)
{
    auto start = text.find_first_not_of(" \t\r\n");
    if (start != std::string::npos && text[start] == '{') {
        json j;
        try {
            j = json::parse(text);
        }
        catch (const json::parse_error &ex) {
            throw precondition_error(std::string("graph JSON does not parse: ") + ex.what());
        }
        return graph_from_json(j);
    }

    std::istringstream in(text);
    std::string line;
    std::vector<Edge> edges;
    std::optional<int> n;
    int top = -1, line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::vector<long long> values;
        long long x;
        while (fields >> x)
            values.push_back(x);
        if (!fields.eof())
            throw precondition_error("line " + std::to_string(line_no) + ": expected integers");
        if (values.empty())
            continue;
        if (values.size() == 1 && !n && edges.empty())
            n = static_cast<int>(values[0]);
        else if (values.size() == 2) {
            edges.push_back({static_cast<int>(values[0]), static_cast<int>(values[1])});
            top = std::max({top, static_cast<int>(values[0]), static_cast<int>(values[1])});
        }
        else
            throw precondition_error("line " + std::to_string(line_no) + ": expected \"u v\"");
    }
    return Graph(n.value_or(top + 1), std::move(edges));
}

json colouring_to_json(const EdgeColouring &c)
{
    return {{"num_colours", c.num_colours()}, {"colour_of", std::vector<Colour>(c.raw().begin(), c.raw().end())}};
}

EdgeColouring colouring_from_json(const json &j)
{
    try {
        auto colours = j.at("colour_of").get<std::vector<Colour>>();
        EdgeColouring c(std::move(colours));
        if (j.contains("num_colours") && j.at("num_colours").get<int>() != c.num_colours())
            throw precondition_error("num_colours disagrees with colour_of");
        return c;
    }
    catch (const json::exception &ex) {
        throw precondition_error(std::string("malformed colouring JSON: ") + ex.what());
    }
}

json certificate_to_json(const RainbowCertificate &cert)
{
    json witnesses = json::array();
    for (const auto &w : cert.witnesses)
        witnesses.push_back({{"pair", {w.u, w.v}}, {"path", w.path}});
    json failing = json::array();
    for (const auto &[u, v] : cert.failing)
        failing.push_back({u, v});
    return {{"complete", cert.complete()}, {"witnesses", std::move(witnesses)}, {"failing", std::move(failing)}};
}

json dominating_to_json(const DominatingSet &d)
{
    json trace = json::array();
    for (const auto &step : d.trace)
        trace.push_back(step.path);
    return {{"vertices", d.vertices.members()}, {"l", d.step_radius}, {"trace", std::move(trace)}};
}

json ear_to_json(const Ear &e)
{
    json tip = nullptr;
    if (auto t = e.tip())
        tip = *t;
    return {{"path", e.path}, {"parity", e.is_odd() ? "odd" : "even"}, {"tip", tip}};
}

json metrics_to_json(const GraphMetrics &m)
{
    json girth = nullptr;
    if (m.girth)
        girth = *m.girth;
    return {{"diameter", m.diameter},
            {"radius", m.radius},
            {"girth", girth},
            {"min_degree", m.min_degree},
            {"vertex_connectivity", m.vertex_connectivity},
            {"edge_connectivity", m.edge_connectivity}};
}

std::string export_dot(const Graph &g, const std::optional<EdgeColouring> &c, const std::string &name)
{
    static constexpr std::array<const char *, 21> palette = {
        "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6",
        "#bfef45", "#fabed4", "#469990", "#dcbeff", "#9a6324", "#800000", "#aaffc3",
        "#808000", "#ffd8b1", "#000075", "#a9a9a9", "#ffe119", "#000000", "#7f7f7f"};
    if (c && c->num_edges() != g.num_edges())
        throw precondition_error("colouring size does not match graph");

    std::ostringstream out;
    out << "graph \"" << name << "\" {\n";
    out << "  node [shape=circle];\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        out << "  " << v << ";\n";
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto &ed = g.edge(e);
        out << "  " << ed.u << " -- " << ed.v;
        if (c && c->is_coloured(e)) {
            auto colour = (*c)[e];
            out << " [label=\"" << colour << "\", color=\"" << palette[static_cast<std::size_t>(colour) % palette.size()]
                << "\"]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace rainbow
