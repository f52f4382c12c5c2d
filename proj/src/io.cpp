#include "circpow/io.hpp"

#include <cctype>
#include <fstream>

namespace circpow {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json doc;
    doc["format"] = kGraphFormat;
    doc["name"] = g.name();
    doc["order"] = g.order();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    doc["edges"] = std::move(edges);
    if (g.has_labels()) {
        json labels = json::object();
        for (int v = 0; v < g.order(); ++v)
            if (!g.labels()[v].empty()) labels[std::to_string(v)] = g.labels()[v];
        doc["labels"] = std::move(labels);
    }
    return doc;
}

Graph graph_from_json(const json& doc) {
    try {
        if (!doc.is_object()) throw GraphError("graph document must be an object");
        if (doc.value("format", std::string()) != kGraphFormat)
            throw GraphError("unrecognized graph document format");
        if (!doc.contains("order") || !doc["order"].is_number_integer())
            throw GraphError("graph document needs an integer order");
        int order = doc["order"].get<int>();
        EdgeList edges;
        if (doc.contains("edges")) {
            for (const auto& e : doc["edges"]) {
                if (!e.is_array() || e.size() != 2)
                    throw GraphError("edges must be [u, v] pairs");
                edges.emplace_back(e[0].get<int>(), e[1].get<int>());
            }
        }
        std::vector<std::string> labels;
        if (doc.contains("labels") && !doc["labels"].empty()) {
            labels.assign(order, "");
            for (auto it = doc["labels"].begin(); it != doc["labels"].end(); ++it) {
                std::size_t used = 0;
                int v = std::stoi(it.key(), &used);
                if (used != it.key().size() || v < 0 || v >= order)
                    throw GraphError("label key is not a vertex index");
                labels[v] = it.value().get<std::string>();
            }
        }
        Graph g = make_graph(order, edges, std::move(labels));
        return g.renamed(doc.value("name", std::string()));
    } catch (const json::exception& e) {
        throw GraphError(std::string("malformed graph document: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw GraphError("label key is not a vertex index");
    }
}

std::string graph_to_string(const Graph& g) { return graph_to_json(g).dump(2) + "\n"; }

Graph graph_from_string(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw GraphError(std::string("cannot parse graph document: ") + e.what());
    }
    return graph_from_json(doc);
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw GraphError("cannot write " + path);
    out << graph_to_string(g);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot read " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return graph_from_string(text);
}

namespace {

std::string dot_identifier(const std::string& name) {
    std::string out;
    for (char c : name)
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') out += c;
    return out.empty() ? "G" : out;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::string to_dot(const Graph& g) {
    std::string out = "graph " + dot_identifier(g.name()) + " {\n";
    for (int v = 0; v < g.order(); ++v) {
        out += "  " + std::to_string(v);
        if (g.has_labels() && !g.labels()[v].empty())
            out += " [label=\"" + dot_escape(g.labels()[v]) + "\"]";
        out += ";\n";
    }
    for (auto [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

json report_to_json(const VerificationReport& report, const SuiteOptions& opts,
                    const std::string& suite_name) {
    json doc;
    doc["format"] = kReportFormat;
    doc["tool"] = std::string(kToolName) + " " + kToolVersion;
    doc["suite"] = suite_name;
    doc["budget_seconds"] = opts.budget_seconds;
    doc["include_long"] = opts.include_long;
    doc["environment"] = "single-threaded, exact rational arithmetic";
    json records = json::array();
    for (const auto& r : report.records) {
        records.push_back({{"claim", r.claim},
                           {"anchor", r.anchor},
                           {"instance", r.instance},
                           {"expected", r.expected},
                           {"computed", r.computed},
                           {"pass", r.pass},
                           {"inconclusive", r.inconclusive},
                           {"seconds", r.seconds}});
    }
    doc["records"] = std::move(records);
    doc["summary"] = {{"total", report.records.size()},
                      {"failed", report.failed()},
                      {"inconclusive", report.inconclusive()}};
    return doc;
}

} // namespace circpow
