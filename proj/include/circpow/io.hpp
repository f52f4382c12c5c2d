#pragma once

#include <string>

#include "circpow/graph.hpp"
#include "circpow/verify.hpp"

#include "json.hpp"

namespace circpow {

inline constexpr const char* kToolName = "circpow";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kGraphFormat = "circpow.graph/1";
inline constexpr const char* kReportFormat = "circpow.report/1";
inline constexpr const char* kCertificateFormat = "circpow.certificate/1";

// Graph document: name, order, edge list with u < v, optional labels.
// Vertices are 0-based; the round trip is lossless.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& doc);

std::string graph_to_string(const Graph& g);
Graph graph_from_string(const std::string& text);

void save_graph(const Graph& g, const std::string& path);
Graph load_graph(const std::string& path);

// DOT text for external rendering; labels appear when present.
std::string to_dot(const Graph& g);

nlohmann::json report_to_json(const VerificationReport& report, const SuiteOptions& opts,
                              const std::string& suite_name);

} // namespace circpow
