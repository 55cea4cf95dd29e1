#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "hanzigraph/graph.hpp"

namespace hanzi {

enum class ExportFormat { json, graphml, dot };

std::string_view to_string(ExportFormat f) noexcept;
std::optional<ExportFormat> export_format_from(std::string_view name) noexcept;

/// Canonical JSON: {kind, provenance, vertices, edges, h_edges} with sorted
/// keys; codepoints as uppercase hex; arrays sorted by codepoint.
std::string to_json(const WeightedGraph& g);
/// Inverse of to_json. Throws ParseError on malformed documents.
WeightedGraph graph_from_json(std::string_view text);

std::string to_graphml(const WeightedGraph& g);
std::string to_dot(const WeightedGraph& g);

std::string render(const WeightedGraph& g, ExportFormat format);

/// Throws Error when the destination cannot be written.
void write_graph(const WeightedGraph& g, ExportFormat format, const std::filesystem::path& path);
WeightedGraph read_graph(const std::filesystem::path& path);

}  // namespace hanzi
