#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hanzigraph/graph.hpp"

namespace hanzi {

/// Sum of the weights of the undirected edges at `v`. Throws DataError
/// when `v` is not a vertex of `g`.
double vertex_weight(const WeightedGraph& g, char32_t v);

struct RankedVertex {
  char32_t vertex = 0;
  double weight = 0;

  friend bool operator==(const RankedVertex&, const RankedVertex&) = default;
};

/// Heaviest vertices first, ties by ascending codepoint.
std::vector<RankedVertex> top_vertices(const WeightedGraph& g, std::size_t n);

struct Clique {
  std::vector<char32_t> vertices;  // ascending
  double weight = 0;               // sum of internal edge weights

  friend bool operator==(const Clique&, const Clique&) = default;
};

/// Sizes above this need CliqueOptions::allow_large.
inline constexpr std::size_t kDefaultMaxCliqueSize = 6;

struct CliqueOptions {
  std::size_t max_size = kDefaultMaxCliqueSize;
  std::size_t top_k = 10;
  bool allow_large = false;
  std::optional<std::chrono::milliseconds> time_budget;
};

struct CliqueSearch {
  std::vector<Clique> cliques;  // heaviest first, ties by vertex list
  bool complete = true;         // false when the time budget ran out
};

/// Cliques of 2..max_size vertices that no vertex extends without
/// exceeding max_size (maximal cliques, truncated at the size cap), found
/// by branch and bound with a weighted-degree bound. Throws
/// std::invalid_argument for max_size < 2, or max_size above the default
/// without allow_large.
CliqueSearch heaviest_cliques(const WeightedGraph& g, const CliqueOptions& opts);

/// Clique weight summed over sorted vertex pairs.
double clique_weight(const WeightedGraph& g, std::span<const char32_t> sorted_vertices);

struct SimilarityReport {
  double edge_jaccard = 0;
  double weight_rank_correlation = 0;
  std::optional<double> coverage_in_meaning;  // only when the second graph is a meaning graph
};

/// Spearman correlation with average ranks for ties. Constant inputs give
/// 1 when the rank vectors coincide and 0 otherwise.
double spearman(std::span<const double> x, std::span<const double> y);

SimilarityReport similarity(const WeightedGraph& g1, const WeightedGraph& g2);

using Partition = std::map<char32_t, std::size_t>;

enum class ClusterMethod { threshold_components, label_propagation };

std::string_view to_string(ClusterMethod m) noexcept;
std::optional<ClusterMethod> cluster_method_from(std::string_view name) noexcept;

/// Edges lighter than `threshold` are ignored by both methods. Cluster ids
/// are numbered by the smallest codepoint they contain.
Partition cluster(const WeightedGraph& g, double threshold, ClusterMethod method, std::uint64_t seed = 0);

/// Throws std::invalid_argument when the partitions cover different vertices.
double adjusted_rand_index(const Partition& a, const Partition& b);

struct DirectionStat {
  std::size_t edges = 0;
  std::size_t stroke_comparable = 0;
  std::size_t stroke_smaller = 0;
  std::size_t component_comparable = 0;
  std::size_t component_smaller = 0;
  std::size_t either_comparable = 0;
  std::size_t either_smaller = 0;

  /// nullopt when nothing was comparable.
  std::optional<double> stroke_fraction() const;
  std::optional<double> component_fraction() const;
  std::optional<double> either_fraction() const;
};

struct HypernymDirectionReport {
  DirectionStat overall;
  std::map<std::string, DirectionStat> by_resource;
};

/// For each hypernymy edge k -> k', checks #S(k) < #S(k') (strokes) and
/// #R(k) < #R(k') (components). "Either" counts edges where at least one
/// count is known for both endpoints and some known comparison holds.
HypernymDirectionReport hypernym_direction_stat(const WeightedGraph& meaning_graph, const CharacterIndex& index);

}  // namespace hanzi
