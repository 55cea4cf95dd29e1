#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hanzigraph/corpus.hpp"
#include "hanzigraph/ids.hpp"
#include "hanzigraph/lexicon.hpp"
#include "hanzigraph/stroke_space.hpp"

namespace hanzi {

enum class GraphKind { strokes, components, meaning };

std::string_view to_string(GraphKind kind) noexcept;
std::optional<GraphKind> graph_kind_from(std::string_view name) noexcept;

enum class WeightFunction { w_R, w_gR, w_gR_variant, w_S, m };

std::string_view to_string(WeightFunction fn) noexcept;
std::optional<WeightFunction> weight_function_from(std::string_view name) noexcept;
/// The graph kind a weight function produces edges for.
GraphKind kind_of(WeightFunction fn) noexcept;

/// Weight function name plus the parameters it was evaluated with.
struct Provenance {
  std::string weight;
  std::map<std::string, std::string> params;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

using VertexPair = std::pair<char32_t, char32_t>;

/// Characters joined by undirected positive-weight edges, plus directed
/// hypernymy edges on meaning graphs. No self-loops, one edge per pair.
class WeightedGraph {
 public:
  explicit WeightedGraph(GraphKind kind = GraphKind::components) : kind_(kind) {}

  GraphKind kind() const noexcept { return kind_; }
  const Provenance& provenance() const noexcept { return provenance_; }
  void set_provenance(Provenance p) { provenance_ = std::move(p); }

  void add_vertex(char32_t v) { vertices_.insert(v); }
  /// Adds both endpoints. Throws std::invalid_argument on self-loops,
  /// non-positive weights and duplicate pairs.
  void add_edge(char32_t u, char32_t v, double weight);
  /// Directed edge from hypernym to hyponym; meaning graphs only.
  void add_h_edge(char32_t from, char32_t to);

  const std::set<char32_t>& vertices() const noexcept { return vertices_; }
  /// Keyed by (min, max).
  const std::map<VertexPair, double>& edges() const noexcept { return edges_; }
  const std::set<VertexPair>& h_edges() const noexcept { return h_edges_; }

  bool has_vertex(char32_t v) const { return vertices_.count(v) > 0; }
  std::optional<double> weight(char32_t u, char32_t v) const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  GraphKind kind_;
  Provenance provenance_;
  std::set<char32_t> vertices_;
  std::map<VertexPair, double> edges_;
  std::set<VertexPair> h_edges_;
};

/// Per-character layer data prepared from a corpus for graph building.
struct CharacterIndex {
  double quantization_step = 1.0;
  std::map<char32_t, StrokeProfile> profiles;
  std::map<char32_t, ComponentBag> bags;
  std::map<char32_t, RadicalForms> main_radicals;
  std::map<char32_t, CharacterMeaning> meanings;  // characters with synsets or glosses
  std::map<char32_t, std::size_t> stroke_counts;
  HypernymyIndex relations;
  std::size_t record_count = 0;
  std::vector<std::string> warnings;  // e.g. characters with cyclic decompositions
};

CharacterIndex prepare(const Corpus& corpus, double quantization_step);

struct BuildOptions {
  WeightFunction weight = WeightFunction::w_R;
  double lambda_main = 2.0;
  std::size_t theta_s = 2;
  MeaningOptions meaning;
  bool blocking = true;
  std::size_t workers = 1;
};

/// Candidate pairs (u < v), sorted. With blocking, only pairs sharing a
/// stroke type / component / synset or gloss; otherwise all pairs.
std::vector<VertexPair> candidate_pairs(const CharacterIndex& index, const BuildOptions& opts);

/// Edge weight of a pair under opts.weight (0 means no edge).
double pair_weight(const CharacterIndex& index, const BuildOptions& opts, char32_t u, char32_t v);

/// Builds the graph for kind_of(opts.weight). Throws MissingLayerError if
/// the corpus is non-empty but lacks the required layer.
WeightedGraph build_graph(const CharacterIndex& index, const BuildOptions& opts);

}  // namespace hanzi
