#include "hanzigraph/graph.hpp"

#include <algorithm>
#include <charconv>
#include <exception>
#include <stdexcept>
#include <thread>

#include "hanzigraph/utf8.hpp"

namespace hanzi {
namespace {

std::string number_text(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

template <typename Key>
void pairs_from_index(const std::map<Key, std::vector<char32_t>>& index, std::set<VertexPair>& out) {
  for (const auto& [key, members] : index) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) out.emplace(members[i], members[j]);
    }
  }
}

std::vector<char32_t> layer_vertices(const CharacterIndex& index, GraphKind kind, const MeaningOptions& meaning) {
  std::vector<char32_t> out;
  switch (kind) {
    case GraphKind::strokes:
      for (const auto& [ch, p] : index.profiles) out.push_back(ch);
      break;
    case GraphKind::components:
      for (const auto& [ch, b] : index.bags) out.push_back(ch);
      break;
    case GraphKind::meaning:
      for (const auto& [ch, m] : index.meanings) {
        if (!m.synsets.empty() || (meaning.use_glosses && !m.glosses.empty())) out.push_back(ch);
      }
      break;
  }
  return out;
}

// Synsets reachable from `from` in 1..depth hypernymy steps.
std::set<std::string> descendants(const HypernymyIndex& rel, const std::string& from, int depth) {
  std::set<std::string> reached;
  std::set<std::string> frontier{from};
  for (int level = 0; level < depth && !frontier.empty(); ++level) {
    std::set<std::string> next;
    for (const auto& s : frontier) {
      const auto it = rel.children.find(s);
      if (it == rel.children.end()) continue;
      for (const auto& c : it->second) {
        if (reached.insert(c).second) next.insert(c);
      }
    }
    frontier = std::move(next);
  }
  return reached;
}

// Hypernymy edges by checking every ordered pair of vertices.
std::set<VertexPair> all_pairs_h_edges(const CharacterIndex& index, const std::vector<char32_t>& vertices,
                                       int depth) {
  std::map<std::string, std::set<std::string>> reach;
  std::set<VertexPair> out;
  for (char32_t k : vertices) {
    for (char32_t k2 : vertices) {
      if (k == k2) continue;
      const auto& target = index.meanings.at(k2).synsets;
      bool linked = false;
      for (const auto& s : index.meanings.at(k).synsets) {
        auto it = reach.find(s);
        if (it == reach.end()) it = reach.emplace(s, descendants(index.relations, s, depth)).first;
        for (const auto& t : target) linked = linked || it->second.count(t) > 0;
        if (linked) break;
      }
      if (linked) out.emplace(k, k2);
    }
  }
  return out;
}

Provenance provenance_for(const CharacterIndex& index, const BuildOptions& opts) {
  Provenance p;
  p.weight = std::string(to_string(opts.weight));
  switch (opts.weight) {
    case WeightFunction::w_S:
      p.params["q"] = number_text(index.quantization_step);
      p.params["theta_s"] = std::to_string(opts.theta_s);
      break;
    case WeightFunction::w_gR:
    case WeightFunction::w_gR_variant:
      p.params["lambda_main"] = number_text(opts.lambda_main);
      break;
    case WeightFunction::m:
      p.params["use_glosses"] = opts.meaning.use_glosses ? "true" : "false";
      p.params["hypernym_depth"] = std::to_string(std::max(1, opts.meaning.hypernym_depth));
      break;
    case WeightFunction::w_R:
      break;
  }
  return p;
}

}  // namespace

std::string_view to_string(GraphKind kind) noexcept {
  switch (kind) {
    case GraphKind::strokes: return "strokes";
    case GraphKind::components: return "components";
    case GraphKind::meaning: return "meaning";
  }
  return "?";
}

std::optional<GraphKind> graph_kind_from(std::string_view name) noexcept {
  if (name == "strokes") return GraphKind::strokes;
  if (name == "components") return GraphKind::components;
  if (name == "meaning") return GraphKind::meaning;
  return std::nullopt;
}

std::string_view to_string(WeightFunction fn) noexcept {
  switch (fn) {
    case WeightFunction::w_R: return "w_R";
    case WeightFunction::w_gR: return "w_gR";
    case WeightFunction::w_gR_variant: return "w_gR_variant";
    case WeightFunction::w_S: return "w_S";
    case WeightFunction::m: return "m";
  }
  return "?";
}

std::optional<WeightFunction> weight_function_from(std::string_view name) noexcept {
  for (auto fn : {WeightFunction::w_R, WeightFunction::w_gR, WeightFunction::w_gR_variant, WeightFunction::w_S,
                  WeightFunction::m}) {
    if (name == to_string(fn)) return fn;
  }
  return std::nullopt;
}

GraphKind kind_of(WeightFunction fn) noexcept {
  switch (fn) {
    case WeightFunction::w_S: return GraphKind::strokes;
    case WeightFunction::m: return GraphKind::meaning;
    default: return GraphKind::components;
  }
}

void WeightedGraph::add_edge(char32_t u, char32_t v, double weight) {
  if (u == v) throw std::invalid_argument("self-loop on U+" + utf8::hex(u));
  if (!(weight > 0)) throw std::invalid_argument("edge weights must be positive");
  const VertexPair key = std::minmax(u, v);
  if (!edges_.emplace(key, weight).second) {
    throw std::invalid_argument("duplicate edge U+" + utf8::hex(key.first) + "-U+" + utf8::hex(key.second));
  }
  vertices_.insert(u);
  vertices_.insert(v);
}

void WeightedGraph::add_h_edge(char32_t from, char32_t to) {
  if (kind_ != GraphKind::meaning) throw std::invalid_argument("hypernymy edges belong to meaning graphs");
  if (from == to) throw std::invalid_argument("self-loop on U+" + utf8::hex(from));
  h_edges_.emplace(from, to);
  vertices_.insert(from);
  vertices_.insert(to);
}

std::optional<double> WeightedGraph::weight(char32_t u, char32_t v) const {
  const auto it = edges_.find(std::minmax(u, v));
  if (it == edges_.end()) return std::nullopt;
  return it->second;
}

CharacterIndex prepare(const Corpus& corpus, double quantization_step) {
  CharacterIndex index;
  index.quantization_step = quantization_step;
  index.record_count = corpus.records.size();
  index.relations = corpus.relations;
  IdsDatabase db;
  for (const auto& [ch, rec] : corpus.records) {
    if (!rec.ids) continue;
    try {
      db.insert(ch, parse_ids(*rec.ids));
    } catch (const Error& e) {
      index.warnings.push_back("U+" + utf8::hex(ch) + ": " + e.what());
    }
  }
  const Deriver deriver(db);
  for (const auto& [ch, rec] : corpus.records) {
    if (rec.strokes && !rec.strokes->strokes.empty()) {
      index.profiles.emplace(ch, make_profile(*rec.strokes, quantization_step));
      index.stroke_counts.emplace(ch, rec.strokes->strokes.size());
    }
    if (db.find(ch)) {
      try {
        index.bags.emplace(ch, deriver.derive(ch));
      } catch (const DataError& e) {
        index.warnings.push_back("U+" + utf8::hex(ch) + ": " + e.what());
      }
    }
    if (rec.radical) index.main_radicals.emplace(ch, radical_forms(rec.radical->radical_index));
    if (!rec.synsets.empty() || !rec.glosses.empty()) {
      CharacterMeaning m;
      m.synsets = rec.synsets;
      m.glosses.insert(rec.glosses.begin(), rec.glosses.end());
      index.meanings.emplace(ch, std::move(m));
    }
  }
  return index;
}

std::vector<VertexPair> candidate_pairs(const CharacterIndex& index, const BuildOptions& opts) {
  const GraphKind kind = kind_of(opts.weight);
  const auto vertices = layer_vertices(index, kind, opts.meaning);
  if (!opts.blocking) {
    std::vector<VertexPair> all;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < vertices.size(); ++j) all.emplace_back(vertices[i], vertices[j]);
    }
    return all;
  }
  std::set<VertexPair> pairs;
  switch (kind) {
    case GraphKind::strokes: {
      std::map<StrokeType, std::vector<char32_t>> by_type;
      for (char32_t ch : vertices) {
        std::set<StrokeType> types;
        for (const auto& s : index.profiles.at(ch).strokes.strokes) types.insert(s.label.type);
        for (auto t : types) by_type[t].push_back(ch);
      }
      pairs_from_index(by_type, pairs);
      break;
    }
    case GraphKind::components: {
      std::map<Component, std::vector<char32_t>> by_component;
      for (char32_t ch : vertices) {
        for (const auto& [c, d] : index.bags.at(ch).components) by_component[c].push_back(ch);
      }
      pairs_from_index(by_component, pairs);
      break;
    }
    case GraphKind::meaning: {
      std::map<std::string, std::vector<char32_t>> by_key;
      for (char32_t ch : vertices) {
        const auto& m = index.meanings.at(ch);
        for (const auto& s : m.synsets) by_key["s\t" + s].push_back(ch);
        if (opts.meaning.use_glosses) {
          for (const auto& g : m.glosses) by_key["g\t" + g].push_back(ch);
        }
      }
      pairs_from_index(by_key, pairs);
      break;
    }
  }
  return {pairs.begin(), pairs.end()};
}

double pair_weight(const CharacterIndex& index, const BuildOptions& opts, char32_t u, char32_t v) {
  static const RadicalForms kNone;
  auto radicals = [&](char32_t ch) -> const RadicalForms& {
    const auto it = index.main_radicals.find(ch);
    return it == index.main_radicals.end() ? kNone : it->second;
  };
  switch (opts.weight) {
    case WeightFunction::w_S: {
      const auto w = stroke_weight(index.profiles.at(u), index.profiles.at(v));
      return (w > 0 && w >= opts.theta_s) ? static_cast<double>(w) : 0.0;
    }
    case WeightFunction::w_R:
      return static_cast<double>(component_weight(index.bags.at(u), index.bags.at(v)));
    case WeightFunction::w_gR:
    case WeightFunction::w_gR_variant: {
      const WeightConfig cfg{opts.lambda_main, opts.weight == WeightFunction::w_gR_variant};
      return generalized_component_weight(index.bags.at(u), radicals(u), index.bags.at(v), radicals(v), cfg);
    }
    case WeightFunction::m:
      return meaning_weight(index.meanings.at(u), index.meanings.at(v), opts.meaning);
  }
  return 0;
}

WeightedGraph build_graph(const CharacterIndex& index, const BuildOptions& opts) {
  const GraphKind kind = kind_of(opts.weight);
  WeightedGraph g(kind);
  g.set_provenance(provenance_for(index, opts));
  const auto vertices = layer_vertices(index, kind, opts.meaning);
  if (index.record_count > 0 && vertices.empty()) {
    throw MissingLayerError(std::string("no ") +
                            (kind == GraphKind::strokes      ? "stroke (CDL)"
                             : kind == GraphKind::components ? "decomposition (IDS)"
                                                             : "sense") +
                            " data ingested for a " + std::string(to_string(kind)) + " graph");
  }
  for (char32_t v : vertices) g.add_vertex(v);

  const auto pairs = candidate_pairs(index, opts);
  std::vector<double> weights(pairs.size(), 0.0);
  const std::size_t workers = std::clamp<std::size_t>(opts.workers, 1, std::max<std::size_t>(1, pairs.size()));
  std::vector<std::exception_ptr> failures(workers);
  auto work = [&](std::size_t offset) {
    try {
      for (std::size_t i = offset; i < pairs.size(); i += workers) {
        weights[i] = pair_weight(index, opts, pairs[i].first, pairs[i].second);
      }
    } catch (...) {
      failures[offset] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (weights[i] > 0) g.add_edge(pairs[i].first, pairs[i].second, weights[i]);
  }

  if (kind == GraphKind::meaning) {
    const int depth = std::max(1, opts.meaning.hypernym_depth);
    if (opts.blocking) {
      std::map<char32_t, CharacterMeaning> synset_chars;
      for (char32_t v : vertices) synset_chars.emplace(v, index.meanings.at(v));
      for (const auto& h : meaning_edges(synset_chars, index.relations, {false, depth}).h) {
        g.add_h_edge(h.from, h.to);
      }
    } else {
      for (const auto& [from, to] : all_pairs_h_edges(index, vertices, depth)) g.add_h_edge(from, to);
    }
  }
  return g;
}

}  // namespace hanzi
