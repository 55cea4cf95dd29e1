#include "hanzigraph/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "hanzigraph/utf8.hpp"

namespace hanzi {
namespace {

// Dense-index adjacency over the graph's sorted vertex set.
struct Adjacency {
  std::vector<char32_t> ids;
  std::vector<std::vector<std::pair<std::size_t, double>>> out;  // sorted by neighbor

  explicit Adjacency(const WeightedGraph& g) : ids(g.vertices().begin(), g.vertices().end()) {
    out.resize(ids.size());
    for (const auto& [pair, w] : g.edges()) {
      const std::size_t u = position(pair.first);
      const std::size_t v = position(pair.second);
      out[u].emplace_back(v, w);
      out[v].emplace_back(u, w);
    }
    for (auto& list : out) std::sort(list.begin(), list.end());
  }

  std::size_t position(char32_t v) const {
    return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  }

  double weight(std::size_t u, std::size_t v) const {
    const auto& list = out[u];
    const auto it = std::lower_bound(list.begin(), list.end(), std::make_pair(v, -HUGE_VAL));
    return (it != list.end() && it->first == v) ? it->second : 0.0;
  }
};

struct CliqueOrder {
  bool operator()(const Clique& x, const Clique& y) const {
    if (x.weight != y.weight) return x.weight > y.weight;
    return x.vertices < y.vertices;
  }
};

class CliqueSearcher {
 public:
  CliqueSearcher(const WeightedGraph& g, const CliqueOptions& opts)
      : g_(g), adj_(g), opts_(opts), start_(std::chrono::steady_clock::now()), mark_(adj_.ids.size(), 0) {}

  CliqueSearch run() {
    if (opts_.top_k > 0) seed();
    std::vector<Candidate> all;
    for (std::size_t v = 0; v < adj_.ids.size(); ++v) all.push_back({v, 0.0});
    std::vector<std::size_t> clique;
    expand(clique, 0.0, all, {});
    CliqueSearch out;
    out.cliques.assign(best_.begin(), best_.end());
    out.complete = complete_;
    return out;
  }

 private:
  struct Candidate {
    std::size_t v;
    double attach;  // sum of weights to the current clique
  };

  bool out_of_time() {
    if (!opts_.time_budget) return false;
    if (++ticks_ % 256 != 0) return !complete_;
    if (std::chrono::steady_clock::now() - start_ > *opts_.time_budget) complete_ = false;
    return !complete_;
  }

  void report(const std::vector<std::size_t>& clique) {
    Clique c;
    for (std::size_t v : clique) c.vertices.push_back(adj_.ids[v]);
    std::sort(c.vertices.begin(), c.vertices.end());
    c.weight = clique_weight(g_, c.vertices);
    best_.insert(std::move(c));
    if (best_.size() > opts_.top_k) best_.erase(std::prev(best_.end()));
  }

  // Greedy maximal cliques from every start vertex give the search an
  // early floor. Each one is reportable: it stops at the size cap or when
  // no common neighbour is left.
  void seed() {
    for (std::size_t s = 0; s < adj_.ids.size(); ++s) {
      std::vector<std::size_t> clique{s};
      std::vector<Candidate> cands;
      for (const auto& [u, w] : adj_.out[s]) cands.push_back({u, w});
      while (clique.size() < opts_.max_size && !cands.empty()) {
        const auto pick = std::max_element(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
          return a.attach < b.attach || (a.attach == b.attach && a.v > b.v);
        });
        const std::size_t v = pick->v;
        clique.push_back(v);
        std::vector<Candidate> next;
        for (const auto& c : cands) {
          if (c.v == v) continue;
          const double w = adj_.weight(v, c.v);
          if (w > 0) next.push_back({c.v, c.attach + w});
        }
        cands = std::move(next);
      }
      if (clique.size() >= 2) report(clique);
    }
  }

  // Adding `slots` more vertices gains their attachments plus the edges
  // among them; each vertex contributes at most half of its `slots - 1`
  // heaviest edges into the candidate set.
  double upper_bound(const std::vector<Candidate>& candidates, std::size_t slots) {
    for (const auto& c : candidates) mark_[c.v] = 1;
    std::vector<double> gains;
    gains.reserve(candidates.size());
    std::vector<double> inner;
    for (const auto& c : candidates) {
      inner.clear();
      for (const auto& [u, w] : adj_.out[c.v]) {
        if (mark_[u]) inner.push_back(w);
      }
      const std::size_t take = std::min(slots - 1, inner.size());
      std::partial_sort(inner.begin(), inner.begin() + static_cast<std::ptrdiff_t>(take), inner.end(),
                        std::greater<>());
      gains.push_back(c.attach + std::accumulate(inner.begin(), inner.begin() + static_cast<std::ptrdiff_t>(take), 0.0) / 2);
    }
    for (const auto& c : candidates) mark_[c.v] = 0;
    const std::size_t take = std::min(slots, gains.size());
    std::partial_sort(gains.begin(), gains.begin() + static_cast<std::ptrdiff_t>(take), gains.end(),
                      std::greater<>());
    return std::accumulate(gains.begin(), gains.begin() + static_cast<std::ptrdiff_t>(take), 0.0);
  }

  // Cliques are visited in lexicographic order of their vertex lists, so
  // every clique below `prefix` sorts after it; a subtree that can at best
  // tie the current floor only matters when the floor clique sorts later.
  bool prunable(const std::vector<std::size_t>& prefix, double reachable) const {
    if (best_.size() < opts_.top_k) return false;
    const Clique& floor = *std::prev(best_.end());
    const double slack = 1e-9 * std::max(1.0, std::abs(floor.weight));
    if (reachable < floor.weight - slack) return true;
    if (reachable > floor.weight) return false;
    std::vector<char32_t> head;
    for (std::size_t v : prefix) head.push_back(adj_.ids[v]);
    return !prefix.empty() && floor.vertices < head;
  }

  void expand(std::vector<std::size_t>& clique, double weight, std::vector<Candidate> candidates,
              std::vector<std::size_t> excluded) {
    if (out_of_time()) return;
    const bool capped = clique.size() == opts_.max_size;
    if (clique.size() >= 2 && (capped || (candidates.empty() && excluded.empty()))) report(clique);
    if (capped || candidates.empty() || opts_.top_k == 0) return;
    if (prunable(clique, weight + upper_bound(candidates, opts_.max_size - clique.size()))) return;
    while (!candidates.empty()) {
      const Candidate pick = candidates.front();
      candidates.erase(candidates.begin());
      std::vector<Candidate> next;
      for (const auto& c : candidates) {
        const double w = adj_.weight(pick.v, c.v);
        if (w > 0) next.push_back({c.v, c.attach + w});
      }
      std::vector<std::size_t> next_excluded;
      for (std::size_t x : excluded) {
        if (adj_.weight(pick.v, x) > 0) next_excluded.push_back(x);
      }
      clique.push_back(pick.v);
      expand(clique, weight + pick.attach, std::move(next), std::move(next_excluded));
      clique.pop_back();
      excluded.push_back(pick.v);
      if (!complete_) return;
    }
  }

  const WeightedGraph& g_;
  Adjacency adj_;
  CliqueOptions opts_;
  std::chrono::steady_clock::time_point start_;
  std::set<Clique, CliqueOrder> best_;
  std::vector<char> mark_;
  std::size_t ticks_ = 0;
  bool complete_ = true;
};

std::vector<double> average_ranks(std::span<const double> x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(x.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && x[order[j + 1]] == x[order[i]]) ++j;
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double choose2(double n) { return n * (n - 1) / 2; }

Partition normalize(const std::vector<char32_t>& ids, const std::vector<std::size_t>& labels) {
  std::map<std::size_t, std::size_t> renumber;
  Partition p;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto [it, fresh] = renumber.emplace(labels[i], renumber.size());
    p[ids[i]] = it->second;
  }
  return p;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

void tally(DirectionStat& s, const CharacterIndex& index, char32_t from, char32_t to) {
  ++s.edges;
  bool comparable = false;
  bool smaller = false;
  const auto sf = index.stroke_counts.find(from);
  const auto st = index.stroke_counts.find(to);
  if (sf != index.stroke_counts.end() && st != index.stroke_counts.end()) {
    ++s.stroke_comparable;
    comparable = true;
    if (sf->second < st->second) {
      ++s.stroke_smaller;
      smaller = true;
    }
  }
  const auto bf = index.bags.find(from);
  const auto bt = index.bags.find(to);
  if (bf != index.bags.end() && bt != index.bags.end()) {
    ++s.component_comparable;
    comparable = true;
    if (bf->second.components.size() < bt->second.components.size()) {
      ++s.component_smaller;
      smaller = true;
    }
  }
  if (comparable) {
    ++s.either_comparable;
    if (smaller) ++s.either_smaller;
  }
}

std::optional<double> fraction(std::size_t num, std::size_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

double vertex_weight(const WeightedGraph& g, char32_t v) {
  if (!g.has_vertex(v)) throw DataError("U+" + utf8::hex(v) + " is not a vertex of the graph");
  double total = 0;
  for (const auto& [pair, w] : g.edges()) {
    if (pair.first == v || pair.second == v) total += w;
  }
  return total;
}

std::vector<RankedVertex> top_vertices(const WeightedGraph& g, std::size_t n) {
  std::map<char32_t, double> sums;
  for (char32_t v : g.vertices()) sums[v] = 0;
  for (const auto& [pair, w] : g.edges()) {
    sums[pair.first] += w;
    sums[pair.second] += w;
  }
  std::vector<RankedVertex> ranked;
  for (const auto& [v, w] : sums) ranked.push_back({v, w});
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const RankedVertex& a, const RankedVertex& b) { return a.weight > b.weight; });
  if (ranked.size() > n) ranked.resize(n);
  return ranked;
}

double clique_weight(const WeightedGraph& g, std::span<const char32_t> vs) {
  double total = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) total += g.weight(vs[i], vs[j]).value_or(0.0);
  }
  return total;
}

CliqueSearch heaviest_cliques(const WeightedGraph& g, const CliqueOptions& opts) {
  if (opts.max_size < 2) throw std::invalid_argument("max clique size must be at least 2");
  if (opts.max_size > kDefaultMaxCliqueSize && !opts.allow_large) {
    throw std::invalid_argument("clique sizes above " + std::to_string(kDefaultMaxCliqueSize) +
                                " need the explicit large-search flag");
  }
  return CliqueSearcher(g, opts).run();
}

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("spearman: length mismatch");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  if (x.empty()) return 1.0;
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0 || syy == 0) return rx == ry ? 1.0 : 0.0;
  return sxy / std::sqrt(sxx * syy);
}

SimilarityReport similarity(const WeightedGraph& g1, const WeightedGraph& g2) {
  SimilarityReport r;
  std::set<VertexPair> keys;
  std::size_t shared = 0;
  for (const auto& [pair, w] : g1.edges()) keys.insert(pair);
  for (const auto& [pair, w] : g2.edges()) {
    if (!keys.insert(pair).second) ++shared;
  }
  r.edge_jaccard = keys.empty() ? 1.0 : static_cast<double>(shared) / static_cast<double>(keys.size());
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& pair : keys) {
    x.push_back(g1.weight(pair.first, pair.second).value_or(0.0));
    y.push_back(g2.weight(pair.first, pair.second).value_or(0.0));
  }
  r.weight_rank_correlation = spearman(x, y);
  if (g2.kind() == GraphKind::meaning && !g1.edges().empty()) {
    std::size_t covered = 0;
    for (const auto& [pair, w] : g1.edges()) {
      const bool hit = g2.edges().count(pair) || g2.h_edges().count(pair) ||
                       g2.h_edges().count({pair.second, pair.first});
      covered += hit ? 1 : 0;
    }
    r.coverage_in_meaning = static_cast<double>(covered) / static_cast<double>(g1.edges().size());
  }
  return r;
}

std::string_view to_string(ClusterMethod m) noexcept {
  return m == ClusterMethod::threshold_components ? "threshold-components" : "label-propagation";
}

std::optional<ClusterMethod> cluster_method_from(std::string_view name) noexcept {
  if (name == "threshold-components") return ClusterMethod::threshold_components;
  if (name == "label-propagation") return ClusterMethod::label_propagation;
  return std::nullopt;
}

Partition cluster(const WeightedGraph& g, double threshold, ClusterMethod method, std::uint64_t seed) {
  const Adjacency adj(g);
  const std::size_t n = adj.ids.size();
  std::vector<std::size_t> labels(n);
  std::iota(labels.begin(), labels.end(), 0);

  if (method == ClusterMethod::threshold_components) {
    std::vector<std::size_t> parent(labels);
    for (std::size_t u = 0; u < n; ++u) {
      for (const auto& [v, w] : adj.out[u]) {
        if (w < threshold) continue;
        const std::size_t a = find_root(parent, u);
        const std::size_t b = find_root(parent, v);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (std::size_t u = 0; u < n; ++u) labels[u] = find_root(parent, u);
    return normalize(adj.ids, labels);
  }

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(labels);
  constexpr int kMaxRounds = 100;
  for (int round = 0; round < kMaxRounds; ++round) {
    // Fisher-Yates with the raw engine output keeps the order portable.
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
    bool changed = false;
    for (std::size_t u : order) {
      std::map<std::size_t, double> votes;
      for (const auto& [v, w] : adj.out[u]) {
        if (w >= threshold) votes[labels[v]] += w;
      }
      if (votes.empty()) continue;
      std::size_t best = labels[u];
      double best_w = -1;
      for (const auto& [label, w] : votes) {
        if (w > best_w) {
          best = label;
          best_w = w;
        }
      }
      if (best != labels[u]) {
        labels[u] = best;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return normalize(adj.ids, labels);
}

double adjusted_rand_index(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("partitions cover different vertex sets");
  std::map<std::pair<std::size_t, std::size_t>, double> cells;
  std::map<std::size_t, double> rows;
  std::map<std::size_t, double> cols;
  for (const auto& [v, ca] : a) {
    const auto it = b.find(v);
    if (it == b.end()) throw std::invalid_argument("partitions cover different vertex sets");
    cells[{ca, it->second}] += 1;
    rows[ca] += 1;
    cols[it->second] += 1;
  }
  const double n = static_cast<double>(a.size());
  if (n < 2) return 1.0;
  double index = 0, sum_rows = 0, sum_cols = 0;
  for (const auto& [k, c] : cells) index += choose2(c);
  for (const auto& [k, c] : rows) sum_rows += choose2(c);
  for (const auto& [k, c] : cols) sum_cols += choose2(c);
  const double expected = sum_rows * sum_cols / choose2(n);
  const double max_index = (sum_rows + sum_cols) / 2;
  if (max_index == expected) return 1.0;
  return (index - expected) / (max_index - expected);
}

std::optional<double> DirectionStat::stroke_fraction() const { return fraction(stroke_smaller, stroke_comparable); }
std::optional<double> DirectionStat::component_fraction() const {
  return fraction(component_smaller, component_comparable);
}
std::optional<double> DirectionStat::either_fraction() const { return fraction(either_smaller, either_comparable); }

HypernymDirectionReport hypernym_direction_stat(const WeightedGraph& meaning_graph, const CharacterIndex& index) {
  HypernymDirectionReport report;
  for (const auto& [from, to] : meaning_graph.h_edges()) tally(report.overall, index, from, to);

  int depth = 1;
  if (const auto it = meaning_graph.provenance().params.find("hypernym_depth");
      it != meaning_graph.provenance().params.end()) {
    depth = std::max(1, std::stoi(it->second));
  }
  std::map<char32_t, CharacterMeaning> members;
  for (char32_t v : meaning_graph.vertices()) {
    if (const auto it = index.meanings.find(v); it != index.meanings.end()) members.emplace(v, it->second);
  }
  for (const auto& h : meaning_edges(members, index.relations, {false, depth}).h) {
    if (meaning_graph.h_edges().count({h.from, h.to})) tally(report.by_resource[h.resource], index, h.from, h.to);
  }
  return report;
}

}  // namespace hanzi
