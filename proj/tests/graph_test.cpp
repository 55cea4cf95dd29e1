#include <gtest/gtest.h>

#include <random>

#include "hanzigraph/graph.hpp"
#include "support/fixtures.hpp"

using namespace hanzi;

namespace {

const Corpus& sample() {
  static const Corpus c = fixture::sample_corpus();
  return c;
}

const CharacterIndex& sample_index() {
  static const CharacterIndex index = prepare(sample(), 1.0);
  return index;
}

Corpus forest_corpus() {
  Corpus c;
  std::istringstream in("U+6797\t林\t⿰木木\nU+68EE\t森\t⿱木林\n");
  c.merge_ids(load_ids(in));
  return c;
}

constexpr WeightFunction kAll[] = {WeightFunction::w_R, WeightFunction::w_gR, WeightFunction::w_gR_variant,
                                   WeightFunction::w_S, WeightFunction::m};

}  // namespace

TEST(WeightedGraph, RejectsSelfLoopsNonPositiveAndDuplicates) {
  WeightedGraph g;
  g.add_edge(U'林', U'森', 1);
  EXPECT_THROW(g.add_edge(U'林', U'林', 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(U'木', U'森', 0), std::invalid_argument);
  EXPECT_THROW(g.add_edge(U'木', U'森', -2), std::invalid_argument);
  EXPECT_THROW(g.add_edge(U'森', U'林', 3), std::invalid_argument);
  EXPECT_EQ(g.weight(U'森', U'林'), 1.0);
  EXPECT_FALSE(g.weight(U'森', U'木').has_value());
  EXPECT_THROW(g.add_h_edge(U'林', U'森'), std::invalid_argument);
  WeightedGraph m(GraphKind::meaning);
  m.add_h_edge(U'京', U'市');
  EXPECT_EQ(m.h_edges().size(), 1u);
  EXPECT_TRUE(m.has_vertex(U'京'));
}

TEST(WeightNames, RoundTrip) {
  for (auto fn : kAll) EXPECT_EQ(weight_function_from(to_string(fn)), fn);
  EXPECT_EQ(kind_of(WeightFunction::w_S), GraphKind::strokes);
  EXPECT_EQ(kind_of(WeightFunction::w_gR_variant), GraphKind::components);
  EXPECT_EQ(kind_of(WeightFunction::m), GraphKind::meaning);
  EXPECT_FALSE(weight_function_from("w_X").has_value());
}

TEST(BuildGraph, ForestHasSingleEdge) {
  const auto index = prepare(forest_corpus(), 1.0);
  const auto g = build_graph(index, {});
  EXPECT_EQ(g.vertices(), (std::set<char32_t>{U'林', U'森'}));
  ASSERT_EQ(g.edges().size(), 1u);
  EXPECT_EQ(g.weight(U'林', U'森'), 1.0);
  EXPECT_EQ(g.provenance().weight, "w_R");
}

TEST(BuildGraph, MissingLayerIsReported) {
  Corpus c;
  c.merge_strokes({fixture::load_cdl("single_h.cdl").at(U'一')});
  const auto index = prepare(c, 1.0);
  EXPECT_THROW(build_graph(index, {WeightFunction::w_R}), MissingLayerError);
  EXPECT_THROW(build_graph(index, {WeightFunction::m}), MissingLayerError);
  EXPECT_NO_THROW(build_graph(index, {WeightFunction::w_S}));
  EXPECT_NO_THROW(build_graph(prepare(Corpus{}, 1.0), {WeightFunction::w_R}));
}

TEST(BuildGraph, CyclicEntriesAreExcludedWithWarning) {
  Corpus c;
  std::istringstream in("U+7532\t甲\t⿰乙木\nU+4E59\t乙\t⿰甲木\nU+6797\t林\t⿰木木\n");
  c.merge_ids(load_ids(in));
  const auto index = prepare(c, 1.0);
  EXPECT_EQ(index.bags.size(), 1u);
  EXPECT_EQ(index.warnings.size(), 2u);
}

TEST(BuildGraph, ProvenanceRecordsParameters) {
  BuildOptions o;
  o.weight = WeightFunction::w_S;
  o.theta_s = 3;
  const auto g = build_graph(sample_index(), o);
  EXPECT_EQ(g.provenance().params.at("theta_s"), "3");
  EXPECT_EQ(g.provenance().params.at("q"), "1");
  o.weight = WeightFunction::w_gR;
  o.lambda_main = 1.5;
  EXPECT_EQ(build_graph(sample_index(), o).provenance().params.at("lambda_main"), "1.5");
}

TEST(BuildGraph, StrokeEdgesRespectThreshold) {
  BuildOptions o;
  o.weight = WeightFunction::w_S;
  o.theta_s = 3;
  const auto g = build_graph(sample_index(), o);
  ASSERT_FALSE(g.edges().empty());
  for (const auto& [pair, w] : g.edges()) {
    EXPECT_GE(w, 3.0);
    EXPECT_EQ(w, double(stroke_weight(sample_index().profiles.at(pair.first),
                                      sample_index().profiles.at(pair.second))));
  }
}

TEST(BuildGraph, BlockedEqualsAllPairsForEveryWeightFunction) {
  for (auto fn : kAll) {
    for (bool glosses : {false, true}) {
      BuildOptions blocked;
      blocked.weight = fn;
      blocked.meaning.use_glosses = glosses;
      BuildOptions full = blocked;
      full.blocking = false;
      EXPECT_LE(candidate_pairs(sample_index(), blocked).size(), candidate_pairs(sample_index(), full).size());
      EXPECT_EQ(build_graph(sample_index(), blocked), build_graph(sample_index(), full)) << to_string(fn);
    }
  }
}

TEST(BuildGraph, WorkerCountDoesNotChangeResult) {
  for (auto fn : kAll) {
    BuildOptions one;
    one.weight = fn;
    BuildOptions many = one;
    many.workers = 8;
    EXPECT_EQ(build_graph(sample_index(), one), build_graph(sample_index(), many)) << to_string(fn);
  }
}

TEST(BuildGraph, MeaningGraphCarriesHypernymy) {
  const auto g = build_graph(sample_index(), {WeightFunction::m});
  EXPECT_EQ(g.kind(), GraphKind::meaning);
  EXPECT_TRUE(g.h_edges().count({U'人', U'男'}));
  EXPECT_TRUE(g.weight(U'林', U'森').has_value());
}

TEST(BuildGraphProperty, UnitLambdaWithUnitDepthsGivesIdenticalGraphs) {
  std::mt19937_64 rng(51);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    // Flat databases: every entry is one operator over leaf components.
    Corpus c;
    std::uniform_int_distribution<int> leaf(0, 6);
    std::string text;
    for (int i = 0; i < 10; ++i) {
      text += "U+" + utf8::hex(0x5000 + i) + "\t" + utf8::encode(0x5000 + i) + "\t⿰" +
              utf8::encode(0x6000 + leaf(rng)) + utf8::encode(0x6000 + leaf(rng)) + "\n";
    }
    std::istringstream in(text);
    c.merge_ids(load_ids(in));
    const auto index = prepare(c, 1.0);
    BuildOptions r;
    BuildOptions g;
    g.weight = WeightFunction::w_gR;
    g.lambda_main = 1.0;
    const auto gr = build_graph(index, r);
    const auto gg = build_graph(index, g);
    EXPECT_EQ(gr.edges(), gg.edges());
    for (const auto& [pair, w] : gr.edges()) {
      EXPECT_EQ(pair_weight(index, g, pair.first, pair.second), w);
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}
