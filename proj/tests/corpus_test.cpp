#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "hanzigraph/corpus.hpp"
#include "support/fixtures.hpp"

using namespace hanzi;

namespace {

std::vector<StrokeSet> listing_sets() {
  std::vector<StrokeSet> out;
  for (const auto& [ch, s] : fixture::load_cdl("listings.cdl")) out.push_back(s);
  return out;
}

IdsLoadResult ids_from(const std::string& text) {
  std::istringstream in(text);
  return load_ids(in);
}

Corpus random_corpus(std::mt19937_64& rng) {
  Corpus c;
  std::uniform_int_distribution<int> small(0, 5);
  std::uniform_real_distribution<double> coord(0, 128);
  c.config = {1.0 + small(rng), 0.5 + small(rng), static_cast<std::size_t>(small(rng)), rng()};
  const int n = 1 + small(rng);
  for (int i = 0; i < n; ++i) {
    const char32_t ch = static_cast<char32_t>(0x4E00 + small(rng) * 7 + i);
    CharacterRecord r;
    r.ch = ch;
    if (small(rng) > 1) {
      StrokeSet s{ch, {}};
      for (int k = 0, m = 1 + small(rng); k < m; ++k) {
        double a = coord(rng), b = coord(rng);
        s.strokes.push_back({static_cast<StrokeType>(small(rng)), {std::min(a, b), a / 3, std::max(a, b), b},
                             k % 2 ? std::optional<std::string>("cut") : std::nullopt, std::nullopt,
                             static_cast<std::size_t>(k)});
      }
      r.strokes = s;
    }
    if (small(rng) > 2) r.ids = "⿰木" + utf8::encode(ch);
    if (small(rng) > 2) r.radical = RadicalInfo{ch, 1 + small(rng), small(rng), small(rng) > 3};
    if (small(rng) > 2) r.synsets = {"wn:s" + std::to_string(small(rng)), "cwn:x"};
    if (small(rng) > 3) r.glosses = {"tree", "wood \"quoted\""};
    c.records[ch] = r;
  }
  if (small(rng) > 2) c.compounds["森林"] = {"wn:forest"};
  if (small(rng) > 2) c.relations.add("wn:a", "wn:b");
  return c;
}

}  // namespace

TEST(Corpus, IngestingListingsIsIdempotent) {
  Corpus c;
  const auto first = c.merge_strokes(listing_sets());
  EXPECT_EQ(first.added, 2u);
  EXPECT_EQ(c.records.at(U'京').strokes->strokes.size(), 8u);
  EXPECT_EQ(c.records.at(U'余').strokes->strokes.size(), 7u);
  const auto again = c.merge_strokes(listing_sets());
  EXPECT_EQ(again.added, 0u);
  EXPECT_EQ(again.updated, 0u);
  EXPECT_EQ(again.unchanged, 2u);
}

TEST(Corpus, IdsFixtureOfFourLines) {
  Corpus c;
  c.merge_strokes(listing_sets());
  const auto s = c.merge_ids(ids_from("U+4EAC\t京\t⿱亠⿱口小\nU+4F59\t余\t⿱人⿻二小\nU+6797\t林\t⿰木木\n"
                                      "U+68EE\t森\t⿱木林\n"));
  EXPECT_EQ(s.updated, 2u);
  EXPECT_EQ(s.added, 2u);
  for (char32_t ch : {U'京', U'余', U'林', U'森'}) EXPECT_TRUE(c.records.at(ch).ids.has_value());
  EXPECT_EQ(c.ids_database().size(), 4u);
}

TEST(Corpus, CompoundLemmasStayOutOfRecords) {
  Corpus c;
  SenseMap senses;
  senses.add("京", "wn:s1");
  senses.add("首都", "wn:s1");
  c.merge_senses(senses);
  EXPECT_EQ(c.records.size(), 1u);
  EXPECT_EQ(c.compounds.at("首都"), (std::set<std::string>{"wn:s1"}));
  const auto back = c.sense_map();
  EXPECT_EQ(back.synset_to_lemmas.at("wn:s1"), (std::set<std::string>{"京", "首都"}));
}

TEST(Store, HeaderAndSortedRecords) {
  Corpus c;
  c.merge_strokes(listing_sets());
  const std::string text = write_store(c);
  EXPECT_EQ(text.substr(0, text.find('\n')),
            R"({"config":{"lambda_main":2.0,"q":1.0,"seed":0,"theta_s":2},"hanzigraph_store":1})");
  EXPECT_LT(text.find("\"京\""), text.find("\"余\""));
}

TEST(StoreProperty, RoundTripIsExactAndRewriteIsByteIdentical) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const Corpus c = random_corpus(rng);
    const std::string text = write_store(c);
    const Corpus back = read_store(text);
    EXPECT_EQ(back, c) << text;
    EXPECT_EQ(write_store(back), text);
  }
}

TEST(Store, MalformedLineReportsLineNumber) {
  Corpus c;
  c.merge_strokes(listing_sets());
  std::string text = write_store(c);
  text += "{not json\n";
  try {
    read_store(text);
    FAIL() << "accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
  EXPECT_THROW(read_store("{\"hanzigraph_store\":99}\n"), ParseError);
}

TEST(Store, SaveAndLoadFile) {
  const auto dir = fixture::scratch("store_save");
  Corpus c;
  c.merge_strokes(listing_sets());
  c.config.q = 4;
  save_store(c, dir / "s.store");
  EXPECT_EQ(load_store(dir / "s.store"), c);
  EXPECT_THROW(load_store(dir / "missing.store"), Error);
}
