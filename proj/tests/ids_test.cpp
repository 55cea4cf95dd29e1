#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <thread>

#include "hanzigraph/ids.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace hanzi;
using ::testing::HasSubstr;

namespace {

IdsDatabase db_of(std::initializer_list<std::pair<const char*, const char*>> entries) {
  IdsDatabase db;
  for (const auto& [ch, ids] : entries) db.insert(fixture::cp(ch), parse_ids(ids));
  return db;
}

const IdsDatabase& forest() {
  static const IdsDatabase db = db_of({{"林", "⿰木木"}, {"森", "⿱木林"}});
  return db;
}

std::size_t error_column(const std::string& text) {
  try {
    parse_ids(text);
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    return e.column();
  }
  ADD_FAILURE() << "accepted " << text;
  return 0;
}

}  // namespace

TEST(Ids, OperatorsAndArity) {
  for (char32_t op = 0x2FF0; op <= 0x2FFB; ++op) {
    EXPECT_TRUE(is_ids_operator(op));
    EXPECT_EQ(ids_arity(op), (op == 0x2FF2 || op == 0x2FF3) ? 3u : 2u);
  }
  EXPECT_FALSE(is_ids_operator(U'木'));
}

TEST(Ids, ParsesNestedExpressionsAndRoundTrips) {
  const auto n = parse_ids("⿱⿰木木木");
  ASSERT_FALSE(n.is_leaf());
  EXPECT_EQ(n.op, U'⿱');
  EXPECT_EQ(leaves(n), (std::vector<Component>{"木", "木", "木"}));
  EXPECT_EQ(to_text(n), "⿱⿰木木木");
  const auto three = parse_ids("⿲彳亍一");
  EXPECT_EQ(three.children.size(), 3u);
}

TEST(Ids, PlaceholdersAreOpaqueLeaves) {
  const auto n = parse_ids("⿰&CDP-8B7C;木");
  EXPECT_EQ(leaves(n), (std::vector<Component>{"&CDP-8B7C;", "木"}));
  EXPECT_EQ(to_text(n), "⿰&CDP-8B7C;木");
}

TEST(Ids, ErrorsCarryCharacterColumn) {
  EXPECT_EQ(error_column(""), 1u);
  EXPECT_EQ(error_column("⿰木"), 3u);
  EXPECT_EQ(error_column("⿰木木木"), 4u);
  EXPECT_EQ(error_column("⿰木 木"), 3u);
  EXPECT_EQ(error_column("⿰木&CDP"), 3u);
}

TEST(Ids, LoadSkipsCommentsAndReportsProblems) {
  std::istringstream in(
      "; comment\n"
      "# another\n"
      "U+6797\t林\t⿰木木\n"
      "U+68EE\t森\t⿱木林\n"
      "U+6797\t林\t⿰木木\n"
      "U+4EAC\t余\t⿱人木\n"
      "U+4EAC\t京\t⿱亠\n"
      "garbage\n"
      "\n");
  const auto r = load_ids(in);
  EXPECT_EQ(r.db.size(), 2u);
  EXPECT_EQ(r.texts.at(U'森'), "⿱木林");
  ASSERT_EQ(r.warnings.size(), 4u);
  EXPECT_EQ(r.warnings[0].line, 5u);  // duplicate
  EXPECT_EQ(r.warnings[1].line, 6u);  // character column disagrees
  EXPECT_EQ(r.warnings[2].line, 7u);  // bad IDS
  EXPECT_EQ(r.warnings[3].line, 8u);  // too few fields
}

TEST(Derive, ForestBags) {
  EXPECT_EQ(derive(U'森', forest()).components, (std::map<Component, int>{{"木", 1}, {"林", 1}}));
  EXPECT_EQ(derive(U'林', forest()).components, (std::map<Component, int>{{"木", 1}}));
}

TEST(Derive, KangFixtureGivesDepthTwo) {
  const auto db = db_of({{"抗", "⿰扌亢"}, {"亢", "⿱亠儿"}});
  const auto bag = derive(U'抗', db).components;
  EXPECT_EQ(bag.at("儿"), 2);
  EXPECT_EQ(bag.at("亠"), 2);
  EXPECT_EQ(bag.at("亢"), 1);
  EXPECT_EQ(bag.at("扌"), 1);
}

TEST(Derive, CycleIsDataErrorNamingTheCycle) {
  const auto db = db_of({{"甲", "⿰乙木"}, {"乙", "⿱丙木"}, {"丙", "⿰甲木"}});
  try {
    derive(U'甲', db);
    FAIL() << "cycle accepted";
  } catch (const DataError& e) {
    EXPECT_THAT(e.what(), HasSubstr("甲"));
    EXPECT_THAT(e.what(), HasSubstr("乙"));
    EXPECT_THAT(e.what(), HasSubstr("丙"));
  }
}

TEST(Derive, SelfDecompositionIsAtomic) {
  const auto db = db_of({{"木", "木"}, {"林", "⿰木木"}});
  EXPECT_TRUE(derive(U'木', db).components.empty());
  EXPECT_EQ(derive(U'林', db).components, (std::map<Component, int>{{"木", 1}}));
}

TEST(Derive, UnknownCharacterIsDataError) { EXPECT_THROW(derive(U'京', forest()), DataError); }

TEST(DeriveProperty, MatchesPathEnumerationOnRandomAcyclicDatabases) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::size_t> size(2, 50);
  for (int trial = 0; trial < 50; ++trial) {
    const auto r = fixture::random_ids(rng, size(rng));
    Deriver deriver(r.db);
    for (char32_t ch : r.chars) {
      const auto want = oracle::brute_force_depths(r.plain, utf8::encode(ch));
      EXPECT_EQ(deriver.derive(ch).components, want) << "trial " << trial;
    }
  }
}

TEST(DeriveProperty, ResultsDoNotDependOnCallOrderOrThreads) {
  std::mt19937_64 rng(32);
  const auto r = fixture::random_ids(rng, 40);
  Deriver reference(r.db);
  std::map<char32_t, ComponentBag> want;
  for (char32_t ch : r.chars) want[ch] = reference.derive(ch);

  auto reversed = r.chars;
  std::reverse(reversed.begin(), reversed.end());
  Deriver backwards(r.db);
  for (char32_t ch : reversed) EXPECT_EQ(backwards.derive(ch), want.at(ch));

  Deriver shared(r.db);
  std::vector<std::map<char32_t, ComponentBag>> got(4);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < got.size(); ++t) {
      pool.emplace_back([&, t] {
        auto order = r.chars;
        std::shuffle(order.begin(), order.end(), std::mt19937_64(t));
        for (char32_t ch : order) got[t][ch] = shared.derive(ch);
      });
    }
  }
  for (const auto& g : got) EXPECT_EQ(g, want);
}

TEST(Weights, ForestComponentWeight) {
  EXPECT_EQ(component_weight(derive(U'林', forest()), derive(U'森', forest())), 1u);
}

TEST(Weights, GeneralizedReducesToComponentCountWithUnitLambda) {
  const auto a = derive(U'林', forest());
  const auto b = derive(U'森', forest());
  EXPECT_DOUBLE_EQ(generalized_component_weight(a, {}, b, {}, {1.0, false}), 1.0);
  EXPECT_DOUBLE_EQ(generalized_component_weight(a, {"木"}, b, {"木"}, {1.0, false}), 1.0);
}

TEST(Weights, MainRadicalBoostMultipliesBothSides) {
  const auto a = derive(U'林', forest());
  const auto b = derive(U'森', forest());
  EXPECT_DOUBLE_EQ(generalized_component_weight(a, {"木"}, b, {"木"}, {2.0, false}), 4.0);
  EXPECT_DOUBLE_EQ(generalized_component_weight(a, {"木"}, b, {}, {2.0, false}), 2.0);
}

TEST(Weights, DepthDiscountsAndVariant) {
  const auto db = db_of({{"抗", "⿰扌亢"}, {"亢", "⿱亠儿"}, {"尅", "⿰土儿"}});
  const auto kang = derive(U'抗', db);
  const auto ke = derive(U'尅', db);
  // Shared: 儿 at depths 2 and 1.
  EXPECT_DOUBLE_EQ(generalized_component_weight(kang, {}, ke, {}, {1.0, false}), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(generalized_component_weight(kang, {}, ke, {}, {1.0, true}), 0.5);
  EXPECT_EQ(component_weight(kang, ke), 1u);
}

TEST(Weights, NonPositiveLambdaIsRejected) {
  const auto a = derive(U'林', forest());
  EXPECT_THROW(generalized_component_weight(a, {}, a, {}, {0.0, false}), std::invalid_argument);
  EXPECT_THROW(generalized_component_weight(a, {}, a, {}, {-1.0, false}), std::invalid_argument);
}

TEST(WeightProperty, ReductionAndBoundsOnRandomDatabases) {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> lambda(0.1, 4.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = fixture::random_ids(rng, 12);
    Deriver d(r.db);
    for (std::size_t i = 0; i < r.chars.size(); ++i) {
      for (std::size_t j = i + 1; j < r.chars.size(); ++j) {
        const auto a = d.derive(r.chars[i]);
        const auto b = d.derive(r.chars[j]);
        const double wr = static_cast<double>(component_weight(a, b));
        bool unit_depths = true;
        for (const auto& [c, depth] : a.components) {
          const auto it = b.components.find(c);
          if (it != b.components.end() && (depth != 1 || it->second != 1)) unit_depths = false;
        }
        if (unit_depths) EXPECT_EQ(generalized_component_weight(a, {}, b, {}, {1.0, false}), wr);
        const double l = lambda(rng);
        const RadicalForms main{utf8::encode(static_cast<char32_t>(0x6000))};
        const double wg = generalized_component_weight(a, main, b, main, {l, false});
        EXPECT_GE(wg, 0.0);
        EXPECT_LE(wg, std::max(1.0, l * l) * wr + 1e-12);
        const double wv = generalized_component_weight(a, main, b, main, {l, true});
        EXPECT_LE(wv, std::max(1.0, l * l) * wr + 1e-12);
        EXPECT_EQ(wg == 0.0, wr == 0.0);
      }
    }
  }
}
