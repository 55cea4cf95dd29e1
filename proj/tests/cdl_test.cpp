#include <gtest/gtest.h>

#include <random>

#include "hanzigraph/cdl.hpp"
#include "hanzigraph/error.hpp"
#include "support/fixtures.hpp"

using namespace hanzi;

namespace {

StrokeSet flat(const std::string& xml) {
  const auto docs = parse_cdl_document(xml);
  EXPECT_EQ(docs.size(), 1u);
  return flatten(docs.at(0));
}

}  // namespace

TEST(StrokeTypes, ThirtyNineRoundTrip) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < kStrokeTypeCount; ++i) {
    const auto type = static_cast<StrokeType>(i);
    const std::string abbr(abbreviation(type));
    EXPECT_TRUE(seen.insert(abbr).second) << abbr;
    ASSERT_TRUE(stroke_type_from(abbr).has_value());
    EXPECT_EQ(*stroke_type_from(abbr), type);
  }
  EXPECT_EQ(seen.size(), 39u);
  EXPECT_FALSE(stroke_type_from("zz").has_value());
  EXPECT_FALSE(stroke_type_from("").has_value());
}

TEST(Cdl, ListingsGiveEightAndSevenStrokes) {
  const auto sets = fixture::load_cdl("listings.cdl");
  ASSERT_EQ(sets.size(), 2u);
  const auto& jing = sets.at(fixture::cp("京"));
  const auto& yu = sets.at(fixture::cp("余"));
  EXPECT_EQ(jing.strokes.size(), 8u);
  EXPECT_EQ(yu.strokes.size(), 7u);
  const std::vector<std::string> order = {"d", "h", "s", "hz", "h", "sg", "p", "d"};
  for (std::size_t i = 0; i < order.size(); ++i) {
    EXPECT_EQ(abbreviation(jing.strokes[i].type), order[i]);
    EXPECT_EQ(jing.strokes[i].doc_index, i);
  }
}

TEST(Cdl, NestedFramesComposeAffinely) {
  // 宀 frame (0,0)-(128,38) inside the upper comp (0,0)-(128,68): the h
  // stroke at local y=128 lands at 68*38/128 in the square.
  const auto jing = fixture::load_cdl("listings.cdl").at(fixture::cp("京"));
  const auto& h = jing.strokes[1];
  EXPECT_NEAR(h.box.left, 0.0, 1e-12);
  EXPECT_NEAR(h.box.right, 128.0, 1e-12);
  EXPECT_NEAR(h.box.top, 68.0 * 38.0 / 128.0, 1e-12);
  EXPECT_NEAR(h.box.bottom, 68.0 * 38.0 / 128.0, 1e-12);
  // d at local (54,0)-(68,92) in the same frame.
  const auto& d = jing.strokes[0];
  EXPECT_NEAR(d.box.left, 54.0, 1e-12);
  EXPECT_NEAR(d.box.right, 68.0, 1e-12);
  EXPECT_NEAR(d.box.bottom, 92.0 * (68.0 * 38.0 / 128.0) / 128.0, 1e-12);
}

TEST(Cdl, StrokeBoxIsHullOfAllKeyPoints) {
  const auto s = flat("<cdl char='乙' uni='4e59'><stroke type='hzwg' points='10,20 90,20 5,100 120,110 118,90'/></cdl>");
  ASSERT_EQ(s.strokes.size(), 1u);
  EXPECT_EQ(s.strokes[0].box, (BoundingBox{5, 20, 120, 110}));
}

TEST(Cdl, HeadAndTailAreKept) {
  const auto s = flat("<cdl char='一' uni='4e00'><stroke type='h' points='0,64 128,64' head='cut' tail='long'/></cdl>");
  EXPECT_EQ(s.strokes[0].head, "cut");
  EXPECT_EQ(s.strokes[0].tail, "long");
}

TEST(Cdl, CommentsEntitiesAndDeclarationsAreSkipped) {
  const std::string xml =
      "<?xml version='1.0'?>\n<!DOCTYPE x>\n<!-- a <cdl> in a comment -->\n"
      "<cdl char='&#x4E00;' uni='4e00'>\n  <stroke type='h' points='0,64 128,64'/>\n</cdl>\n";
  const auto docs = parse_cdl_document(xml);
  ASSERT_EQ(docs.size(), 1u);
  EXPECT_EQ(docs[0].ch, U'一');
}

TEST(Cdl, UniAloneIdentifiesCharacter) {
  const auto docs = parse_cdl_document("<cdl uni='4EAC'><stroke type='h' points='0,0 128,0'/></cdl>");
  EXPECT_EQ(docs.at(0).ch, U'京');
}

struct BadCdl {
  const char* name;
  const char* xml;
  std::size_t line;
};

class MalformedCdl : public ::testing::TestWithParam<BadCdl> {};

TEST_P(MalformedCdl, RaisesParseErrorWithLine) {
  try {
    parse_cdl_document(GetParam().xml);
    FAIL() << "accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), GetParam().line) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(
    Cases, MalformedCdl,
    ::testing::Values(
        BadCdl{"UnknownType", "<cdl char='一' uni='4e00'>\n<stroke type='qq' points='0,0 1,1'/>\n</cdl>", 2},
        BadCdl{"MissingPoints", "<cdl char='一' uni='4e00'>\n\n<stroke type='h'/>\n</cdl>", 3},
        BadCdl{"MissingType", "<cdl char='一' uni='4e00'>\n<stroke points='0,0 1,1'/>\n</cdl>", 2},
        BadCdl{"OnePoint", "<cdl char='一' uni='4e00'>\n<stroke type='h' points='0,0'/>\n</cdl>", 2},
        BadCdl{"CompThreePoints", "<cdl char='一' uni='4e00'>\n<comp points='0,0 1,1 2,2'>\n"
                                  "<stroke type='h' points='0,0 1,1'/></comp>\n</cdl>", 2},
        BadCdl{"CharUniDisagree", "<cdl char='一' uni='4e01'>\n<stroke type='h' points='0,0 1,1'/>\n</cdl>", 1},
        BadCdl{"Unclosed", "<cdl char='一' uni='4e00'>\n<stroke type='h' points='0,0 1,1'/>\n", 3},
        BadCdl{"BadNumber", "<cdl char='一' uni='4e00'>\n<stroke type='h' points='0,x 1,1'/>\n</cdl>", 2},
        BadCdl{"UnknownElement", "<cdl char='一' uni='4e00'>\n<path/>\n</cdl>", 2}),
    [](const auto& info) { return std::string(info.param.name); });

TEST(Cdl, OutOfSquareIsDataError) {
  EXPECT_THROW(flat("<cdl char='一' uni='4e00'><stroke type='h' points='0,64 140,64'/></cdl>"), DataError);
}

TEST(Cdl, InvertedComponentBoxIsDataError) {
  EXPECT_THROW(flat("<cdl char='一' uni='4e00'><comp points='100,0 20,128'>"
                    "<stroke type='h' points='0,64 128,64'/></comp></cdl>"),
               DataError);
}

TEST(Cdl, CharacterWithoutStrokesIsDataError) {
  EXPECT_THROW(flat("<cdl char='一' uni='4e00'><comp points='0,0 128,128'></comp></cdl>"), DataError);
}

TEST(CdlProperty, WrappingInAFrameMapsEveryBoxAffinely) {
  // Scale-equivariance: placing a character's body in a sub-frame applies
  // the frame's affine map to each flattened box.
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(0, 128);
  for (int trial = 0; trial < 50; ++trial) {
    int l = coord(rng), r = coord(rng), t = coord(rng), b = coord(rng);
    if (l > r) std::swap(l, r);
    if (t > b) std::swap(t, b);
    const std::string xml = "<cdl char='一' uni='4e00'><comp points='" + std::to_string(l) + "," +
                            std::to_string(t) + " " + std::to_string(r) + "," + std::to_string(b) +
                            "'><stroke type='h' points='10,30 100,90'/><stroke type='s' points='64,0 64,128'/>"
                            "</comp></cdl>";
    const auto s = flat(xml);
    const double sx = (r - l) / 128.0, sy = (b - t) / 128.0;
    EXPECT_NEAR(s.strokes[0].box.left, l + 10 * sx, 1e-9);
    EXPECT_NEAR(s.strokes[0].box.right, l + 100 * sx, 1e-9);
    EXPECT_NEAR(s.strokes[0].box.top, t + 30 * sy, 1e-9);
    EXPECT_NEAR(s.strokes[0].box.bottom, t + 90 * sy, 1e-9);
    EXPECT_NEAR(s.strokes[1].box.top, t, 1e-9);
    EXPECT_NEAR(s.strokes[1].box.bottom, b, 1e-9);
  }
}
