#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hanzi {

/// The 39 calligraphic stroke types of the Character Description Language.
enum class StrokeType : std::uint8_t {
  h, t, s, sg, p, wp, sp, d, n, dn, pn, tn, tpn, hz, hp, hg, sz, sw, st, pz,
  pd, pg, wg, xg, hzz, hzw, hzt, hzg, hxg, szz, szp, swg, hzzz, hzzp, hzwg,
  hpwg, szzg, hzzzg, o
};

inline constexpr std::size_t kStrokeTypeCount = 39;

std::string_view abbreviation(StrokeType type) noexcept;
std::optional<StrokeType> stroke_type_from(std::string_view abbreviation) noexcept;

/// Side length of the ideographic square.
inline constexpr double kSquare = 128.0;

/// Axis-aligned box in square units; y grows downward.
struct BoundingBox {
  double left = 0;
  double top = 0;
  double right = 0;
  double bottom = 0;

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

struct StrokeInstance {
  StrokeType type = StrokeType::h;
  BoundingBox box;
  std::optional<std::string> head;
  std::optional<std::string> tail;
  std::size_t doc_index = 0;

  friend bool operator==(const StrokeInstance&, const StrokeInstance&) = default;
};

/// A character's strokes in CDL document order.
struct StrokeSet {
  char32_t ch = 0;
  std::vector<StrokeInstance> strokes;

  friend bool operator==(const StrokeSet&, const StrokeSet&) = default;
};

struct Point {
  double x = 0;
  double y = 0;
};

struct RawStroke {
  StrokeType type = StrokeType::h;
  std::vector<Point> points;  // local frame
  std::optional<std::string> head;
  std::optional<std::string> tail;
  std::size_t line = 0;
};

struct RawComponent;
using RawNode = std::variant<RawStroke, RawComponent>;

/// A `comp` element: `frame` is its box in the parent's 0-128 frame, and
/// its children live in their own 0-128 frame.
struct RawComponent {
  BoundingBox frame;
  std::optional<std::string> char_attr;
  std::optional<std::string> uni_attr;
  std::vector<RawNode> children;
  std::size_t line = 0;
};

struct RawCharDescription {
  char32_t ch = 0;
  std::string uni;  // lowercase hex as written
  std::vector<RawNode> children;
  std::size_t line = 0;
};

/// Parses the open-element CDL dialect: `cdl` elements (optionally wrapped
/// in a container element) holding nested `comp` and `stroke` elements.
/// Throws ParseError carrying the 1-based line of the offending markup.
std::vector<RawCharDescription> parse_cdl_document(std::string_view text);

/// Composes the component frames down to every stroke and returns absolute
/// boxes (hull of the stroke's key points) in the 0-128 square.
/// Throws DataError on inverted component boxes or out-of-square results.
StrokeSet flatten(const RawCharDescription& desc);

}  // namespace hanzi
