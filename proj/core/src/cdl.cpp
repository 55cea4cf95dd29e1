#include "hanzigraph/cdl.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <limits>
#include <cmath>
#include <map>

#include "hanzigraph/error.hpp"
#include "hanzigraph/utf8.hpp"

namespace hanzi {
namespace {

constexpr std::array<std::string_view, kStrokeTypeCount> kAbbreviations = {
    "h",   "t",   "s",   "sg",  "p",    "wp",   "sp",   "d",   "n",    "dn",
    "pn",  "tn",  "tpn", "hz",  "hp",   "hg",   "sz",   "sw",  "st",   "pz",
    "pd",  "pg",  "wg",  "xg",  "hzz",  "hzw",  "hzt",  "hzg", "hxg",  "szz",
    "szp", "swg", "hzzz", "hzzp", "hzwg", "hpwg", "szzg", "hzzzg", "o"};

constexpr double kTolerance = 1e-6;

// Minimal markup reader for the CDL dialect. It understands elements,
// attributes, comments, processing instructions and whitespace text.
struct Element {
  std::string name;
  std::map<std::string, std::string> attributes;
  std::vector<Element> children;
  std::size_t line = 0;
};

class MarkupReader {
 public:
  explicit MarkupReader(std::string_view text) : text_(text) {}

  std::vector<Element> read_document() {
    std::vector<Element> roots;
    while (true) {
      skip_misc();
      if (at_end()) break;
      if (peek("</")) fail("unexpected closing tag");
      roots.push_back(read_element());
    }
    return roots;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, column()); }

  std::size_t column() const {
    const auto nl = text_.rfind('\n', pos_ == 0 ? 0 : pos_ - 1);
    return nl == std::string_view::npos || pos_ == 0 ? pos_ + 1 : pos_ - nl;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  bool peek(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i) {
      if (text_[pos_] == '\n') ++line_;
      ++pos_;
    }
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  void skip_until(std::string_view terminator, const char* what) {
    while (!at_end() && !peek(terminator)) advance();
    if (at_end()) fail(std::string("unterminated ") + what);
    advance(terminator.size());
  }

  // Whitespace, comments, declarations and processing instructions.
  void skip_misc() {
    while (true) {
      skip_space();
      if (peek("<!--")) {
        skip_until("-->", "comment");
      } else if (peek("<?")) {
        skip_until("?>", "processing instruction");
      } else if (peek("<!")) {
        skip_until(">", "declaration");
      } else {
        break;
      }
    }
    if (!at_end() && text_[pos_] != '<') fail("unexpected character data");
  }

  std::string read_name() {
    const std::size_t start = pos_;
    while (!at_end()) {
      const char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':' || c == '.') {
        advance();
      } else {
        break;
      }
    }
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string decode_entities(std::string_view raw) {
    std::string out;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] != '&') {
        out.push_back(raw[i]);
        continue;
      }
      const auto semi = raw.find(';', i);
      if (semi == std::string_view::npos) fail("unterminated entity reference");
      const std::string_view ent = raw.substr(i + 1, semi - i - 1);
      if (ent == "amp") out.push_back('&');
      else if (ent == "lt") out.push_back('<');
      else if (ent == "gt") out.push_back('>');
      else if (ent == "quot") out.push_back('"');
      else if (ent == "apos") out.push_back('\'');
      else if (ent.size() > 1 && ent[0] == '#') {
        unsigned value = 0;
        const bool is_hex = ent[1] == 'x' || ent[1] == 'X';
        const auto digits = ent.substr(is_hex ? 2 : 1);
        auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value, is_hex ? 16 : 10);
        if (digits.empty() || ec != std::errc{} || p != digits.data() + digits.size() || value > 0x10FFFF) {
          fail("bad character reference &" + std::string(ent) + ";");
        }
        out += utf8::encode(static_cast<char32_t>(value));
      } else {
        fail("unknown entity &" + std::string(ent) + ";");
      }
      i = semi;
    }
    return out;
  }

  Element read_element() {
    Element el;
    el.line = line_;
    if (!peek("<")) fail("expected '<'");
    advance();
    el.name = read_name();
    while (true) {
      skip_space();
      if (at_end()) fail("unterminated start tag <" + el.name + ">");
      if (peek("/>")) {
        advance(2);
        return el;
      }
      if (peek(">")) {
        advance();
        break;
      }
      const std::string key = read_name();
      skip_space();
      if (!peek("=")) fail("expected '=' after attribute '" + key + "'");
      advance();
      skip_space();
      if (at_end() || (text_[pos_] != '\'' && text_[pos_] != '"')) fail("expected quoted value for '" + key + "'");
      const char quote = text_[pos_];
      advance();
      const std::size_t start = pos_;
      while (!at_end() && text_[pos_] != quote) {
        if (text_[pos_] == '<') fail("'<' inside attribute value");
        advance();
      }
      if (at_end()) fail("unterminated attribute value for '" + key + "'");
      std::string value = decode_entities(text_.substr(start, pos_ - start));
      advance();
      if (!el.attributes.emplace(key, std::move(value)).second) fail("duplicate attribute '" + key + "'");
    }
    while (true) {
      skip_misc();
      if (at_end()) fail("missing </" + el.name + ">");
      if (peek("</")) {
        advance(2);
        const std::string closing = read_name();
        if (closing != el.name) fail("mismatched </" + closing + ">, expected </" + el.name + ">");
        skip_space();
        if (!peek(">")) fail("expected '>'");
        advance();
        return el;
      }
      el.children.push_back(read_element());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

std::vector<Point> parse_points(const std::string& value, std::size_t line) {
  std::vector<Point> points;
  std::size_t i = 0;
  auto number = [&](double& out) {
    const char* first = value.data() + i;
    const char* last = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr == first) throw ParseError("malformed points '" + value + "'", line);
    i = static_cast<std::size_t>(ptr - value.data());
  };
  while (true) {
    while (i < value.size() && std::isspace(static_cast<unsigned char>(value[i]))) ++i;
    if (i == value.size()) break;
    Point p;
    number(p.x);
    if (i >= value.size() || value[i] != ',') throw ParseError("malformed points '" + value + "'", line);
    ++i;
    number(p.y);
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw ParseError("non-finite point in '" + value + "'", line);
    points.push_back(p);
  }
  return points;
}

const std::string& required(const Element& el, const std::string& key) {
  const auto it = el.attributes.find(key);
  if (it == el.attributes.end()) {
    throw ParseError("<" + el.name + "> is missing the '" + key + "' attribute", el.line);
  }
  return it->second;
}

std::optional<std::string> optional_attr(const Element& el, const std::string& key) {
  const auto it = el.attributes.find(key);
  if (it == el.attributes.end()) return std::nullopt;
  return it->second;
}

std::vector<RawNode> convert_children(const Element& parent);

RawStroke convert_stroke(const Element& el) {
  if (!el.children.empty()) throw ParseError("<stroke> must not have children", el.line);
  RawStroke stroke;
  stroke.line = el.line;
  const std::string& type = required(el, "type");
  const auto parsed = stroke_type_from(type);
  if (!parsed) throw ParseError("unknown stroke type '" + type + "'", el.line);
  stroke.type = *parsed;
  stroke.points = parse_points(required(el, "points"), el.line);
  if (stroke.points.size() < 2) throw ParseError("stroke needs at least two points", el.line);
  stroke.head = optional_attr(el, "head");
  stroke.tail = optional_attr(el, "tail");
  return stroke;
}

RawComponent convert_component(const Element& el) {
  RawComponent comp;
  comp.line = el.line;
  const auto points = parse_points(required(el, "points"), el.line);
  if (points.size() != 2) throw ParseError("component box needs exactly two points", el.line);
  comp.frame = {points[0].x, points[0].y, points[1].x, points[1].y};
  comp.char_attr = optional_attr(el, "char");
  comp.uni_attr = optional_attr(el, "uni");
  comp.children = convert_children(el);
  return comp;
}

std::vector<RawNode> convert_children(const Element& parent) {
  std::vector<RawNode> nodes;
  for (const Element& child : parent.children) {
    if (child.name == "stroke") {
      nodes.emplace_back(convert_stroke(child));
    } else if (child.name == "comp") {
      nodes.emplace_back(convert_component(child));
    } else {
      throw ParseError("unexpected <" + child.name + "> inside <" + parent.name + ">", child.line);
    }
  }
  return nodes;
}

RawCharDescription convert_cdl(const Element& el) {
  RawCharDescription desc;
  desc.line = el.line;
  const auto ch = optional_attr(el, "char");
  const auto uni = optional_attr(el, "uni");
  if (!ch && !uni) throw ParseError("<cdl> needs a 'char' or 'uni' attribute", el.line);
  char32_t from_char = 0;
  char32_t from_uni = 0;
  if (ch) {
    from_char = utf8::single(*ch);
    if (from_char == 0) throw ParseError("'char' must hold exactly one character", el.line);
  }
  if (uni) {
    try {
      from_uni = utf8::parse_hex(*uni);
    } catch (const DataError& e) {
      throw ParseError(e.what(), el.line);
    }
  }
  if (ch && uni && from_char != from_uni) {
    throw ParseError("char '" + *ch + "' and uni '" + *uni + "' disagree", el.line);
  }
  desc.ch = ch ? from_char : from_uni;
  desc.uni = uni ? *uni : utf8::hex(desc.ch);
  std::transform(desc.uni.begin(), desc.uni.end(), desc.uni.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  desc.children = convert_children(el);
  return desc;
}

void collect_cdl(const Element& el, std::vector<RawCharDescription>& out, bool top_level) {
  if (el.name == "cdl") {
    out.push_back(convert_cdl(el));
  } else if (el.name == "comp" || el.name == "stroke" || !top_level) {
    throw ParseError("<" + el.name + "> outside of a <cdl> element", el.line);
  } else {
    for (const Element& child : el.children) collect_cdl(child, out, false);
  }
}

// Affine map from a frame's local 0-128 square into absolute coordinates.
struct Frame {
  double x0 = 0, y0 = 0, sx = 1, sy = 1;

  Point apply(Point p) const { return {x0 + p.x * sx, y0 + p.y * sy}; }

  Frame child(const BoundingBox& box) const {
    const Point tl = apply({box.left, box.top});
    return {tl.x, tl.y, sx * (box.right - box.left) / kSquare, sy * (box.bottom - box.top) / kSquare};
  }
};

double clamp_to_square(double v, std::size_t line) {
  if (v < -kTolerance || v > kSquare + kTolerance) {
    throw DataError("line " + std::to_string(line) + ": stroke coordinate " + std::to_string(v) +
                    " falls outside the 0-128 square");
  }
  return std::clamp(v, 0.0, kSquare);
}

void flatten_nodes(const std::vector<RawNode>& nodes, const Frame& frame, StrokeSet& out) {
  for (const RawNode& node : nodes) {
    if (const auto* stroke = std::get_if<RawStroke>(&node)) {
      BoundingBox box{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
                      -std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
      for (const Point& local : stroke->points) {
        const Point p = frame.apply(local);
        box.left = std::min(box.left, p.x);
        box.right = std::max(box.right, p.x);
        box.top = std::min(box.top, p.y);
        box.bottom = std::max(box.bottom, p.y);
      }
      box.left = clamp_to_square(box.left, stroke->line);
      box.right = clamp_to_square(box.right, stroke->line);
      box.top = clamp_to_square(box.top, stroke->line);
      box.bottom = clamp_to_square(box.bottom, stroke->line);
      out.strokes.push_back({stroke->type, box, stroke->head, stroke->tail, out.strokes.size()});
    } else {
      const auto& comp = std::get<RawComponent>(node);
      if (comp.frame.left > comp.frame.right || comp.frame.top > comp.frame.bottom) {
        throw DataError("line " + std::to_string(comp.line) + ": component box is inverted");
      }
      flatten_nodes(comp.children, frame.child(comp.frame), out);
    }
  }
}

}  // namespace

std::string_view abbreviation(StrokeType type) noexcept {
  return kAbbreviations[static_cast<std::size_t>(type)];
}

std::optional<StrokeType> stroke_type_from(std::string_view abbr) noexcept {
  const auto it = std::find(kAbbreviations.begin(), kAbbreviations.end(), abbr);
  if (it == kAbbreviations.end()) return std::nullopt;
  return static_cast<StrokeType>(it - kAbbreviations.begin());
}

std::vector<RawCharDescription> parse_cdl_document(std::string_view text) {
  const auto roots = MarkupReader(text).read_document();
  std::vector<RawCharDescription> out;
  for (const Element& root : roots) collect_cdl(root, out, true);
  if (out.empty()) throw ParseError("document contains no <cdl> element", 1);
  return out;
}

StrokeSet flatten(const RawCharDescription& desc) {
  StrokeSet out;
  out.ch = desc.ch;
  flatten_nodes(desc.children, Frame{}, out);
  if (out.strokes.empty()) throw DataError("character U+" + utf8::hex(desc.ch) + " has no strokes");
  return out;
}

}  // namespace hanzi
