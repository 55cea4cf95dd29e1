#include "hanzigraph/utf8.hpp"

#include <charconv>
#include <cstdio>

#include "hanzigraph/error.hpp"

namespace hanzi {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error("line " + std::to_string(line) +
            (column ? ", column " + std::to_string(column) : std::string{}) + ": " + message),
      line_(line),
      column_(column) {}

namespace utf8 {

char32_t next(std::string_view text, std::size_t& pos) {
  auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text[i]); };
  const unsigned char lead = byte(pos);
  std::size_t len = 0;
  char32_t cp = 0;
  if (lead < 0x80) {
    ++pos;
    return lead;
  } else if ((lead & 0xE0) == 0xC0) {
    len = 2;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4;
    cp = lead & 0x07;
  } else {
    throw DataError("invalid UTF-8 lead byte at offset " + std::to_string(pos));
  }
  if (pos + len > text.size()) throw DataError("truncated UTF-8 sequence at offset " + std::to_string(pos));
  for (std::size_t i = 1; i < len; ++i) {
    const unsigned char b = byte(pos + i);
    if ((b & 0xC0) != 0x80) throw DataError("invalid UTF-8 continuation at offset " + std::to_string(pos + i));
    cp = (cp << 6) | (b & 0x3F);
  }
  static constexpr char32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    throw DataError("invalid UTF-8 scalar at offset " + std::to_string(pos));
  }
  pos += len;
  return cp;
}

std::u32string decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) out.push_back(next(text, pos));
  return out;
}

std::string encode(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

std::string encode(std::u32string_view cps) {
  std::string out;
  for (char32_t cp : cps) out += encode(cp);
  return out;
}

std::string hex(char32_t cp) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04X", static_cast<unsigned>(cp));
  return buf;
}

char32_t parse_hex(std::string_view text) {
  if (text.size() > 2 && (text[0] == 'U' || text[0] == 'u') && text[1] == '+') text.remove_prefix(2);
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, 16);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || value > 0x10FFFF) {
    throw DataError("invalid hex codepoint '" + std::string(text) + "'");
  }
  return static_cast<char32_t>(value);
}

char32_t single(std::string_view text) {
  if (text.empty()) return 0;
  std::size_t pos = 0;
  char32_t cp = 0;
  try {
    cp = next(text, pos);
  } catch (const DataError&) {
    return 0;
  }
  return pos == text.size() ? cp : 0;
}

}  // namespace utf8
}  // namespace hanzi
