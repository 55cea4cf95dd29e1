#pragma once

#include <string>
#include <string_view>

namespace hanzi::utf8 {

/// Decodes UTF-8; throws DataError on invalid sequences.
std::u32string decode(std::string_view text);
std::string encode(char32_t cp);
std::string encode(std::u32string_view cps);

/// Decodes the first scalar of `text` starting at `pos` and advances `pos`.
char32_t next(std::string_view text, std::size_t& pos);

/// Uppercase hex without prefix, at least four digits: 4EAC, 201A2.
std::string hex(char32_t cp);

/// Accepts "U+4EAC", "u+4eac" or bare "4eac". Throws DataError otherwise.
char32_t parse_hex(std::string_view text);

/// When `text` is exactly one scalar, returns it; otherwise 0.
char32_t single(std::string_view text);

}  // namespace hanzi::utf8
