#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// Small UTF-8 and whitespace helpers shared by the modules.
namespace docsieve::text {

bool is_valid_utf8(std::string_view s);

// Number of code points; invalid bytes count as one each.
std::size_t utf8_length(std::string_view s);

// Decodes the code point starting at s[i] and advances i. Invalid sequences
// yield U+FFFD and advance by one byte.
char32_t next_codepoint(std::string_view s, std::size_t& i);

void append_utf8(std::string& out, char32_t cp);

enum class Script { None, Latin, Cyrillic, Other };

// Script of a letter; None for anything that is not a letter.
Script script_of(char32_t cp);

char32_t to_lower(char32_t cp);

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }
inline bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}
inline bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

std::string_view trim(std::string_view s);
std::string_view trim_left(std::string_view s);
std::string_view trim_right(std::string_view s);

// Splits on '\n'; a trailing '\r' on each line is dropped.
std::vector<std::string_view> split_lines(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Collapses runs of spaces and tabs into one space.
std::string collapse_spaces(std::string_view s);

// Collapses all whitespace (including newlines) into single spaces and trims.
std::string squash_whitespace(std::string_view s);

bool starts_with_ci(std::string_view s, std::string_view prefix);

}  // namespace docsieve::text
