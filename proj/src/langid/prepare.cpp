#include <string>
#include <vector>

#include "docsieve/langid.hpp"
#include "docsieve/text.hpp"

namespace docsieve {
namespace {

bool ascii_lower(char c) { return c >= 'a' && c <= 'z'; }
bool ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool ascii_alpha(char c) { return ascii_lower(c) || ascii_upper(c); }

std::string_view first_paragraph(std::string_view s) {
  std::string_view t = text::trim(s);
  std::size_t pos = 0;
  while (pos < t.size()) {
    std::size_t nl = t.find('\n', pos);
    if (nl == std::string_view::npos) break;
    std::size_t next = t.find('\n', nl + 1);
    std::string_view between = t.substr(nl + 1, next == std::string_view::npos ? t.npos : next - nl - 1);
    if (next != std::string_view::npos && text::trim(between).empty()) return t.substr(0, nl);
    pos = nl + 1;
  }
  return t;
}

// Drops markup that is never prose: <tags>, {@inline tags}, `code spans`.
std::string strip_markup(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    char c = s[i];
    if (c == '<' && i + 1 < s.size() && (ascii_alpha(s[i + 1]) || s[i + 1] == '/')) {
      std::size_t close = s.find('>', i);
      if (close != std::string_view::npos) {
        out += ' ';
        i = close + 1;
        continue;
      }
    }
    if (c == '{' && i + 1 < s.size() && s[i + 1] == '@') {
      std::size_t close = s.find('}', i);
      if (close != std::string_view::npos) {
        out += ' ';
        i = close + 1;
        continue;
      }
    }
    if (c == '`') {
      std::size_t close = s.find('`', i + 1);
      if (close != std::string_view::npos) {
        out += ' ';
        i = close + 1;
        continue;
      }
    }
    out += c;
    ++i;
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (text::is_space(s[i]) || s[i] == '\n')) ++i;
    std::size_t b = i;
    while (i < s.size() && !text::is_space(s[i]) && s[i] != '\n') ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

std::string keep_prose(std::string_view s) {
  std::string plain = strip_markup(s);
  std::string out;
  for (auto tok : tokens(plain)) {
    if (tok.front() == '@' || is_code_like(tok)) continue;
    if (!out.empty()) out += ' ';
    out.append(tok);
  }
  return out;
}

}  // namespace

bool is_code_like(std::string_view tok) {
  constexpr std::string_view lead = "([\"'";
  constexpr std::string_view trail = ".,;:!?)]\"'";
  while (!tok.empty() && lead.find(tok.front()) != std::string_view::npos) tok.remove_prefix(1);
  while (!tok.empty() && trail.find(tok.back()) != std::string_view::npos) tok.remove_suffix(1);
  if (tok.empty()) return false;
  if (tok.find("::") != std::string_view::npos) return true;
  if (tok.find('(') != std::string_view::npos) return true;
  if (tok.find('.') != std::string_view::npos) return true;
  if (tok.find('_') != std::string_view::npos) return true;
  for (std::size_t i = 0; i + 1 < tok.size(); ++i) {
    if (ascii_lower(tok[i]) && ascii_upper(tok[i + 1])) return true;
  }
  return false;
}

std::string prepare_detection_text(const std::optional<ParsedDoc>& doc,
                                   std::string_view normalized, SourceLang lang) {
  if (lang == SourceLang::Go) {
    auto toks = tokens(normalized);
    std::string rest;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      if (!rest.empty()) rest += ' ';
      rest.append(toks[i]);
    }
    return keep_prose(rest);
  }
  if (doc) return keep_prose(doc->short_desc);
  return keep_prose(first_paragraph(normalized));
}

}  // namespace docsieve
