#include "docsieve/normalizer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <vector>

#include "docsieve/text.hpp"

namespace docsieve {
namespace {

using text::trim;
using text::trim_left;
using text::trim_right;

bool is_alnum(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Collapses space/tab runs and trims the right end; leading indentation is
// kept as-is when keep_indent is set, otherwise trimmed.
std::string clean_line(std::string_view line, bool keep_indent) {
  std::size_t lead = 0;
  while (lead < line.size() && (line[lead] == ' ' || line[lead] == '\t')) ++lead;
  std::string out = keep_indent ? std::string(line.substr(0, lead)) : std::string();
  out += text::collapse_spaces(trim_right(line.substr(lead)));
  return out;
}

// Drops leading/trailing blank lines and joins.
std::string join_trimmed(const std::vector<std::string>& lines) {
  std::size_t b = 0, e = lines.size();
  while (b < e && trim(lines[b]).empty()) ++b;
  while (e > b && trim(lines[e - 1]).empty()) --e;
  std::string out;
  for (std::size_t i = b; i < e; ++i) {
    if (i > b) out += '\n';
    out += lines[i];
  }
  return out;
}

std::string expand_tabs(std::string_view line) {
  std::string out;
  for (char c : line) {
    if (c == '\t') {
      out.append(8 - out.size() % 8, ' ');
    } else {
      out += c;
    }
  }
  return out;
}

// ---- Python ---------------------------------------------------------------

std::string_view strip_py_quotes(std::string_view s) {
  std::size_t p = 0;
  while (p < s.size() && p < 2 && std::isalpha(static_cast<unsigned char>(s[p]))) ++p;
  if (p >= s.size() || (s[p] != '"' && s[p] != '\'')) return s;
  char q = s[p];
  std::string_view body = s.substr(p);
  std::string triple(3, q);
  if (body.size() >= 6 && body.substr(0, 3) == triple && body.substr(body.size() - 3) == triple) {
    return body.substr(3, body.size() - 6);
  }
  if (body.size() >= 2 && body.back() == q) return body.substr(1, body.size() - 2);
  return s;
}

std::string normalize_python(std::string_view raw) {
  auto lines = text::split_lines(strip_py_quotes(raw));
  std::vector<std::string> out;
  std::size_t indent = std::string::npos;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::string l = expand_tabs(lines[i]);
    std::size_t lead = l.find_first_not_of(' ');
    if (lead != std::string::npos) indent = std::min(indent, lead);
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string l = expand_tabs(lines[i]);
    if (i == 0) {
      l = std::string(trim_left(l));
    } else if (indent != std::string::npos) {
      l = l.size() > indent ? l.substr(indent) : std::string(trim_left(l));
    }
    out.push_back(clean_line(l, true));
  }
  return join_trimmed(out);
}

// ---- Java / JavaScript ------------------------------------------------------

std::vector<std::string> strip_block_comment(std::string_view raw) {
  std::string_view body = trim(raw);
  bool delimited = body.substr(0, 2) == "/*";
  if (delimited) {
    std::size_t p = 2;
    while (p < body.size() && body[p] == '*') ++p;
    body.remove_prefix(p);
    if (body.size() >= 2 && body.substr(body.size() - 2) == "*/") body.remove_suffix(2);
    while (!body.empty() && body.back() == '*') body.remove_suffix(1);
  }
  std::vector<std::string> out;
  for (auto line : text::split_lines(body)) {
    std::string_view l = trim_left(line);
    if (delimited && !l.empty() && l[0] == '*') {
      l.remove_prefix(1);
      if (!l.empty() && (l[0] == ' ' || l[0] == '\t')) l.remove_prefix(1);
    }
    out.emplace_back(l);
  }
  return out;
}

// Paragraph unwrap: a break survives only before an `@` line or a blank line.
std::string unwrap(const std::vector<std::string>& lines) {
  std::vector<std::string> out;
  bool prev_blank = true;
  for (const auto& l : lines) {
    if (l.empty()) {
      if (!prev_blank) out.emplace_back();
      prev_blank = true;
      continue;
    }
    if (prev_blank || l[0] == '@') {
      out.push_back(l);
    } else {
      out.back() += ' ';
      out.back() += l;
    }
    prev_blank = false;
  }
  return join_trimmed(out);
}

std::string normalize_block(std::string_view raw) {
  auto lines = strip_block_comment(raw);
  std::string joined;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i) joined += '\n';
    joined += lines[i];
  }
  joined = unwrap_inline_tags(strip_html(joined));
  std::vector<std::string> cleaned;
  for (auto l : text::split_lines(joined)) cleaned.push_back(clean_line(l, false));
  return unwrap(cleaned);
}

// ---- C# -------------------------------------------------------------------

std::string normalize_csharp(std::string_view raw) {
  std::string body;
  auto lines = text::split_lines(trim(raw));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view l = trim_left(lines[i]);
    if (l.substr(0, 3) == "///") {
      l.remove_prefix(3);
      if (!l.empty() && (l[0] == ' ' || l[0] == '\t')) l.remove_prefix(1);
    }
    if (i) body += '\n';
    body += l;
  }
  std::string repaired = repair_xml(body);
  std::vector<std::string> out;
  for (auto l : text::split_lines(repaired)) out.push_back(clean_line(l, false));
  return join_trimmed(out);
}

// ---- Go -------------------------------------------------------------------

bool is_go_directive(std::string_view comment) {
  // `//go:noinline`, `//line f.go:1`, `//export F`, `//nolint:errcheck`
  std::string_view rest = comment.substr(2);
  if (rest.substr(0, 5) == "line " || rest.substr(0, 7) == "export " ||
      rest.substr(0, 7) == "extern ") {
    return true;
  }
  std::size_t k = 0;
  while (k < rest.size() && (std::islower(static_cast<unsigned char>(rest[k])) ||
                             std::isdigit(static_cast<unsigned char>(rest[k])))) {
    ++k;
  }
  return k > 0 && k + 1 < rest.size() && rest[k] == ':' &&
         std::isalnum(static_cast<unsigned char>(rest[k + 1]));
}

std::string normalize_go(std::string_view raw) {
  std::string_view body = trim(raw);
  std::vector<std::string> out;
  if (body.substr(0, 2) == "/*") {
    body.remove_prefix(2);
    if (body.size() >= 2 && body.substr(body.size() - 2) == "*/") body.remove_suffix(2);
    for (auto l : text::split_lines(body)) out.push_back(clean_line(l, false));
    return join_trimmed(out);
  }
  for (auto line : text::split_lines(body)) {
    std::string_view l = trim_left(line);
    if (l.substr(0, 2) == "//") {
      if (is_go_directive(l)) continue;
      l.remove_prefix(2);
      if (!l.empty() && (l[0] == ' ' || l[0] == '\t')) l.remove_prefix(1);
    }
    out.push_back(clean_line(l, false));
  }
  return join_trimmed(out);
}

// ---- XML repair -------------------------------------------------------------

constexpr std::array<std::string_view, 7> kKnownXml = {
    "summary", "param", "returns", "exception", "remarks", "value", "typeparam"};

bool known_xml(std::string_view lower_name) {
  return std::find(kKnownXml.begin(), kKnownXml.end(), lower_name) != kKnownXml.end();
}

struct TagMatch {
  std::size_t end = 0;  // one past '>'
  bool closing = false;
  bool self_closing = false;
  std::string_view name;
  std::string_view rest;  // attributes and optional '/', without '>'
};

// A tag starting at s[i] == '<', or nullopt when the '<' is literal text.
std::optional<TagMatch> match_tag(std::string_view s, std::size_t i) {
  TagMatch m;
  std::size_t j = i + 1;
  if (j < s.size() && s[j] == '/') {
    m.closing = true;
    ++j;
  }
  if (j >= s.size() || !std::isalpha(static_cast<unsigned char>(s[j]))) return std::nullopt;
  std::size_t nb = j;
  while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' ||
                          s[j] == '-' || s[j] == ':' || s[j] == '.')) {
    ++j;
  }
  m.name = s.substr(nb, j - nb);
  std::size_t rb = j;
  while (j < s.size() && s[j] != '>' && s[j] != '<') ++j;
  if (j >= s.size() || s[j] != '>') return std::nullopt;
  m.rest = s.substr(rb, j - rb);
  if (!m.rest.empty() && !text::is_space(m.rest[0]) && m.rest[0] != '\n' && m.rest[0] != '/') {
    return std::nullopt;
  }
  m.self_closing = !m.rest.empty() && m.rest.back() == '/';
  m.end = j + 1;
  return m;
}

std::size_t trailing_ws_start(const std::string& s) {
  std::size_t k = s.size();
  while (k > 0 && (text::is_space(s[k - 1]) || s[k - 1] == '\n')) --k;
  return k;
}

}  // namespace

std::string repair_xml(std::string_view body) {
  std::string out;
  std::optional<std::string> open;
  auto close_open = [&] {
    std::size_t k = trailing_ws_start(out);
    std::string tail = out.substr(k);
    out.resize(k);
    out += "</" + *open + ">" + tail;
    open.reset();
  };
  std::size_t i = 0;
  while (i < body.size()) {
    if (body[i] != '<') {
      out += body[i++];
      continue;
    }
    auto m = match_tag(body, i);
    if (!m) {
      out += body[i++];
      continue;
    }
    std::string lname = lower_ascii(m->name);
    if (!known_xml(lname)) {
      out.append(body.substr(i, m->end - i));
      i = m->end;
      continue;
    }
    if (m->closing) {
      if (open && *open == lname) {
        out += "</" + lname + ">";
        open.reset();
      }
      // Otherwise an orphan closer: dropped.
    } else {
      if (open) close_open();
      out += "<" + lname + std::string(m->rest) + ">";
      if (!m->self_closing) open = lname;
    }
    i = m->end;
  }
  if (open) close_open();
  return out;
}

namespace {

constexpr std::string_view kHtmlTags[] = {
    "a",  "b",  "blockquote", "br", "code", "dd", "div", "dl", "dt", "em", "h1", "h2", "h3",
    "h4", "h5", "h6", "hr", "i", "img", "li", "ol", "p", "pre", "small", "span", "strong",
    "sub", "sup", "table", "td", "th", "tr", "tt", "u", "ul"};

bool html_tag_name(std::string_view name) {
  return std::find(std::begin(kHtmlTags), std::end(kHtmlTags), name) != std::end(kHtmlTags);
}

}  // namespace

std::string strip_html(std::string_view s) {
  static constexpr std::string_view kProtectAfter = "@param ";
  std::string out;
  int brace_depth = 0;
  for (std::size_t i = 0; i < s.size();) {
    char c = s[i];
    if (c == '{') ++brace_depth;
    if (c == '}' && brace_depth > 0) --brace_depth;
    if (c != '<' || brace_depth > 0) {
      out += c;
      ++i;
      continue;
    }
    auto m = match_tag(s, i);
    // `List<String>`: an opener glued to an identifier is a generic argument.
    bool glued = m && !m->closing && !html_tag_name(m->name) && i > 0 && is_alnum(s[i - 1]);
    bool type_param = out.size() >= kProtectAfter.size() &&
                      std::string_view(out).substr(out.size() - kProtectAfter.size()) ==
                          kProtectAfter;
    if (!m || glued || type_param) {
      out += c;
      ++i;
      continue;
    }
    i = m->end;
  }
  return out;
}

std::string unwrap_inline_tags(std::string_view s) {
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '{' && i + 1 < s.size() && s[i + 1] == '@') {
      std::size_t j = i + 2;
      while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
      int depth = 1;
      std::size_t k = j;
      while (k < s.size() && depth > 0) {
        if (s[k] == '{') ++depth;
        if (s[k] == '}') --depth;
        if (depth > 0) ++k;
      }
      if (k < s.size() && j > i + 2) {
        out += trim(s.substr(j, k - j));
        i = k + 1;
        continue;
      }
    }
    out += s[i++];
  }
  return out;
}

std::string normalize(std::string_view raw, SourceLang lang) {
  switch (lang) {
    case SourceLang::Python:
      return normalize_python(raw);
    case SourceLang::Java:
    case SourceLang::JavaScript:
      return normalize_block(raw);
    case SourceLang::CSharp:
      return normalize_csharp(raw);
    case SourceLang::Go:
      return normalize_go(raw);
  }
  return std::string(raw);
}

}  // namespace docsieve
