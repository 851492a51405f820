#include "docsieve/docparse.hpp"

#include <algorithm>
#include <cctype>

#include "docsieve/text.hpp"

namespace docsieve {
namespace {

using text::squash_whitespace;
using text::trim;

struct NotParseable {
  std::string why;
};

std::size_t indent_of(std::string_view line) {
  std::size_t k = 0;
  while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
  return k;
}

// Paragraphs (blank-line separated) with lines joined by single spaces.
std::vector<std::string> paragraphs(const std::vector<std::string_view>& lines) {
  std::vector<std::string> out;
  std::string cur;
  for (auto l : lines) {
    if (trim(l).empty()) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
      continue;
    }
    if (!cur.empty()) cur += ' ';
    cur += squash_whitespace(l);
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

void set_descriptions(ParsedDoc& doc, const std::vector<std::string_view>& prose) {
  auto paras = paragraphs(prose);
  if (paras.empty()) return;
  doc.short_desc = paras[0];
  if (paras.size() > 1) {
    std::string long_desc;
    for (std::size_t i = 1; i < paras.size(); ++i) {
      if (i > 1) long_desc += "\n\n";
      long_desc += paras[i];
    }
    doc.long_desc = long_desc;
  }
}

std::string bare_name(std::string_view name) {
  while (!name.empty() && name.front() == '*') name.remove_prefix(1);
  if (name.substr(0, 3) == "...") name.remove_prefix(3);
  return std::string(name);
}

void add_param(ParsedDoc& doc, DocParam p, std::vector<std::string>& warnings) {
  auto it = std::find_if(doc.params.begin(), doc.params.end(),
                         [&](const DocParam& q) { return q.name == p.name; });
  if (it != doc.params.end()) {
    warnings.push_back("duplicate parameter '" + p.name + "': last occurrence wins");
    doc.params.erase(it);
  }
  doc.params.push_back(std::move(p));
}

void add_raises(ParsedDoc& doc, DocRaises r) { doc.raises.push_back(std::move(r)); }

std::optional<std::string> nonempty(std::string_view s) {
  std::string t = squash_whitespace(s);
  if (t.empty()) return std::nullopt;
  return t;
}

// ---- GoogleDoc ---------------------------------------------------------------

enum class Section { None, Args, Returns, Raises, Other };

Section section_of(std::string_view trimmed) {
  if (trimmed == "Args:" || trimmed == "Arguments:") return Section::Args;
  if (trimmed == "Returns:" || trimmed == "Yields:") return Section::Returns;
  if (trimmed == "Raises:") return Section::Raises;
  return Section::None;
}

bool is_ident_start_char(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}

// `name (type): desc` / `name: desc`
DocParam parse_google_arg(std::string_view entry) {
  std::string_view s = trim(entry);
  std::size_t k = 0;
  while (k < s.size() && s[k] == '*') ++k;
  std::size_t nb = k;
  if (k >= s.size() || !is_ident_start_char(s[k])) {
    throw NotParseable{"Args entry lacks a name: '" + std::string(s) + "'"};
  }
  while (k < s.size() && (text::is_ident_char(s[k]) || s[k] == '.')) ++k;
  DocParam p;
  p.name = bare_name(s.substr(nb, k - nb));
  while (k < s.size() && s[k] == ' ') ++k;
  if (k < s.size() && s[k] == '(') {
    int depth = 0;
    std::size_t tb = k + 1;
    for (; k < s.size(); ++k) {
      if (s[k] == '(') ++depth;
      if (s[k] == ')' && --depth == 0) break;
    }
    if (k >= s.size()) throw NotParseable{"unclosed type in Args entry '" + p.name + "'"};
    p.type_text = nonempty(s.substr(tb, k - tb));
    ++k;
    while (k < s.size() && s[k] == ' ') ++k;
  }
  if (k >= s.size() || s[k] != ':') {
    throw NotParseable{"Args entry '" + p.name + "' lacks ':'"};
  }
  p.description = squash_whitespace(s.substr(k + 1));
  return p;
}

DocReturns parse_google_returns(std::string_view body) {
  std::string s = squash_whitespace(body);
  DocReturns r;
  std::size_t colon = s.find(':');
  if (colon != std::string::npos && colon > 0) {
    std::string_view prefix = std::string_view(s).substr(0, colon);
    bool typed = prefix.find(' ') == std::string_view::npos || prefix.back() == ']';
    if (typed) {
      r.type_text = std::string(prefix);
      r.description = std::string(trim(std::string_view(s).substr(colon + 1)));
      return r;
    }
  }
  r.description = s;
  return r;
}

DocRaises parse_google_raises(std::string_view entry) {
  std::string s = squash_whitespace(entry);
  std::size_t colon = s.find(':');
  std::size_t k = 0;
  while (k < s.size() && (text::is_ident_char(s[k]) || s[k] == '.')) ++k;
  if (k == 0 || colon == std::string::npos || trim(std::string_view(s).substr(k, colon - k)) != "") {
    throw NotParseable{"Raises entry lacks 'Type:': '" + s + "'"};
  }
  return {s.substr(0, k), std::string(trim(std::string_view(s).substr(colon + 1)))};
}

ParsedDoc parse_google(std::string_view text, std::vector<std::string>& warnings) {
  ParsedDoc doc;
  doc.style = DocStyle::GoogleDoc;
  auto lines = text::split_lines(text);
  std::vector<std::string_view> prose;
  std::size_t i = 0;
  while (i < lines.size()) {
    Section sec = section_of(trim(lines[i]));
    if (sec == Section::None) {
      prose.push_back(lines[i++]);
      continue;
    }
    std::size_t header_indent = indent_of(lines[i]);
    ++i;
    // Section body: lines indented deeper than the header (blank lines inside).
    std::vector<std::string_view> body;
    while (i < lines.size()) {
      if (trim(lines[i]).empty()) {
        body.push_back(lines[i++]);
        continue;
      }
      if (indent_of(lines[i]) <= header_indent) break;
      body.push_back(lines[i++]);
    }
    while (!body.empty() && trim(body.back()).empty()) body.pop_back();

    // Group into entries by the first entry's indentation.
    std::vector<std::string> entries;
    std::size_t entry_indent = std::string::npos;
    for (auto l : body) {
      if (trim(l).empty()) continue;
      std::size_t ind = indent_of(l);
      if (entry_indent == std::string::npos) entry_indent = ind;
      if (ind <= entry_indent || entries.empty()) {
        entries.emplace_back(trim(l));
      } else {
        entries.back() += ' ';
        entries.back() += trim(l);
      }
    }
    switch (sec) {
      case Section::Args:
        for (const auto& e : entries) add_param(doc, parse_google_arg(e), warnings);
        break;
      case Section::Returns: {
        std::string all;
        for (const auto& e : entries) all += (all.empty() ? "" : " ") + e;
        if (doc.returns) warnings.push_back("repeated Returns section: last one wins");
        doc.returns = parse_google_returns(all);
        break;
      }
      case Section::Raises:
        for (const auto& e : entries) add_raises(doc, parse_google_raises(e));
        break;
      default:
        break;
    }
  }
  set_descriptions(doc, prose);
  return doc;
}

// ---- Tag-based styles (JavaDoc, JSDoc) ----------------------------------------

struct TagBlock {
  std::string tag;   // without '@'
  std::string body;  // folded
};

// Splits into prose lines and `@tag` blocks; continuation lines fold in.
std::vector<TagBlock> tag_blocks(std::string_view text, std::vector<std::string_view>& prose) {
  std::vector<TagBlock> blocks;
  for (auto line : text::split_lines(text)) {
    std::string_view t = trim(line);
    if (!t.empty() && t[0] == '@' && t.size() > 1 && std::isalpha(static_cast<unsigned char>(t[1]))) {
      std::size_t k = 1;
      while (k < t.size() && std::isalpha(static_cast<unsigned char>(t[k]))) ++k;
      blocks.push_back({std::string(t.substr(1, k - 1)), std::string(trim(t.substr(k)))});
      continue;
    }
    if (blocks.empty()) {
      prose.push_back(line);
    } else if (!t.empty()) {
      if (!blocks.back().body.empty()) blocks.back().body += ' ';
      blocks.back().body += t;
    }
  }
  for (auto& b : blocks) b.body = squash_whitespace(b.body);
  return blocks;
}

std::pair<std::string, std::string> first_word(std::string_view s) {
  s = trim(s);
  std::size_t sp = s.find(' ');
  if (sp == std::string_view::npos) return {std::string(s), ""};
  return {std::string(s.substr(0, sp)), std::string(trim(s.substr(sp + 1)))};
}

ParsedDoc parse_javadoc(std::string_view text, std::vector<std::string>& warnings) {
  ParsedDoc doc;
  doc.style = DocStyle::JavaDoc;
  std::vector<std::string_view> prose;
  for (const auto& b : tag_blocks(text, prose)) {
    if (b.tag == "param") {
      auto [name, desc] = first_word(b.body);
      if (name.empty()) throw NotParseable{"@param without a name"};
      if (name.front() == '<') continue;  // type parameter
      add_param(doc, DocParam{bare_name(name), std::nullopt, desc}, warnings);
    } else if (b.tag == "return" || b.tag == "returns") {
      if (doc.returns) warnings.push_back("repeated @return: last one wins");
      doc.returns = DocReturns{std::nullopt, b.body};
    } else if (b.tag == "throws" || b.tag == "exception") {
      auto [type, desc] = first_word(b.body);
      if (type.empty()) throw NotParseable{"@" + b.tag + " without an exception type"};
      add_raises(doc, DocRaises{type, desc});
    }
  }
  set_descriptions(doc, prose);
  return doc;
}

// Leading `{...}` with balanced braces; returns the inner text and advances s.
std::optional<std::string> take_braced(std::string_view& s) {
  s = trim(s);
  if (s.empty() || s[0] != '{') return std::nullopt;
  int depth = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '{') ++depth;
    if (s[k] == '}' && --depth == 0) {
      std::string inner(trim(s.substr(1, k - 1)));
      s = trim(s.substr(k + 1));
      return inner;
    }
  }
  throw NotParseable{"unbalanced braces in type expression"};
}

ParsedDoc parse_jsdoc(std::string_view text, std::vector<std::string>& warnings) {
  ParsedDoc doc;
  doc.style = DocStyle::JSDoc;
  std::vector<std::string_view> prose;
  for (const auto& b : tag_blocks(text, prose)) {
    std::string_view s = b.body;
    if (b.tag == "param" || b.tag == "arg" || b.tag == "argument") {
      auto type = take_braced(s);
      std::string name;
      if (!s.empty() && s[0] == '[') {
        std::size_t close = s.find(']');
        if (close == std::string_view::npos) throw NotParseable{"unclosed [optional] name"};
        std::string_view inner = s.substr(1, close - 1);
        name = std::string(trim(inner.substr(0, inner.find('='))));
        s = trim(s.substr(close + 1));
      } else {
        auto [w, rest] = first_word(s);
        name = w;
        s = std::string_view(b.body).substr(b.body.size() - rest.size());
      }
      if (name.empty()) throw NotParseable{"@" + b.tag + " without a name"};
      if (name.find('.') != std::string::npos) {
        warnings.push_back("nested property '" + name + "' ignored");
        continue;
      }
      s = trim(s);
      if (!s.empty() && s[0] == '-' && (s.size() == 1 || s[1] == ' ')) s = trim(s.substr(1));
      DocParam p{bare_name(name), std::nullopt, std::string(s)};
      if (type && !type->empty()) p.type_text = *type;
      add_param(doc, std::move(p), warnings);
    } else if (b.tag == "return" || b.tag == "returns") {
      auto type = take_braced(s);
      if (doc.returns) warnings.push_back("repeated @returns: last one wins");
      DocReturns r{std::nullopt, std::string(trim(s))};
      if (type && !type->empty()) r.type_text = *type;
      doc.returns = r;
    } else if (b.tag == "throws" || b.tag == "exception") {
      auto type = take_braced(s);
      add_raises(doc, DocRaises{type.value_or(""), std::string(trim(s))});
    }
  }
  set_descriptions(doc, prose);
  return doc;
}

// ---- XmlDoc -------------------------------------------------------------------

constexpr std::string_view kXmlKnown[] = {"summary", "param",     "returns", "exception",
                                          "remarks", "typeparam", "value"};

struct XmlTag {
  std::size_t begin = 0, end = 0;
  bool closing = false, self_closing = false;
  std::string name;
  std::string attrs;
};

std::optional<XmlTag> xml_tag_at(std::string_view s, std::size_t i) {
  XmlTag t;
  t.begin = i;
  std::size_t j = i + 1;
  if (j < s.size() && s[j] == '/') {
    t.closing = true;
    ++j;
  }
  std::size_t nb = j;
  while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
  if (j == nb) return std::nullopt;
  t.name = std::string(s.substr(nb, j - nb));
  std::size_t ab = j;
  while (j < s.size() && s[j] != '>' && s[j] != '<') ++j;
  if (j >= s.size() || s[j] != '>') return std::nullopt;
  std::string_view attrs = s.substr(ab, j - ab);
  if (!attrs.empty() && !text::is_space(attrs[0]) && attrs[0] != '/' && attrs[0] != '\n') {
    return std::nullopt;
  }
  if (!attrs.empty() && attrs.back() == '/') {
    t.self_closing = true;
    attrs.remove_suffix(1);
  }
  t.attrs = std::string(attrs);
  t.end = j + 1;
  return t;
}

bool xml_known(const std::string& name) {
  return std::find(std::begin(kXmlKnown), std::end(kXmlKnown), name) != std::end(kXmlKnown);
}

std::optional<std::string> xml_attr(const std::string& attrs, std::string_view key) {
  std::size_t pos = 0;
  while ((pos = attrs.find(key, pos)) != std::string::npos) {
    bool boundary = pos == 0 || text::is_space(attrs[pos - 1]) || attrs[pos - 1] == '\n';
    std::size_t k = pos + key.size();
    while (k < attrs.size() && attrs[k] == ' ') ++k;
    if (boundary && k < attrs.size() && attrs[k] == '=') {
      ++k;
      while (k < attrs.size() && attrs[k] == ' ') ++k;
      if (k < attrs.size() && (attrs[k] == '"' || attrs[k] == '\'')) {
        std::size_t close = attrs.find(attrs[k], k + 1);
        if (close == std::string::npos) return std::nullopt;
        return attrs.substr(k + 1, close - k - 1);
      }
    }
    pos += key.size();
  }
  return std::nullopt;
}

ParsedDoc parse_xmldoc(std::string_view text, std::vector<std::string>& warnings) {
  ParsedDoc doc;
  doc.style = DocStyle::XmlDoc;
  bool any_known = false;
  std::optional<XmlTag> open;
  std::size_t content_begin = 0;
  std::string outside;
  for (std::size_t i = 0; i < text.size();) {
    std::optional<XmlTag> t;
    if (text[i] == '<') t = xml_tag_at(text, i);
    if (!t || !xml_known(t->name)) {
      std::size_t next = t ? t->end : i + 1;
      if (!open) outside.append(text.substr(i, next - i));
      i = next;
      continue;
    }
    any_known = true;
    if (t->closing) {
      if (!open || open->name != t->name) {
        throw NotParseable{"unexpected </" + t->name + ">"};
      }
      std::string content = squash_whitespace(text.substr(content_begin, t->begin - content_begin));
      const std::string& n = open->name;
      if (n == "summary") {
        doc.short_desc = content;
      } else if (n == "remarks") {
        if (!content.empty()) doc.long_desc = content;
      } else if (n == "param") {
        auto name = xml_attr(open->attrs, "name");
        if (!name || trim(*name).empty()) throw NotParseable{"<param> without a name"};
        add_param(doc, DocParam{bare_name(trim(*name)), std::nullopt, content}, warnings);
      } else if (n == "returns") {
        doc.returns = DocReturns{std::nullopt, content};
      } else if (n == "exception") {
        auto cref = xml_attr(open->attrs, "cref");
        if (!cref || trim(*cref).empty()) throw NotParseable{"<exception> without a cref"};
        add_raises(doc, DocRaises{std::string(trim(*cref)), content});
      }
      open.reset();
      i = t->end;
      continue;
    }
    if (open) throw NotParseable{"<" + t->name + "> nested inside <" + open->name + ">"};
    if (t->self_closing) {
      if (t->name == "param") {
        auto name = xml_attr(t->attrs, "name");
        if (!name || trim(*name).empty()) throw NotParseable{"<param> without a name"};
        add_param(doc, DocParam{bare_name(trim(*name)), std::nullopt, ""}, warnings);
      } else if (t->name == "returns") {
        doc.returns = DocReturns{std::nullopt, ""};
      } else if (t->name == "exception") {
        auto cref = xml_attr(t->attrs, "cref");
        if (!cref || trim(*cref).empty()) throw NotParseable{"<exception> without a cref"};
        add_raises(doc, DocRaises{std::string(trim(*cref)), ""});
      }
    } else {
      open = t;
      content_begin = t->end;
    }
    i = t->end;
  }
  if (open) throw NotParseable{"unclosed <" + open->name + ">"};
  if (!any_known) {
    set_descriptions(doc, text::split_lines(text));
  } else if (doc.short_desc.empty() && !trim(outside).empty()) {
    doc.short_desc = squash_whitespace(outside);
  }
  return doc;
}

ParsedDoc parse_godoc(std::string_view text) {
  ParsedDoc doc;
  doc.style = DocStyle::GoDoc;
  set_descriptions(doc, text::split_lines(text));
  return doc;
}

}  // namespace

ParseOutcome parse_docstring(std::string_view text, DocStyle style) {
  ParseOutcome out;
  try {
    switch (style) {
      case DocStyle::GoogleDoc:
        out.doc = parse_google(text, out.warnings);
        break;
      case DocStyle::JavaDoc:
        out.doc = parse_javadoc(text, out.warnings);
        break;
      case DocStyle::JSDoc:
        out.doc = parse_jsdoc(text, out.warnings);
        break;
      case DocStyle::XmlDoc:
        out.doc = parse_xmldoc(text, out.warnings);
        break;
      case DocStyle::GoDoc:
        out.doc = parse_godoc(text);
        break;
    }
  } catch (const NotParseable& e) {
    out.doc.reset();
    out.error = e.why;
  }
  return out;
}

bool is_structured(const ParsedDoc& doc) {
  return !doc.params.empty() || doc.returns.has_value() || !doc.raises.empty();
}

namespace {

void append_line(std::string& out, std::string_view line) {
  if (!out.empty()) out += '\n';
  out += line;
}

std::string with_desc(std::string head, const std::string& desc) {
  if (!desc.empty()) head += " " + desc;
  return head;
}

std::string serialize_google(const ParsedDoc& d) {
  std::string out = d.short_desc;
  auto section = [&](std::string_view title) {
    if (!out.empty()) out += "\n\n";
    out += title;
  };
  if (d.long_desc) out += "\n\n" + *d.long_desc;
  if (!d.params.empty()) {
    section("Args:");
    for (const auto& p : d.params) {
      std::string head = "    " + p.name;
      if (p.type_text) head += " (" + *p.type_text + ")";
      append_line(out, with_desc(head + ":", p.description));
    }
  }
  if (d.returns) {
    section("Returns:");
    if (d.returns->type_text) {
      append_line(out, with_desc("    " + *d.returns->type_text + ":", d.returns->description));
    } else if (!d.returns->description.empty()) {
      append_line(out, "    " + d.returns->description);
    }
  }
  if (!d.raises.empty()) {
    section("Raises:");
    for (const auto& r : d.raises) append_line(out, with_desc("    " + r.type_text + ":", r.description));
  }
  return out;
}

std::string prose_block(const ParsedDoc& d) {
  std::string out = d.short_desc;
  if (d.long_desc) out += "\n\n" + *d.long_desc;
  return out;
}

std::string serialize_javadoc(const ParsedDoc& d) {
  std::string out = prose_block(d);
  for (const auto& p : d.params) append_line(out, with_desc("@param " + p.name, p.description));
  if (d.returns) append_line(out, with_desc("@return", d.returns->description));
  for (const auto& r : d.raises) append_line(out, with_desc("@throws " + r.type_text, r.description));
  return out;
}

std::string serialize_jsdoc(const ParsedDoc& d) {
  std::string out = prose_block(d);
  for (const auto& p : d.params) {
    std::string head = "@param";
    if (p.type_text) head += " {" + *p.type_text + "}";
    head += " " + p.name;
    if (!p.description.empty()) head += " - " + p.description;
    append_line(out, head);
  }
  if (d.returns) {
    std::string head = "@returns";
    if (d.returns->type_text) head += " {" + *d.returns->type_text + "}";
    append_line(out, with_desc(head, d.returns->description));
  }
  for (const auto& r : d.raises) {
    std::string head = "@throws";
    if (!r.type_text.empty()) head += " {" + r.type_text + "}";
    append_line(out, with_desc(head, r.description));
  }
  return out;
}

std::string serialize_xmldoc(const ParsedDoc& d) {
  std::string out;
  if (!d.short_desc.empty()) append_line(out, "<summary>" + d.short_desc + "</summary>");
  if (d.long_desc) append_line(out, "<remarks>" + *d.long_desc + "</remarks>");
  for (const auto& p : d.params) {
    append_line(out, "<param name=\"" + p.name + "\">" + p.description + "</param>");
  }
  if (d.returns) append_line(out, "<returns>" + d.returns->description + "</returns>");
  for (const auto& r : d.raises) {
    append_line(out, "<exception cref=\"" + r.type_text + "\">" + r.description + "</exception>");
  }
  return out;
}

}  // namespace

std::string serialize(const ParsedDoc& doc) {
  switch (doc.style) {
    case DocStyle::GoogleDoc:
      return serialize_google(doc);
    case DocStyle::JavaDoc:
      return serialize_javadoc(doc);
    case DocStyle::JSDoc:
      return serialize_jsdoc(doc);
    case DocStyle::XmlDoc:
      return serialize_xmldoc(doc);
    case DocStyle::GoDoc:
      return prose_block(doc);
  }
  return {};
}

}  // namespace docsieve
