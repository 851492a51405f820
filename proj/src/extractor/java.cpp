#include <algorithm>

#include "common.hpp"
#include "docsieve/text.hpp"

namespace docsieve::extract {
namespace {

bool is_java_modifier(std::string_view w) {
  static constexpr std::string_view kMods[] = {
      "public",   "protected",    "private", "static",    "final",    "abstract",
      "native",   "synchronized", "default", "strictfp",  "transient", "volatile",
      "sealed",   "non"};
  return std::find(std::begin(kMods), std::end(kMods), w) != std::end(kMods);
}

bool is_java_keyword(std::string_view w) {
  static constexpr std::string_view kKw[] = {
      "if",     "for",   "while", "switch", "catch", "synchronized", "return", "new",
      "throw",  "else",  "do",    "try",    "finally", "assert",     "this",   "super",
      "class",  "interface", "enum", "record", "case"};
  return std::find(std::begin(kKw), std::end(kKw), w) != std::end(kKw);
}

enum class Scope { File, Type, Body, Block };

struct Frame {
  Scope scope;
  std::string type_name;
};

// Skips an annotation starting at `@`; returns the index after it.
std::size_t skip_annotation(const TokenStream& ts, std::size_t i, std::size_t end) {
  std::size_t j = i + 1;
  if (j >= end || !ts.is_ident(j)) return j;
  ++j;
  while (j + 1 < end && ts.is(j, ".") && ts.is_ident(j + 1)) j += 2;
  if (j < end && ts.is(j, "(")) j = ts.partner(j) + 1;
  return j;
}

// Header tokens with comments and annotations removed.
std::vector<std::size_t> clean_header(const TokenStream& ts, std::size_t from, std::size_t to) {
  std::vector<std::size_t> out;
  for (std::size_t i = from; i < to; ++i) {
    if (ts[i].kind == Tok::Comment) continue;
    if (ts.is(i, "@") && !ts.is(i + 1, "interface")) {
      i = skip_annotation(ts, i, to) - 1;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

struct Header {
  bool is_type = false;
  std::string type_name;
  bool is_method = false;
  std::size_t name = npos, lp = npos;
  std::size_t decl_first = npos;
  std::optional<std::string> return_type;
  bool constructor = false;
  std::vector<std::string> throws;
};

Header classify(const TokenStream& ts, const std::vector<std::size_t>& h,
                const Frame& frame) {
  Header out;
  if (h.empty()) return out;
  out.decl_first = h.front();
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (ts.is(h[k], "(")) break;
    std::string_view w = ts.text(h[k]);
    if (ts[h[k]].kind == Tok::Ident &&
        (w == "class" || w == "interface" || w == "enum" || w == "record")) {
      if (k > 0 && ts.is(h[k - 1], ".")) continue;
      out.is_type = true;
      if (k + 1 < h.size() && ts.is_ident(h[k + 1])) out.type_name = ts.text(h[k + 1]);
      return out;
    }
  }
  if (frame.scope != Scope::Type) return out;
  std::size_t lpk = npos;
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (ts.is(h[k], "(")) {
      lpk = k;
      break;
    }
    if (ts.is(h[k], "=")) return out;
  }
  if (lpk == npos || lpk == 0) return out;
  std::size_t name = h[lpk - 1];
  if (!ts.is_ident(name) || is_java_keyword(ts.text(name))) return out;

  // Modifiers, then optional <T>, then the return type.
  std::size_t k = 0;
  while (k < lpk - 1) {
    std::string_view w = ts.text(h[k]);
    if (w == "non" && k + 2 < lpk && ts.is(h[k + 1], "-")) {
      k += 3;
      continue;
    }
    if (ts[h[k]].kind == Tok::Ident && is_java_modifier(w)) {
      ++k;
      continue;
    }
    break;
  }
  if (k < lpk - 1 && ts.is(h[k], "<")) {
    int depth = 0;
    for (; k < lpk - 1; ++k) {
      if (ts.is(h[k], "<")) ++depth;
      if (ts.is(h[k], ">") && --depth == 0) {
        ++k;
        break;
      }
    }
  }
  for (std::size_t q = k; q < lpk - 1; ++q) {
    std::string_view w = ts.text(h[q]);
    if (ts[h[q]].kind == Tok::String || ts[h[q]].kind == Tok::Number || w == "new" ||
        w == "return" || w == "throw" || w == ";" || w == "{" || w == "}") {
      return out;
    }
  }
  std::size_t rp = ts.partner(h[lpk]);
  std::size_t after = std::find(h.begin(), h.end(), rp) - h.begin();
  if (after >= h.size()) return out;
  for (std::size_t q = after + 1; q < h.size(); ++q) {
    std::string_view w = ts.text(h[q]);
    bool ok = ts[h[q]].kind == Tok::Ident || w == "[" || w == "]" || w == "." || w == "," ||
              w == "<" || w == ">" || w == "?" || w == "&";
    if (!ok) return out;
  }
  for (std::size_t q = after + 1; q < h.size(); ++q) {
    if (!ts.is(h[q], "throws")) continue;
    std::vector<std::size_t> cur;
    auto flush = [&] {
      if (!cur.empty()) push_unique(out.throws, tokens_text(ts, cur, 0, cur.size()));
      cur.clear();
    };
    int depth = 0;
    for (std::size_t z = q + 1; z < h.size(); ++z) {
      if (ts.is(h[z], "<")) ++depth;
      if (ts.is(h[z], ">")) --depth;
      if (ts.is(h[z], ",") && depth == 0) {
        flush();
        continue;
      }
      cur.push_back(h[z]);
    }
    flush();
    break;
  }
  out.is_method = true;
  out.name = name;
  out.lp = h[lpk];
  if (k == lpk - 1) {
    if (ts.text(name) != frame.type_name) return Header{};
    out.constructor = true;
  } else {
    std::vector<std::size_t> rt(h.begin() + k, h.begin() + lpk - 1);
    out.return_type = tokens_text(ts, rt, 0, rt.size());
  }
  return out;
}

std::vector<ParamFact> parse_params(const TokenStream& ts, std::size_t lp) {
  std::vector<ParamFact> out;
  for (const auto& raw : split_commas(ts, lp, true)) {
    std::vector<std::size_t> part;
    for (std::size_t k = 0; k < raw.size(); ++k) {
      if (ts.is(raw[k], "@")) {
        std::size_t j = skip_annotation(ts, raw[k], ts.size());
        while (k + 1 < raw.size() && raw[k + 1] < j) ++k;
        continue;
      }
      if (ts.is(raw[k], "final")) continue;
      part.push_back(raw[k]);
    }
    std::size_t dims = 0;
    while (part.size() >= 2 && ts.is(part.back(), "]") && ts.is(part[part.size() - 2], "[")) {
      part.resize(part.size() - 2);
      ++dims;
    }
    if (part.empty() || !ts.is_ident(part.back())) continue;
    if (ts.is(part.back(), "this")) continue;  // receiver parameter
    ParamFact p;
    p.name = std::string(ts.text(part.back()));
    std::string type = tokens_text(ts, part, 0, part.size() - 1);
    for (std::size_t d = 0; d < dims; ++d) type += "[]";
    if (!type.empty()) p.declared_type = type;
    out.push_back(std::move(p));
  }
  return out;
}

// `new Foo(...) {` opens an anonymous class body.
bool anonymous_class(const TokenStream& ts, const std::vector<std::size_t>& h) {
  if (h.empty() || !ts.is(h.back(), ")")) return false;
  std::size_t lp = ts.partner(h.back());
  if (lp == 0) return false;
  std::size_t k = lp - 1;
  if (ts.is(k, ">")) {
    int depth = 0;
    while (k > 0) {
      if (ts.is(k, ">")) ++depth;
      if (ts.is(k, "<") && --depth == 0) break;
      --k;
    }
    if (k == 0) return false;
    --k;
  }
  while (k >= 2 && ts.is_ident(k) && ts.is(k - 1, ".") && ts.is_ident(k - 2)) k -= 2;
  return k > 0 && ts.is_ident(k) && ts.is(k - 1, "new");
}

// `RED {` or `RED("r") {` directly inside an enum.
bool enum_constant_body(const TokenStream& ts, const std::vector<std::size_t>& h,
                        const Frame& frame) {
  if (frame.scope != Scope::Type || h.empty()) return false;
  std::size_t k = 0;
  if (ts.is(h[k], ",")) ++k;
  if (k >= h.size() || !ts.is_ident(h[k])) return false;
  if (k + 1 == h.size()) return !ts.is(h[k], "static");
  return ts.is(h[k + 1], "(") && ts.partner(h[k + 1]) == h.back();
}

}  // namespace

std::vector<FunctionUnit> extract_java(const SourceFile& file) {
  TokenStream ts = lex_c_family(file.text, SourceLang::Java);
  std::vector<RawUnit> units;
  std::vector<Frame> stack{{Scope::File, {}}};
  std::size_t stmt = 0;

  auto emit = [&](const Header& h, std::size_t hdr_first, std::size_t end, bool has_body,
                  std::size_t open) {
    RawUnit r;
    r.attach_first = hdr_first;
    r.decl_first = h.decl_first;
    r.last = end;
    if (has_body) {
      r.body_first = open;
      r.body_last = end;
    }
    auto& sig = r.unit.signature;
    sig.function_name = std::string(ts.text(h.name));
    sig.params = parse_params(ts, h.lp);
    sig.return_type = h.return_type;
    sig.returns_value = !h.constructor && h.return_type && *h.return_type != "void";
    sig.declared_exceptions = h.throws;
    if (!ts.blank_line_between(ts[hdr_first].line, ts[h.decl_first].line)) {
      r.unit.raw_comment = block_doc_before(ts, hdr_first);
    }
    units.push_back(std::move(r));
  };

  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i].kind == Tok::Comment) {
      if (stmt == i) ++stmt;
      continue;
    }
    if (ts.is(i, "{")) {
      auto h = clean_header(ts, stmt, i);
      Header hd = classify(ts, h, stack.back());
      if (hd.is_type) {
        stack.push_back({Scope::Type, hd.type_name});
      } else if (hd.is_method) {
        emit(hd, stmt, ts.partner(i), true, i);
        stack.push_back({Scope::Body, {}});
      } else if (anonymous_class(ts, h) || enum_constant_body(ts, h, stack.back())) {
        stack.push_back({Scope::Type, {}});
      } else {
        stack.push_back({Scope::Block, {}});
      }
      stmt = i + 1;
    } else if (ts.is(i, "}")) {
      if (stack.size() > 1) stack.pop_back();
      stmt = i + 1;
    } else if (ts.is(i, ";")) {
      if (stack.back().scope == Scope::Type) {
        auto h = clean_header(ts, stmt, i);
        Header hd = classify(ts, h, stack.back());
        if (hd.is_method) emit(hd, stmt, i, false, npos);
      }
      stmt = i + 1;
    }
  }
  return finish_units(std::move(units), ts, file);
}

}  // namespace docsieve::extract
