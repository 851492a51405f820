#include <cctype>

#include "common.hpp"
#include "docsieve/text.hpp"

namespace docsieve::extract {
namespace {

struct PyDef {
  RawUnit raw;
  std::size_t doc_tok = npos;
};

// Index of the first token of the logical line containing i.
std::size_t logical_start(const TokenStream& ts, std::size_t i) {
  while (i > 0 && !ts[i].line_start) --i;
  return i;
}

bool is_method(const TokenStream& ts, std::size_t header_first) {
  int indent = ts[header_first].indent;
  for (std::size_t i = header_first; i-- > 0;) {
    if (!ts[i].line_start || ts[i].indent >= indent) continue;
    return ts.is(i, "class");
  }
  return false;
}

// Last significant token of the body that starts after the header colon.
std::size_t body_end(const TokenStream& ts, std::size_t colon, int def_indent) {
  std::size_t first = ts.next_sig(colon);
  if (first == npos) throw LexError(ts[colon].line, "missing function body");
  std::size_t last = npos;
  if (ts[first].kind != Tok::Newline) {
    for (std::size_t j = first; j < ts.size() && ts[j].kind != Tok::Newline; ++j) {
      if (ts[j].kind != Tok::Comment) last = j;
    }
    return last;
  }
  for (std::size_t j = first + 1; j < ts.size(); ++j) {
    if (ts[j].line_start && ts[j].indent <= def_indent) break;
    if (ts[j].kind != Tok::Comment && ts[j].kind != Tok::Newline) last = j;
  }
  if (last == npos) throw LexError(ts[colon].line, "missing function body");
  return last;
}

std::size_t docstring_token(const TokenStream& ts, std::size_t colon, std::size_t last) {
  std::size_t d = ts.next_sig(colon, true);
  if (d == npos || d > last || ts[d].kind != Tok::String) return npos;
  std::string_view tx = ts.text(d);
  for (char c : tx) {
    if (c == '"' || c == '\'') break;
    if (c == 'f' || c == 'F' || c == 'b' || c == 'B') return npos;
  }
  std::size_t after = ts.next_sig(d);
  if (after != npos && ts[after].kind != Tok::Newline && !ts.is(after, ";")) return npos;
  return d;
}

std::vector<ParamFact> parse_params(const TokenStream& ts, std::size_t lp, bool method) {
  std::vector<ParamFact> out;
  for (const auto& part : split_commas(ts, lp, false)) {
    if (part.empty()) continue;
    std::size_t k = 0;
    while (k < part.size() && (ts.is(part[k], "*") || ts.is(part[k], "**"))) ++k;
    if (k >= part.size() || !ts.is_ident(part[k])) continue;  // bare `*` or `/`
    ParamFact p;
    p.name = std::string(ts.text(part[k]));
    std::size_t n = k + 1;
    if (n < part.size() && ts.is(part[n], ":")) {
      std::size_t e = n + 1;
      while (e < part.size() && !ts.is(part[e], "=")) ++e;
      std::string type = tokens_text(ts, part, n + 1, e);
      if (!type.empty()) p.declared_type = type;
    }
    out.push_back(std::move(p));
  }
  if (method && !out.empty() && (out[0].name == "self" || out[0].name == "cls")) {
    out.erase(out.begin());
  }
  return out;
}

bool statement_start(const TokenStream& ts, std::size_t i) {
  if (ts[i].line_start) return true;
  std::size_t p = ts.prev_sig(i);
  return p != npos && (ts.is(p, ":") || ts.is(p, ";"));
}

void scan_body(const TokenStream& ts, RawUnit& r, const std::vector<TokenRange>& skip) {
  auto& sig = r.unit.signature;
  std::size_t s = 0;
  for (std::size_t i = r.body_first; i <= r.body_last; ++i) {
    while (s < skip.size() && skip[s].second < i) ++s;
    if (s < skip.size() && skip[s].first <= i) {
      i = skip[s].second;
      continue;
    }
    if (ts[i].kind != Tok::Ident) continue;
    std::string_view w = ts.text(i);
    if (w == "yield") {
      sig.returns_value = true;
    } else if (w == "return" && statement_start(ts, i)) {
      std::size_t n = ts.next_sig(i);
      if (n == npos || ts[n].kind == Tok::Newline || ts.is(n, ";")) continue;
      if (ts.is(n, "None")) {
        std::size_t nn = ts.next_sig(n);
        if (nn == npos || ts[nn].kind == Tok::Newline || ts.is(nn, ";")) continue;
      }
      sig.returns_value = true;
    } else if (w == "raise" && statement_start(ts, i)) {
      std::size_t j = ts.next_sig(i);
      if (j == npos || !ts.is_ident(j)) continue;
      std::string name(ts.text(j));
      std::string last_part = name;
      while (ts.is(j + 1, ".") && ts.is_ident(j + 2)) {
        last_part = std::string(ts.text(j + 2));
        name += "." + last_part;
        j += 2;
      }
      if (std::isupper(static_cast<unsigned char>(last_part[0]))) {
        push_unique(sig.observed_raises, name);
      }
    }
  }
}

// code_text without the docstring; whole lines go when the literal owns them.
std::string code_without_doc(const TokenStream& ts, const RawUnit& r, std::size_t doc) {
  std::string_view src = ts.src();
  std::size_t b = ts[r.decl_first].begin, e = ts[r.last].end;
  if (doc == npos) return std::string(src.substr(b, e - b));
  std::size_t cut_b = ts[doc].begin, cut_e = ts[doc].end;
  std::size_t lb = cut_b;
  while (lb > 0 && text::is_space(src[lb - 1])) --lb;
  std::size_t le = cut_e;
  while (le < src.size() && text::is_space(src[le])) ++le;
  if ((lb == 0 || src[lb - 1] == '\n') && (le >= src.size() || src[le] == '\n')) {
    cut_b = lb;
    cut_e = le < src.size() ? le + 1 : le;
  }
  std::string out(src.substr(b, std::min(cut_b, e) - b));
  if (cut_e < e) out.append(src.substr(cut_e, e - cut_e));
  return std::string(text::trim_right(out));
}

}  // namespace

std::vector<FunctionUnit> extract_python(const SourceFile& file) {
  TokenStream ts = lex_python(file.text);
  std::vector<PyDef> defs;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!ts.is(i, "def") || ts[i].kind != Tok::Ident) continue;
    std::size_t head = i;
    if (!ts[i].line_start) {
      std::size_t p = ts.prev_sig(i);
      if (p == npos || !ts.is(p, "async") || !ts[p].line_start) continue;
      head = p;
    }
    std::size_t name = ts.next_sig(i);
    if (!ts.is_ident(name)) continue;
    std::size_t lp = ts.next_sig(name);
    if (!ts.is(lp, "(")) continue;
    std::size_t rp = ts.partner(lp);
    std::size_t colon = ts.next_sig(rp);
    std::optional<std::string> ret_type;
    if (ts.is(colon, "->")) {
      std::size_t a = colon + 1;
      std::size_t j = a;
      while (j < ts.size() && !ts.is(j, ":") && ts[j].kind != Tok::Newline) {
        if (ts.partner(j) != npos && ts.partner(j) > j) j = ts.partner(j);
        ++j;
      }
      if (j > a) ret_type = text::squash_whitespace(ts.span(a, j - 1));
      colon = j;
    }
    if (!ts.is(colon, ":")) continue;

    PyDef d;
    RawUnit& r = d.raw;
    r.attach_first = r.decl_first = head;
    r.last = body_end(ts, colon, ts[head].indent);
    r.body_first = colon + 1;
    r.body_last = r.last;
    auto& sig = r.unit.signature;
    sig.function_name = std::string(ts.text(name));
    sig.params = parse_params(ts, lp, is_method(ts, logical_start(ts, head)));
    sig.return_type = ret_type;
    if (ret_type && *ret_type != "None") sig.returns_value = true;
    d.doc_tok = docstring_token(ts, colon, r.last);
    if (d.doc_tok != npos) r.unit.raw_comment = std::string(ts.text(d.doc_tok));
    defs.push_back(std::move(d));
  }

  std::vector<RawUnit> raws;
  for (auto& d : defs) raws.push_back(d.raw);
  for (std::size_t k = 0; k < raws.size(); ++k) {
    scan_body(ts, raws[k], nested_ranges(raws, raws[k].body_first, raws[k].body_last));
    raws[k].unit.code_text = code_without_doc(ts, raws[k], defs[k].doc_tok);
  }
  return finish_units(std::move(raws), ts, file);
}

}  // namespace docsieve::extract
