#include <algorithm>

#include "common.hpp"
#include "docsieve/text.hpp"

namespace docsieve::extract {
namespace {

bool in_list(std::string_view w, std::initializer_list<std::string_view> list) {
  return std::find(list.begin(), list.end(), w) != list.end();
}

bool is_modifier(std::string_view w) {
  return in_list(w, {"public", "private", "protected", "internal", "static", "virtual",
                     "override", "abstract", "sealed", "async", "extern", "unsafe", "new",
                     "readonly", "partial", "volatile", "required", "file"});
}

bool is_statement_keyword(std::string_view w) {
  return in_list(w, {"if",      "else",   "for",    "foreach", "while",  "do",     "switch",
                     "using",   "lock",   "catch",  "try",     "finally", "fixed", "return",
                     "throw",   "checked", "unchecked", "case", "default", "await", "yield",
                     "get",     "set",    "init",   "add",     "remove", "when",   "var",
                     "goto",    "break",  "continue", "unsafe", "new",   "this",   "base",
                     "typeof",  "nameof", "sizeof", "operator", "implicit", "explicit",
                     "delegate", "event"});
}

enum class Scope { File, Type, Body, Block };

struct Frame {
  Scope scope;
  std::string type_name;
};

std::vector<std::size_t> clean_header(const TokenStream& ts, std::size_t from, std::size_t to) {
  std::vector<std::size_t> out;
  for (std::size_t i = from; i < to; ++i) {
    if (ts[i].kind == Tok::Comment) continue;
    // Attributes: `[` at the start of the header or right after another one.
    if (ts.is(i, "[") && out.empty() && ts.partner(i) != npos && ts.partner(i) < to) {
      i = ts.partner(i);
      continue;
    }
    out.push_back(i);
  }
  return out;
}

struct Header {
  bool is_type = false;
  bool is_namespace = false;
  std::string type_name;
  bool is_method = false;
  std::size_t name = npos, lp = npos;
  std::size_t decl_first = npos;
  std::optional<std::string> return_type;
  bool constructor = false;
};

Header classify(const TokenStream& ts, const std::vector<std::size_t>& h, const Frame& frame) {
  Header out;
  if (h.empty()) return out;
  out.decl_first = h.front();
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (ts.is(h[k], "(") || ts.is(h[k], "=")) break;
    std::string_view w = ts.text(h[k]);
    if (ts[h[k]].kind != Tok::Ident) continue;
    if (w == "namespace") {
      out.is_namespace = true;
      return out;
    }
    if (w == "class" || w == "struct" || w == "interface" || w == "enum" || w == "record") {
      out.is_type = true;
      if (k + 1 < h.size() && ts.is_ident(h[k + 1])) out.type_name = ts.text(h[k + 1]);
      if (w == "record" && k + 1 < h.size() && (ts.is(h[k + 1], "class") || ts.is(h[k + 1], "struct")) &&
          k + 2 < h.size()) {
        out.type_name = ts.text(h[k + 2]);
      }
      return out;
    }
  }
  std::size_t k = 0;
  while (k < h.size() && ts[h[k]].kind == Tok::Ident && is_modifier(ts.text(h[k]))) ++k;
  if (k >= h.size() || ts[h[k]].kind != Tok::Ident || is_statement_keyword(ts.text(h[k]))) {
    return out;
  }
  // Leftmost top-level `(`.
  std::size_t lpk = npos;
  for (std::size_t q = k; q < h.size(); ++q) {
    if (ts.is(h[q], "(")) {
      lpk = q;
      break;
    }
    if (ts.is(h[q], "=") || ts.is(h[q], "~") || ts.is(h[q], "=>") || ts.is(h[q], "operator")) {
      return out;
    }
  }
  if (lpk == npos || lpk == k) return out;
  std::size_t name_k = lpk - 1;
  if (ts.is(h[name_k], ">")) {
    std::size_t q = name_k;
    int depth = 0;
    while (true) {
      if (ts.is(h[q], ">")) ++depth;
      if (ts.is(h[q], "<") && --depth == 0) break;
      if (q == k) return out;
      --q;
    }
    if (q == k) return out;
    name_k = q - 1;
  }
  std::size_t name = h[name_k];
  if (!ts.is_ident(name) || is_statement_keyword(ts.text(name))) return out;
  std::size_t rp = ts.partner(h[lpk]);
  std::size_t after = std::find(h.begin(), h.end(), rp) - h.begin();
  if (after >= h.size()) return out;
  // Suffix: `where` constraints or a `: base(...)` / `: this(...)` chain.
  if (after + 1 < h.size()) {
    std::string_view w = ts.text(h[after + 1]);
    if (w != "where" && w != ":") return out;
  }
  // Explicit interface implementation: `IFoo.Bar(` keeps `IFoo.` out of the type.
  std::size_t type_end = name_k;
  while (type_end >= k + 2 && ts.is(h[type_end - 1], ".") && ts.is_ident(h[type_end - 2]) &&
         type_end - 2 > k) {
    type_end -= 2;
  }
  for (std::size_t q = k; q < type_end; ++q) {
    std::string_view w = ts.text(h[q]);
    bool ok = ts[h[q]].kind == Tok::Ident || w == "." || w == "<" || w == ">" || w == "," ||
              w == "[" || w == "]" || w == "?" || w == "*" || w == "(" || w == ")" ||
              w == "::";
    if (!ok) return out;
  }
  out.is_method = true;
  out.name = name;
  out.lp = h[lpk];
  if (type_end == k) {
    if (frame.scope != Scope::Type || ts.text(name) != frame.type_name) return Header{};
    out.constructor = true;
  } else {
    std::vector<std::size_t> rt(h.begin() + k, h.begin() + type_end);
    out.return_type = tokens_text(ts, rt, 0, rt.size());
  }
  return out;
}

std::vector<ParamFact> parse_params(const TokenStream& ts, std::size_t lp) {
  std::vector<ParamFact> out;
  for (const auto& raw : split_commas(ts, lp, true)) {
    std::vector<std::size_t> part;
    for (std::size_t k = 0; k < raw.size(); ++k) {
      if (ts.is(raw[k], "[") && part.empty()) {
        std::size_t close = ts.partner(raw[k]);
        while (k + 1 < raw.size() && raw[k + 1] <= close) ++k;
        continue;
      }
      if (ts.is(raw[k], "=")) break;
      std::string_view w = ts.text(raw[k]);
      if (part.empty() && ts[raw[k]].kind == Tok::Ident &&
          in_list(w, {"this", "ref", "out", "in", "params", "scoped", "readonly"})) {
        continue;
      }
      part.push_back(raw[k]);
    }
    if (part.empty() || !ts.is_ident(part.back())) continue;
    ParamFact p;
    std::string_view nm = ts.text(part.back());
    if (!nm.empty() && nm[0] == '@') nm.remove_prefix(1);
    p.name = std::string(nm);
    std::string type = tokens_text(ts, part, 0, part.size() - 1);
    if (!type.empty()) p.declared_type = type;
    out.push_back(std::move(p));
  }
  return out;
}

// End of an expression body: the terminating `;` at bracket depth zero.
std::size_t expression_end(const TokenStream& ts, std::size_t from) {
  for (std::size_t i = from; i < ts.size(); ++i) {
    if (ts.partner(i) != npos && ts.partner(i) > i) {
      i = ts.partner(i);
      continue;
    }
    if (ts.is(i, ";")) return i;
    if (ts.is(i, "}")) return i - 1;
  }
  return ts.size() - 1;
}

void scan_body(const TokenStream& ts, RawUnit& r, const std::vector<TokenRange>& skip) {
  auto& sig = r.unit.signature;
  bool has_return = false;
  std::size_t s = 0;
  for (std::size_t i = r.body_first; i <= r.body_last; ++i) {
    while (s < skip.size() && skip[s].second < i) ++s;
    if (s < skip.size() && skip[s].first <= i) {
      i = skip[s].second;
      continue;
    }
    // Lambda and anonymous-method blocks belong to someone else.
    if (ts.is(i, "{") && i > r.body_first) {
      std::size_t p = ts.prev_sig(i);
      bool lambda = ts.is(p, "=>") || ts.is(p, "delegate");
      if (!lambda && ts.is(p, ")") && ts.partner(p) > 0) lambda = ts.is(ts.partner(p) - 1, "delegate");
      if (lambda) {
        i = ts.partner(i);
        continue;
      }
    }
    if (ts.is(i, "return")) {
      std::size_t n = ts.next_sig(i);
      if (n != npos && !ts.is(n, ";")) has_return = true;
    } else if (ts.is(i, "throw") && ts.is(i + 1, "new")) {
      std::size_t j = i + 2;
      if (!ts.is_ident(j)) continue;
      std::string name(ts.text(j));
      while (ts.is(j + 1, ".") && ts.is_ident(j + 2)) {
        name += "." + std::string(ts.text(j + 2));
        j += 2;
      }
      push_unique(sig.observed_raises, name);
    }
  }
  bool non_void = sig.return_type && *sig.return_type != "void";
  if (non_void && has_return) sig.returns_value = true;
}

}  // namespace

std::vector<FunctionUnit> extract_csharp(const SourceFile& file) {
  TokenStream ts = lex_c_family(file.text, SourceLang::CSharp);
  std::vector<RawUnit> units;
  std::vector<Frame> stack{{Scope::File, {}}};
  std::size_t stmt = 0;

  auto doc_for = [&](std::size_t hdr_first) {
    return line_run_before(ts, hdr_first, [](std::string_view tx) {
      return tx.substr(0, 3) == "///" && tx.substr(0, 4) != "////";
    });
  };
  auto make = [&](const Header& h, std::size_t hdr_first) {
    RawUnit r;
    r.attach_first = hdr_first;
    r.decl_first = h.decl_first;
    auto& sig = r.unit.signature;
    sig.function_name = std::string(ts.text(h.name));
    sig.params = parse_params(ts, h.lp);
    sig.return_type = h.return_type;
    r.unit.raw_comment = doc_for(hdr_first);
    return r;
  };
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i].kind == Tok::Comment) {
      if (stmt == i) ++stmt;
      continue;
    }
    const Frame& top = stack.back();
    if (ts.is(i, "{")) {
      auto h = clean_header(ts, stmt, i);
      Header hd = classify(ts, h, top);
      if (hd.is_namespace) {
        stack.push_back({Scope::File, {}});
      } else if (hd.is_type) {
        stack.push_back({Scope::Type, hd.type_name});
      } else if (hd.is_method) {
        RawUnit r = make(hd, stmt);
        r.last = ts.partner(i);
        r.body_first = i;
        r.body_last = r.last;
        units.push_back(std::move(r));
        stack.push_back({Scope::Body, {}});
      } else {
        stack.push_back({Scope::Block, {}});
      }
      stmt = i + 1;
    } else if (ts.is(i, "}")) {
      if (stack.size() > 1) stack.pop_back();
      stmt = i + 1;
    } else if (ts.is(i, ";")) {
      if (top.scope == Scope::Type) {
        auto h = clean_header(ts, stmt, i);
        Header hd = classify(ts, h, top);
        if (hd.is_method) {
          RawUnit r = make(hd, stmt);
          r.last = i;
          // No body: abstract or interface member; the declared type decides.
          r.unit.signature.returns_value =
              hd.return_type && *hd.return_type != "void";
          units.push_back(std::move(r));
        }
      }
      stmt = i + 1;
    } else if (ts.is(i, "=>")) {
      auto h = clean_header(ts, stmt, i);
      Header hd = classify(ts, h, top);
      if (hd.is_method) {
        RawUnit r = make(hd, stmt);
        r.last = expression_end(ts, i + 1);
        r.body_first = i + 1;
        r.body_last = r.last;
        r.unit.signature.returns_value = hd.return_type && *hd.return_type != "void";
        i = r.last;
        stmt = i + 1;
        units.push_back(std::move(r));
      }
    }
  }
  for (auto& r : units) {
    if (r.body_first == npos) continue;
    bool expression_bodied = !ts.is(r.body_first, "{");
    scan_body(ts, r, nested_ranges(units, r.body_first, r.body_last));
    if (expression_bodied) {
      r.unit.signature.returns_value =
          r.unit.signature.return_type && *r.unit.signature.return_type != "void";
    }
  }
  return finish_units(std::move(units), ts, file);
}

}  // namespace docsieve::extract
