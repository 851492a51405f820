#include <algorithm>
#include <cctype>

#include "common.hpp"
#include "docsieve/text.hpp"

namespace docsieve::extract {
namespace {

bool in_list(std::string_view w, std::initializer_list<std::string_view> list) {
  return std::find(list.begin(), list.end(), w) != list.end();
}

bool is_expression_keyword(std::string_view w) {
  return in_list(w, {"return", "typeof", "new", "await", "yield", "void", "delete", "in", "of",
                     "instanceof", "case", "throw", "extends"});
}

bool is_control_keyword(std::string_view w) {
  return in_list(w, {"if", "for", "while", "switch", "catch", "with"});
}

class Walker {
 public:
  explicit Walker(const TokenStream& ts) : ts_(ts) {}

  void run() {
    for (std::size_t i = 0; i < ts_.size(); ++i) {
      if (ts_[i].kind == Tok::Comment) continue;
      if (ts_.is(i, "{")) {
        on_brace(i, open_.empty() ? npos : open_.back());
        open_.push_back(i);
      } else if (ts_.is(i, "}")) {
        if (!open_.empty()) open_.pop_back();
      } else if (ts_.is(i, "=>")) {
        std::size_t n = ts_.next_sig(i);
        if (n != npos && !ts_.is(n, "{")) on_expression_arrow(i, n);
      }
    }
  }

  std::vector<RawUnit> units;
  std::vector<TokenRange> anon;

 private:
  bool class_body(std::size_t brace) const {
    std::size_t k = ts_.prev_sig(brace);
    while (k != npos) {
      if (ts_.is(k, "class") && ts_[k].kind == Tok::Ident) return true;
      if (ts_.is(k, ")") && ts_.partner(k) != npos) {
        k = ts_.prev_sig(ts_.partner(k));
        continue;
      }
      if (ts_[k].kind == Tok::Ident || ts_.is(k, ".")) {
        k = ts_.prev_sig(k);
        continue;
      }
      return false;
    }
    return false;
  }

  // `(const|let|var) name =` directly before `head`; returns the name token
  // and sets decl_first (including `export`).
  std::size_t binding_before(std::size_t head, std::size_t& decl_first) const {
    std::size_t eq = ts_.prev_sig(head);
    if (eq == npos || !ts_.is(eq, "=")) return npos;
    std::size_t name = ts_.prev_sig(eq);
    if (name == npos || !ts_.is_ident(name)) return npos;
    std::size_t kw = ts_.prev_sig(name);
    if (kw == npos || !(ts_.is(kw, "const") || ts_.is(kw, "let") || ts_.is(kw, "var"))) {
      return npos;
    }
    decl_first = kw;
    std::size_t ex = ts_.prev_sig(kw);
    if (ex != npos && ts_.is(ex, "export")) decl_first = ex;
    return name;
  }

  // True when `head` begins a statement (declaration position).
  bool statement_position(std::size_t head, std::size_t& decl_first) const {
    decl_first = head;
    std::size_t c = ts_.prev_sig(head);
    if (c != npos && ts_.is(c, "default")) {
      decl_first = c;
      c = ts_.prev_sig(c);
      if (c == npos || !ts_.is(c, "export")) return false;
    }
    if (c != npos && ts_.is(c, "export")) {
      decl_first = c;
      c = ts_.prev_sig(c);
    }
    if (c == npos || ts_.is(c, ";") || ts_.is(c, "{") || ts_.is(c, "}")) return true;
    if (ts_[c].end_line < ts_[decl_first].line) {
      if (ts_[c].kind == Tok::Ident) return !is_expression_keyword(ts_.text(c));
      return ts_[c].kind == Tok::Number || ts_[c].kind == Tok::String || ts_.is(c, ")") ||
             ts_.is(c, "]");
    }
    return false;
  }

  void add_unit(std::size_t name, std::size_t decl_first, std::size_t params,
                std::size_t body_first, std::size_t last) {
    RawUnit r;
    r.attach_first = r.decl_first = decl_first;
    r.last = last;
    r.body_first = body_first;
    r.body_last = last;
    auto& sig = r.unit.signature;
    sig.function_name = std::string(ts_.text(name));
    if (name > 0 && ts_.is(name - 1, "#") && ts_[name - 1].end == ts_[name].begin) {
      sig.function_name = "#" + sig.function_name;
    }
    if (ts_.is(params, "(")) {
      for (const auto& part : split_commas(ts_, params, false)) {
        std::size_t k = 0;
        if (k < part.size() && ts_.is(part[k], "...")) ++k;
        if (k >= part.size() || !ts_.is_ident(part[k])) continue;  // destructuring
        ParamFact p;
        p.name = std::string(ts_.text(part[k]));
        sig.params.push_back(std::move(p));
      }
    } else if (ts_.is_ident(params)) {
      ParamFact p;
      p.name = std::string(ts_.text(params));
      sig.params.push_back(std::move(p));
    }
    r.unit.raw_comment = block_doc_before(ts_, decl_first);
    units.push_back(std::move(r));
  }

  // Start of an arrow function's parameter list (or its `async`).
  std::size_t arrow_head(std::size_t arrow, std::size_t& params) const {
    std::size_t p = ts_.prev_sig(arrow);
    if (p == npos) return npos;
    if (ts_.is(p, ")")) {
      params = ts_.partner(p);
    } else if (ts_.is_ident(p)) {
      params = p;
    } else {
      return npos;
    }
    std::size_t head = params;
    std::size_t a = ts_.prev_sig(head);
    if (a != npos && ts_.is(a, "async") && ts_[a].line == ts_[head].line) head = a;
    return head;
  }

  void on_brace(std::size_t i, std::size_t parent) {
    std::size_t close = ts_.partner(i);
    if (class_body(i)) {
      classes_.push_back(i);
      std::sort(classes_.begin(), classes_.end());
      return;
    }
    std::size_t p = ts_.prev_sig(i);
    if (p == npos) return;
    if (ts_.is(p, "=>")) {
      std::size_t params = npos;
      std::size_t head = arrow_head(p, params);
      std::size_t decl_first = npos;
      std::size_t name = head == npos ? npos : binding_before(head, decl_first);
      if (name != npos) {
        add_unit(name, decl_first, params, i, close);
      } else {
        anon.emplace_back(i, close);
      }
      return;
    }
    if (!ts_.is(p, ")")) return;
    std::size_t lp = ts_.partner(p);
    std::size_t q = ts_.prev_sig(lp);
    if (q == npos) return;
    if (ts_[q].kind == Tok::Ident && is_control_keyword(ts_.text(q))) return;

    // function [*] [name] (
    std::size_t fn = npos, name = npos;
    if (ts_.is(q, "function")) {
      fn = q;
    } else if (ts_.is(q, "*") && ts_.is(ts_.prev_sig(q), "function")) {
      fn = ts_.prev_sig(q);
    } else if (ts_.is_ident(q)) {
      std::size_t r = ts_.prev_sig(q);
      if (r != npos && ts_.is(r, "*")) r = ts_.prev_sig(r);
      if (r != npos && ts_.is(r, "function")) {
        fn = r;
        name = q;
      }
    }
    if (fn != npos) {
      std::size_t head = fn;
      std::size_t a = ts_.prev_sig(fn);
      if (a != npos && ts_.is(a, "async")) head = a;
      std::size_t decl_first = npos;
      std::size_t bound = binding_before(head, decl_first);
      if (bound != npos) {
        add_unit(bound, decl_first, lp, i, close);
      } else if (name != npos && statement_position(head, decl_first)) {
        add_unit(name, decl_first, lp, i, close);
      } else {
        anon.emplace_back(i, close);
      }
      return;
    }
    if (ts_.is_ident(q) && parent != npos &&
        std::binary_search(classes_.begin(), classes_.end(), parent)) {
      // Class method: [static] [async] [get|set] [*] [#]name (
      std::size_t head = q;
      if (head > 0 && ts_.is(head - 1, "#")) head = head - 1;
      for (std::size_t m = ts_.prev_sig(head); m != npos; m = ts_.prev_sig(m)) {
        std::string_view w = ts_.text(m);
        if (ts_[m].line != ts_[head].line) break;
        if (ts_[m].kind == Tok::Ident && in_list(w, {"static", "async", "get", "set"})) {
          head = m;
        } else if (w == "*") {
          head = m;
        } else {
          break;
        }
      }
      add_unit(q, head, lp, i, close);
      return;
    }
    // Object-literal shorthand methods and other callables: not extracted,
    // but their bodies are not part of the enclosing function either.
    anon.emplace_back(i, close);
  }

  std::size_t expression_end(std::size_t from) const {
    std::size_t last = from;
    for (std::size_t k = from; k < ts_.size(); k = ts_.next_sig(k)) {
      if (k == npos) break;
      if (k != from && ts_[k].line > ts_[last].end_line) {
        bool ended = ts_[last].kind == Tok::Ident || ts_[last].kind == Tok::Number ||
                     ts_[last].kind == Tok::String || ts_.is(last, ")") || ts_.is(last, "]") ||
                     ts_.is(last, "}");
        bool continues = ts_[k].kind == Tok::Punct &&
                         in_list(ts_.text(k), {".", "?", ":", "+", "-", "*", "/", "%", "=",
                                               "<", ">", "&", "|", "^", "=>", "**", "("});
        if (ended && !continues) return last;
      }
      if (ts_.is(k, ";")) return k;
      if (ts_.is(k, ",") || ts_.is(k, ")") || ts_.is(k, "]") || ts_.is(k, "}")) return last;
      if (ts_.partner(k) != npos && ts_.partner(k) > k) {
        last = ts_.partner(k);
        k = last;
        continue;
      }
      last = k;
    }
    return last;
  }

  void on_expression_arrow(std::size_t arrow, std::size_t first) {
    std::size_t params = npos;
    std::size_t head = arrow_head(arrow, params);
    if (head == npos) return;
    std::size_t decl_first = npos;
    std::size_t name = binding_before(head, decl_first);
    if (name == npos) return;
    std::size_t end = expression_end(first);
    add_unit(name, decl_first, params, first, end);
    units.back().unit.signature.returns_value = true;
  }

  const TokenStream& ts_;
  std::vector<std::size_t> classes_;
  std::vector<std::size_t> open_;
};

void scan_body(const TokenStream& ts, RawUnit& r, const std::vector<TokenRange>& skip) {
  auto& sig = r.unit.signature;
  std::size_t s = 0;
  for (std::size_t i = r.body_first; i <= r.body_last; ++i) {
    while (s < skip.size() && skip[s].second < i) ++s;
    if (s < skip.size() && skip[s].first <= i && i != r.body_first) {
      i = skip[s].second;
      continue;
    }
    if (ts[i].kind != Tok::Ident) continue;
    if (ts.is(i, "return")) {
      std::size_t n = ts.next_sig(i);
      if (n != npos && ts[n].line == ts[i].end_line && !ts.is(n, ";") && !ts.is(n, "}")) {
        sig.returns_value = true;
      }
    } else if (ts.is(i, "throw")) {
      std::size_t j = ts.next_sig(i);
      bool with_new = ts.is(j, "new");
      if (with_new) j = ts.next_sig(j);
      if (!ts.is_ident(j)) continue;
      std::string name(ts.text(j));
      while (ts.is(j + 1, ".") && ts.is_ident(j + 2)) {
        name += "." + std::string(ts.text(j + 2));
        j += 2;
      }
      if (!with_new) {
        std::size_t last_dot = name.rfind('.');
        char c0 = name[last_dot == std::string::npos ? 0 : last_dot + 1];
        if (!ts.is(j + 1, "(") || !std::isupper(static_cast<unsigned char>(c0))) continue;
      }
      push_unique(sig.observed_raises, name);
    }
  }
}

}  // namespace

std::vector<FunctionUnit> extract_javascript(const SourceFile& file) {
  TokenStream ts = lex_c_family(file.text, SourceLang::JavaScript);
  Walker w(ts);
  w.run();
  for (auto& r : w.units) {
    auto skip = nested_ranges(w.units, r.body_first, r.body_last);
    for (const auto& a : w.anon) {
      if (a.first > r.body_first && a.second <= r.body_last) skip.push_back(a);
    }
    std::sort(skip.begin(), skip.end());
    scan_body(ts, r, skip);
  }
  return finish_units(std::move(w.units), ts, file);
}

}  // namespace docsieve::extract
