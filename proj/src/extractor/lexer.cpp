#include "lexer.hpp"

#include <algorithm>
#include <string>

#include "docsieve/text.hpp"

namespace docsieve::extract {

using text::is_ident_char;
using text::is_ident_start;

TokenStream::TokenStream(std::string_view src, std::vector<Token> toks)
    : src_(src), toks_(std::move(toks)), partner_(toks_.size(), npos) {
  line_starts_.push_back(0);
  for (std::size_t i = 0; i < src_.size(); ++i) {
    if (src_[i] == '\n') line_starts_.push_back(i + 1);
  }
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < toks_.size(); ++i) {
    if (toks_[i].kind != Tok::Punct) continue;
    char c = src_[toks_[i].begin];
    if (toks_[i].end - toks_[i].begin != 1) continue;
    if (c == '(' || c == '[' || c == '{') {
      stack.push_back(i);
    } else if (c == ')' || c == ']' || c == '}') {
      char want = c == ')' ? '(' : c == ']' ? '[' : '{';
      if (stack.empty() || src_[toks_[stack.back()].begin] != want) {
        throw LexError(toks_[i].line, std::string("unbalanced '") + c + "'");
      }
      partner_[i] = stack.back();
      partner_[stack.back()] = i;
      stack.pop_back();
    }
  }
  if (!stack.empty()) {
    throw LexError(toks_[stack.back()].line,
                   std::string("unclosed '") + src_[toks_[stack.back()].begin] + "'");
  }
}

std::size_t TokenStream::next_sig(std::size_t i, bool skip_newlines) const {
  for (std::size_t j = i + 1; j < toks_.size(); ++j) {
    if (toks_[j].kind == Tok::Comment) continue;
    if (skip_newlines && toks_[j].kind == Tok::Newline) continue;
    return j;
  }
  return npos;
}

std::size_t TokenStream::prev_sig(std::size_t i) const {
  while (i > 0) {
    --i;
    if (toks_[i].kind != Tok::Comment && toks_[i].kind != Tok::Newline) return i;
  }
  return npos;
}

bool TokenStream::blank_line_between(int from, int to) const {
  for (int l = from + 1; l < to; ++l) {
    if (l < 1 || static_cast<std::size_t>(l) > line_starts_.size()) continue;
    std::size_t b = line_starts_[l - 1];
    std::size_t e = static_cast<std::size_t>(l) < line_starts_.size() ? line_starts_[l]
                                                                       : src_.size();
    if (text::trim(src_.substr(b, e - b)).empty()) return true;
  }
  return false;
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view src) : s_(src) {}

  bool eof() const { return i_ >= s_.size(); }
  char peek(std::size_t k = 0) const { return i_ + k < s_.size() ? s_[i_ + k] : '\0'; }
  bool at(std::string_view lit) const { return s_.substr(i_, lit.size()) == lit; }

  // Advances one byte, tracking lines.
  void bump() {
    if (s_[i_] == '\n') ++line_;
    ++i_;
  }
  void bump(std::size_t n) {
    for (std::size_t k = 0; k < n && !eof(); ++k) bump();
  }

  [[noreturn]] void fail(int line, const std::string& what) const { throw LexError(line, what); }

  // Quoted literal with backslash escapes; the opening quote is at i_.
  void skip_quoted(char quote, bool multiline) {
    int start = line_;
    bump();
    while (!eof()) {
      char c = peek();
      if (c == '\\') {
        bump();
        if (!eof()) bump();
        continue;
      }
      if (c == quote) {
        bump();
        return;
      }
      if (c == '\n' && !multiline) fail(start, "unterminated string literal");
      bump();
    }
    fail(start, "unterminated string literal");
  }

  // Skips until `close` (exclusive of escapes); used for raw forms.
  void skip_until(std::string_view close, bool backslash_escapes, const char* what) {
    int start = line_;
    while (!eof()) {
      if (backslash_escapes && peek() == '\\') {
        bump(2);
        continue;
      }
      if (at(close)) {
        bump(close.size());
        return;
      }
      bump();
    }
    fail(start, std::string("unterminated ") + what);
  }

  std::string_view s_;
  std::size_t i_ = 0;
  int line_ = 1;
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::size_t punct_len(std::string_view rest) {
  static constexpr std::string_view kMulti[] = {"...", "=>", "->", "::", "**"};
  for (auto m : kMulti) {
    if (rest.substr(0, m.size()) == m) return m.size();
  }
  return 1;
}

void skip_number(Scanner& sc) {
  while (!sc.eof()) {
    char c = sc.peek();
    if (is_ident_char(c) || c == '.') {
      if (c == '.' && sc.peek(1) == '.') break;
      char prev = c;
      sc.bump();
      if ((prev == 'e' || prev == 'E' || prev == 'p' || prev == 'P') &&
          (sc.peek() == '+' || sc.peek() == '-') && is_digit(sc.peek(1))) {
        sc.bump();
      }
    } else {
      break;
    }
  }
}

class CFamilyLexer {
 public:
  CFamilyLexer(std::string_view src, SourceLang lang) : sc_(src), lang_(lang) {}

  std::vector<Token> run() {
    while (!sc_.eof()) step();
    return std::move(toks_);
  }

 private:
  void emit(Tok kind, std::size_t begin, int line) {
    Token t;
    t.kind = kind;
    t.begin = begin;
    t.end = sc_.i_;
    t.line = line;
    t.end_line = sc_.line_;
    if (t.end > t.begin && sc_.s_[t.end - 1] == '\n') t.end_line = sc_.line_ - 1;
    toks_.push_back(t);
  }

  bool only_space_before_on_line(std::size_t pos) const {
    while (pos > 0) {
      char c = sc_.s_[pos - 1];
      if (c == '\n') return true;
      if (!text::is_space(c)) return false;
      --pos;
    }
    return true;
  }

  bool regex_allowed() const {
    if (toks_.empty()) return true;
    const Token& t = toks_.back();
    std::string_view tx = sc_.s_.substr(t.begin, t.end - t.begin);
    switch (t.kind) {
      case Tok::Number:
      case Tok::String:
        return false;
      case Tok::Ident: {
        static constexpr std::string_view kw[] = {
            "return", "typeof", "instanceof", "in",   "of",    "new",  "delete",
            "void",   "throw",  "case",       "do",   "else",  "yield", "await"};
        return std::find(std::begin(kw), std::end(kw), tx) != std::end(kw);
      }
      case Tok::Punct:
        return !(tx == ")" || tx == "]" || tx == "}");
      default:
        return true;
    }
  }

  // JS regex literal; returns false (without consuming) if the slash does not
  // start a well-formed single-line regex.
  bool try_regex() {
    std::size_t j = sc_.i_ + 1;
    const auto& s = sc_.s_;
    bool in_class = false;
    while (j < s.size()) {
      char c = s[j];
      if (c == '\n') return false;
      if (c == '\\') {
        j += 2;
        continue;
      }
      if (in_class) {
        if (c == ']') in_class = false;
      } else if (c == '[') {
        in_class = true;
      } else if (c == '/') {
        break;
      }
      ++j;
    }
    if (j >= s.size()) return false;
    ++j;
    while (j < s.size() && is_ident_char(s[j])) ++j;
    sc_.bump(j - sc_.i_);
    return true;
  }

  // Body of an interpolation hole up to and including the closing brace.
  void skip_hole() {
    int start = sc_.line_;
    int depth = 0;
    while (!sc_.eof()) {
      char c = sc_.peek();
      if (c == '"' || c == '\'' || c == '`' || (c == '$' && sc_.peek(1) == '"') ||
          (c == '@' && sc_.peek(1) == '"')) {
        skip_string();
        continue;
      }
      if (c == '{') ++depth;
      if (c == '}') {
        if (depth == 0) {
          sc_.bump();
          return;
        }
        --depth;
      }
      sc_.bump();
    }
    sc_.fail(start, "unterminated interpolation");
  }

  void skip_template() {
    int start = sc_.line_;
    sc_.bump();
    while (!sc_.eof()) {
      char c = sc_.peek();
      if (c == '\\') {
        sc_.bump(2);
        continue;
      }
      if (c == '`') {
        sc_.bump();
        return;
      }
      if (c == '$' && sc_.peek(1) == '{') {
        sc_.bump(2);
        skip_hole();
        continue;
      }
      sc_.bump();
    }
    sc_.fail(start, "unterminated template literal");
  }

  void skip_cs_interpolated(bool verbatim) {
    int start = sc_.line_;
    sc_.bump();  // opening quote
    while (!sc_.eof()) {
      char c = sc_.peek();
      if (!verbatim && c == '\\') {
        sc_.bump(2);
        continue;
      }
      if (c == '"') {
        if (verbatim && sc_.peek(1) == '"') {
          sc_.bump(2);
          continue;
        }
        sc_.bump();
        return;
      }
      if (c == '{') {
        if (sc_.peek(1) == '{') {
          sc_.bump(2);
          continue;
        }
        sc_.bump();
        skip_hole();
        continue;
      }
      if (c == '\n' && !verbatim) sc_.fail(start, "unterminated string literal");
      sc_.bump();
    }
    sc_.fail(start, "unterminated string literal");
  }

  // Any string form starting at the cursor.
  void skip_string() {
    char c = sc_.peek();
    switch (lang_) {
      case SourceLang::Java:
        if (sc_.at("\"\"\"")) {
          sc_.bump(3);
          sc_.skip_until("\"\"\"", true, "text block");
        } else {
          sc_.skip_quoted(c, false);
        }
        return;
      case SourceLang::Go:
        if (c == '`') {
          sc_.bump();
          sc_.skip_until("`", false, "raw string");
        } else {
          sc_.skip_quoted(c, false);
        }
        return;
      case SourceLang::JavaScript:
        if (c == '`') {
          skip_template();
        } else {
          sc_.skip_quoted(c, false);
        }
        return;
      case SourceLang::CSharp: {
        bool dollar = false, verbatim = false;
        while (sc_.peek() == '$' || sc_.peek() == '@') {
          if (sc_.peek() == '$') dollar = true;
          if (sc_.peek() == '@') verbatim = true;
          sc_.bump();
        }
        if (sc_.at("\"\"\"")) {
          std::size_t n = 0;
          while (sc_.peek(n) == '"') ++n;
          sc_.bump(n);
          sc_.skip_until(std::string(n, '"'), false, "raw string");
          return;
        }
        if (sc_.peek() == '\'') {
          sc_.skip_quoted('\'', false);
          return;
        }
        if (dollar) {
          skip_cs_interpolated(verbatim);
        } else if (verbatim) {
          int start = sc_.line_;
          sc_.bump();
          while (true) {
            if (sc_.eof()) sc_.fail(start, "unterminated verbatim string");
            if (sc_.peek() == '"') {
              if (sc_.peek(1) == '"') {
                sc_.bump(2);
                continue;
              }
              sc_.bump();
              break;
            }
            sc_.bump();
          }
        } else {
          sc_.skip_quoted('"', false);
        }
        return;
      }
      case SourceLang::Python:
        break;
    }
    sc_.skip_quoted(c, false);
  }

  void step() {
    char c = sc_.peek();
    std::size_t begin = sc_.i_;
    int line = sc_.line_;
    if (c == '\n' || text::is_space(c)) {
      sc_.bump();
      return;
    }
    if (c == '/' && sc_.peek(1) == '/') {
      while (!sc_.eof() && sc_.peek() != '\n') sc_.bump();
      emit(Tok::Comment, begin, line);
      return;
    }
    if (c == '/' && sc_.peek(1) == '*') {
      sc_.bump(2);
      sc_.skip_until("*/", false, "block comment");
      emit(Tok::Comment, begin, line);
      return;
    }
    if (lang_ == SourceLang::CSharp && c == '#' && only_space_before_on_line(begin)) {
      while (!sc_.eof() && sc_.peek() != '\n') sc_.bump();
      emit(Tok::Comment, begin, line);
      return;
    }
    bool string_start = c == '"' || c == '\'';
    if (lang_ == SourceLang::Go || lang_ == SourceLang::JavaScript) string_start |= c == '`';
    if (lang_ == SourceLang::CSharp && (c == '$' || c == '@')) {
      std::size_t k = 0;
      while (sc_.peek(k) == '$' || sc_.peek(k) == '@') ++k;
      string_start = sc_.peek(k) == '"';
    }
    if (string_start) {
      skip_string();
      emit(Tok::String, begin, line);
      return;
    }
    if (lang_ == SourceLang::JavaScript && c == '/' && regex_allowed() && try_regex()) {
      emit(Tok::String, begin, line);
      return;
    }
    if (lang_ == SourceLang::CSharp && c == '@' && is_ident_start(sc_.peek(1))) {
      sc_.bump();
      while (!sc_.eof() && is_ident_char(sc_.peek())) sc_.bump();
      emit(Tok::Ident, begin, line);
      return;
    }
    if (is_ident_start(c) || (c == '$' && lang_ == SourceLang::JavaScript)) {
      while (!sc_.eof() && (is_ident_char(sc_.peek()) ||
                            (sc_.peek() == '$' && lang_ == SourceLang::JavaScript))) {
        sc_.bump();
      }
      emit(Tok::Ident, begin, line);
      return;
    }
    if (is_digit(c) || (c == '.' && is_digit(sc_.peek(1)))) {
      skip_number(sc_);
      emit(Tok::Number, begin, line);
      return;
    }
    sc_.bump(punct_len(sc_.s_.substr(sc_.i_)));
    emit(Tok::Punct, begin, line);
  }

  Scanner sc_;
  SourceLang lang_;
  std::vector<Token> toks_;
};

bool is_py_string_prefix(std::string_view p) {
  if (p.size() > 2) return false;
  std::string low;
  for (char c : p) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  static constexpr std::string_view ok[] = {"r", "u", "b", "f", "br", "rb", "fr", "rf"};
  return std::find(std::begin(ok), std::end(ok), low) != std::end(ok);
}

class PythonLexer {
 public:
  explicit PythonLexer(std::string_view src) : sc_(src) {}

  std::vector<Token> run() {
    while (!sc_.eof()) step();
    end_logical_line(sc_.i_, sc_.line_);
    return std::move(toks_);
  }

 private:
  int column_of(std::size_t pos) const {
    std::size_t b = pos;
    while (b > 0 && sc_.s_[b - 1] != '\n') --b;
    int col = 0;
    for (std::size_t k = b; k < pos; ++k) {
      if (sc_.s_[k] == '\t') {
        col = (col / 8 + 1) * 8;
      } else {
        ++col;
      }
    }
    return col;
  }

  void emit(Tok kind, std::size_t begin, int line) {
    Token t;
    t.kind = kind;
    t.begin = begin;
    t.end = sc_.i_;
    t.line = line;
    t.end_line = sc_.line_;
    if (kind != Tok::Comment && kind != Tok::Newline) {
      if (at_line_start_) {
        t.line_start = true;
        t.indent = column_of(begin);
        at_line_start_ = false;
        line_has_tokens_ = true;
      }
      if (kind == Tok::Punct && t.end - t.begin == 1) {
        char c = sc_.s_[begin];
        if (c == '(' || c == '[' || c == '{') ++depth_;
        if ((c == ')' || c == ']' || c == '}') && depth_ > 0) --depth_;
      }
    }
    toks_.push_back(t);
  }

  void end_logical_line(std::size_t pos, int line) {
    if (line_has_tokens_) {
      Token t;
      t.kind = Tok::Newline;
      t.begin = t.end = pos;
      t.line = t.end_line = line;
      toks_.push_back(t);
    }
    line_has_tokens_ = false;
    at_line_start_ = true;
  }

  void skip_py_string() {
    int start = sc_.line_;
    char q = sc_.peek();
    if (sc_.peek(1) == q && sc_.peek(2) == q) {
      sc_.bump(3);
      sc_.skip_until(std::string(3, q), true, "triple-quoted string");
      return;
    }
    sc_.bump();
    while (!sc_.eof()) {
      char c = sc_.peek();
      if (c == '\\') {
        sc_.bump(2);
        continue;
      }
      if (c == q) {
        sc_.bump();
        return;
      }
      if (c == '\n') break;
      sc_.bump();
    }
    sc_.fail(start, "unterminated string literal");
  }

  void step() {
    char c = sc_.peek();
    std::size_t begin = sc_.i_;
    int line = sc_.line_;
    if (c == '\n') {
      if (depth_ == 0) end_logical_line(begin, line);
      sc_.bump();
      return;
    }
    if (c == '\\' && (sc_.peek(1) == '\n' || (sc_.peek(1) == '\r' && sc_.peek(2) == '\n'))) {
      sc_.bump(sc_.peek(1) == '\r' ? 3 : 2);
      return;
    }
    if (text::is_space(c)) {
      sc_.bump();
      return;
    }
    if (c == '#') {
      while (!sc_.eof() && sc_.peek() != '\n') sc_.bump();
      emit(Tok::Comment, begin, line);
      return;
    }
    if (c == '"' || c == '\'') {
      skip_py_string();
      emit(Tok::String, begin, line);
      return;
    }
    if (is_ident_start(c)) {
      while (!sc_.eof() && is_ident_char(sc_.peek())) sc_.bump();
      std::string_view word = sc_.s_.substr(begin, sc_.i_ - begin);
      if ((sc_.peek() == '"' || sc_.peek() == '\'') && is_py_string_prefix(word)) {
        skip_py_string();
        emit(Tok::String, begin, line);
        return;
      }
      emit(Tok::Ident, begin, line);
      return;
    }
    if (is_digit(c) || (c == '.' && is_digit(sc_.peek(1)))) {
      skip_number(sc_);
      emit(Tok::Number, begin, line);
      return;
    }
    sc_.bump(punct_len(sc_.s_.substr(sc_.i_)));
    emit(Tok::Punct, begin, line);
  }

  Scanner sc_;
  std::vector<Token> toks_;
  int depth_ = 0;
  bool at_line_start_ = true;
  bool line_has_tokens_ = false;
};

}  // namespace

TokenStream lex_c_family(std::string_view src, SourceLang lang) {
  return TokenStream(src, CFamilyLexer(src, lang).run());
}

TokenStream lex_python(std::string_view src) { return TokenStream(src, PythonLexer(src).run()); }

}  // namespace docsieve::extract
