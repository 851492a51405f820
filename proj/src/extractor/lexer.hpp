#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "docsieve/model.hpp"

namespace docsieve::extract {

enum class Tok { Ident, Number, String, Punct, Comment, Newline };

struct Token {
  Tok kind = Tok::Punct;
  std::size_t begin = 0;
  std::size_t end = 0;
  int line = 1;
  int end_line = 1;
  // Python only: first token of a logical line and its column.
  bool line_start = false;
  int indent = 0;
};

struct LexError : std::runtime_error {
  LexError(int line, const std::string& what) : std::runtime_error(what), line(line) {}
  int line;
};

class TokenStream {
 public:
  TokenStream(std::string_view src, std::vector<Token> toks);

  std::string_view src() const { return src_; }
  std::size_t size() const { return toks_.size(); }
  const Token& operator[](std::size_t i) const { return toks_[i]; }
  std::string_view text(std::size_t i) const {
    return src_.substr(toks_[i].begin, toks_[i].end - toks_[i].begin);
  }
  bool is(std::size_t i, std::string_view s) const {
    return i < toks_.size() && toks_[i].kind != Tok::String && toks_[i].kind != Tok::Comment &&
           text(i) == s;
  }
  bool is_ident(std::size_t i) const { return i < toks_.size() && toks_[i].kind == Tok::Ident; }

  // Index of the bracket matching the one at i, or npos.
  std::size_t partner(std::size_t i) const { return partner_[i]; }

  // Next/previous token that is not a comment (or a Python NEWLINE when
  // skip_newlines is set); npos when none.
  std::size_t next_sig(std::size_t i, bool skip_newlines = false) const;
  std::size_t prev_sig(std::size_t i) const;

  // Source text from token a through token b inclusive.
  std::string_view span(std::size_t a, std::size_t b) const {
    return src_.substr(toks_[a].begin, toks_[b].end - toks_[a].begin);
  }

  // True when a physical line strictly between `from` and `to` holds only
  // whitespace.
  bool blank_line_between(int from, int to) const;

 private:
  std::string_view src_;
  std::vector<Token> toks_;
  std::vector<std::size_t> partner_;
  std::vector<std::size_t> line_starts_;
};

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

TokenStream lex_c_family(std::string_view src, SourceLang lang);
TokenStream lex_python(std::string_view src);

}  // namespace docsieve::extract
