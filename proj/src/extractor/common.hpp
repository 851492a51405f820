#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "docsieve/extractor.hpp"
#include "lexer.hpp"

namespace docsieve::extract {

// A function found by a language walker, before body facts are filled in.
struct RawUnit {
  FunctionUnit unit;
  std::size_t attach_first = npos;  // first header token, annotations included
  std::size_t decl_first = npos;    // first token of code_text
  std::size_t last = npos;          // last token of code_text
  std::size_t body_first = npos;    // body tokens to scan, inclusive
  std::size_t body_last = npos;
};

using TokenRange = std::pair<std::size_t, std::size_t>;

// Ranges of the other units that sit strictly inside [first, last].
std::vector<TokenRange> nested_ranges(const std::vector<RawUnit>& units, std::size_t first,
                                      std::size_t last);

// `/** ... */` ending on the line above (or the line of) `first`, with
// nothing but whitespace between.
std::optional<std::string> block_doc_before(const TokenStream& ts, std::size_t first);

// Contiguous run of own-line `//` comments accepted by `keep`, the last one on
// the line directly above `first`.
std::optional<std::string> line_run_before(const TokenStream& ts, std::size_t first,
                                           const std::function<bool(std::string_view)>& keep);

// Splits the tokens strictly between brackets `open` and its partner on
// top-level commas. `angle` also treats < > as nesting (generic arguments).
std::vector<std::vector<std::size_t>> split_commas(const TokenStream& ts, std::size_t open,
                                                   bool angle);

// Source text covering the given tokens, whitespace squashed.
std::string tokens_text(const TokenStream& ts, const std::vector<std::size_t>& toks,
                        std::size_t from, std::size_t to);

void push_unique(std::vector<std::string>& list, std::string value);

// Fills code_text and provenance and orders the units by line.
std::vector<FunctionUnit> finish_units(std::vector<RawUnit> units, const TokenStream& ts,
                                       const SourceFile& file);

// Per-language entry points.
std::vector<FunctionUnit> extract_python(const SourceFile& file);
std::vector<FunctionUnit> extract_java(const SourceFile& file);
std::vector<FunctionUnit> extract_csharp(const SourceFile& file);
std::vector<FunctionUnit> extract_go(const SourceFile& file);
std::vector<FunctionUnit> extract_javascript(const SourceFile& file);

}  // namespace docsieve::extract
