#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "docsieve/model.hpp"

namespace docsieve {

// Result of parse_docstring: either a document or the NOT_PARSEABLE marker
// (doc empty, error says why). Warnings never affect the verdict.
struct ParseOutcome {
  std::optional<ParsedDoc> doc;
  std::string error;
  std::vector<std::string> warnings;

  bool ok() const { return doc.has_value(); }
};

// `text` is normalizer output. GoDoc input yields descriptions only.
ParseOutcome parse_docstring(std::string_view text, DocStyle style);

bool is_structured(const ParsedDoc& doc);

// Canonical text in the document's own style; parse_docstring inverts it for
// well-formed documents (single-line descriptions, squashed whitespace).
std::string serialize(const ParsedDoc& doc);

}  // namespace docsieve
