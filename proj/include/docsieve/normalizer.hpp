#pragma once

#include <string>
#include <string_view>

#include "docsieve/model.hpp"

namespace docsieve {

// Delimiter-free, whitespace-canonical comment text. Text that carries no
// comment delimiters is treated as an already stripped comment body.
std::string normalize(std::string_view raw_comment, SourceLang lang);

// Best-effort repair of a `///`-stripped C# comment body: known tags are
// lower-cased, unclosed ones closed, orphan closers dropped.
std::string repair_xml(std::string_view body);

// Removes HTML markup from Javadoc/JSDoc prose, keeping inner text. Generic
// arguments (`List<String>`), JSDoc `{...}` types and `@param <T>` survive.
std::string strip_html(std::string_view text);

// `{@link X}` -> `X`; the tag name is dropped, inner text kept.
std::string unwrap_inline_tags(std::string_view text);

}  // namespace docsieve
