#pragma once

#include <optional>
#include <string_view>

#include "docsieve/model.hpp"

namespace docsieve {

// Copies signature annotations into untyped GoogleDoc entries; never
// overwrites an existing type and never adds entries.
ParsedDoc backfill_python_types(ParsedDoc doc, const SignatureInfo& sig);

// `doc` is the parse result for non-Go units (nullopt = NOT_PARSEABLE) and
// ignored for Go, whose verdict depends on `normalized` alone. Python docs are
// backfilled before the checks. Reasons come back in canonical order.
StructureVerdict classify(const FunctionUnit& unit, std::string_view normalized,
                          const std::optional<ParsedDoc>& doc);

// Names compare without `*`/`**`/`...` decoration.
std::string bare_param_name(std::string_view name);

// Exception names compare on their last dotted component (`java.io.IOException`
// matches `IOException`); a leading `T:` cref prefix is ignored.
bool same_exception(std::string_view a, std::string_view b);

}  // namespace docsieve
