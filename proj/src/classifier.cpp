#include "docsieve/classifier.hpp"

#include <algorithm>

#include "docsieve/docparse.hpp"
#include "docsieve/text.hpp"

namespace docsieve {
namespace {

bool blank(std::string_view s) { return text::trim(s).empty(); }

bool has_type(const std::optional<std::string>& t) { return t && !blank(*t); }

std::string_view last_component(std::string_view name) {
  name = text::trim(name);
  if (name.size() > 2 && name[1] == ':') name.remove_prefix(2);
  std::size_t lt = name.find('<');
  if (lt != std::string_view::npos) name = name.substr(0, lt);
  std::size_t dot = name.rfind('.');
  return dot == std::string_view::npos ? name : name.substr(dot + 1);
}

const DocParam* find_param(const ParsedDoc& doc, std::string_view bare) {
  for (const auto& p : doc.params) {
    if (bare_param_name(p.name) == bare) return &p;
  }
  return nullptr;
}

bool types_required(DocStyle style) {
  return style == DocStyle::GoogleDoc || style == DocStyle::JSDoc;
}

}  // namespace

std::string bare_param_name(std::string_view name) {
  name = text::trim(name);
  while (!name.empty() && name.front() == '*') name.remove_prefix(1);
  if (name.substr(0, 3) == "...") name.remove_prefix(3);
  return std::string(name);
}

bool same_exception(std::string_view a, std::string_view b) {
  return !last_component(a).empty() && last_component(a) == last_component(b);
}

ParsedDoc backfill_python_types(ParsedDoc doc, const SignatureInfo& sig) {
  for (auto& p : doc.params) {
    if (has_type(p.type_text)) continue;
    std::string bare = bare_param_name(p.name);
    for (const auto& s : sig.params) {
      if (bare_param_name(s.name) == bare && has_type(s.declared_type)) {
        p.type_text = s.declared_type;
        break;
      }
    }
  }
  if (doc.returns && !has_type(doc.returns->type_text) && has_type(sig.return_type)) {
    doc.returns->type_text = sig.return_type;
  }
  return doc;
}

StructureVerdict classify(const FunctionUnit& unit, std::string_view normalized,
                          const std::optional<ParsedDoc>& parsed) {
  const auto& sig = unit.signature;
  if (unit.lang == SourceLang::Go) {
    std::string_view t = text::trim_left(normalized);
    std::size_t end = 0;
    while (end < t.size() && !text::is_space(t[end]) && t[end] != '\n') ++end;
    if (end > 0 && t.substr(0, end) == sig.function_name) return {Verdict::Complete, {}};
    return {Verdict::Unstructured, {{ReasonCode::GoNameMismatch, ""}}};
  }
  if (!parsed) return {Verdict::Unstructured, {{ReasonCode::NotParseable, ""}}};
  if (!is_structured(*parsed)) return {Verdict::Unstructured, {{ReasonCode::NoSections, ""}}};

  const ParsedDoc doc =
      unit.lang == SourceLang::Python ? backfill_python_types(*parsed, sig) : *parsed;
  std::vector<Reason> reasons;
  const bool need_types = types_required(doc.style);

  for (const auto& sp : sig.params) {
    std::string bare = bare_param_name(sp.name);
    const DocParam* dp = find_param(doc, bare);
    if (!dp || blank(dp->description)) reasons.push_back({ReasonCode::MissingParamDesc, bare});
    if (dp && need_types && !has_type(dp->type_text)) {
      reasons.push_back({ReasonCode::MissingType, bare});
    }
  }
  for (const auto& dp : doc.params) {
    std::string bare = bare_param_name(dp.name);
    bool in_sig = std::any_of(sig.params.begin(), sig.params.end(), [&](const ParamFact& p) {
      return bare_param_name(p.name) == bare;
    });
    if (!in_sig) reasons.push_back({ReasonCode::PhantomParam, bare});
  }

  const bool documented_returns = doc.returns && !blank(doc.returns->description);
  if (sig.returns_value) {
    if (!documented_returns) reasons.push_back({ReasonCode::MissingReturns, ""});
    if (doc.returns && need_types && !has_type(doc.returns->type_text)) {
      reasons.push_back({ReasonCode::MissingReturnType, ""});
    }
  } else if (documented_returns) {
    reasons.push_back({ReasonCode::UnexpectedReturns, ""});
  }

  const auto& visible =
      unit.lang == SourceLang::Java ? sig.declared_exceptions : sig.observed_raises;
  for (const auto& exc : visible) {
    bool covered = std::any_of(doc.raises.begin(), doc.raises.end(), [&](const DocRaises& r) {
      return !blank(r.description) && same_exception(r.type_text, exc);
    });
    if (!covered) reasons.push_back({ReasonCode::MissingRaises, exc});
  }

  if (reasons.empty()) return {Verdict::Complete, {}};
  std::sort(reasons.begin(), reasons.end());
  reasons.erase(std::unique(reasons.begin(), reasons.end()), reasons.end());
  return {Verdict::Incomplete, std::move(reasons)};
}

}  // namespace docsieve
