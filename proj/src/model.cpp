#include "docsieve/model.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace docsieve {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

constexpr std::array<std::pair<ReasonCode, std::string_view>, 10> kReasonNames = {{
    {ReasonCode::NotParseable, "NOT_PARSEABLE"},
    {ReasonCode::NoSections, "NO_SECTIONS"},
    {ReasonCode::GoNameMismatch, "GO_NAME_MISMATCH"},
    {ReasonCode::MissingParamDesc, "MISSING_PARAM_DESC"},
    {ReasonCode::MissingType, "MISSING_TYPE"},
    {ReasonCode::MissingReturns, "MISSING_RETURNS"},
    {ReasonCode::MissingReturnType, "MISSING_RETURN_TYPE"},
    {ReasonCode::UnexpectedReturns, "UNEXPECTED_RETURNS"},
    {ReasonCode::MissingRaises, "MISSING_RAISES"},
    {ReasonCode::PhantomParam, "PHANTOM_PARAM"},
}};

}  // namespace

DocStyle style_for(SourceLang lang) {
  switch (lang) {
    case SourceLang::Python: return DocStyle::GoogleDoc;
    case SourceLang::Java: return DocStyle::JavaDoc;
    case SourceLang::Go: return DocStyle::GoDoc;
    case SourceLang::CSharp: return DocStyle::XmlDoc;
    case SourceLang::JavaScript: return DocStyle::JSDoc;
  }
  return DocStyle::GoogleDoc;
}

SourceLang lang_for(DocStyle style) {
  switch (style) {
    case DocStyle::GoogleDoc: return SourceLang::Python;
    case DocStyle::JavaDoc: return SourceLang::Java;
    case DocStyle::GoDoc: return SourceLang::Go;
    case DocStyle::XmlDoc: return SourceLang::CSharp;
    case DocStyle::JSDoc: return SourceLang::JavaScript;
  }
  return SourceLang::Python;
}

std::string_view to_string(SourceLang lang) {
  switch (lang) {
    case SourceLang::Python: return "Python";
    case SourceLang::Java: return "Java";
    case SourceLang::Go: return "Go";
    case SourceLang::CSharp: return "CSharp";
    case SourceLang::JavaScript: return "JavaScript";
  }
  return "?";
}

std::string_view to_string(DocStyle style) {
  switch (style) {
    case DocStyle::GoogleDoc: return "GoogleDoc";
    case DocStyle::JavaDoc: return "JavaDoc";
    case DocStyle::GoDoc: return "GoDoc";
    case DocStyle::XmlDoc: return "XmlDoc";
    case DocStyle::JSDoc: return "JSDoc";
  }
  return "?";
}

std::optional<SourceLang> parse_source_lang(std::string_view text) {
  const std::string t = lower(text);
  if (t == "python" || t == "py") return SourceLang::Python;
  if (t == "java") return SourceLang::Java;
  if (t == "go" || t == "golang") return SourceLang::Go;
  if (t == "csharp" || t == "cs" || t == "c#") return SourceLang::CSharp;
  if (t == "javascript" || t == "js") return SourceLang::JavaScript;
  return std::nullopt;
}

std::optional<DocStyle> parse_doc_style(std::string_view text) {
  for (DocStyle s : {DocStyle::GoogleDoc, DocStyle::JavaDoc, DocStyle::GoDoc, DocStyle::XmlDoc,
                     DocStyle::JSDoc}) {
    if (lower(to_string(s)) == lower(text)) return s;
  }
  return std::nullopt;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Complete: return "Complete";
    case Verdict::Incomplete: return "Incomplete";
    case Verdict::Unstructured: return "Unstructured";
  }
  return "?";
}

std::optional<Verdict> parse_verdict(std::string_view text) {
  for (Verdict v : {Verdict::Complete, Verdict::Incomplete, Verdict::Unstructured}) {
    if (to_string(v) == text) return v;
  }
  return std::nullopt;
}

std::string_view to_string(NatLang lang) {
  switch (lang) {
    case NatLang::Ru: return "ru";
    case NatLang::En: return "en";
    case NatLang::Other: return "other";
    case NatLang::Unknown: return "unknown";
  }
  return "?";
}

std::optional<NatLang> parse_nat_lang(std::string_view text) {
  const std::string t = lower(text);
  for (NatLang l : {NatLang::Ru, NatLang::En, NatLang::Other, NatLang::Unknown}) {
    if (to_string(l) == t) return l;
  }
  return std::nullopt;
}

std::string_view reason_code_name(ReasonCode code) {
  for (const auto& [c, name] : kReasonNames) {
    if (c == code) return name;
  }
  return "?";
}

bool reason_takes_subject(ReasonCode code) {
  return code == ReasonCode::MissingParamDesc || code == ReasonCode::MissingType ||
         code == ReasonCode::MissingRaises || code == ReasonCode::PhantomParam;
}

std::string Reason::to_string() const {
  std::string out(reason_code_name(code));
  if (reason_takes_subject(code)) {
    out += '(';
    out += subject;
    out += ')';
  }
  return out;
}

std::optional<Reason> Reason::parse(std::string_view text) {
  std::string_view name = text;
  std::string_view subject;
  const auto open = text.find('(');
  if (open != std::string_view::npos) {
    if (text.back() != ')') return std::nullopt;
    name = text.substr(0, open);
    subject = text.substr(open + 1, text.size() - open - 2);
  }
  for (const auto& [code, n] : kReasonNames) {
    if (n != name) continue;
    if (reason_takes_subject(code) != (open != std::string_view::npos)) return std::nullopt;
    return Reason{code, std::string(subject)};
  }
  return std::nullopt;
}

double percent_1dp(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) return 0.0;
  // tenths of a percent, half-up: floor((1000 n / d) + 1/2)
  const unsigned __int128 n = numerator;
  const unsigned __int128 d = denominator;
  const auto tenths = static_cast<std::uint64_t>((2000 * n + d) / (2 * d));
  return static_cast<double>(tenths) / 10.0;
}

StatsReport::StatsReport() {
  for (SourceLang l : kAllSourceLangs) per_lang.emplace(l, LangStats{});
}

std::vector<std::string> validate(const FunctionUnit& unit) {
  std::vector<std::string> out;
  const auto& sig = unit.signature;
  if (sig.function_name.empty()) out.emplace_back("function_name must be nonempty");
  for (std::size_t i = 0; i < sig.params.size(); ++i) {
    if (sig.params[i].name.empty()) out.emplace_back("parameter name must be nonempty");
    if (sig.params[i].position != i) {
      out.emplace_back("parameter positions must be contiguous from 0");
      break;
    }
  }
  if (!sig.declared_exceptions.empty() && unit.lang != SourceLang::Java) {
    out.emplace_back("declared_exceptions is only populated for Java");
  }
  if (!sig.observed_raises.empty() &&
      (unit.lang == SourceLang::Go || unit.lang == SourceLang::Java)) {
    out.emplace_back("observed_raises must be empty for Go and Java");
  }
  if (unit.code_text.empty()) out.emplace_back("code_text must be nonempty");
  if (unit.provenance.line < 1) out.emplace_back("provenance line must be >= 1");
  return out;
}

std::vector<std::string> validate(const ParsedDoc& doc) {
  std::vector<std::string> out;
  std::set<std::string> names;
  for (const auto& p : doc.params) {
    if (p.name.empty()) out.emplace_back("doc parameter name must be nonempty");
    if (!names.insert(p.name).second) out.emplace_back("duplicate doc parameter: " + p.name);
  }
  if (doc.style == DocStyle::GoDoc &&
      (!doc.params.empty() || doc.returns.has_value() || !doc.raises.empty())) {
    out.emplace_back("GoDoc documents carry no params/returns/raises");
  }
  return out;
}

std::vector<std::string> validate(const StructureVerdict& verdict) {
  std::vector<std::string> out;
  if (verdict.verdict == Verdict::Complete && !verdict.reasons.empty()) {
    out.emplace_back("Complete verdict must have empty reasons");
  }
  if (verdict.verdict != Verdict::Complete && verdict.reasons.empty()) {
    out.emplace_back("Non-complete verdict must have at least one reason");
  }
  return out;
}

std::vector<std::string> validate(const CorpusRecord& record) {
  std::vector<std::string> out = validate(record.unit);
  auto add = [&out](std::vector<std::string> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()),
               std::make_move_iterator(more.end()));
  };
  add(validate(record.verdict));
  const DocStyle style = style_for(record.unit.lang);
  if (record.parsed) {
    add(validate(*record.parsed));
    if (record.parsed->style != style) out.emplace_back("parsed style does not match language");
  }
  if (!record.unit.raw_comment) out.emplace_back("record requires a raw comment");
  const bool expect_parsed =
      style == DocStyle::GoDoc ? record.verdict.verdict == Verdict::Complete
                               : record.verdict.verdict != Verdict::Unstructured;
  if (record.parsed.has_value() != expect_parsed) {
    out.emplace_back(expect_parsed ? "parsed document missing for structured verdict"
                                   : "parsed document present for unstructured verdict");
  }
  if (style == DocStyle::GoDoc && record.verdict.verdict == Verdict::Incomplete) {
    out.emplace_back("Go has no Incomplete category");
  }
  return out;
}

std::vector<std::string> validate(const StatsReport& report) {
  std::vector<std::string> out;
  for (SourceLang lang : kAllSourceLangs) {
    const auto it = report.per_lang.find(lang);
    if (it == report.per_lang.end()) {
      out.push_back(std::string("missing stats for ") + std::string(to_string(lang)));
      continue;
    }
    const LangStats& s = it->second;
    const std::string tag = std::string(to_string(lang)) + ": ";
    if (s.complete + s.incomplete + s.unstructured > s.comments_russian) {
      out.push_back(tag + "complete + incomplete + unstructured exceeds comments_russian");
    }
    if (s.repos_with_comments > s.repos_total) {
      out.push_back(tag + "repos_with_comments exceeds repos_total");
    }
    if (s.functions_with_comments > s.functions_total) {
      out.push_back(tag + "functions_with_comments exceeds functions_total");
    }
    if (s.comments_russian > s.comments_total) {
      out.push_back(tag + "comments_russian exceeds comments_total");
    }
    if (lang == SourceLang::Go && s.incomplete != 0) {
      out.push_back(tag + "Go has no Incomplete category");
    }
  }
  return out;
}

}  // namespace docsieve
