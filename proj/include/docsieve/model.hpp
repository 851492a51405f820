#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace docsieve {

enum class SourceLang { Python, Java, Go, CSharp, JavaScript };

inline constexpr std::array<SourceLang, 5> kAllSourceLangs = {
    SourceLang::Python, SourceLang::Java, SourceLang::Go, SourceLang::CSharp,
    SourceLang::JavaScript};

enum class DocStyle { GoogleDoc, JavaDoc, GoDoc, XmlDoc, JSDoc };

DocStyle style_for(SourceLang lang);
SourceLang lang_for(DocStyle style);

std::string_view to_string(SourceLang lang);
std::string_view to_string(DocStyle style);
// Accepts the canonical names plus common aliases ("py", "cs", "c#", "js").
std::optional<SourceLang> parse_source_lang(std::string_view text);
std::optional<DocStyle> parse_doc_style(std::string_view text);

struct ParamFact {
  std::string name;
  std::optional<std::string> declared_type;
  std::size_t position = 0;

  bool operator==(const ParamFact&) const = default;
};

struct SignatureInfo {
  std::string function_name;
  std::vector<ParamFact> params;
  bool returns_value = false;
  std::optional<std::string> return_type;
  // Java `throws` clause only.
  std::vector<std::string> declared_exceptions;
  // raise/throw statements naming a type (Python, C#, JavaScript).
  std::vector<std::string> observed_raises;

  bool operator==(const SignatureInfo&) const = default;
};

struct Provenance {
  std::string repo_id;
  std::string file_path;
  int line = 1;

  bool operator==(const Provenance&) const = default;
};

struct FunctionUnit {
  SourceLang lang = SourceLang::Python;
  SignatureInfo signature;
  std::string code_text;
  // Verbatim, delimiters included.
  std::optional<std::string> raw_comment;
  Provenance provenance;

  bool operator==(const FunctionUnit&) const = default;
};

struct DocParam {
  std::string name;
  std::optional<std::string> type_text;
  std::string description;

  bool operator==(const DocParam&) const = default;
};

struct DocReturns {
  std::optional<std::string> type_text;
  std::string description;

  bool operator==(const DocReturns&) const = default;
};

struct DocRaises {
  std::string type_text;
  std::string description;

  bool operator==(const DocRaises&) const = default;
};

struct ParsedDoc {
  DocStyle style = DocStyle::GoogleDoc;
  std::string short_desc;
  std::optional<std::string> long_desc;
  std::vector<DocParam> params;
  std::optional<DocReturns> returns;
  std::vector<DocRaises> raises;

  bool operator==(const ParsedDoc&) const = default;
};

enum class Verdict { Complete, Incomplete, Unstructured };

std::string_view to_string(Verdict verdict);
std::optional<Verdict> parse_verdict(std::string_view text);

// Closed set. Declaration order is the canonical sort order of reasons.
enum class ReasonCode {
  NotParseable,
  NoSections,
  GoNameMismatch,
  MissingParamDesc,
  MissingType,
  MissingReturns,
  MissingReturnType,
  UnexpectedReturns,
  MissingRaises,
  PhantomParam,
};

struct Reason {
  ReasonCode code = ReasonCode::NotParseable;
  // Parameter or exception type name for the parameterized codes, else empty.
  std::string subject;

  // "MISSING_PARAM_DESC(b)", "NO_SECTIONS", ...
  std::string to_string() const;
  static std::optional<Reason> parse(std::string_view text);

  auto operator<=>(const Reason&) const = default;
};

std::string_view reason_code_name(ReasonCode code);
bool reason_takes_subject(ReasonCode code);

struct StructureVerdict {
  Verdict verdict = Verdict::Unstructured;
  std::vector<Reason> reasons;

  bool operator==(const StructureVerdict&) const = default;
};

enum class NatLang { Ru, En, Other, Unknown };

std::string_view to_string(NatLang lang);
std::optional<NatLang> parse_nat_lang(std::string_view text);

struct CorpusRecord {
  FunctionUnit unit;
  std::string normalized_comment;
  std::optional<ParsedDoc> parsed;
  StructureVerdict verdict;
  NatLang nat_lang = NatLang::Unknown;

  bool operator==(const CorpusRecord&) const = default;
};

// 100 * numerator / denominator, rounded half-up to one decimal; 0.0 when the
// denominator is zero. Computed in integer arithmetic so that x.x5 boundaries
// are exact.
double percent_1dp(std::uint64_t numerator, std::uint64_t denominator);

struct LangStats {
  std::uint64_t repos_total = 0;
  std::uint64_t repos_with_comments = 0;
  std::uint64_t functions_total = 0;
  std::uint64_t functions_with_comments = 0;
  std::uint64_t comments_total = 0;
  // Comments in the target natural language (Russian by default).
  std::uint64_t comments_russian = 0;
  std::uint64_t complete = 0;
  std::uint64_t incomplete = 0;
  std::uint64_t unstructured = 0;

  // Per-stage exclusions; together with `survivors` they account for every
  // comment in `comments_total`.
  std::uint64_t excluded_autogenerated = 0;
  std::uint64_t excluded_duplicate = 0;
  std::uint64_t excluded_unknown_lang = 0;
  std::uint64_t excluded_other_lang = 0;
  std::uint64_t excluded_not_complete = 0;
  std::uint64_t excluded_length = 0;
  std::uint64_t survivors = 0;

  double pct_repos_with_comments() const {
    return percent_1dp(repos_with_comments, repos_total);
  }
  double pct_functions_with_comments() const {
    return percent_1dp(functions_with_comments, functions_total);
  }
  double pct_russian() const { return percent_1dp(comments_russian, comments_total); }
  double pct_complete_of_russian() const { return percent_1dp(complete, comments_russian); }

  std::uint64_t excluded_total() const {
    return excluded_autogenerated + excluded_duplicate + excluded_unknown_lang +
           excluded_other_lang + excluded_not_complete + excluded_length;
  }

  bool operator==(const LangStats&) const = default;
};

struct FileCounters {
  std::uint64_t files_seen = 0;
  std::uint64_t files_processed = 0;
  std::uint64_t skipped_binary = 0;
  std::uint64_t skipped_too_large = 0;
  std::uint64_t skipped_decode = 0;
  std::uint64_t skipped_unreadable = 0;
  std::uint64_t extraction_failed = 0;

  bool operator==(const FileCounters&) const = default;
};

struct StatsReport {
  std::map<SourceLang, LangStats> per_lang;
  FileCounters files;

  // Always has an entry for each of the five languages.
  StatsReport();

  LangStats& at(SourceLang lang) { return per_lang.at(lang); }
  const LangStats& at(SourceLang lang) const { return per_lang.at(lang); }

  bool operator==(const StatsReport&) const = default;
};

// One message per violated invariant; empty when the value is well-formed.
std::vector<std::string> validate(const FunctionUnit& unit);
std::vector<std::string> validate(const ParsedDoc& doc);
std::vector<std::string> validate(const StructureVerdict& verdict);
std::vector<std::string> validate(const CorpusRecord& record);
std::vector<std::string> validate(const StatsReport& report);

}  // namespace docsieve
