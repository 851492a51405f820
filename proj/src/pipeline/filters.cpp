#include <algorithm>
#include <set>
#include <unordered_set>

#include "docsieve/classifier.hpp"
#include "docsieve/docparse.hpp"
#include "docsieve/normalizer.hpp"
#include "docsieve/pipeline.hpp"
#include "docsieve/text.hpp"

namespace docsieve {
namespace {

std::string fold_case(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) text::append_utf8(out, text::to_lower(text::next_codepoint(s, i)));
  return out;
}

}  // namespace

std::vector<std::string> validate(const PipelineConfig& c) {
  std::vector<std::string> out;
  if (!c.manifest && c.roots.empty()) out.emplace_back("a manifest or at least one root is required");
  if (c.min_len == 0) out.emplace_back("min_len must be positive");
  if (c.min_len > c.max_len) out.emplace_back("min_len must not exceed max_len");
  if (c.workers < 1) out.emplace_back("workers must be at least 1");
  if (c.languages.empty()) out.emplace_back("language allowlist is empty");
  if (c.target_lang == NatLang::Unknown) out.emplace_back("target language cannot be unknown");
  return out;
}

std::vector<std::string> default_autogen_patterns() {
  return {"<auto-generated", "This code was generated by", "Этот код создан программой",
          "eslint-disable", "webpack", "Generated by"};
}

std::vector<std::string> parse_pattern_file(std::string_view body) {
  std::vector<std::string> out;
  for (auto line : text::split_lines(body)) {
    auto t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.emplace_back(t);
  }
  return out;
}

AutogenFilter::AutogenFilter(std::vector<std::string> patterns) {
  for (const auto& p : patterns) {
    if (!p.empty()) patterns_.push_back(fold_case(p));
  }
}

bool AutogenFilter::is_autogenerated(std::string_view raw, SourceLang lang) const {
  if (lang != SourceLang::CSharp && lang != SourceLang::JavaScript) return false;
  std::string folded = fold_case(raw);
  return std::any_of(patterns_.begin(), patterns_.end(), [&](const std::string& p) {
    return folded.find(p) != std::string::npos;
  });
}

bool is_autogenerated(std::string_view raw, SourceLang lang) {
  static const AutogenFilter filter;
  return filter.is_autogenerated(raw, lang);
}

std::vector<std::size_t> dedup_keep(const std::vector<CorpusRecord>& records) {
  std::vector<std::size_t> all(records.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return dedup_keep(records, all);
}

std::vector<std::size_t> dedup_keep(const std::vector<CorpusRecord>& records,
                                    const std::vector<std::size_t>& subset) {
  std::set<std::pair<std::string_view, std::string_view>> pairs;
  std::vector<std::size_t> first_pass;
  for (std::size_t i : subset) {
    const auto& r = records[i];
    if (pairs.emplace(r.unit.code_text, r.normalized_comment).second) first_pass.push_back(i);
  }
  std::unordered_set<std::string_view> codes, comments;
  std::vector<std::size_t> keep;
  for (std::size_t i : first_pass) {
    const auto& r = records[i];
    if (codes.count(r.unit.code_text) || comments.count(r.normalized_comment)) continue;
    codes.insert(r.unit.code_text);
    comments.insert(r.normalized_comment);
    keep.push_back(i);
  }
  return keep;
}

std::vector<CorpusRecord> dedup(const std::vector<CorpusRecord>& records) {
  std::vector<CorpusRecord> out;
  for (std::size_t i : dedup_keep(records)) out.push_back(records[i]);
  return out;
}

bool length_filter(const CorpusRecord& r, const PipelineConfig& c) {
  auto within = [&](std::string_view s) {
    std::size_t n = text::utf8_length(s);
    return c.min_len <= n && n <= c.max_len;
  };
  return within(r.unit.code_text) && within(r.normalized_comment);
}

CorpusRecord build_record(const FunctionUnit& unit, const Detector& detector) {
  CorpusRecord r;
  r.unit = unit;
  r.normalized_comment = normalize(unit.raw_comment.value_or(""), unit.lang);
  ParseOutcome outcome = parse_docstring(r.normalized_comment, style_for(unit.lang));
  r.verdict = classify(unit, r.normalized_comment, outcome.doc);
  r.nat_lang = detector.detect(prepare_detection_text(outcome.doc, r.normalized_comment, unit.lang));
  if (r.verdict.verdict != Verdict::Unstructured && outcome.doc) {
    r.parsed = unit.lang == SourceLang::Python
                   ? backfill_python_types(std::move(*outcome.doc), unit.signature)
                   : std::move(*outcome.doc);
  }
  return r;
}

}  // namespace docsieve
