#include "docsieve/records.hpp"

#include <cstdio>

#include "docsieve/text.hpp"

namespace docsieve {
namespace {

using ojson = nlohmann::ordered_json;

ojson opt(const std::optional<std::string>& s) { return s ? ojson(*s) : ojson(nullptr); }

std::optional<std::string> opt_string(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<std::string>();
}

std::string pct(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

}  // namespace

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], text::utf8_length(row[c]));
    }
  }
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string line;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      std::string pad(width[c] - text::utf8_length(rows[r][c]), ' ');
      if (c) line += "  ";
      line += c == 0 ? rows[r][c] + pad : pad + rows[r][c];
    }
    out += std::string(text::trim_right(line)) + '\n';
    if (r == 0) {
      std::size_t total = 0;
      for (auto w : width) total += w;
      out += std::string(total + 2 * (width.size() - 1), '-') + '\n';
    }
  }
  return out;
}

nlohmann::ordered_json to_json(const ParsedDoc& d) {
  ojson j;
  j["style"] = std::string(to_string(d.style));
  j["short_desc"] = d.short_desc;
  j["long_desc"] = opt(d.long_desc);
  j["params"] = ojson::array();
  for (const auto& p : d.params) {
    j["params"].push_back({{"name", p.name}, {"type", opt(p.type_text)}, {"description", p.description}});
  }
  j["returns"] = d.returns ? ojson{{"type", opt(d.returns->type_text)},
                                   {"description", d.returns->description}}
                           : ojson(nullptr);
  j["raises"] = ojson::array();
  for (const auto& r : d.raises) {
    j["raises"].push_back({{"type", r.type_text}, {"description", r.description}});
  }
  return j;
}

ParsedDoc parsed_doc_from_json(const nlohmann::json& j) {
  ParsedDoc d;
  auto style = parse_doc_style(j.at("style").get<std::string>());
  if (!style) throw DatasetFormatError("unknown doc style");
  d.style = *style;
  d.short_desc = j.at("short_desc").get<std::string>();
  d.long_desc = opt_string(j, "long_desc");
  for (const auto& p : j.at("params")) {
    d.params.push_back({p.at("name").get<std::string>(), opt_string(p, "type"),
                        p.at("description").get<std::string>()});
  }
  if (!j.at("returns").is_null()) {
    d.returns = DocReturns{opt_string(j["returns"], "type"),
                           j["returns"].at("description").get<std::string>()};
  }
  for (const auto& r : j.at("raises")) {
    d.raises.push_back({r.at("type").get<std::string>(), r.at("description").get<std::string>()});
  }
  return d;
}

std::string record_to_jsonl(const CorpusRecord& r) {
  ojson j;
  j["repo_id"] = r.unit.provenance.repo_id;
  j["file_path"] = r.unit.provenance.file_path;
  j["line"] = r.unit.provenance.line;
  j["source_lang"] = std::string(to_string(r.unit.lang));
  j["function_name"] = r.unit.signature.function_name;
  j["code"] = r.unit.code_text;
  j["raw_comment"] = opt(r.unit.raw_comment);
  j["normalized_comment"] = r.normalized_comment;
  j["parsed"] = r.parsed ? to_json(*r.parsed) : ojson(nullptr);
  j["verdict"] = std::string(to_string(r.verdict.verdict));
  j["reasons"] = ojson::array();
  for (const auto& reason : r.verdict.reasons) j["reasons"].push_back(reason.to_string());
  j["nat_lang"] = std::string(to_string(r.nat_lang));
  return j.dump();
}

DatasetRow parse_dataset_line(std::string_view line) {
  nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw DatasetFormatError("not a JSON object");
  try {
    DatasetRow row;
    row.repo_id = j.at("repo_id").get<std::string>();
    row.file_path = j.at("file_path").get<std::string>();
    row.line = j.at("line").get<int>();
    row.function_name = j.at("function_name").get<std::string>();
    auto lang = parse_source_lang(j.at("source_lang").get<std::string>());
    auto verdict = parse_verdict(j.at("verdict").get<std::string>());
    auto nat = parse_nat_lang(j.at("nat_lang").get<std::string>());
    if (!lang) throw DatasetFormatError("unknown source_lang");
    if (!verdict) throw DatasetFormatError("unknown verdict");
    if (!nat) throw DatasetFormatError("unknown nat_lang");
    row.lang = *lang;
    row.verdict = *verdict;
    row.nat_lang = *nat;
    return row;
  } catch (const nlohmann::json::exception& e) {
    throw DatasetFormatError(e.what());
  }
}

nlohmann::ordered_json to_json(const StatsReport& report) {
  ojson j;
  const auto& f = report.files;
  j["files"] = {{"files_seen", f.files_seen},
                {"files_processed", f.files_processed},
                {"skipped_binary", f.skipped_binary},
                {"skipped_too_large", f.skipped_too_large},
                {"skipped_decode", f.skipped_decode},
                {"skipped_unreadable", f.skipped_unreadable},
                {"extraction_failed", f.extraction_failed}};
  ojson langs = ojson::object();
  for (const auto& [lang, s] : report.per_lang) {
    langs[std::string(to_string(lang))] = {
        {"repos_total", s.repos_total},
        {"repos_with_comments", s.repos_with_comments},
        {"functions_total", s.functions_total},
        {"functions_with_comments", s.functions_with_comments},
        {"comments_total", s.comments_total},
        {"comments_russian", s.comments_russian},
        {"complete", s.complete},
        {"incomplete", s.incomplete},
        {"unstructured", s.unstructured},
        {"pct_repos_with_comments", s.pct_repos_with_comments()},
        {"pct_functions_with_comments", s.pct_functions_with_comments()},
        {"pct_russian", s.pct_russian()},
        {"pct_complete_of_russian", s.pct_complete_of_russian()},
        {"excluded_autogenerated", s.excluded_autogenerated},
        {"excluded_duplicate", s.excluded_duplicate},
        {"excluded_unknown_lang", s.excluded_unknown_lang},
        {"excluded_other_lang", s.excluded_other_lang},
        {"excluded_not_complete", s.excluded_not_complete},
        {"excluded_length", s.excluded_length},
        {"survivors", s.survivors}};
  }
  j["languages"] = std::move(langs);
  return j;
}

std::string stats_to_json_text(const StatsReport& report) { return to_json(report).dump(2) + "\n"; }

std::string render_stats_table(const StatsReport& report) {
  std::vector<std::vector<std::string>> coverage = {
      {"Language", "Repos", "With comments", "%", "Functions", "With comments", "%", "Russian", "%"}};
  std::vector<std::vector<std::string>> structure = {
      {"Language", "Russian", "Complete", "Incomplete", "Unstructured", "% complete"}};
  std::vector<std::vector<std::string>> stages = {
      {"Language", "Comments", "Autogen", "Duplicate", "Unknown lang", "Other lang", "Not complete",
       "Length", "Kept"}};
  auto n = [](std::uint64_t v) { return std::to_string(v); };
  for (const auto& [lang, s] : report.per_lang) {
    std::string name(to_string(lang));
    coverage.push_back({name, n(s.repos_total), n(s.repos_with_comments), pct(s.pct_repos_with_comments()),
                        n(s.functions_total), n(s.functions_with_comments),
                        pct(s.pct_functions_with_comments()), n(s.comments_russian), pct(s.pct_russian())});
    structure.push_back({name, n(s.comments_russian), n(s.complete), n(s.incomplete), n(s.unstructured),
                         pct(s.pct_complete_of_russian())});
    stages.push_back({name, n(s.comments_total), n(s.excluded_autogenerated), n(s.excluded_duplicate),
                      n(s.excluded_unknown_lang), n(s.excluded_other_lang), n(s.excluded_not_complete),
                      n(s.excluded_length), n(s.survivors)});
  }
  return "Comment coverage\n" + render_table(coverage) + "\nComment structure\n" +
         render_table(structure) + "\nFiltering\n" + render_table(stages);
}

}  // namespace docsieve
