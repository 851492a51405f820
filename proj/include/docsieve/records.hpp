#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "docsieve/model.hpp"
#include "json.hpp"

namespace docsieve {

nlohmann::ordered_json to_json(const ParsedDoc& doc);
ParsedDoc parsed_doc_from_json(const nlohmann::json& j);

// One dataset line, fields in the published order, no trailing newline.
std::string record_to_jsonl(const CorpusRecord& record);

// The dataset columns cmd_stats needs; signature facts are not serialized.
struct DatasetRow {
  std::string repo_id;
  std::string file_path;
  int line = 0;
  SourceLang lang = SourceLang::Python;
  std::string function_name;
  Verdict verdict = Verdict::Unstructured;
  NatLang nat_lang = NatLang::Unknown;
};

class DatasetFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws DatasetFormatError on malformed JSON or missing/invalid fields.
DatasetRow parse_dataset_line(std::string_view line);

nlohmann::ordered_json to_json(const StatsReport& report);
std::string stats_to_json_text(const StatsReport& report);

// First row is the header; first column left-aligned, the rest right-aligned.
std::string render_table(const std::vector<std::vector<std::string>>& rows);

// Plain-text tables: coverage per language, then the structure of comments in
// the target language.
std::string render_stats_table(const StatsReport& report);

}  // namespace docsieve
