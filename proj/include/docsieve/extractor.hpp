#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "docsieve/model.hpp"

namespace docsieve {

struct SourceFile {
  SourceLang lang = SourceLang::Python;
  std::string repo_id;
  std::string path;
  std::string text;
};

// The file cannot be scanned (unterminated literal, unbalanced brackets, ...).
// Callers skip the file; it never aborts a run.
class ExtractionError : public std::runtime_error {
 public:
  ExtractionError(std::string path, int line, std::string detail);

  const std::string& path() const { return path_; }
  int line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string path_;
  int line_;
  std::string detail_;
};

// Every named function or method in the file, ordered by signature line.
// Throws ExtractionError.
std::vector<FunctionUnit> extract_units(const SourceFile& file);

// Lower-case extension including the dot (".py") -> language.
using ExtensionMap = std::map<std::string, SourceLang, std::less<>>;

ExtensionMap default_extension_map();
std::optional<SourceLang> lang_for_path(std::string_view path, const ExtensionMap& map);

}  // namespace docsieve
