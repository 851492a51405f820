#include "docsieve/extractor.hpp"

#include <algorithm>

#include "common.hpp"
#include "lexer.hpp"

namespace docsieve {

ExtractionError::ExtractionError(std::string path, int line, std::string detail)
    : std::runtime_error(path + ":" + std::to_string(line) + ": " + detail),
      path_(std::move(path)),
      line_(line),
      detail_(std::move(detail)) {}

std::vector<FunctionUnit> extract_units(const SourceFile& file) {
  try {
    switch (file.lang) {
      case SourceLang::Python:
        return extract::extract_python(file);
      case SourceLang::Java:
        return extract::extract_java(file);
      case SourceLang::Go:
        return extract::extract_go(file);
      case SourceLang::CSharp:
        return extract::extract_csharp(file);
      case SourceLang::JavaScript:
        return extract::extract_javascript(file);
    }
  } catch (const extract::LexError& e) {
    throw ExtractionError(file.path, e.line, e.what());
  }
  return {};
}

ExtensionMap default_extension_map() {
  return {{".py", SourceLang::Python},     {".java", SourceLang::Java},
          {".go", SourceLang::Go},         {".cs", SourceLang::CSharp},
          {".js", SourceLang::JavaScript}, {".mjs", SourceLang::JavaScript}};
}

std::optional<SourceLang> lang_for_path(std::string_view path, const ExtensionMap& map) {
  std::size_t slash = path.find_last_of('/');
  std::string_view base = slash == std::string_view::npos ? path : path.substr(slash + 1);
  std::size_t dot = base.find_last_of('.');
  if (dot == std::string_view::npos || dot == 0) return std::nullopt;
  std::string ext(base.substr(dot));
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  auto it = map.find(ext);
  if (it == map.end()) return std::nullopt;
  return it->second;
}

}  // namespace docsieve
