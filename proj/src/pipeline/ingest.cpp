#include <algorithm>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <system_error>

#include "docsieve/pipeline.hpp"
#include "docsieve/text.hpp"
#include "json.hpp"

namespace docsieve {
namespace {

bool hidden(const fs::path& p) {
  std::string name = p.filename().string();
  return !name.empty() && name[0] == '.';
}

std::optional<std::string> optional_string(const nlohmann::json& j, const char* key, int lineno) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw ManifestError("manifest line " + std::to_string(lineno) + ": '" + key +
                        "' must be a string");
  }
  return it->get<std::string>();
}

void list_repo(const std::string& repo_id, const fs::path& root, const PipelineConfig& config,
               const ExtensionMap& extensions, std::vector<InputFile>& out, FileCounters& counters) {
  std::error_code ec;
  fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
  if (ec) {
    ++counters.skipped_unreadable;
    return;
  }
  for (fs::recursive_directory_iterator end; it != end; it.increment(ec)) {
    if (ec) {
      ++counters.skipped_unreadable;
      ec.clear();
      continue;
    }
    const fs::path& p = it->path();
    if (hidden(p)) {
      if (it->is_directory(ec)) it.disable_recursion_pending();
      continue;
    }
    if (!it->is_regular_file(ec)) continue;
    auto lang = lang_for_path(p.string(), extensions);
    if (!lang || !config.languages.count(*lang)) continue;
    ++counters.files_seen;
    out.push_back({repo_id, p.lexically_relative(root).generic_string(), p, *lang});
  }
}

}  // namespace

std::vector<RepoManifestEntry> parse_manifest(std::string_view jsonl, const fs::path& base) {
  std::vector<RepoManifestEntry> entries;
  std::set<std::string> ids;
  int lineno = 0;
  for (auto line : text::split_lines(jsonl)) {
    ++lineno;
    if (text::trim(line).empty()) continue;
    auto fail = [&](const std::string& why) {
      throw ManifestError("manifest line " + std::to_string(lineno) + ": " + why);
    };
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) fail("not a JSON object");
    if (!j.contains("repo_id") || !j["repo_id"].is_string() || j["repo_id"].get<std::string>().empty()) {
      fail("missing repo_id");
    }
    if (!j.contains("local_path") || !j["local_path"].is_string()) fail("missing local_path");
    RepoManifestEntry e;
    e.repo_id = j["repo_id"].get<std::string>();
    e.local_path = j["local_path"].get<std::string>();
    if (e.local_path.is_relative()) e.local_path = base / e.local_path;
    e.description = optional_string(j, "description", lineno);
    e.license_tag = optional_string(j, "license_tag", lineno);
    if (!ids.insert(e.repo_id).second) fail("duplicate repo_id '" + e.repo_id + "'");
    std::error_code ec;
    if (!fs::is_directory(e.local_path, ec)) {
      fail("repo '" + e.repo_id + "' path is not a readable directory: " + e.local_path.string());
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<RepoManifestEntry> load_manifest(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ManifestError("cannot read manifest " + path.string());
  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_manifest(body, path.parent_path());
}

std::vector<InputFile> list_inputs(const PipelineConfig& config, FileCounters& counters) {
  std::vector<std::pair<std::string, fs::path>> repos;
  if (config.manifest) {
    for (auto& e : load_manifest(*config.manifest)) repos.emplace_back(e.repo_id, e.local_path);
  }
  for (const auto& root : config.roots) {
    std::error_code ec;
    if (!fs::is_directory(root, ec)) throw ManifestError("root is not a directory: " + root.string());
    fs::path name = fs::absolute(root).lexically_normal();
    if (!name.has_filename()) name = name.parent_path();
    repos.emplace_back(name.filename().string(), root);
  }
  std::set<std::string> ids;
  for (const auto& r : repos) {
    if (!ids.insert(r.first).second) throw ManifestError("duplicate repo_id '" + r.first + "'");
  }

  const ExtensionMap extensions = default_extension_map();
  std::vector<InputFile> out;
  for (const auto& [id, root] : repos) list_repo(id, root, config, extensions, out, counters);
  std::sort(out.begin(), out.end(), [](const InputFile& a, const InputFile& b) {
    return std::tie(a.repo_id, a.rel_path) < std::tie(b.repo_id, b.rel_path);
  });
  return out;
}

std::optional<SourceFile> load_source(const InputFile& input, FileCounters& counters) {
  std::error_code ec;
  auto size = fs::file_size(input.abs_path, ec);
  if (ec) {
    ++counters.skipped_unreadable;
    return std::nullopt;
  }
  if (size > kMaxSourceBytes) {
    ++counters.skipped_too_large;
    return std::nullopt;
  }
  std::ifstream in(input.abs_path, std::ios::binary);
  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (!in.good() && !in.eof()) {
    ++counters.skipped_unreadable;
    return std::nullopt;
  }
  if (body.find('\0') != std::string::npos) {
    ++counters.skipped_binary;
    return std::nullopt;
  }
  if (!text::is_valid_utf8(body)) {
    ++counters.skipped_decode;
    return std::nullopt;
  }
  if (body.rfind("\xEF\xBB\xBF", 0) == 0) body.erase(0, 3);
  ++counters.files_processed;
  return SourceFile{input.lang, input.repo_id, input.rel_path, std::move(body)};
}

IngestResult ingest(const PipelineConfig& config) {
  IngestResult r;
  for (const auto& input : list_inputs(config, r.counters)) {
    if (auto f = load_source(input, r.counters)) r.files.push_back(std::move(*f));
  }
  return r;
}

}  // namespace docsieve
