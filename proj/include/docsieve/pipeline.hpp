#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "docsieve/extractor.hpp"
#include "docsieve/langid.hpp"
#include "docsieve/model.hpp"

namespace docsieve {

namespace fs = std::filesystem;

// MANIFEST_INVALID: the run cannot start.
class ManifestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured input (pattern file, profile) could not be read or an output
// could not be written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RepoManifestEntry {
  std::string repo_id;
  fs::path local_path;
  std::optional<std::string> description;
  std::optional<std::string> license_tag;

  bool operator==(const RepoManifestEntry&) const = default;
};

// Relative local_path values resolve against `base`. Throws ManifestError on
// malformed lines, duplicate repo ids or missing directories.
std::vector<RepoManifestEntry> parse_manifest(std::string_view jsonl, const fs::path& base);
std::vector<RepoManifestEntry> load_manifest(const fs::path& path);

inline constexpr std::uintmax_t kMaxSourceBytes = 2 * 1024 * 1024;

struct PipelineConfig {
  // Either a manifest or root directories (each root is one repo named after
  // its directory).
  std::optional<fs::path> manifest;
  std::vector<fs::path> roots;
  std::set<SourceLang> languages = {SourceLang::Python, SourceLang::Java, SourceLang::Go,
                                    SourceLang::CSharp, SourceLang::JavaScript};
  // Inclusive code-point bounds applied to both code and normalized comment.
  std::size_t min_len = 250;
  std::size_t max_len = 1000;
  NatLang target_lang = NatLang::Ru;
  std::optional<fs::path> autogen_patterns;
  std::optional<fs::path> profile;
  fs::path out;
  std::optional<fs::path> stats_out;
  unsigned workers = 1;
  bool keep_incomplete = false;
};

std::vector<std::string> validate(const PipelineConfig& config);

// A file selected for processing, before it is read.
struct InputFile {
  std::string repo_id;
  std::string rel_path;  // '/'-separated, relative to the repo root
  fs::path abs_path;
  SourceLang lang = SourceLang::Python;
};

// Every non-hidden file with an allowed extension, in (repo_id, rel_path)
// order. Counts files_seen.
std::vector<InputFile> list_inputs(const PipelineConfig& config, FileCounters& counters);

// Reads and decodes one input; nullopt (with the matching skip counter
// bumped) for unreadable, oversized, binary or non-UTF-8 files.
std::optional<SourceFile> load_source(const InputFile& input, FileCounters& counters);

struct IngestResult {
  std::vector<SourceFile> files;
  FileCounters counters;
};
IngestResult ingest(const PipelineConfig& config);

std::vector<std::string> default_autogen_patterns();
// One pattern per line; blank lines and `#` comments ignored.
std::vector<std::string> parse_pattern_file(std::string_view text);

class AutogenFilter {
 public:
  AutogenFilter() : AutogenFilter(default_autogen_patterns()) {}
  explicit AutogenFilter(std::vector<std::string> patterns);

  // Case-insensitive substring match; only C# and JavaScript comments qualify.
  bool is_autogenerated(std::string_view raw_comment, SourceLang lang) const;

 private:
  std::vector<std::string> patterns_;  // lower-cased
};

bool is_autogenerated(std::string_view raw_comment, SourceLang lang);

// Drops exact (code, comment) duplicates, then records whose code or comment
// alone repeats an earlier survivor. Order-preserving; first occurrence wins.
std::vector<CorpusRecord> dedup(const std::vector<CorpusRecord>& records);
// Indices of the records dedup keeps, optionally considering only `subset`
// (ascending indices).
std::vector<std::size_t> dedup_keep(const std::vector<CorpusRecord>& records);
std::vector<std::size_t> dedup_keep(const std::vector<CorpusRecord>& records,
                                    const std::vector<std::size_t>& subset);

bool length_filter(const CorpusRecord& record, const PipelineConfig& config);

// Normalizes, parses, detects and classifies one commented unit. `parsed` is
// kept only where the verdict calls for it.
CorpusRecord build_record(const FunctionUnit& unit, const Detector& detector);

// Record indices surviving each stage, in pipeline order, plus the counts that
// precede the record stages.
struct StageLog {
  FileCounters files;
  std::map<SourceLang, std::set<std::string>> repos;
  std::map<SourceLang, std::set<std::string>> repos_with_comments;
  std::map<SourceLang, std::uint64_t> functions;
  std::vector<CorpusRecord> commented;
  std::vector<std::size_t> after_autogen;
  std::vector<std::size_t> after_dedup;
  std::vector<std::size_t> after_langid;
  std::vector<std::size_t> after_retain;
  std::vector<std::size_t> after_length;
  NatLang target_lang = NatLang::Ru;
};

// Applies autogenerated filter, dedup, language exclusion, retention and the
// length filter to `log.commented` (already in canonical order).
void run_stages(StageLog& log, const PipelineConfig& config, const AutogenFilter& autogen);

StatsReport compute_stats(const StageLog& log);

struct RunResult {
  std::vector<CorpusRecord> records;
  StatsReport report;
};

// In-memory run; `detector` defaults to the configured or default profile.
RunResult process(const PipelineConfig& config, const Detector* detector = nullptr);

// process() followed by writing the dataset and, if configured, the stats
// file. Nothing is written when processing fails.
RunResult run(const PipelineConfig& config, const Detector* detector = nullptr);

}  // namespace docsieve
