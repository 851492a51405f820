#include <algorithm>
#include <atomic>
#include <fstream>
#include <iterator>
#include <mutex>
#include <thread>

#include "docsieve/pipeline.hpp"
#include "docsieve/records.hpp"

namespace docsieve {
namespace {

struct FileResult {
  FileCounters counters;
  std::optional<SourceLang> lang;  // set when the file was read and extracted
  std::uint64_t functions = 0;
  std::vector<CorpusRecord> records;
};

// Runs fn(i) for i in [0, n) on `workers` threads. Results are written by
// index, so the thread count never changes them.
template <class F>
void parallel_for(std::size_t n, unsigned workers, F&& fn) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < std::min<std::size_t>(workers, n); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

void add(FileCounters& into, const FileCounters& c) {
  into.files_seen += c.files_seen;
  into.files_processed += c.files_processed;
  into.skipped_binary += c.skipped_binary;
  into.skipped_too_large += c.skipped_too_large;
  into.skipped_decode += c.skipped_decode;
  into.skipped_unreadable += c.skipped_unreadable;
  into.extraction_failed += c.extraction_failed;
}

std::string read_text(const fs::path& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(std::string("cannot read ") + what + " " + path.string());
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

template <class Pred>
std::vector<std::size_t> keep_if(const std::vector<std::size_t>& in, Pred pred) {
  std::vector<std::size_t> out;
  std::copy_if(in.begin(), in.end(), std::back_inserter(out), pred);
  return out;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

}  // namespace

StatsReport compute_stats(const StageLog& log) {
  StatsReport report;
  report.files = log.files;
  const auto& recs = log.commented;
  auto count = [&](const std::vector<std::size_t>& stage, SourceLang lang, auto pred) {
    return static_cast<std::uint64_t>(std::count_if(stage.begin(), stage.end(), [&](std::size_t i) {
      return recs[i].unit.lang == lang && pred(recs[i]);
    }));
  };
  auto any = [](const CorpusRecord&) { return true; };
  auto target = [&](const CorpusRecord& r) { return r.nat_lang == log.target_lang; };
  auto non_target = [&](const CorpusRecord& r) { return r.nat_lang != log.target_lang; };
  auto verdict_is = [&](Verdict v) {
    return [&, v](const CorpusRecord& r) { return target(r) && r.verdict.verdict == v; };
  };
  std::vector<std::size_t> all(recs.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  for (auto& [lang, s] : report.per_lang) {
    if (auto it = log.repos.find(lang); it != log.repos.end()) s.repos_total = it->second.size();
    if (auto it = log.repos_with_comments.find(lang); it != log.repos_with_comments.end()) {
      s.repos_with_comments = it->second.size();
    }
    if (auto it = log.functions.find(lang); it != log.functions.end()) s.functions_total = it->second;
    s.functions_with_comments = count(all, lang, any);
    s.comments_total = s.functions_with_comments;
    s.comments_russian = count(log.after_langid, lang, target);
    s.complete = count(log.after_langid, lang, verdict_is(Verdict::Complete));
    s.incomplete = count(log.after_langid, lang, verdict_is(Verdict::Incomplete));
    s.unstructured = count(log.after_langid, lang, verdict_is(Verdict::Unstructured));

    s.excluded_autogenerated = s.comments_total - count(log.after_autogen, lang, any);
    s.excluded_duplicate = count(log.after_autogen, lang, any) - count(log.after_dedup, lang, any);
    s.excluded_unknown_lang = count(log.after_dedup, lang, any) - count(log.after_langid, lang, any);
    s.excluded_other_lang =
        count(log.after_langid, lang, non_target) - count(log.after_retain, lang, non_target);
    s.excluded_not_complete =
        count(log.after_langid, lang, target) - count(log.after_retain, lang, target);
    s.excluded_length = count(log.after_retain, lang, any) - count(log.after_length, lang, any);
    s.survivors = count(log.after_length, lang, any);
  }
  return report;
}

void run_stages(StageLog& log, const PipelineConfig& config, const AutogenFilter& autogen) {
  log.target_lang = config.target_lang;
  const auto& recs = log.commented;
  std::vector<std::size_t> all(recs.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  log.after_autogen = keep_if(all, [&](std::size_t i) {
    return !autogen.is_autogenerated(recs[i].unit.raw_comment.value_or(""), recs[i].unit.lang);
  });
  log.after_dedup = dedup_keep(recs, log.after_autogen);
  log.after_langid =
      keep_if(log.after_dedup, [&](std::size_t i) { return recs[i].nat_lang != NatLang::Unknown; });
  log.after_retain = config.keep_incomplete
                         ? log.after_langid
                         : keep_if(log.after_langid, [&](std::size_t i) {
                             return recs[i].nat_lang == config.target_lang &&
                                    recs[i].verdict.verdict == Verdict::Complete;
                           });
  log.after_length =
      keep_if(log.after_retain, [&](std::size_t i) { return length_filter(recs[i], config); });
}

RunResult process(const PipelineConfig& config, const Detector* detector) {
  if (auto errors = validate(config); !errors.empty()) throw std::invalid_argument(errors.front());

  std::unique_ptr<ProfileDetector> own;
  if (!detector) {
    std::shared_ptr<const DetectorProfile> profile;
    if (config.profile) {
      try {
        profile = std::make_shared<const DetectorProfile>(DetectorProfile::load_file(*config.profile));
      } catch (const ProfileError& e) {
        throw IoError(e.what());
      }
    } else {
      profile = default_profile();
    }
    own = std::make_unique<ProfileDetector>(std::move(profile));
    detector = own.get();
  }
  const AutogenFilter autogen =
      config.autogen_patterns
          ? AutogenFilter(parse_pattern_file(read_text(*config.autogen_patterns, "pattern file")))
          : AutogenFilter();

  StageLog log;
  log.target_lang = config.target_lang;
  const std::vector<InputFile> inputs = list_inputs(config, log.files);

  std::vector<FileResult> results(inputs.size());
  parallel_for(inputs.size(), config.workers, [&](std::size_t i) {
    FileResult& r = results[i];
    auto source = load_source(inputs[i], r.counters);
    if (!source) return;
    std::vector<FunctionUnit> units;
    try {
      units = extract_units(*source);
    } catch (const ExtractionError&) {
      ++r.counters.extraction_failed;
      return;
    }
    r.lang = source->lang;
    r.functions = units.size();
    for (const auto& u : units) {
      if (u.raw_comment) r.records.push_back(build_record(u, *detector));
    }
  });

  // Single-threaded merge in (repo_id, path, line) order.
  for (std::size_t i = 0; i < results.size(); ++i) {
    FileResult& r = results[i];
    add(log.files, r.counters);
    if (!r.lang) continue;
    log.repos[*r.lang].insert(inputs[i].repo_id);
    log.functions[*r.lang] += r.functions;
    if (!r.records.empty()) log.repos_with_comments[*r.lang].insert(inputs[i].repo_id);
    for (auto& rec : r.records) log.commented.push_back(std::move(rec));
  }
  results.clear();

  run_stages(log, config, autogen);

  RunResult result;
  result.report = compute_stats(log);
  for (std::size_t i : log.after_length) result.records.push_back(std::move(log.commented[i]));
  return result;
}

RunResult run(const PipelineConfig& config, const Detector* detector) {
  if (config.out.empty()) throw std::invalid_argument("output path is required");
  RunResult result = process(config, detector);
  std::ofstream out = open_output(config.out);
  for (const auto& r : result.records) out << record_to_jsonl(r) << '\n';
  out.flush();
  if (!out) throw IoError("failed writing " + config.out.string());
  if (config.stats_out) {
    std::ofstream stats = open_output(*config.stats_out);
    stats << stats_to_json_text(result.report);
    stats.flush();
    if (!stats) throw IoError("failed writing " + config.stats_out->string());
  }
  return result;
}

}  // namespace docsieve
