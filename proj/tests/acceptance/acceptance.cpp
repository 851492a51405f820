// Acceptance gate: one PASS/FAIL line per criterion. Exit status is non-zero
// if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <regex>
#include <set>
#include <sstream>

#include "docgen.hpp"
#include "docsieve/classifier.hpp"
#include "docsieve/cli.hpp"
#include "docsieve/docparse.hpp"
#include "docsieve/extractor.hpp"
#include "docsieve/langid.hpp"
#include "docsieve/normalizer.hpp"
#include "docsieve/pipeline.hpp"
#include "docsieve/records.hpp"
#include "docsieve/text.hpp"
#include "recordgen.hpp"
#include "test_util.hpp"

using namespace docsieve;

namespace {

// Pinned tolerances.
constexpr double kStatsSeconds = 1.0;
constexpr double kGoldSeconds = 10.0;
constexpr double kRoundTripSeconds = 5.0;
constexpr int kRoundTripPerStyle = 500;
constexpr int kGoPairs = 1000;
constexpr std::size_t kOracleMaxParams = 5;
constexpr double kMinDetectorAccuracy = 0.95;
constexpr int kCyrillicStrings = 1000;
constexpr int kRecordSets = 1000;
constexpr int kThroughputFiles = 1000;
constexpr std::size_t kThroughputMaxFileBytes = 100 * 1024;
constexpr double kThroughputSeconds = 60.0;
constexpr std::size_t kMinGoldFilesPerLang = 20;

struct Outcome {
  bool pass = true;
  std::string detail;
};

const std::vector<std::pair<std::string, SourceLang>> kGoldDirs = {
    {"python", SourceLang::Python}, {"java", SourceLang::Java}, {"go", SourceLang::Go},
    {"csharp", SourceLang::CSharp}, {"javascript", SourceLang::JavaScript}};

std::string fmt1(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

// 1. Percentages from the published counts.
Outcome stats_arithmetic() {
  struct Case {
    const char* what;
    std::uint64_t num, den;
    double expected;
  };
  const Case cases[] = {{"Go complete", 10880, 19276, 56.4},
                        {"Python complete", 2176, 150255, 1.5},
                        {"Java complete", 29367, 98622, 29.8},
                        {"Python repos", 18535, 64440, 28.8},
                        {"Python functions", 305187, 1627726, 18.7}};
  Outcome o;
  int ok = 0;
  std::string misses;
  for (const auto& c : cases) {
    LangStats s;
    double got = 0;
    if (std::string(c.what).find("repos") != std::string::npos) {
      s.repos_with_comments = c.num;
      s.repos_total = c.den;
      got = s.pct_repos_with_comments();
    } else if (std::string(c.what).find("functions") != std::string::npos) {
      s.functions_with_comments = c.num;
      s.functions_total = c.den;
      got = s.pct_functions_with_comments();
    } else {
      s.complete = c.num;
      s.comments_russian = c.den;
      got = s.pct_complete_of_russian();
    }
    if (got == c.expected) {
      ++ok;
    } else {
      o.pass = false;
      misses += std::string("; ") + c.what + " " + std::to_string(c.num) + "/" + std::to_string(c.den) +
                " -> " + fmt1(got) + ", expected " + fmt1(c.expected);
    }
  }
  o.detail = std::to_string(ok) + "/5 percentages reproduced" + misses;
  return o;
}

// 2. Gold corpus: every labelled fact of every unit.
Outcome gold_corpus() {
  Outcome o;
  int units = 0, mismatches = 0;
  std::string first_miss;
  auto miss = [&](const std::string& where) {
    ++mismatches;
    if (first_miss.empty()) first_miss = where;
  };
  for (const auto& [dir, lang] : kGoldDirs) {
    auto sources = testutil::gold_sources(dir);
    if (sources.size() < kMinGoldFilesPerLang) {
      o.pass = false;
      miss(dir + ": only " + std::to_string(sources.size()) + " files");
    }
    for (const auto& src : sources) {
      std::string text = testutil::read_file(src);
      auto gold = testutil::read_json(testutil::gold_labels(src))["units"];
      std::vector<FunctionUnit> got;
      try {
        got = extract_units(SourceFile{lang, "gold", src.filename().string(), text});
      } catch (const ExtractionError& e) {
        miss(src.filename().string() + ": " + e.what());
        continue;
      }
      if (got.size() != gold.size()) {
        miss(src.filename().string() + ": unit count");
        continue;
      }
      for (std::size_t k = 0; k < got.size(); ++k) {
        ++units;
        const auto& u = got[k];
        const auto& g = gold[k];
        std::string where = src.filename().string() + ":" + g["name"].get<std::string>();
        std::vector<std::string> params;
        for (const auto& p : u.signature.params) params.push_back(p.name);
        const auto& raises =
            lang == SourceLang::Java ? u.signature.declared_exceptions : u.signature.observed_raises;
        bool ok = u.signature.function_name == g["name"].get<std::string>() &&
                  u.provenance.line == g["line"].get<int>() &&
                  params == g["params"].get<std::vector<std::string>>() &&
                  u.signature.returns_value == g["returns_value"].get<bool>() &&
                  raises == g["raises"].get<std::vector<std::string>>() &&
                  u.raw_comment.has_value() == g["comment"].get<bool>();
        if (ok && u.raw_comment) {
          CorpusRecord r = build_record(u, ProfileDetector(default_profile()));
          std::vector<std::string> reasons;
          for (const auto& reason : r.verdict.reasons) reasons.push_back(reason.to_string());
          ok = std::string(to_string(r.verdict.verdict)) == g["verdict"].get<std::string>() &&
               reasons == g["reasons"].get<std::vector<std::string>>() &&
               std::string(to_string(r.nat_lang)) == g["nat_lang"].get<std::string>();
        }
        if (!ok) miss(where);
      }
    }
  }
  o.pass = o.pass && mismatches == 0;
  o.detail = std::to_string(units - mismatches) + "/" + std::to_string(units) + " units agree";
  if (!first_miss.empty()) o.detail += "; first mismatch " + first_miss;
  return o;
}

// 3. parse(serialize(d)) == d.
Outcome round_trip() {
  Outcome o;
  int failures = 0, total = 0;
  for (DocStyle style : {DocStyle::GoogleDoc, DocStyle::JavaDoc, DocStyle::JSDoc, DocStyle::XmlDoc}) {
    docgen::DocGenerator gen(4242 + static_cast<int>(style));
    for (int i = 0; i < kRoundTripPerStyle; ++i) {
      ParsedDoc d = gen.next(style);
      auto back = parse_docstring(serialize(d), style);
      ++total;
      if (!back.ok() || *back.doc != d) ++failures;
    }
  }
  o.pass = failures == 0;
  o.detail = std::to_string(failures) + " failures in " + std::to_string(total) + " documents";
  return o;
}

// 4. Go: Complete iff the first word is the function name.
Outcome go_rule() {
  std::mt19937 rng(99);
  const std::vector<std::string> names = {"Sum", "ParseURL", "New", "readAll", "Do", "HTTPGet", "max"};
  const std::vector<std::string> words = {"возвращает", "вычисляет", "Функция", "Метод", "создаёт",
                                          "значение", "для", "списка", "Returns", "the"};
  auto pick = [&](const std::vector<std::string>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  Outcome o;
  int failures = 0;
  for (int i = 0; i < kGoPairs; ++i) {
    std::string name = pick(names);
    std::string first;
    switch (i % 6) {
      case 0: case 1: first = name; break;
      case 2: first = name + ","; break;
      case 3: first = pick(words); break;
      case 4: first = name + "s"; break;
      default: first = pick(names); break;
    }
    std::string comment = first;
    int extra = std::uniform_int_distribution<int>(0, 8)(rng);
    for (int k = 0; k < extra; ++k) comment += (k % 4 == 3 ? "\n" : " ") + pick(words);
    std::string src = "package p\n\n";
    for (auto line : text::split_lines(comment)) src += "// " + std::string(line) + "\n";
    src += "func " + name + "(a int) int { return a }\n";

    bool expected = text::squash_whitespace(comment).substr(0, name.size() + 1) == name + " " ||
                    text::squash_whitespace(comment) == name;
    auto units = extract_units(SourceFile{SourceLang::Go, "r", "p.go", src});
    if (units.size() != 1 || !units[0].raw_comment) {
      ++failures;
      continue;
    }
    std::string norm = normalize(*units[0].raw_comment, SourceLang::Go);
    bool complete = classify(units[0], norm, std::nullopt).verdict == Verdict::Complete;
    if (complete != expected) ++failures;
  }
  o.pass = failures == 0;
  o.detail = std::to_string(failures) + " failures in " + std::to_string(kGoPairs) + " pairs";
  return o;
}

// 5. Regex-based coverage check, written without the parser.
std::string regex_escape(const std::string& s) {
  static const std::regex special(R"([.^$|()\[\]{}*+?\\])");
  return std::regex_replace(s, special, R"(\$&)");
}

std::string strip_stars(std::string s) {
  while (!s.empty() && s[0] == '*') s.erase(0, 1);
  if (s.rfind("...", 0) == 0) s.erase(0, 3);
  return s;
}

bool oracle_covered(DocStyle style, const std::string& doc, const std::string& raw_name) {
  const std::string name = regex_escape(strip_stars(raw_name));
  std::vector<std::string> lines;
  for (auto l : text::split_lines(doc)) lines.emplace_back(l);
  auto indent = [](const std::string& l) { return l.find_first_not_of(' '); };
  auto blank = [](const std::string& l) { return l.find_first_not_of(" \t") == std::string::npos; };
  std::optional<bool> covered;  // last entry wins
  switch (style) {
    case DocStyle::GoogleDoc: {
      static const std::regex header(R"(^(Args|Arguments):\s*$)");
      bool in_args = false;
      std::regex entry("^\\s+\\*{0,2}" + name + "(\\s*\\([^)]*\\))?\\s*:(.*)$");
      for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (!blank(l) && indent(l) == 0) in_args = std::regex_match(l, header);
        std::smatch m;
        if (in_args && std::regex_match(l, m, entry)) {
          bool has = !blank(m[2].str());
          if (!has && i + 1 < lines.size() && !blank(lines[i + 1])) has = indent(lines[i + 1]) > indent(l);
          covered = has;
        }
      }
      break;
    }
    case DocStyle::JavaDoc: {
      std::regex entry("^\\s*@param\\s+" + name + "(\\s+(.*))?$");
      for (const auto& l : lines) {
        std::smatch m;
        if (std::regex_match(l, m, entry)) covered = !blank(m[2].str());
      }
      break;
    }
    case DocStyle::JSDoc: {
      std::regex entry("^\\s*@(param|arg|argument)\\s+(\\{.*\\}\\s*)?\\[?(\\.\\.\\.)?" + name +
                       "(=[^\\]]*)?\\]?(\\s+-)?(\\s+(.*))?$");
      for (const auto& l : lines) {
        std::smatch m;
        if (std::regex_match(l, m, entry)) covered = !blank(m[7].str());
      }
      break;
    }
    case DocStyle::XmlDoc: {
      std::regex entry("<param\\s+name\\s*=\\s*\"" + name + "\"\\s*>([\\s\\S]*?)</param>");
      for (std::sregex_iterator it(doc.begin(), doc.end(), entry), end; it != end; ++it) {
        covered = !blank(std::regex_replace((*it)[1].str(), std::regex("<[^>]*>"), ""));
      }
      break;
    }
    case DocStyle::GoDoc: break;
  }
  return covered.value_or(false);
}

Outcome param_oracle() {
  Outcome o;
  int checked = 0, disagreements = 0;
  std::string first;
  for (const auto& [dir, lang] : kGoldDirs) {
    if (lang == SourceLang::Go) continue;
    for (const auto& src : testutil::gold_sources(dir)) {
      auto units = extract_units(SourceFile{lang, "gold", src.filename().string(), testutil::read_file(src)});
      for (const auto& u : units) {
        if (!u.raw_comment || u.signature.params.size() > kOracleMaxParams) continue;
        std::string norm = normalize(*u.raw_comment, lang);
        auto parsed = parse_docstring(norm, style_for(lang));
        auto verdict = classify(u, norm, parsed.doc);
        if (verdict.verdict == Verdict::Unstructured) continue;
        std::set<std::string> classified, oracle;
        for (const auto& r : verdict.reasons) {
          if (r.code == ReasonCode::MissingParamDesc) classified.insert(r.subject);
        }
        for (const auto& p : u.signature.params) {
          if (!oracle_covered(style_for(lang), norm, p.name)) oracle.insert(strip_stars(p.name));
        }
        ++checked;
        if (classified != oracle) {
          ++disagreements;
          if (first.empty()) first = src.filename().string() + ":" + u.signature.function_name;
        }
      }
    }
  }
  o.pass = disagreements == 0 && checked > 0;
  o.detail = std::to_string(checked - disagreements) + "/" + std::to_string(checked) + " functions agree";
  if (!first.empty()) o.detail += "; first disagreement " + first;
  return o;
}

// 6. Detector accuracy and the Cyrillic shortcut.
Outcome detector() {
  Outcome o;
  std::istringstream in(testutil::read_file(testutil::fixture("langid/samples.tsv")));
  int total = 0, correct = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    ParsedDoc d;
    d.short_desc = line.substr(tab + 1);
    ++total;
    correct += detect(prepare_detection_text(d, "", SourceLang::Python)) ==
               parse_nat_lang(line.substr(0, tab));
  }
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letter(0x410, 0x44F), len(1, 60), gap(0, 5);
  int shortcut_ok = 0;
  for (int i = 0; i < kCyrillicStrings; ++i) {
    std::string s;
    int n = len(rng) + 2;
    for (int k = 0; k < n; ++k) {
      text::append_utf8(s, char32_t(letter(rng)));
      if (gap(rng) == 0) s += ' ';
    }
    shortcut_ok += detect(s) == NatLang::Ru;
  }
  double accuracy = total ? double(correct) / total : 0;
  o.pass = total == 200 && accuracy >= kMinDetectorAccuracy && shortcut_ok == kCyrillicStrings;
  o.detail = "accuracy " + std::to_string(correct) + "/" + std::to_string(total) + ", shortcut " +
             std::to_string(shortcut_ok) + "/" + std::to_string(kCyrillicStrings);
  return o;
}

// 7. Byte-identical output with 1 and 8 workers.
Outcome determinism() {
  testutil::TempDir tmp;
  auto build = [&](const std::string& tag, std::vector<std::string> args) {
    args.insert(args.begin(), {"docsieve", "build", "--out", (tmp / (tag + ".jsonl")).string(), "--stats",
                               (tmp / (tag + ".json")).string()});
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return std::make_pair(code, out.str() + testutil::read_file(tmp / (tag + ".jsonl")) +
                                    testutil::read_file(tmp / (tag + ".json")));
  };
  std::vector<std::string> gold_roots;
  for (const auto& [dir, lang] : kGoldDirs) {
    gold_roots.push_back("--root");
    gold_roots.push_back(testutil::fixture("gold/" + dir).string());
  }
  std::vector<std::string> keep = gold_roots;
  keep.insert(keep.end(), {"--keep-incomplete", "--min-len", "1"});
  std::vector<std::vector<std::string>> configs = {
      {"--manifest", testutil::fixture("corpus/manifest.jsonl").string()}, gold_roots, keep};
  Outcome o;
  int identical = 0;
  for (std::size_t c = 0; c < configs.size(); ++c) {
    auto one = configs[c], eight = configs[c];
    one.insert(one.end(), {"--workers", "1"});
    eight.insert(eight.end(), {"--workers", "8"});
    auto a = build("a" + std::to_string(c), one);
    auto b = build("b" + std::to_string(c), eight);
    identical += a.first == 0 && b.first == 0 && a.second == b.second;
  }
  o.pass = identical == static_cast<int>(configs.size());
  o.detail = std::to_string(identical) + "/" + std::to_string(configs.size()) + " configurations identical";
  return o;
}

bool is_subsequence(const std::vector<std::size_t>& sub, const std::vector<std::size_t>& of) {
  return std::is_sorted(sub.begin(), sub.end()) && std::includes(of.begin(), of.end(), sub.begin(), sub.end());
}

// 8. Dedup idempotence, stage monotonicity, conservation.
Outcome record_sets() {
  std::mt19937 rng(31337);
  Outcome o;
  int failures = 0;
  for (int i = 0; i < kRecordSets; ++i) {
    auto records = recordgen::random_records(rng);
    auto once = dedup(records);
    bool ok = dedup(once) == once;

    StageLog log;
    log.commented = records;
    PipelineConfig config;
    config.keep_incomplete = i % 3 == 0;
    run_stages(log, config, AutogenFilter());
    std::vector<std::size_t> all(records.size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    ok = ok && is_subsequence(log.after_autogen, all) && is_subsequence(log.after_dedup, log.after_autogen) &&
         is_subsequence(log.after_langid, log.after_dedup) &&
         is_subsequence(log.after_retain, log.after_langid) &&
         is_subsequence(log.after_length, log.after_retain);
    StatsReport report = compute_stats(log);
    for (const auto& [lang, s] : report.per_lang) {
      ok = ok && s.comments_total == s.survivors + s.excluded_total() && s.survivors <= s.comments_total &&
           s.complete + s.incomplete + s.unstructured <= s.comments_russian;
    }
    failures += !ok;
  }
  o.pass = failures == 0;
  o.detail = std::to_string(failures) + " failures in " + std::to_string(kRecordSets) + " record sets";
  return o;
}

// 9. 1,000 files of at most 100 KB on one worker.
Outcome throughput() {
  testutil::TempDir tmp;
  std::vector<std::pair<std::string, std::string>> seeds;  // (extension, text)
  for (const auto& [dir, lang] : kGoldDirs) {
    for (const auto& src : testutil::gold_sources(dir)) {
      seeds.emplace_back(src.extension().string(), testutil::read_file(src));
    }
  }
  std::mt19937 rng(5);
  std::size_t bytes = 0;
  for (int i = 0; i < kThroughputFiles; ++i) {
    const auto& [ext, body] = seeds[i % seeds.size()];
    std::size_t target = std::uniform_int_distribution<std::size_t>(1, kThroughputMaxFileBytes)(rng);
    std::string text = body;
    while (text.size() + body.size() + 1 <= target) text += "\n" + body;
    bytes += text.size();
    testutil::write_file(tmp / ("repo" + std::to_string(i % 10) + "/f" + std::to_string(i) + ext), text);
  }
  PipelineConfig config;
  for (int r = 0; r < 10; ++r) config.roots.push_back(tmp / ("repo" + std::to_string(r)));
  config.workers = 1;
  auto start = std::chrono::steady_clock::now();
  auto result = process(config);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o;
  o.pass = result.report.files.files_processed == std::uint64_t(kThroughputFiles) && secs < kThroughputSeconds;
  o.detail = std::to_string(result.report.files.files_processed) + " files (" +
             std::to_string(bytes / 1024) + " KB) in " + fmt1(secs) + " s";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double max_seconds;  // 0 = no runtime bound beyond the criterion itself
  };
  const Criterion criteria[] = {
      {1, "stats arithmetic", stats_arithmetic, kStatsSeconds},
      {2, "gold fixture corpus", gold_corpus, kGoldSeconds},
      {3, "docstring round trip", round_trip, kRoundTripSeconds},
      {4, "Go first-word rule", go_rule, 0},
      {5, "param coverage oracle", param_oracle, 0},
      {6, "language detector", detector, 0},
      {7, "pipeline determinism", determinism, 0},
      {8, "dedup idempotence and filter monotonicity", record_sets, 0},
      {9, "throughput", throughput, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.max_seconds > 0 && secs >= c.max_seconds) {
      o.pass = false;
      o.detail += "; exceeded " + fmt1(c.max_seconds) + " s";
    }
    failed += !o.pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " -- "
              << o.detail << " (" << timing << ")\n";
  }
  std::cout << (failed ? std::to_string(failed) + " criterion(s) failed" : "all criteria passed") << "\n";
  return failed ? 1 : 0;
}
