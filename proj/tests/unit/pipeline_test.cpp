#include <random>
#include <set>

#include "docsieve/pipeline.hpp"
#include "docsieve/records.hpp"
#include "docsieve/text.hpp"
#include "doctest.h"
#include "recordgen.hpp"
#include "test_util.hpp"

using namespace docsieve;

namespace {

PipelineConfig fixture_config() {
  PipelineConfig c;
  c.manifest = testutil::fixture("corpus/manifest.jsonl");
  return c;
}

CorpusRecord record(std::string code, std::string comment) {
  CorpusRecord r;
  r.unit.code_text = std::move(code);
  r.normalized_comment = std::move(comment);
  return r;
}

void check_conservation(const StatsReport& report) {
  for (const auto& [lang, s] : report.per_lang) {
    CAPTURE(to_string(lang));
    CHECK(s.comments_total == s.survivors + s.excluded_total());
    CHECK(s.complete + s.incomplete + s.unstructured <= s.comments_russian);
  }
}

}  // namespace

TEST_CASE("fixture corpus: composition and dataset") {
  auto result = process(fixture_config());
  REQUIRE(result.records.size() == 2);
  CHECK(result.records[0].unit.signature.function_name == "split_sentences");
  CHECK(result.records[0].unit.provenance.repo_id == "alpha");
  CHECK(result.records[0].unit.provenance.file_path == "pkg/textutil.py");
  CHECK(result.records[1].unit.signature.function_name == "Median");
  for (const auto& r : result.records) {
    CHECK(validate(r).empty());
    CHECK(r.verdict.verdict == Verdict::Complete);
    CHECK(r.nat_lang == NatLang::Ru);
  }

  LangStats sum;
  for (const auto& [lang, s] : result.report.per_lang) {
    sum.complete += s.complete;
    sum.incomplete += s.incomplete;
    sum.unstructured += s.unstructured;
    sum.comments_russian += s.comments_russian;
    sum.comments_total += s.comments_total;
  }
  CHECK(sum.complete == 2);
  CHECK(sum.incomplete == 1);
  CHECK(sum.unstructured == 1);
  CHECK(sum.comments_russian == 4);
  CHECK(sum.comments_total == 5);
  CHECK(result.report.at(SourceLang::JavaScript).excluded_other_lang == 1);
  CHECK(result.report.at(SourceLang::Python).repos_total == 1);
  // The hidden .cache directory is never visited.
  CHECK(result.report.files.files_seen == 4);
  CHECK(result.report.files.files_processed == 4);
  CHECK(validate(result.report).empty());
  check_conservation(result.report);
}

TEST_CASE("keep_incomplete retains every classified record that fits the length bounds") {
  auto c = fixture_config();
  c.keep_incomplete = true;
  c.min_len = 1;
  auto result = process(c);
  CHECK(result.records.size() == 5);
  check_conservation(result.report);
}

TEST_CASE("worker count never changes the output") {
  testutil::TempDir tmp;
  auto c = fixture_config();
  c.keep_incomplete = true;
  c.min_len = 1;
  std::vector<std::string> datasets, stats;
  for (unsigned workers : {1u, 2u, 8u}) {
    c.workers = workers;
    c.out = tmp / ("ds" + std::to_string(workers) + ".jsonl");
    c.stats_out = tmp / ("st" + std::to_string(workers) + ".json");
    run(c);
    datasets.push_back(testutil::read_file(c.out));
    stats.push_back(testutil::read_file(*c.stats_out));
  }
  CHECK(!datasets[0].empty());
  CHECK(datasets[0] == datasets[1]);
  CHECK(datasets[0] == datasets[2]);
  CHECK(stats[0] == stats[2]);
}

TEST_CASE("empty corpus gives an empty dataset and zero report") {
  testutil::TempDir tmp;
  testutil::write_file(tmp / "m.jsonl", "");
  PipelineConfig c;
  c.manifest = tmp / "m.jsonl";
  c.out = tmp / "out.jsonl";
  auto result = run(c);
  CHECK(result.records.empty());
  CHECK(result.report == StatsReport{});
  CHECK(testutil::read_file(c.out).empty());
}

TEST_CASE("manifest validation") {
  testutil::TempDir tmp;
  std::filesystem::create_directories(tmp / "repo");
  auto entries = parse_manifest(
      "{\"repo_id\": \"a\", \"local_path\": \"repo\", \"license_tag\": \"MIT\"}\n\n", tmp.path());
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].local_path == tmp / "repo");
  CHECK(entries[0].license_tag == "MIT");
  CHECK_FALSE(entries[0].description.has_value());

  CHECK_THROWS_AS(parse_manifest("{\"repo_id\": \"a\", \"local_path\": \"missing\"}", tmp.path()),
                  ManifestError);
  CHECK_THROWS_AS(parse_manifest("not json", tmp.path()), ManifestError);
  CHECK_THROWS_AS(parse_manifest("{\"local_path\": \"repo\"}", tmp.path()), ManifestError);
  CHECK_THROWS_AS(parse_manifest("{\"repo_id\": \"a\", \"local_path\": \"repo\"}\n"
                                 "{\"repo_id\": \"a\", \"local_path\": \"repo\"}",
                                 tmp.path()),
                  ManifestError);
  CHECK_THROWS_AS(load_manifest(tmp / "nope.jsonl"), ManifestError);
  try {
    parse_manifest("{\"repo_id\": \"a\", \"local_path\": \"repo\"}\n[1]", tmp.path());
  } catch (const ManifestError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("ingest skips hidden, binary, oversized and undecodable files") {
  testutil::TempDir tmp;
  auto repo = tmp / "r";
  testutil::write_file(repo / "b.py", "def b():\n    pass\n");
  testutil::write_file(repo / "a/a.go", "package a\n");
  testutil::write_file(repo / ".git/x.py", "x = 1\n");
  testutil::write_file(repo / ".hidden.py", "x = 1\n");
  testutil::write_file(repo / "bin.java", std::string("class A {}\0\0", 12));
  testutil::write_file(repo / "bad.js", "var s = '\xff\xfe';\n");
  testutil::write_file(repo / "big.cs", std::string(kMaxSourceBytes + 1, ' '));
  testutil::write_file(repo / "notes.txt", "text");
  testutil::write_file(repo / "bom.py", "\xEF\xBB\xBF" "def c():\n    pass\n");
  PipelineConfig c;
  c.roots = {repo};
  auto r = ingest(c);
  std::vector<std::string> paths;
  for (const auto& f : r.files) paths.push_back(f.path);
  CHECK(paths == std::vector<std::string>{"a/a.go", "b.py", "bom.py"});
  CHECK(r.files[0].repo_id == "r");
  CHECK(r.files[2].text.rfind("def c", 0) == 0);
  CHECK(r.counters.files_seen == 6);
  CHECK(r.counters.skipped_binary == 1);
  CHECK(r.counters.skipped_decode == 1);
  CHECK(r.counters.skipped_too_large == 1);

  c.languages = {SourceLang::Go};
  CHECK(ingest(c).files.size() == 1);
}

TEST_CASE("extraction failures degrade to a counter") {
  testutil::TempDir tmp;
  testutil::write_file(tmp / "r/broken.java", "class A { void f() { \"unterminated }\n");
  PipelineConfig c;
  c.roots = {tmp / "r"};
  auto result = process(c);
  CHECK(result.report.files.extraction_failed == 1);
  CHECK(result.report.at(SourceLang::Java).functions_total == 0);
}

TEST_CASE("autogenerated comments") {
  CHECK(is_autogenerated("/// <auto-generated/> Этот код создан программой.", SourceLang::CSharp));
  CHECK_FALSE(is_autogenerated("/// <summary>Возвращает сумму.</summary>", SourceLang::CSharp));
  CHECK(is_autogenerated("/** eslint-disable */", SourceLang::JavaScript));
  CHECK(is_autogenerated("/** GENERATED BY tool */", SourceLang::JavaScript));
  CHECK_FALSE(is_autogenerated("/** <auto-generated> */", SourceLang::Java));
  CHECK_FALSE(is_autogenerated("\"\"\"Generated by hand\"\"\"", SourceLang::Python));

  auto patterns = parse_pattern_file("# comment\n\n  СГЕНЕРИРОВАНО  \nmarker\n");
  CHECK(patterns == std::vector<std::string>{"СГЕНЕРИРОВАНО", "marker"});
  AutogenFilter custom(patterns);
  CHECK(custom.is_autogenerated("/// сгенерировано автоматически", SourceLang::CSharp));
  CHECK_FALSE(custom.is_autogenerated("/// <auto-generated/>", SourceLang::CSharp));
}

TEST_CASE("dedup examples") {
  CHECK(dedup({record("a", "x"), record("a", "x")}).size() == 1);
  auto same_comment = dedup({record("a", "x"), record("b", "x")});
  REQUIRE(same_comment.size() == 1);
  CHECK(same_comment[0].unit.code_text == "a");
  CHECK(dedup({record("a", "x"), record("a", "y")}).size() == 1);
  std::vector<CorpusRecord> distinct = {record("a", "x"), record("b", "y"), record("c", "z")};
  CHECK(dedup(distinct) == distinct);
  // (a,x) (b,x) (b,y): (b,x) dropped for its comment, so (b,y) survives.
  CHECK(dedup({record("a", "x"), record("b", "x"), record("b", "y")}).size() == 2);
}

TEST_CASE("dedup is idempotent and filters are monotone on random record sets") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    auto records = recordgen::random_records(rng);
    auto once = dedup(records);
    CHECK(dedup(once) == once);
    auto keep = dedup_keep(records);
    CHECK(std::is_sorted(keep.begin(), keep.end()));
    CHECK(std::adjacent_find(keep.begin(), keep.end()) == keep.end());
    std::set<std::string> codes, comments;
    for (const auto& r : once) {
      CHECK(codes.insert(r.unit.code_text).second);
      CHECK(comments.insert(r.normalized_comment).second);
    }
  }
}

TEST_CASE("length filter counts code points with inclusive bounds") {
  PipelineConfig c;
  auto cyr = [](std::size_t n) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s += "ж";
    return s;
  };
  CHECK(length_filter(record(std::string(300, 'x'), cyr(500)), c));
  CHECK_FALSE(length_filter(record(std::string(100, 'x'), cyr(500)), c));
  CHECK(length_filter(record(std::string(1000, 'x'), cyr(250)), c));
  CHECK_FALSE(length_filter(record(std::string(1001, 'x'), cyr(250)), c));
  CHECK_FALSE(length_filter(record(std::string(300, 'x'), cyr(249)), c));
  CHECK_FALSE(length_filter(record(std::string(300, 'x'), cyr(1001)), c));
}

TEST_CASE("config validation") {
  PipelineConfig c;
  CHECK_FALSE(validate(c).empty());
  c.roots = {"."};
  CHECK(validate(c).empty());
  c.min_len = 0;
  CHECK_FALSE(validate(c).empty());
  c.min_len = 2000;
  CHECK_FALSE(validate(c).empty());
  c.min_len = 250;
  c.workers = 0;
  CHECK_FALSE(validate(c).empty());
}

TEST_CASE("unwritable output and unreadable pattern file are I/O errors") {
  auto c = fixture_config();
  c.out = "/nonexistent-dir/out.jsonl";
  CHECK_THROWS_AS(run(c), IoError);
  c.out.clear();
  c.autogen_patterns = "/nonexistent-dir/patterns.txt";
  CHECK_THROWS_AS(process(c), IoError);
}

TEST_CASE("compute_stats reproduces published percentages") {
  StageLog log;
  StatsReport r = compute_stats(log);
  CHECK(r == StatsReport{});
  LangStats go;
  go.complete = 10880;
  go.comments_russian = 19276;
  CHECK(go.pct_complete_of_russian() == 56.4);
  LangStats py;
  py.repos_total = 64440;
  py.repos_with_comments = 18535;
  py.functions_total = 1627726;
  py.functions_with_comments = 305187;
  CHECK(py.pct_repos_with_comments() == 28.8);
  CHECK(py.pct_functions_with_comments() == 18.7);
}

TEST_CASE("dataset lines carry the published fields in order") {
  auto result = process(fixture_config());
  auto line = record_to_jsonl(result.records[0]);
  CHECK(line.find('\n') == std::string::npos);
  auto j = nlohmann::ordered_json::parse(line);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"repo_id", "file_path", "line", "source_lang",
                                         "function_name", "code", "raw_comment",
                                         "normalized_comment", "parsed", "verdict", "reasons",
                                         "nat_lang"});
  CHECK(j["nat_lang"] == "ru");
  CHECK(j["source_lang"] == "Python");
  CHECK(parsed_doc_from_json(j["parsed"]) == *result.records[0].parsed);
  CHECK(j["parsed"]["params"][0]["type"] == "str");

  auto row = parse_dataset_line(line);
  CHECK(row.function_name == "split_sentences");
  CHECK(row.verdict == Verdict::Complete);
  CHECK_THROWS_AS(parse_dataset_line("{\"repo_id\": 1}"), DatasetFormatError);
  CHECK_THROWS_AS(parse_dataset_line("{"), DatasetFormatError);

  auto stats = nlohmann::json::parse(stats_to_json_text(result.report));
  CHECK(stats["languages"]["Go"]["complete"] == 1);
  CHECK(stats["languages"]["Go"]["pct_complete_of_russian"] == 100.0);
  auto table = render_stats_table(result.report);
  CHECK(table.find("Comment structure") != std::string::npos);
}
