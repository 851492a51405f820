#include <cstdlib>
#include <sstream>

#include "docsieve/cli.hpp"
#include "docsieve/langid.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace docsieve;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "docsieve");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& rel) { return testutil::fixture(rel).string(); }

}  // namespace

TEST_CASE("build matches the golden dataset, stats and table") {
  testutil::TempDir tmp;
  auto r = cli({"build", "--manifest", fixture("corpus/manifest.jsonl"), "--out",
                (tmp / "ds.jsonl").string(), "--stats", (tmp / "st.json").string()});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out == testutil::read_file(testutil::fixture("cli/build_stdout.txt")));
  CHECK(testutil::read_file(tmp / "ds.jsonl") ==
        testutil::read_file(testutil::fixture("cli/build_dataset.jsonl")));
  CHECK(testutil::read_file(tmp / "st.json") ==
        testutil::read_file(testutil::fixture("cli/build_stats.json")));
  CHECK(r.err.find("2 records written") != std::string::npos);
}

TEST_CASE("config file supplies options and flags win") {
  testutil::TempDir tmp;
  testutil::write_file(tmp / "c.toml", "[build]\nmanifest = \"" + fixture("corpus/manifest.jsonl") +
                                           "\"\nout = \"" + (tmp / "ds.jsonl").string() +
                                           "\"\nmin-len = 1\nkeep-incomplete = true\n");
  auto r = cli({"--config", (tmp / "c.toml").string(), "build"});
  REQUIRE(r.code == kExitOk);
  CHECK(testutil::read_jsonl(tmp / "ds.jsonl").size() == 5);
  r = cli({"--config", (tmp / "c.toml").string(), "build", "--min-len", "250"});
  REQUIRE(r.code == kExitOk);
  CHECK(testutil::read_jsonl(tmp / "ds.jsonl").size() == 2);
  CHECK(cli({"--config", (tmp / "absent.toml").string(), "build"}).code == kExitIo);
}

TEST_CASE("build exit codes") {
  testutil::TempDir tmp;
  auto missing_out = cli({"build", "--manifest", fixture("corpus/manifest.jsonl")});
  CHECK(missing_out.code == kExitUsage);
  CHECK(missing_out.err.find("Usage:") != std::string::npos);
  CHECK(cli({"build", "--out", (tmp / "o").string()}).code == kExitUsage);
  CHECK(cli({"build", "--root", tmp.path().string(), "--out", (tmp / "o").string(), "--lang", "ruby"})
            .code == kExitUsage);
  CHECK(cli({"build", "--root", tmp.path().string(), "--out", (tmp / "o").string(), "--workers", "0"})
            .code == kExitUsage);
  CHECK(cli({"build", "--manifest", (tmp / "none.jsonl").string(), "--out", (tmp / "o").string()})
            .code == kExitManifest);
  testutil::write_file(tmp / "bad.jsonl", "{\"repo_id\": \"x\", \"local_path\": \"nowhere\"}\n");
  CHECK(cli({"build", "--manifest", (tmp / "bad.jsonl").string(), "--out", (tmp / "o").string()})
            .code == kExitManifest);
  CHECK_FALSE(std::filesystem::exists(tmp / "o"));
  CHECK(cli({"build", "--root", tmp.path().string(), "--out", "/nonexistent-dir/o.jsonl"}).code ==
        kExitIo);
  CHECK(cli({"build", "--root", tmp.path().string(), "--out", (tmp / "o").string(), "--profile",
             (tmp / "none.profile").string()})
            .code == kExitIo);
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  auto help = cli({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("inspect") != std::string::npos);
  auto build_help = cli({"build", "--help"});
  for (const char* flag : {"--manifest", "--root", "--out", "--stats", "--lang", "--min-len",
                           "--max-len", "--target-lang", "--autogen-patterns", "--profile",
                           "--workers", "--keep-incomplete", "DOCSIEVE_PROFILE"}) {
    CHECK(build_help.out.find(flag) != std::string::npos);
  }
}

TEST_CASE("inspect") {
  auto go = cli({"inspect", fixture("corpus/repos/beta/src/stats.go")});
  CHECK(go.code == kExitOk);
  CHECK(go.out == "Median: Complete, ru\n");

  auto py = cli({"inspect", fixture("corpus/repos/alpha/pkg/textutil.py"), "--function", "count_words"});
  CHECK(py.code == kExitOk);
  CHECK(py.out == "count_words: Incomplete, ru [MISSING_PARAM_DESC(ignore_case), MISSING_TYPE(text)]\n");

  auto none = cli({"inspect", fixture("corpus/repos/alpha/pkg/textutil.py"), "--function", "missing_name"});
  CHECK(none.code == kExitOk);
  CHECK(none.out.empty());
  CHECK(none.err.find("no match") != std::string::npos);

  CHECK(cli({"inspect", "script.rb"}).code == kExitUsage);
  CHECK(cli({"inspect", "/nonexistent-dir/a.py"}).code == kExitIo);

  testutil::TempDir tmp;
  testutil::write_file(tmp / "bare.js", "function f() { return 1; }\n");
  CHECK(cli({"inspect", (tmp / "bare.js").string()}).out == "f: no doc comment\n");
  testutil::write_file(tmp / "broken.java", "class A { void f() { \"open }\n");
  CHECK(cli({"inspect", (tmp / "broken.java").string()}).code == kExitIo);
}

TEST_CASE("profile path from the environment") {
  testutil::TempDir tmp;
  {
    std::ofstream out(tmp / "p.profile");
    DetectorProfile::built_in().save(out);
  }
  std::string file = fixture("corpus/repos/beta/src/stats.go");
  setenv(kProfileEnvVar, (tmp / "p.profile").string().c_str(), 1);
  auto ok = cli({"inspect", file});
  setenv(kProfileEnvVar, (tmp / "missing.profile").string().c_str(), 1);
  auto bad = cli({"inspect", file});
  auto flag_wins = cli({"inspect", file, "--profile", (tmp / "p.profile").string()});
  unsetenv(kProfileEnvVar);
  CHECK(ok.code == kExitOk);
  CHECK(ok.out == "Median: Complete, ru\n");
  CHECK(bad.code == kExitIo);
  CHECK(flag_wins.code == kExitOk);
}

TEST_CASE("stats") {
  testutil::TempDir tmp;
  auto r = cli({"stats", fixture("cli/build_dataset.jsonl")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("Go                1         1") != std::string::npos);

  testutil::write_file(tmp / "empty.jsonl", "");
  auto empty = cli({"stats", (tmp / "empty.jsonl").string()});
  CHECK(empty.code == kExitOk);
  CHECK(empty.out.find("Python            0") != std::string::npos);

  std::string good = testutil::read_file(testutil::fixture("cli/build_dataset.jsonl"));
  std::string lines = good + good + good;  // 6 valid lines
  testutil::write_file(tmp / "bad.jsonl", lines + "{\"repo_id\": \n");
  auto bad = cli({"stats", (tmp / "bad.jsonl").string()});
  CHECK(bad.code == kExitIo);
  CHECK(bad.err.find("line 7") != std::string::npos);
  CHECK(cli({"stats", (tmp / "none.jsonl").string()}).code == kExitIo);
}
