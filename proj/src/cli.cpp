#include "docsieve/cli.hpp"

#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "docsieve/extractor.hpp"
#include "docsieve/langid.hpp"
#include "docsieve/pipeline.hpp"
#include "docsieve/records.hpp"

namespace docsieve {
namespace {

struct BuildArgs {
  std::string manifest;
  std::vector<std::string> roots;
  std::string out;
  std::string stats;
  std::vector<std::string> langs;
  std::size_t min_len = 250;
  std::size_t max_len = 1000;
  std::string target = "ru";
  std::string patterns;
  std::string profile;
  unsigned workers = 1;
  bool keep_incomplete = false;
};

struct InspectArgs {
  std::string file;
  std::string function;
  std::string profile;
};

// Thrown for bad flag values discovered after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::shared_ptr<const DetectorProfile> load_profile(const std::string& path) {
  if (path.empty()) return default_profile();
  try {
    return std::make_shared<const DetectorProfile>(DetectorProfile::load_file(path));
  } catch (const ProfileError& e) {
    throw IoError(e.what());
  }
}

PipelineConfig to_config(const BuildArgs& a) {
  PipelineConfig c;
  if (!a.manifest.empty()) c.manifest = a.manifest;
  for (const auto& r : a.roots) c.roots.emplace_back(r);
  c.out = a.out;
  if (!a.stats.empty()) c.stats_out = a.stats;
  if (!a.langs.empty()) {
    c.languages.clear();
    for (const auto& l : a.langs) {
      auto lang = parse_source_lang(l);
      if (!lang) throw UsageError("unknown language '" + l + "'");
      c.languages.insert(*lang);
    }
  }
  c.min_len = a.min_len;
  c.max_len = a.max_len;
  auto target = parse_nat_lang(a.target);
  if (!target) throw UsageError("unknown target language '" + a.target + "'");
  c.target_lang = *target;
  if (!a.patterns.empty()) c.autogen_patterns = a.patterns;
  if (!a.profile.empty()) c.profile = a.profile;
  c.workers = a.workers;
  c.keep_incomplete = a.keep_incomplete;
  if (auto errors = validate(c); !errors.empty()) throw UsageError(errors.front());
  return c;
}

int cmd_build(const BuildArgs& args, std::ostream& out, std::ostream& err) {
  PipelineConfig config = to_config(args);
  err << "docsieve: building " << config.out.string() << " with " << config.workers
      << " worker(s)\n";
  RunResult result = run(config);
  err << "docsieve: " << result.report.files.files_processed << " files processed, "
      << result.records.size() << " records written\n";
  out << render_stats_table(result.report);
  return kExitOk;
}

int cmd_inspect(const InspectArgs& args, std::ostream& out, std::ostream& err) {
  auto lang = lang_for_path(args.file, default_extension_map());
  if (!lang) {
    err << "docsieve: no source language for " << args.file << "\n";
    return kExitUsage;
  }
  std::ifstream in(args.file, std::ios::binary);
  if (!in) {
    err << "docsieve: cannot read " << args.file << "\n";
    return kExitIo;
  }
  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (body.rfind("\xEF\xBB\xBF", 0) == 0) body.erase(0, 3);

  std::vector<FunctionUnit> units;
  try {
    units = extract_units(SourceFile{*lang, "", args.file, body});
  } catch (const ExtractionError& e) {
    err << "docsieve: " << e.what() << "\n";
    return kExitIo;
  }
  ProfileDetector detector(load_profile(args.profile));
  bool matched = false;
  for (const auto& u : units) {
    const std::string& name = u.signature.function_name;
    if (!args.function.empty() && name != args.function) continue;
    matched = true;
    if (!u.raw_comment) {
      out << name << ": no doc comment\n";
      continue;
    }
    CorpusRecord r = build_record(u, detector);
    out << name << ": " << to_string(r.verdict.verdict) << ", " << to_string(r.nat_lang);
    if (!r.verdict.reasons.empty()) {
      out << " [";
      for (std::size_t i = 0; i < r.verdict.reasons.size(); ++i) {
        out << (i ? ", " : "") << r.verdict.reasons[i].to_string();
      }
      out << "]";
    }
    out << "\n";
  }
  if (!matched) {
    err << "docsieve: no match"
        << (args.function.empty() ? std::string() : " for function '" + args.function + "'") << "\n";
  }
  return kExitOk;
}

int cmd_stats(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "docsieve: cannot read " << path << "\n";
    return kExitIo;
  }
  struct Row {
    std::uint64_t records = 0;
    std::map<Verdict, std::uint64_t> verdicts;
    std::map<NatLang, std::uint64_t> langs;
  };
  std::map<SourceLang, Row> rows;
  for (auto l : {SourceLang::Python, SourceLang::Java, SourceLang::Go, SourceLang::CSharp,
                 SourceLang::JavaScript}) {
    rows[l];
  }
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      DatasetRow row = parse_dataset_line(line);
      Row& r = rows[row.lang];
      ++r.records;
      ++r.verdicts[row.verdict];
      ++r.langs[row.nat_lang];
    } catch (const DatasetFormatError& e) {
      err << "docsieve: " << path << ": line " << lineno << ": " << e.what() << "\n";
      return kExitIo;
    }
  }
  std::vector<std::vector<std::string>> table = {{"Language", "Records", "Complete", "Incomplete",
                                                  "Unstructured", "ru", "en", "other", "unknown"}};
  for (auto& [lang, r] : rows) {
    auto n = [](std::uint64_t v) { return std::to_string(v); };
    table.push_back({std::string(to_string(lang)), n(r.records), n(r.verdicts[Verdict::Complete]),
                     n(r.verdicts[Verdict::Incomplete]), n(r.verdicts[Verdict::Unstructured]),
                     n(r.langs[NatLang::Ru]), n(r.langs[NatLang::En]), n(r.langs[NatLang::Other]),
                     n(r.langs[NatLang::Unknown])});
  }
  out << render_table(table);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extracts documentation comments, checks them against their signatures and builds "
               "filtered corpora.",
               "docsieve"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML file with option values (command-line flags win)");
  app.failure_message(CLI::FailureMessage::help);

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Run the corpus pipeline and print the statistics tables");
  b->add_option("--manifest", build.manifest, "JSON Lines manifest of repositories");
  b->add_option("--root", build.roots, "Repository root directory (repeatable; named after the directory)");
  b->add_option("--out", build.out, "Dataset output file (JSON Lines)")->required();
  b->add_option("--stats", build.stats, "Statistics output file (JSON)");
  b->add_option("--lang", build.langs, "Source languages to include (python, java, go, csharp, javascript)")
      ->delimiter(',');
  b->add_option("--min-len", build.min_len, "Minimum code and comment length in characters")
      ->capture_default_str();
  b->add_option("--max-len", build.max_len, "Maximum code and comment length in characters")
      ->capture_default_str();
  b->add_option("--target-lang", build.target, "Natural language to keep (ru, en, other)")
      ->capture_default_str();
  b->add_option("--autogen-patterns", build.patterns, "Autogenerated-comment pattern file");
  b->add_option("--profile", build.profile, "Language detector profile file")->envname(kProfileEnvVar);
  b->add_option("--workers", build.workers, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  b->add_flag("--keep-incomplete", build.keep_incomplete,
              "Keep records of any verdict and language (the length filter still applies)");

  InspectArgs inspect;
  auto* i = app.add_subcommand("inspect", "Print verdict and language for each function in a file");
  i->add_option("file", inspect.file, "Source file")->required();
  i->add_option("--function", inspect.function, "Only report the function with this name");
  i->add_option("--profile", inspect.profile, "Language detector profile file")->envname(kProfileEnvVar);

  std::string dataset;
  auto* s = app.add_subcommand("stats", "Recompute per-language verdict and language counts from a dataset");
  s->add_option("dataset", dataset, "Dataset file (JSON Lines)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::FileError& e) {
    err << "docsieve: " << e.what() << "\n";
    return kExitIo;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (b->parsed()) return cmd_build(build, out, err);
    if (i->parsed()) return cmd_inspect(inspect, out, err);
    return cmd_stats(dataset, out, err);
  } catch (const UsageError& e) {
    err << "docsieve: " << e.what() << "\n\n" << b->help();
    return kExitUsage;
  } catch (const ManifestError& e) {
    err << "docsieve: invalid manifest: " << e.what() << "\n";
    return kExitManifest;
  } catch (const IoError& e) {
    err << "docsieve: " << e.what() << "\n";
    return kExitIo;
  } catch (const ProfileError& e) {
    err << "docsieve: " << e.what() << "\n";
    return kExitIo;
  }
}

}  // namespace docsieve
