#include <cmath>
#include <random>
#include <sstream>

#include "docsieve/classifier.hpp"
#include "docsieve/docparse.hpp"
#include "docsieve/extractor.hpp"
#include "docsieve/langid.hpp"
#include "docsieve/normalizer.hpp"
#include "docsieve/text.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace docsieve;

namespace {

struct Sample {
  NatLang label;
  std::string text;
};

std::vector<Sample> samples() {
  std::vector<Sample> out;
  std::istringstream in(testutil::read_file(testutil::fixture("langid/samples.tsv")));
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    out.push_back({*parse_nat_lang(line.substr(0, tab)), line.substr(tab + 1)});
  }
  return out;
}

}  // namespace

TEST_CASE("detector accuracy on the labeled samples") {
  auto all = samples();
  REQUIRE(all.size() == 200);
  int correct = 0;
  for (const auto& s : all) {
    NatLang got = detect(prepare_detection_text(ParsedDoc{DocStyle::JavaDoc, s.text, {}, {}, {}, {}},
                                                "", SourceLang::Java));
    if (got == s.label) {
      ++correct;
    } else {
      MESSAGE(s.text << " -> " << to_string(got) << " (want " << to_string(s.label) << ")");
    }
  }
  MESSAGE("accuracy " << correct << "/200");
  CHECK(correct >= 190);
}

TEST_CASE("detector examples") {
  CHECK(detect("Вычисляет сумму двух чисел.") == NatLang::Ru);
  CHECK(detect("Computes the sum of two numbers.") == NatLang::En);
  CHECK(detect("") == NatLang::Unknown);
  CHECK(detect("ab 12") == NatLang::Unknown);
  CHECK(detect("Vychislyaet summu dvukh chisel.") == NatLang::Other);
  CHECK(detect("计算两个数字的和。") == NatLang::Other);
}

TEST_CASE("all-Cyrillic and 60% Cyrillic strings are Russian") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> letter(0x430, 0x44F), len(3, 40), latin('a', 'z');
  for (int i = 0; i < 1000; ++i) {
    std::string s;
    int n = len(rng);
    for (int k = 0; k < n; ++k) text::append_utf8(s, char32_t(letter(rng)));
    CHECK(detect(s) == NatLang::Ru);
    // Exactly 60% Cyrillic: 3 Cyrillic letters per 2 Latin ones.
    std::string mixed;
    for (int k = 0; k < n; ++k) {
      for (int c = 0; c < 3; ++c) text::append_utf8(mixed, char32_t(letter(rng)));
      mixed += ' ';
      for (int c = 0; c < 2; ++c) mixed += char(latin(rng));
      mixed += ' ';
    }
    CHECK(detect(mixed) == NatLang::Ru);
  }
}

TEST_CASE("detection text preparation") {
  ParsedDoc d;
  d.short_desc = "Возвращает userId для сессии";
  CHECK(prepare_detection_text(d, "", SourceLang::Python) == "Возвращает для сессии");
  CHECK(prepare_detection_text(std::nullopt, "Sum возвращает сумму", SourceLang::Go) ==
        "возвращает сумму");
  CHECK(prepare_detection_text(ParsedDoc{}, "ignored", SourceLang::Java) == "");
  CHECK(prepare_detection_text(std::nullopt, "<summary>Читает config.json и get_value()</summary>\n\nЕщё",
                               SourceLang::CSharp) == "Читает и");
  CHECK(is_code_like("HttpClient"));
  CHECK(is_code_like("std::vector"));
  CHECK(is_code_like("foo()."));
  CHECK_FALSE(is_code_like("чисел."));
  CHECK_FALSE(is_code_like("(если"));
}

TEST_CASE("profile file round trip and validation") {
  const auto& built = DetectorProfile::built_in();
  std::stringstream buf;
  built.save(buf);
  auto loaded = DetectorProfile::load(buf);
  CHECK(loaded.top_k() == built.top_k());
  CHECK(loaded.en_threshold() == doctest::Approx(built.en_threshold()));
  CHECK(loaded.table(ProfileLang::En).trigrams.size() == built.table(ProfileLang::En).trigrams.size());
  ProfileDetector det(std::make_shared<DetectorProfile>(loaded));
  for (const auto& s : samples()) CHECK(det.detect(s.text) == detect(s.text));

  double sum = 0;
  for (const auto& e : built.table(ProfileLang::RuTranslit).trigrams) sum += e.second;
  CHECK(sum == doctest::Approx(1.0));
  CHECK(built.table(ProfileLang::RuTranslit).cyrillic_prior > 0.9);

  std::istringstream bad_header("profile 2\n");
  CHECK_THROWS_AS(DetectorProfile::load(bad_header), ProfileError);
  std::istringstream bad_row("docsieve-profile 1\nen_threshold\t-5\nen\ttri\tabc\tx\n");
  CHECK_THROWS_AS(DetectorProfile::load(bad_row), ProfileError);
  std::istringstream unnormalized("docsieve-profile 1\nen_threshold\t-5\nen\ttri\tabc\t0.5\n");
  CHECK_THROWS_AS(DetectorProfile::load(unnormalized), ProfileError);

  auto small = DetectorProfile::train("the cat sat on the mat\nthe dog ran\n", "кошка сидит\n", 5);
  CHECK(small.table(ProfileLang::En).trigrams.size() == 5);
  CHECK(small.table(ProfileLang::En).words.size() == 5);
}

TEST_CASE("transliteration") {
  CHECK(transliterate_ru("Вычисляет сумму") == "vychislyaet summu");
  CHECK(transliterate_ru("щука, ёж") == "shchuka, ezh");
}

TEST_CASE("gold corpus: natural language labels") {
  for (auto [dir, lang] : {std::pair{"python", SourceLang::Python}, {"java", SourceLang::Java},
                           {"go", SourceLang::Go}, {"csharp", SourceLang::CSharp},
                           {"javascript", SourceLang::JavaScript}}) {
    for (const auto& src : testutil::gold_sources(dir)) {
      CAPTURE(src.filename().string());
      auto units = extract_units(SourceFile{lang, "gold", src.filename().string(), testutil::read_file(src)});
      auto gold = testutil::read_json(testutil::gold_labels(src))["units"];
      REQUIRE(units.size() == gold.size());
      for (std::size_t k = 0; k < units.size(); ++k) {
        if (!gold[k]["comment"].get<bool>()) continue;
        CAPTURE(gold[k]["name"].get<std::string>());
        std::string norm = normalize(*units[k].raw_comment, lang);
        auto parsed = parse_docstring(norm, style_for(lang));
        NatLang got = detect(prepare_detection_text(parsed.doc, norm, lang));
        CHECK(std::string(to_string(got)) == gold[k]["nat_lang"].get<std::string>());
      }
    }
  }
}
