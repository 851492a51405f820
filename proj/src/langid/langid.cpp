#include "docsieve/langid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "docsieve/text.hpp"
#include "seed.hpp"

namespace docsieve {
namespace {

constexpr std::string_view kHeader = "docsieve-profile 1";
// Held-out English seed sentences scoring below this quantile would be
// rejected; the threshold sits at that point.
constexpr double kThresholdQuantile = 0.05;

// Lower-cased Latin-script words of `s`; everything else separates words.
std::vector<std::string> latin_words(std::string_view s) {
  std::vector<std::string> words;
  std::string cur;
  std::size_t i = 0;
  while (i < s.size()) {
    char32_t cp = text::next_codepoint(s, i);
    if (text::script_of(cp) == text::Script::Latin) {
      text::append_utf8(cur, text::to_lower(cp));
    } else if (!cur.empty()) {
      words.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

// Code-point trigrams of " word ".
template <class F>
void for_each_trigram(const std::string& word, F&& f) {
  std::vector<std::size_t> starts;
  std::string padded = " " + word + " ";
  for (std::size_t i = 0; i < padded.size();) {
    starts.push_back(i);
    text::next_codepoint(padded, i);
  }
  starts.push_back(padded.size());
  for (std::size_t k = 0; k + 3 < starts.size(); ++k) {
    f(padded.substr(starts[k], starts[k + 3] - starts[k]));
  }
}

struct Counts {
  std::unordered_map<std::string, double> trigrams;
  std::unordered_map<std::string, double> words;
  double latin = 0, cyrillic = 0, letters = 0;

  void add_text(std::string_view s) {
    for (auto& w : latin_words(s)) {
      for_each_trigram(w, [&](std::string g) { trigrams[std::move(g)] += 1; });
      words[std::move(w)] += 1;
    }
  }
  void add_scripts(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
      auto sc = text::script_of(text::next_codepoint(s, i));
      if (sc == text::Script::None) continue;
      letters += 1;
      latin += sc == text::Script::Latin;
      cyrillic += sc == text::Script::Cyrillic;
    }
  }
};

std::map<std::string, double> top_k(const std::unordered_map<std::string, double>& counts,
                                    std::size_t k) {
  std::vector<std::pair<std::string, double>> v(counts.begin(), counts.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (v.size() > k) v.resize(k);
  double total = 0;
  for (const auto& e : v) total += e.second;
  std::map<std::string, double> out;
  for (const auto& e : v) out.emplace(e.first, e.second / total);
  return out;
}

LanguageTable make_table(std::string_view training, std::string_view script_source, std::size_t k) {
  Counts c;
  c.add_text(training);
  c.add_scripts(script_source);
  LanguageTable t;
  if (c.letters > 0) {
    t.latin_prior = c.latin / c.letters;
    t.cyrillic_prior = c.cyrillic / c.letters;
  }
  t.trigrams = top_k(c.trigrams, k);
  t.words = top_k(c.words, k);
  return t;
}

double floor_of(const std::map<std::string, double>& table) {
  double lo = 1.0;
  for (const auto& e : table) lo = std::min(lo, e.second);
  return lo / 2;
}

double score(const LanguageTable& t, std::string_view s) {
  double tri_floor = std::log(floor_of(t.trigrams));
  double word_floor = std::log(floor_of(t.words));
  double sum = 0;
  std::size_t n = 0;
  for (const auto& w : latin_words(s)) {
    for_each_trigram(w, [&](const std::string& g) {
      auto it = t.trigrams.find(g);
      sum += it == t.trigrams.end() ? tri_floor : std::log(it->second);
      ++n;
    });
    auto it = t.words.find(w);
    sum += it == t.words.end() ? word_floor : std::log(it->second);
    ++n;
  }
  return n == 0 ? -std::numeric_limits<double>::infinity() : sum / double(n);
}

std::vector<std::string_view> sentence_lines(std::string_view s) {
  std::vector<std::string_view> out;
  for (auto line : text::split_lines(s)) {
    if (!text::trim(line).empty()) out.push_back(line);
  }
  return out;
}

std::string join_except(const std::vector<std::string_view>& lines, std::size_t skip) {
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i == skip) continue;
    out.append(lines[i]);
    out += '\n';
  }
  return out;
}

const char* table_name(ProfileLang lang) { return lang == ProfileLang::En ? "en" : "ru"; }

void save_table(std::ostream& out, ProfileLang lang, const LanguageTable& t) {
  const char* name = table_name(lang);
  out << name << "\tprior\tlatin\t" << t.latin_prior << '\n';
  out << name << "\tprior\tcyrillic\t" << t.cyrillic_prior << '\n';
  for (const auto& [g, p] : t.trigrams) out << name << "\ttri\t" << g << '\t' << p << '\n';
  for (const auto& [w, p] : t.words) out << name << "\tword\t" << w << '\t' << p << '\n';
}

void check_normalized(const std::map<std::string, double>& table, const std::string& what) {
  double sum = 0;
  for (const auto& e : table) sum += e.second;
  if (table.empty() || std::abs(sum - 1.0) > 1e-6) {
    throw ProfileError("profile table " + what + " does not sum to 1");
  }
}

// Letters by script: {latin, cyrillic, other}.
struct ScriptCounts {
  std::size_t latin = 0, cyrillic = 0, other = 0;
  std::size_t total() const { return latin + cyrillic + other; }
};

ScriptCounts count_scripts(std::string_view s) {
  ScriptCounts c;
  std::size_t i = 0;
  while (i < s.size()) {
    switch (text::script_of(text::next_codepoint(s, i))) {
      case text::Script::Latin: ++c.latin; break;
      case text::Script::Cyrillic: ++c.cyrillic; break;
      case text::Script::Other: ++c.other; break;
      case text::Script::None: break;
    }
  }
  return c;
}

bool at_least_60pct(std::size_t part, std::size_t total) { return part * 100 >= total * 60; }

}  // namespace

std::string transliterate_ru(std::string_view s) {
  static const std::unordered_map<char32_t, const char*> table = {
      {U'а', "a"},  {U'б', "b"},  {U'в', "v"},  {U'г', "g"},    {U'д', "d"}, {U'е', "e"},
      {U'ё', "e"},  {U'ж', "zh"}, {U'з', "z"},  {U'и', "i"},    {U'й', "i"}, {U'к', "k"},
      {U'л', "l"},  {U'м', "m"},  {U'н', "n"},  {U'о', "o"},    {U'п', "p"}, {U'р', "r"},
      {U'с', "s"},  {U'т', "t"},  {U'у', "u"},  {U'ф', "f"},    {U'х', "kh"}, {U'ц', "ts"},
      {U'ч', "ch"}, {U'ш', "sh"}, {U'щ', "shch"}, {U'ъ', ""},   {U'ы', "y"}, {U'ь', ""},
      {U'э', "e"},  {U'ю', "yu"}, {U'я', "ya"}};
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    char32_t cp = text::next_codepoint(s, i);
    auto it = table.find(text::to_lower(cp));
    if (it == table.end()) {
      text::append_utf8(out, cp);
    } else {
      out += it->second;
    }
  }
  return out;
}

DetectorProfile DetectorProfile::train(std::string_view english, std::string_view russian,
                                       std::size_t k) {
  if (k == 0) throw ProfileError("top-K must be positive");
  DetectorProfile p;
  p.top_k_ = k;
  std::string translit = transliterate_ru(russian);
  p.en_ = make_table(english, english, k);
  p.ru_ = make_table(translit, russian, k);

  // Threshold from held-out scores: each English sentence scored by a model
  // trained without it.
  auto lines = sentence_lines(english);
  std::vector<double> held_out;
  for (std::size_t i = 0; i < lines.size() && lines.size() > 1; ++i) {
    LanguageTable t = make_table(join_except(lines, i), "", k);
    held_out.push_back(score(t, lines[i]));
  }
  std::sort(held_out.begin(), held_out.end());
  if (!held_out.empty()) {
    auto idx = static_cast<std::size_t>(kThresholdQuantile * double(held_out.size() - 1));
    p.en_threshold_ = held_out[idx];
  } else {
    p.en_threshold_ = -std::numeric_limits<double>::infinity();
  }
  return p;
}

const DetectorProfile& DetectorProfile::built_in() {
  static const DetectorProfile profile = train(langid_seed::kEnglish, langid_seed::kRussian);
  return profile;
}

void DetectorProfile::save(std::ostream& out) const {
  auto old = out.precision(17);
  out << kHeader << '\n';
  out << "top_k\t" << top_k_ << '\n';
  out << "en_threshold\t" << en_threshold_ << '\n';
  save_table(out, ProfileLang::En, en_);
  save_table(out, ProfileLang::RuTranslit, ru_);
  out.precision(old);
}

DetectorProfile DetectorProfile::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || text::trim(line) != kHeader) {
    throw ProfileError("not a docsieve profile (expected \"" + std::string(kHeader) + "\")");
  }
  DetectorProfile p;
  bool have_threshold = false;
  int lineno = 1;
  auto fail = [&](const std::string& why) {
    throw ProfileError("profile line " + std::to_string(lineno) + ": " + why);
  };
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      double v = std::stod(s, &used);
      if (used != s.size()) fail("bad number '" + s + "'");
      return v;
    } catch (const std::logic_error&) {
      fail("bad number '" + s + "'");
    }
    return 0.0;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string part; std::getline(ss, part, '\t');) f.push_back(part);
    if (f.size() == 2 && f[0] == "top_k") {
      double v = number(f[1]);
      if (v < 1) fail("top_k must be positive");
      p.top_k_ = static_cast<std::size_t>(v);
    } else if (f.size() == 2 && f[0] == "en_threshold") {
      p.en_threshold_ = number(f[1]);
      have_threshold = true;
    } else if (f.size() == 4 && (f[0] == "en" || f[0] == "ru")) {
      LanguageTable& t = f[0] == "en" ? p.en_ : p.ru_;
      double v = number(f[3]);
      if (f[1] == "prior" && f[2] == "latin") {
        t.latin_prior = v;
      } else if (f[1] == "prior" && f[2] == "cyrillic") {
        t.cyrillic_prior = v;
      } else if (f[1] == "tri") {
        if (v <= 0) fail("probabilities must be positive");
        t.trigrams[f[2]] = v;
      } else if (f[1] == "word") {
        if (v <= 0) fail("probabilities must be positive");
        t.words[f[2]] = v;
      } else {
        fail("unknown row kind '" + f[1] + "'");
      }
    } else {
      fail("malformed row");
    }
  }
  if (!have_threshold) throw ProfileError("profile has no en_threshold");
  check_normalized(p.en_.trigrams, "en/tri");
  check_normalized(p.en_.words, "en/word");
  check_normalized(p.ru_.trigrams, "ru/tri");
  check_normalized(p.ru_.words, "ru/word");
  return p;
}

DetectorProfile DetectorProfile::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ProfileError("cannot open profile " + path.string());
  return load(in);
}

double DetectorProfile::log_likelihood(ProfileLang lang, std::string_view s) const {
  return score(table(lang), s);
}

ProfileDetector::ProfileDetector(std::shared_ptr<const DetectorProfile> profile)
    : profile_(std::move(profile)) {}

NatLang ProfileDetector::detect(std::string_view s) const {
  ScriptCounts c = count_scripts(s);
  std::size_t total = c.total();
  if (total < 3) return NatLang::Unknown;
  if (at_least_60pct(c.cyrillic, total)) return NatLang::Ru;

  bool latin_dominant = at_least_60pct(c.latin, total);
  if (!latin_dominant) {
    // No script reaches 60%: the plurality decides, a tie is undecidable.
    std::size_t top = std::max({c.latin, c.cyrillic, c.other});
    int winners = (c.latin == top) + (c.cyrillic == top) + (c.other == top);
    if (winners > 1) return NatLang::Unknown;
    if (c.cyrillic == top) return NatLang::Ru;
    if (c.other == top) return NatLang::Other;
  }
  double en = profile_->log_likelihood(ProfileLang::En, s);
  double ru = profile_->log_likelihood(ProfileLang::RuTranslit, s);
  if (en == ru) return NatLang::Unknown;
  if (en > ru && en >= profile_->en_threshold()) return NatLang::En;
  return NatLang::Other;
}

std::shared_ptr<const DetectorProfile> default_profile() {
  static std::once_flag once;
  static std::shared_ptr<const DetectorProfile> profile;
  std::call_once(once, [] {
    const char* path = std::getenv(kProfileEnvVar);
    if (path && *path) {
      profile = std::make_shared<const DetectorProfile>(DetectorProfile::load_file(path));
    } else {
      profile = std::shared_ptr<const DetectorProfile>(&DetectorProfile::built_in(),
                                                       [](const DetectorProfile*) {});
    }
  });
  return profile;
}

NatLang detect(std::string_view s) {
  static const ProfileDetector detector(std::shared_ptr<const DetectorProfile>(
      &DetectorProfile::built_in(), [](const DetectorProfile*) {}));
  return detector.detect(s);
}

}  // namespace docsieve
