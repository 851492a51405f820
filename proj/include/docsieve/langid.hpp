#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "docsieve/model.hpp"

namespace docsieve {

// Environment variable naming a profile file that replaces the built-in one.
inline constexpr const char* kProfileEnvVar = "DOCSIEVE_PROFILE";

class ProfileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Latin-script language models compared by the detector. Russian is modelled
// in transliteration so that romanized Russian is not mistaken for English.
enum class ProfileLang { En, RuTranslit };

struct LanguageTable {
  // Share of Latin / Cyrillic letters in the training text.
  double latin_prior = 0;
  double cyrillic_prior = 0;
  // Top-K relative frequencies, each table summing to 1.
  std::map<std::string, double> trigrams;
  std::map<std::string, double> words;

  bool operator==(const LanguageTable&) const = default;
};

class DetectorProfile {
 public:
  static constexpr std::size_t kDefaultTopK = 3000;

  // Trains on one sentence per line; `russian` is Cyrillic text.
  static DetectorProfile train(std::string_view english, std::string_view russian,
                               std::size_t top_k = kDefaultTopK);
  static const DetectorProfile& built_in();

  // Text format: a "docsieve-profile 1" header line, then tab-separated rows.
  static DetectorProfile load(std::istream& in);
  static DetectorProfile load_file(const std::filesystem::path& path);
  void save(std::ostream& out) const;

  const LanguageTable& table(ProfileLang lang) const {
    return lang == ProfileLang::En ? en_ : ru_;
  }
  std::size_t top_k() const { return top_k_; }
  // Minimum mean log-likelihood under En for Latin text to count as English.
  double en_threshold() const { return en_threshold_; }

  // Mean log-probability per feature (character trigrams and words) of the
  // Latin letters in `text`; -inf when there is nothing to score.
  double log_likelihood(ProfileLang lang, std::string_view text) const;

  bool operator==(const DetectorProfile&) const = default;

 private:
  std::size_t top_k_ = kDefaultTopK;
  double en_threshold_ = 0;
  LanguageTable en_;
  LanguageTable ru_;
};

class Detector {
 public:
  virtual ~Detector() = default;
  virtual NatLang detect(std::string_view text) const = 0;
};

class ProfileDetector final : public Detector {
 public:
  explicit ProfileDetector(std::shared_ptr<const DetectorProfile> profile);
  NatLang detect(std::string_view text) const override;
  const DetectorProfile& profile() const { return *profile_; }

 private:
  std::shared_ptr<const DetectorProfile> profile_;
};

// Profile named by DOCSIEVE_PROFILE if set, else the built-in one.
std::shared_ptr<const DetectorProfile> default_profile();

// Detection with the built-in profile.
NatLang detect(std::string_view text);

// Text handed to the detector: the short description with tags and code-like
// identifiers removed, or for Go the comment minus its leading name. With no
// parsed doc the first paragraph of `normalized` stands in.
std::string prepare_detection_text(const std::optional<ParsedDoc>& doc,
                                   std::string_view normalized, SourceLang lang);

// True for tokens that look like code: camelCase, snake_case, or containing
// `.`, `(` or `::` inside the word.
bool is_code_like(std::string_view token);

std::string transliterate_ru(std::string_view text);

}  // namespace docsieve
