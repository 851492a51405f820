#pragma once

namespace docsieve::langid_seed {

extern const char* const kEnglish;
// Cyrillic; transliterated when the Latin-script profile is built.
extern const char* const kRussian;

}  // namespace docsieve::langid_seed
