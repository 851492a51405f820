#include "docgen.hpp"
#include "docsieve/docparse.hpp"
#include "docsieve/normalizer.hpp"
#include "doctest.h"

using namespace docsieve;

TEST_CASE("docparse inverts serialize on generated documents") {
  for (DocStyle style : {DocStyle::GoogleDoc, DocStyle::JavaDoc, DocStyle::JSDoc, DocStyle::XmlDoc}) {
    CAPTURE(to_string(style));
    docgen::DocGenerator gen(1234 + static_cast<int>(style));
    int agree = 0;
    for (int i = 0; i < 500; ++i) {
      ParsedDoc d = gen.next(style);
      std::string text = serialize(d);
      auto back = parse_docstring(text, style);
      CAPTURE(text);
      REQUIRE(back.ok());
      CHECK(*back.doc == d);
      agree += *back.doc == d;
    }
    CHECK(agree == 500);
  }
}
