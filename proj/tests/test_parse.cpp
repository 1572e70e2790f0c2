#include "dwcount/parse.hpp"

#include "corpus.hpp"

#include <gtest/gtest.h>

namespace dwcount {
namespace {

using testing::mo;

TEST(ParseSeifert, Examples) {
  EXPECT_EQ(parse_seifert("MO(0; (1,2))"), mo(0, {{1, 2}}));
  EXPECT_EQ(parse_seifert("MO(2;(3,1),(5,-2))"), mo(2, {{3, 1}, {5, -2}}));
  EXPECT_EQ(parse_seifert("MO(1;)"), mo(1));
  EXPECT_EQ(parse_seifert("  MO ( 3 ;\t( 2 , -1 ) ,\n(7,3) )  "), mo(3, {{2, -1}, {7, 3}}));
}

TEST(ParseSeifert, DomainErrorsAreForwarded) {
  try {
    parse_seifert("MO(-1;)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NegativeGenus);
  }
  try {
    parse_seifert("MO(0;(0,1))");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonpositiveMultiplicity);
  }
}

TEST(ParseSeifert, SyntaxErrorsCarryOffsets) {
  struct Case {
    const char* text;
    std::size_t offset;
  };
  for (const auto& c : {Case{"MO(0;(1,2)", 10}, Case{"M0(0;)", 0}, Case{"MO(0;(1,2)))", 11},
                        Case{"MO(x;)", 3}, Case{"MO(0;(1 2))", 8}, Case{"MO(0;(1,2),)", 11}, Case{"", 0},
                        Case{"MO(0;(1,--2))", 9}, Case{"MO(99999999999999999999;)", 3}}) {
    try {
      parse_seifert(c.text);
      FAIL() << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError);
      EXPECT_EQ(e.offset(), c.offset) << c.text << ": " << e.what();
      EXPECT_FALSE(e.expected().empty());
    }
  }
}

TEST(ParseSeifert, Int64Extremes) {
  const auto m = parse_seifert("MO(0;(9223372036854775807,-9223372036854775808))");
  EXPECT_EQ(m.pairs[0].a, std::numeric_limits<std::int64_t>::max());
  EXPECT_EQ(m.pairs[0].b, std::numeric_limits<std::int64_t>::min());
  EXPECT_THROW(parse_seifert("MO(0;(9223372036854775808,1))"), ParseError);
}

TEST(ParseSeifert, RenderRoundTrip) {
  for (const auto& manifold : testing::random_corpus(200, 314)) {
    EXPECT_EQ(parse_seifert(render_seifert(manifold)), manifold);
  }
}

}  // namespace
}  // namespace dwcount
