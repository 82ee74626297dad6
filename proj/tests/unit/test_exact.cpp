#include <gtest/gtest.h>

#include "gcfiber/error.hpp"
#include "gcfiber/exact.hpp"

namespace gcfiber {
namespace {

TEST(ParseDecimal, AcceptedForms) {
  EXPECT_EQ(parse_decimal("3"), Exact(3));
  EXPECT_EQ(parse_decimal("-12.5"), Exact(-25, 2));
  EXPECT_EQ(parse_decimal("+0.25"), Exact(1, 4));
  EXPECT_EQ(parse_decimal("1e-3"), Exact(1, 1000));
  EXPECT_EQ(parse_decimal("2.5E2"), Exact(250));
  EXPECT_EQ(parse_decimal(".5"), Exact(1, 2));
  EXPECT_EQ(parse_decimal("0.1"), Exact(1, 10));
}

TEST(ParseDecimal, Rejected) {
  for (const char* bad : {"", "-", "abc", "1.2.3", "1e", "1e+", "3x", "1e999", " 1"})
    EXPECT_THROW(parse_decimal(bad), Error) << bad;
}

TEST(ParseDecimal, ErrorCodeIsParse) {
  try {
    parse_decimal("nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
  }
}

TEST(DecimalString, TerminatingExpansionsAreExact) {
  EXPECT_EQ(to_decimal_string(Exact(5, 2)), "2.5");
  EXPECT_EQ(to_decimal_string(Exact(-3, 8)), "-0.375");
  EXPECT_EQ(to_decimal_string(Exact(7)), "7");
  EXPECT_EQ(to_decimal_string(Exact(1, 1000)), "0.001");
  EXPECT_EQ(parse_decimal(to_decimal_string(Exact(123457, 1024))), Exact(123457, 1024));
}

TEST(DecimalString, NonTerminatingFallsBackToNearestDouble) {
  EXPECT_EQ(to_decimal_string(Exact(1, 3)), "0.3333333333333333");
}

TEST(FromDouble, IsExactBinaryValue) {
  EXPECT_EQ(from_double(0.5), Exact(1, 2));
  EXPECT_NE(from_double(0.1), Exact(1, 10));
  EXPECT_EQ(to_double(from_double(0.1)), 0.1);
  EXPECT_THROW(from_double(std::numeric_limits<double>::infinity()), Error);
}

}  // namespace
}  // namespace gcfiber
