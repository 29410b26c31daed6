#include <gtest/gtest.h>

#include <random>
#include <string>

#include "gradreveal/arbint.hpp"
#include "gradreveal/error.hpp"
#include "oracles.hpp"

using gradreveal::ArbInt;

TEST(ArbInt, ParsesAndRendersDecimal) {
  EXPECT_EQ(ArbInt::parse("0").to_string(), "0");
  EXPECT_EQ(ArbInt::parse("007").to_string(), "7");
  EXPECT_EQ(ArbInt(18446744073709551615ULL).to_string(), "18446744073709551615");
}

TEST(ArbInt, RejectsNonDecimalText) {
  for (const char* bad : {"", "-1", "+1", " 1", "1 ", "0x10", "12a"}) {
    EXPECT_FALSE(ArbInt::try_parse(bad)) << bad;
  }
  EXPECT_THROW(ArbInt::parse("-3"), gradreveal::Error);
}

TEST(ArbInt, DigitCountAndLeadingDigit) {
  EXPECT_EQ(ArbInt(0).digit_count(), 1u);
  EXPECT_EQ(ArbInt(9).digit_count(), 1u);
  EXPECT_EQ(ArbInt(10).digit_count(), 2u);
  EXPECT_EQ(ArbInt::pow10(299).digit_count(), 300u);
  EXPECT_EQ((ArbInt::pow10(300) - ArbInt(1)).digit_count(), 300u);
  EXPECT_EQ(ArbInt::parse("9973").leading_digit(), 9);
  EXPECT_EQ(ArbInt::pow10(50).leading_digit(), 1);
}

TEST(ArbInt, SubtractionNeverGoesNegative) {
  EXPECT_THROW(ArbInt(3) - ArbInt(4), std::domain_error);
  EXPECT_EQ(ArbInt(4) - ArbInt(4), ArbInt(0));
  EXPECT_THROW(ArbInt(4) / ArbInt(0), std::domain_error);
}

TEST(ArbInt, ToU64OnlyWhenItFits) {
  EXPECT_EQ(ArbInt(42).to_u64(), 42u);
  EXPECT_FALSE((ArbInt(18446744073709551615ULL) + ArbInt(1)).to_u64());
}

// parse(render(x)) == x for random values up to 2000 digits, and products
// agree with schoolbook multiplication.
TEST(ArbInt, RoundTripAndExactProductProperty) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t len_a = 1 + gen() % 1000;
    const std::size_t len_b = 1 + gen() % 1000;
    std::string a(len_a, '0');
    std::string b(len_b, '0');
    for (auto& c : a) c = static_cast<char>('0' + gen() % 10);
    for (auto& c : b) c = static_cast<char>('0' + gen() % 10);
    a[0] = static_cast<char>('1' + gen() % 9);
    b[0] = static_cast<char>('1' + gen() % 9);

    const ArbInt x = ArbInt::parse(a);
    EXPECT_EQ(x.to_string(), a);
    EXPECT_EQ(ArbInt::parse(x.to_string()), x);
    EXPECT_EQ(x.digit_count(), len_a);
    EXPECT_EQ((x * ArbInt::parse(b)).to_string(), oracle::long_multiply(a, b));
  }
}
