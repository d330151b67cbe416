#include <gtest/gtest.h>

#include "ontoforge/error.hpp"
#include "ontoforge/util.hpp"

using namespace ontoforge;

TEST(Slugify, LowercasesAndJoinsWords) {
  EXPECT_EQ(slugify("Wind Power"), "wind_power");
  EXPECT_EQ(slugify("  Wind__ \t Power  "), "wind_power");
  EXPECT_EQ(slugify("Monitoring and Control System"), "monitoring_and_control_system");
  EXPECT_EQ(slugify(""), "");
}

TEST(PercentDecode, DecodesEscapesAndKeepsBrokenOnes) {
  EXPECT_EQ(percent_decode("Wind%20power"), "Wind power");
  EXPECT_EQ(percent_decode("a%2Fb"), "a/b");
  EXPECT_EQ(percent_decode("100%"), "100%");
  EXPECT_EQ(percent_decode("%zz"), "%zz");
  EXPECT_EQ(percent_decode("%4"), "%4");
}

TEST(Timestamp, RoundTripsIsoText) {
  const Timestamp t = parse_timestamp("2024-05-01T12:34:56Z");
  EXPECT_EQ(format_timestamp(t), "2024-05-01T12:34:56Z");
  EXPECT_EQ(format_timestamp(Timestamp{}), "1970-01-01T00:00:00Z");
  EXPECT_THROW(parse_timestamp("yesterday"), Error);
  EXPECT_THROW(parse_timestamp("2024-13-01T00:00:00Z"), Error);
}

TEST(Sha256, MatchesPublishedVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Strings, TrimAndCompare) {
  EXPECT_EQ(trim("  x y \n"), "x y");
  EXPECT_TRUE(iequals("WTG", "wtg"));
  EXPECT_FALSE(iequals("WTG", "wtgs"));
  EXPECT_EQ(split_lines("a\r\nb\n\nc").size(), 4u);
}

TEST(ReadFile, MissingFileIsNotFound) {
  try {
    read_file("/nonexistent/definitely/missing.txt");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_found);
  }
}
