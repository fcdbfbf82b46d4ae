#include <gtest/gtest.h>

#include <sscreen/interval.hpp>
#include <sscreen/rational.hpp>

using namespace sscreen;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_EQ(Rational(4, 2).fraction_str(), "2/1");
}

TEST(Rational, ParseRoundTrip) {
  for (const char* s : {"0", "7", "-3", "1/3", "-22/7", "123456789012345678901234567891/2"}) {
    EXPECT_EQ(Rational::parse(s).str(), s);
  }
  EXPECT_EQ(Rational::parse(" +6/4 "), Rational(3, 2));
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char* s : {"", "1/", "/2", "1/0", "0.5", "a", "1/-2", "--1"}) EXPECT_THROW(Rational::parse(s), ParseError) << s;
}

TEST(Rational, DivisionByZeroThrows) { EXPECT_THROW(Rational(1) / Rational(0), DomainError); }

TEST(Rational, Powers) {
  EXPECT_EQ(Rational::pow2(-3), Rational(1, 8));
  EXPECT_EQ(Rational::pow2(4), Rational(16));
  EXPECT_EQ(Rational::pow3(-2), Rational(1, 9));
  EXPECT_EQ(Rational::pow3(0), Rational(1));
}

TEST(Rational, OrderAndArithmetic) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) * Rational(3, 4), Rational(1, 4));
  EXPECT_EQ(midpoint(Rational(1, 4), Rational(1, 2)), Rational(3, 8));
  EXPECT_EQ(abs(Rational(-5, 7)), Rational(5, 7));
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(7, 2).ceil(), 4);
}

TEST(Interval, ParseAndPrint) {
  for (const char* s : {"(0,1)", "[0,1]", "[-1/2,3/4)", "(1/3,2]"}) EXPECT_EQ(Interval::parse(s).str(), s);
  EXPECT_THROW(Interval::parse("0,1"), ParseError);
  EXPECT_THROW(Interval::parse("(0,1,2)"), ParseError);
}

TEST(Interval, EmptyConstructionRejected) {
  EXPECT_THROW(Interval::open(1, 1), Error);
  EXPECT_THROW(Interval::closed(1, 0), Error);
  EXPECT_NO_THROW(Interval::point(1));
}

TEST(Interval, Containment) {
  Interval half_open = Interval::parse("[0,1/2)");
  EXPECT_TRUE(half_open.contains(Rational(0)));
  EXPECT_FALSE(half_open.contains(Rational(1, 2)));
  EXPECT_TRUE(Interval::closed(0, 1).contains(Interval::open(0, 1)));
  EXPECT_FALSE(Interval::open(0, 1).contains(Interval::closed(0, 1)));
  EXPECT_TRUE(Interval::parse("(0,1]").contains(Interval::parse("(0,1]")));
}

TEST(Interval, Intersection) {
  auto i = intersect(Interval::parse("(0,1/2]"), Interval::parse("[1/2,1)"));
  ASSERT_TRUE(i);
  EXPECT_TRUE(i->is_point());
  EXPECT_FALSE(intersect(Interval::parse("(0,1/2)"), Interval::parse("[1/2,1)")));
}
