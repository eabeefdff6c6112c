#include <gtest/gtest.h>

#include "pw/errors.hpp"
#include "pw/rational.hpp"

using pw::Rational;

TEST(Rational, ParsesAndCanonicalizes) {
    EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
    EXPECT_EQ(Rational::parse("-6/4").to_string(), "-3/2");
    EXPECT_EQ(Rational::parse("7").to_string(), "7");
    EXPECT_EQ(Rational::parse("0/5").to_string(), "0");
    EXPECT_EQ(Rational(2, -4).to_string(), "-1/2");
}

TEST(Rational, RejectsMalformedLiterals) {
    EXPECT_THROW(Rational::parse("1/0"), pw::ParseError);
    EXPECT_THROW(Rational::parse("1/-2"), pw::ParseError);
    EXPECT_THROW(Rational::parse("x"), pw::ParseError);
    EXPECT_THROW(Rational::parse(""), pw::ParseError);
    EXPECT_THROW(Rational::parse("1/"), pw::ParseError);
    EXPECT_THROW(Rational(1, 0), pw::PreconditionError);
}

TEST(Rational, ExactArithmetic) {
    const Rational a(1, 3), b(1, 6);
    EXPECT_EQ(a + b, Rational(1, 2));
    EXPECT_EQ(a - b, Rational(1, 6));
    EXPECT_EQ(a * b, Rational(1, 18));
    EXPECT_EQ(a / b, Rational(2));
    EXPECT_EQ(-a, Rational(-1, 3));
    EXPECT_EQ(Rational(-2, 3).pow(3), Rational(-8, 27));
    EXPECT_EQ(Rational(5).pow(0), Rational::one());
    EXPECT_LT(Rational(1, 3), Rational(1, 2));

    Rational acc(1);
    acc.add_product(Rational(2, 3), Rational(3, 4));
    EXPECT_EQ(acc, Rational(3, 2));
}

TEST(Rational, InverseOfZeroThrows) {
    EXPECT_EQ(Rational(-3, 7).inverse(), Rational(-7, 3));
    EXPECT_THROW(Rational::zero().inverse(), pw::SingularMatrixError);
    EXPECT_THROW(Rational(1) / Rational(0), pw::SingularMatrixError);
}

TEST(Rational, LargeValuesStayExact) {
    Rational x(1, 3);
    for (int i = 0; i < 200; ++i) x *= Rational(3, 2);
    for (int i = 0; i < 200; ++i) x /= Rational(3, 2);
    EXPECT_EQ(x, Rational(1, 3));
}
