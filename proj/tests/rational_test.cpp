#include <random>

#include <gtest/gtest.h>

#include "liftspace/rational.hpp"
#include "support/generators.hpp"

using namespace liftspace;
namespace ts = liftspace::testsupport;

TEST(Rational, CanonicalForm) {
    Rational r(Int(6), Int(-4));
    EXPECT_EQ(numerator_of(r), -3);
    EXPECT_EQ(denominator_of(r), 2);

    Rational zero(Int(0), Int(7));
    EXPECT_EQ(numerator_of(zero), 0);
    EXPECT_EQ(denominator_of(zero), 1);
}

TEST(Rational, StaysReducedUnderRandomOperationChains) {
    std::mt19937 rng(20240601);
    for (int trial = 0; trial < 200; ++trial) {
        Rational acc = ts::random_rational(rng);
        for (int step = 0; step < 30; ++step) {
            const Rational other = ts::random_rational(rng);
            switch (step % 4) {
                case 0: acc += other; break;
                case 1: acc -= other; break;
                case 2: acc *= other; break;
                default:
                    if (other != 0) acc /= other;
                    break;
            }
            const Int num = numerator_of(acc);
            const Int den = denominator_of(acc);
            ASSERT_GT(den, 0);
            ASSERT_EQ(boost::multiprecision::gcd(boost::multiprecision::abs(num), den), 1);
        }
    }
}

TEST(Rational, ParseAndFormat) {
    EXPECT_EQ(parse_rational("123"), Rational(123));
    EXPECT_EQ(parse_rational("-7"), Rational(-7));
    EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
    EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
    EXPECT_EQ(format_rational(Rational(-3442)), "-3442");
    EXPECT_EQ(format_rational(Rational(1, 2)), "1/2");
    EXPECT_EQ(format_ratio(Rational(1)), "1/1");
    EXPECT_EQ(format_ratio(Rational(0)), "0/1");

    EXPECT_THROW(parse_rational(""), ParseError);
    EXPECT_THROW(parse_rational("abc"), ParseError);
    EXPECT_THROW(parse_rational("1/0"), ParseError);
}

TEST(Rational, ParseRoundTripsLargeValues) {
    const std::string big = "-1221025649984883675985358536224195253438557154538786018715372562"
                            "898562470321954355419803731053462819341154947203888099621875559538"
                            "938162404995285432981398927874079411909612099068865705010313467684"
                            "991159914369123758761656124830";
    const Rational r = parse_rational(big);
    EXPECT_EQ(numerator_of(r).str(), big);
    EXPECT_EQ(format_rational(r), big);
}

TEST(Rational, EntrySizeHelpers) {
    EXPECT_EQ(entry_bits(Rational(0)), 0u);
    EXPECT_EQ(entry_bits(Rational(1)), 1u);
    EXPECT_EQ(entry_bits(Rational(-8)), 4u);
    EXPECT_EQ(entry_bits(Rational(1, 1024)), 11u);
    EXPECT_EQ(entry_digits(Rational(-3442)), 4u);
    EXPECT_EQ(entry_digits(Rational(1, 100)), 3u);
}
