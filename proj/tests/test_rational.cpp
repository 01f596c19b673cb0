#include "doctest.h"

#include "bsg/rational.hpp"
#include "bsg/errors.hpp"
#include "bsg/simulate.hpp"

using namespace bsg;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(2, -4).den() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, -7).den() == 1);
}

TEST_CASE("arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(Rational(3, 5) < Rational(2, 3));
}

TEST_CASE("a/b plus its negation cancels to 0/1 for random values") {
    SplitMix64 rng(7);
    for (int i = 0; i < 200; ++i) {
        long long num = static_cast<long long>(rng.below(2000)) - 1000;
        long long den = static_cast<long long>(rng.below(999)) + 1;
        Rational q(num, den);
        Rational z = q + (-q);
        CHECK(z == Rational(0));
        CHECK(z.den() == 1);
    }
}

TEST_CASE("string round trip") {
    CHECK(Rational::from_string("3/5").to_string() == "3/5");
    CHECK(Rational::from_string("-6/10").to_string() == "-3/5");
    CHECK(Rational::from_string("4").to_string() == "4");
    CHECK(Rational::from_string("0").to_string() == "0");
    CHECK_THROWS_AS(Rational::from_string("1/0"), InvalidInstanceError);
    CHECK_THROWS_AS(Rational::from_string("abc"), InvalidInstanceError);
    CHECK_THROWS_AS(Rational(1, 0), InvalidInstanceError);
}
