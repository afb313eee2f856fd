#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dysonct/arith.hpp"
#include "dysonct/errors.hpp"

using namespace dysonct;

TEST_CASE("binomial basics") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(52, 26) == Integer("495918532948104"));
}

TEST_CASE("factorial basics") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == Integer("2432902008176640000"));
    CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("rationals stay in lowest terms with positive denominator") {
    const Rational half(Integer(2), Integer(4));
    CHECK(half.numerator() == 1);
    CHECK(half.denominator() == 2);

    const Rational negated(Integer(3), Integer(-6));
    CHECK(negated.numerator() == -1);
    CHECK(negated.denominator() == 2);
    CHECK(negated.str() == "-1/2");

    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::invalid_argument);
}

TEST_CASE("to_integer succeeds exactly when the denominator is 1") {
    CHECK(Rational(Integer(6), Integer(3)).to_integer() == 2);
    CHECK(Rational(0).to_integer() == 0);
    CHECK(Rational(Integer(6), Integer(3)).is_integer());
    CHECK_FALSE(Rational(Integer(1), Integer(3)).is_integer());
    CHECK_THROWS_AS(Rational(Integer(1), Integer(3)).to_integer(), IntegralityError);
}

TEST_CASE("rational arithmetic agrees with integer arithmetic on integers") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long long> dist(-50, 50);
    for (int trial = 0; trial < 200; ++trial) {
        const long long x = dist(rng);
        const long long y = dist(rng);
        const Rational rx(x);
        const Rational ry(y);
        CHECK((rx + ry).to_integer() == Integer(static_cast<long>(x + y)));
        CHECK((rx - ry).to_integer() == Integer(static_cast<long>(x - y)));
        CHECK((rx * ry).to_integer() == Integer(static_cast<long>(x * y)));
        if (y != 0 && x % y == 0) {
            CHECK((rx / ry).to_integer() == Integer(static_cast<long>(x / y)));
        }
    }
}

TEST_CASE("rational field ops round trip") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> dist(-20, 20);
    for (int trial = 0; trial < 200; ++trial) {
        const long long p = dist(rng);
        long long q = dist(rng);
        if (q == 0) q = 1;
        const Rational v(Integer(static_cast<long>(p)), Integer(static_cast<long>(q)));
        CHECK(v + (-v) == Rational(0));
        if (!v.is_zero()) CHECK(v / v == Rational(1));
        CHECK(v * Rational(1) == v);
    }
}

TEST_CASE("conversion counter moves forward") {
    const long long before = integrality_conversion_count();
    (void)Rational(Integer(10), Integer(5)).to_integer();
    CHECK(integrality_conversion_count() == before + 1);
}
