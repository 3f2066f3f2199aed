#include <doctest.h>

#include "pentagon/rational.hpp"

using namespace pentagon;

TEST_CASE("rational construction and canonical form") {
    CHECK(rat(21, 100) == rat(42, 200));
    CHECK(rat(-3, 6) == rat(1, -2));
    CHECK(to_fraction_string(rat(398, 100)) == "199/50");
    CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
}

TEST_CASE("rational string parsing") {
    CHECK(rat_from_string("0.0026") == rat(26, 10000));
    CHECK(rat_from_string("3.98") == rat(398, 100));
    CHECK(rat_from_string("-0.5") == rat(-1, 2));
    CHECK(rat_from_string("7/12") == rat(7, 12));
    CHECK(rat_from_string("42") == rat(42));
    CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
    CHECK(rat_from_string("0.03846157") == rat(3846157, 100000000));
}

TEST_CASE("decimal rendering rounds to nearest") {
    CHECK(to_decimal_string(rat(1, 3), 6) == "0.333333");
    CHECK(to_decimal_string(rat(2, 3), 6) == "0.666667");
    CHECK(to_decimal_string(rat(1, 624), 9) == "0.001602564");
    CHECK(to_decimal_string(rat(-1, 8), 3) == "-0.125");
    CHECK(to_decimal_string(rat(5), 0) == "5");
    CHECK(to_decimal_string(rat(1, 26), 8) == "0.03846154");
}

TEST_CASE("bigint helpers") {
    CHECK(big_pow(BigInt(5), 8) == BigInt(390625));
    CHECK(factorial(5) == BigInt(120));
    CHECK(binomial(BigInt(25), 5) == BigInt(53130));
    CHECK(binomial(BigInt(64), 5) == BigInt(7624512));
}
