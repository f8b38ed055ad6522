#include "basel/rational.hpp"

#include "doctest.h"
#include "oracles.hpp"

using basel::BigInt;
using basel::Rational;

TEST_CASE("addition reduces to canonical form") {
    CHECK(Rational(1, 6) + Rational(1, 6) == Rational(1, 3));
    CHECK(Rational(1, 6).numerator() == 1);
    CHECK((Rational(1, 6) + Rational(1, 6)).denominator() == 3);
}

TEST_CASE("division: the ratio step between consecutive coefficients") {
    CHECK(Rational(1, 90) / Rational(1, 6) == Rational(1, 15));
    // 21 R / (2 Q) = 1 when R = 1/945 and Q = 1/90: 21/2 * 1/945 = 1/90.
    Rational lhs = Rational(21, 2) * Rational(1, 945);
    Rational rhs = Rational(1, 90) * Rational(2, 2);
    CHECK(lhs / rhs == Rational(1));
}

TEST_CASE("division by zero is a typed error") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), basel::DomainError);
    CHECK_THROWS_AS(Rational(0).reciprocal(), basel::DomainError);
    CHECK_THROWS_AS(Rational(1, 0), basel::DomainError);
}

TEST_CASE("negative denominators normalize") {
    Rational r(3, -6);
    CHECK(r.numerator() == -1);
    CHECK(r.denominator() == 2);
    CHECK(r == Rational(-1, 2));
}

TEST_CASE("factorial reciprocals") {
    CHECK(factorial_reciprocal(0) == Rational(1));
    CHECK(factorial_reciprocal(3) == Rational(1, 6));
    // 7! multiplied out by hand-checkable integer arithmetic.
    long f = 1;
    for (long i = 2; i <= 7; ++i) f *= i;
    CHECK(f == 5040);
    CHECK(factorial_reciprocal(7) == Rational(1, f));
    CHECK(basel::factorial(13) == BigInt("6227020800"));
}

TEST_CASE("pow") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(0) == Rational(1));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK_THROWS_AS(Rational(0).pow(-1), basel::DomainError);
}

TEST_CASE("to_string") {
    CHECK(Rational(1, 3).to_string() == "1/3");
    CHECK(Rational(-5).to_string() == "-5");
    CHECK(Rational(0).to_string() == "0");
}

TEST_CASE("canonical form survives random operation chains") {
    testutil::RationalGen gen(20250809);
    Rational acc(1, 3);
    for (int i = 0; i < 400; ++i) {
        Rational r = gen.next(99, 99);
        switch (i % 4) {
            case 0: acc += r; break;
            case 1: acc -= r; break;
            case 2: acc *= r; break;
            default:
                if (!r.is_zero()) acc /= r;
                break;
        }
        BigInt g;
        mpz_gcd(g.get_mpz_t(), acc.numerator().get_mpz_t(), acc.denominator().get_mpz_t());
        CHECK(g == 1);
        CHECK(acc.denominator() > 0);
    }
}

TEST_CASE("field laws on random rationals") {
    testutil::RationalGen gen(42);
    for (int i = 0; i < 200; ++i) {
        Rational a = gen.next(50, 50);
        Rational b = gen.next(50, 50);
        Rational c = gen.next(50, 50);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.reciprocal() == Rational(1));
    }
}

TEST_CASE("comparisons") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(abs(Rational(-3, 4)) == Rational(3, 4));
}
