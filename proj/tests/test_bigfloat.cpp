#include "basel/bigfloat.hpp"

#include "doctest.h"

using basel::BigFloat;
using basel::Rational;

namespace {

BigFloat mpfr_pi(long prec) {
    BigFloat ref(prec);
    mpfr_const_pi(ref.raw(), MPFR_RNDN);
    return ref;
}

} // namespace

TEST_CASE("pi to 19 digits") {
    CHECK(basel::compute_pi(19).to_decimal_string(19) == "3.141592653589793238");
}

TEST_CASE("pi at one digit") {
    BigFloat pi = basel::compute_pi(1);
    CHECK(abs(pi - mpfr_pi(96)) < basel::pow10(-1));
    CHECK(pi.to_decimal_string(2) == "3.1");
}

TEST_CASE("pi to 50 digits against an independent computation") {
    // mpfr's builtin constant uses a different algorithm than the Machin
    // arctangent route.
    BigFloat mine = basel::compute_pi(50);
    CHECK(abs(mine - mpfr_pi(256)) < basel::pow10(-50));
    CHECK(mine.to_decimal_string(50) ==
          "3.1415926535897932384626433832795028841971693993751");
}

TEST_CASE("pi precision contract: more digits never disturb verified ones") {
    CHECK(basel::compute_pi(25).to_decimal_string(25) ==
          basel::compute_pi(35).to_decimal_string(25));
}

TEST_CASE("pi digit validation") {
    CHECK_THROWS_AS(basel::compute_pi(0), basel::DomainError);
    CHECK_THROWS_AS(basel::compute_pi(basel::kMaxDigits + 1), basel::ResourceError);
}

TEST_CASE("square root") {
    BigFloat two(2, 64);
    BigFloat root = basel::sqrt(two, 10);
    CHECK(root.to_decimal_string(10) == "1.414213562");
    CHECK(abs(root * root - two) < basel::pow10(-9));
    CHECK_THROWS_AS(basel::sqrt(BigFloat(-1, 64), 10), basel::DomainError);
    CHECK(basel::sqrt(BigFloat(0, 64), 10).is_zero());
}

TEST_CASE("special arcsines are rational multiples of pi") {
    BigFloat pi = mpfr_pi(256);
    BigFloat quarter = arcsin_of_special(basel::SineTag::inv_sqrt2, 30);
    CHECK(abs(quarter - pi / BigFloat(4, 256)) < basel::pow10(-30));
    BigFloat third = arcsin_of_special(basel::SineTag::half_sqrt3, 30);
    CHECK(abs(third - pi / BigFloat(3, 256)) < basel::pow10(-30));
    BigFloat half = arcsin_of_special(basel::SineTag::one, 30);
    CHECK(abs(half - pi / BigFloat(2, 256)) < basel::pow10(-30));

    CHECK(basel::least_arc_over_pi(basel::SineTag::one) == Rational(1, 2));
    CHECK(basel::least_arc_over_pi(basel::SineTag::inv_sqrt2) == Rational(1, 4));
    CHECK(basel::least_arc_over_pi(basel::SineTag::half_sqrt3) == Rational(1, 3));
}

TEST_CASE("decimal rendering rounds half to even") {
    CHECK(BigFloat(Rational(5, 2), 64).to_decimal_string(1) == "2");
    CHECK(BigFloat(Rational(7, 2), 64).to_decimal_string(1) == "4");
    CHECK(BigFloat(Rational(-7, 2), 64).to_decimal_string(1) == "-4");
    CHECK(BigFloat(Rational(1, 4), 64).to_decimal_string(2) == "0.25");
    CHECK(BigFloat(1, 64).to_decimal_string(3) == "1.00");
    CHECK(BigFloat(Rational(1, 8), 64).to_decimal_string(1) == "0.1");
    CHECK(BigFloat(0, 64).to_decimal_string(3) == "0.00");
    CHECK(BigFloat(1000, 64).to_decimal_string(2) == "1000.0");
}

TEST_CASE("scientific rendering") {
    CHECK(BigFloat(Rational(1, 1000), 64).to_scientific_string(2) == "1.0e-3");
    CHECK(BigFloat(12345, 64).to_scientific_string(3) == "1.23e4");
    CHECK(BigFloat(0, 64).to_scientific_string(3) == "0");
    CHECK(BigFloat(Rational(-1, 2), 64).to_scientific_string(2) == "-5.0e-1");
}

TEST_CASE("arithmetic adopts the larger precision and detects zero division") {
    BigFloat a(1, 64);
    BigFloat b(3, 192);
    CHECK((a / b).precision_bits() == 192);
    CHECK_THROWS_AS(a / BigFloat(0, 64), basel::DomainError);
    CHECK(a + b == BigFloat(4, 192));
    CHECK(-(a - b) == BigFloat(2, 192));
}

TEST_CASE("value comparisons") {
    CHECK(BigFloat(Rational(1, 3), 64) < BigFloat(Rational(1, 2), 64));
    CHECK(BigFloat(2, 64).sign() == 1);
    CHECK(BigFloat(-2, 64).sign() == -1);
    CHECK(BigFloat(0, 64).sign() == 0);
}
