#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "basel/errors.hpp"

namespace basel {

using BigInt = mpz_class;

/// Exact arbitrary-size rational, always kept in canonical form:
/// gcd(|numerator|, denominator) = 1, denominator > 0, zero is 0/1.
/// Canonical form makes equality a structural comparison.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}                       // NOLINT(google-explicit-constructor)
    Rational(const BigInt& n) : value_(n) {}              // NOLINT(google-explicit-constructor)
    Rational(long n, long d) : Rational(BigInt(n), BigInt(d)) {}
    Rational(const BigInt& n, const BigInt& d) {
        if (sgn(d) == 0) throw DomainError("rational with zero denominator");
        value_ = mpq_class(n, d);
        value_.canonicalize();
    }

    const BigInt numerator() const { return value_.get_num(); }
    const BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_), Canonical{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.value_ + b.value_), Canonical{});
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.value_ - b.value_), Canonical{});
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.value_ * b.value_), Canonical{});
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DomainError("rational division by zero");
        return Rational(mpq_class(a.value_ / b.value_), Canonical{});
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    Rational reciprocal() const {
        if (is_zero()) throw DomainError("reciprocal of zero");
        return Rational(denominator(), numerator());
    }

    /// Integer power; negative exponents require a nonzero base.
    Rational pow(long k) const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) < 0;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) <= 0;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const;

    double to_double() const { return value_.get_d(); }

    const mpq_class& raw() const { return value_; }

private:
    struct Canonical {};  // tag: the mpq value is already canonical
    Rational(mpq_class v, Canonical) : value_(std::move(v)) {}

    mpq_class value_;  // gmp keeps results canonical; ctors canonicalize explicitly
};

Rational abs(const Rational& a);

std::ostream& operator<<(std::ostream& os, const Rational& a);

/// n! as an exact integer.
BigInt factorial(unsigned long n);

/// 1/n! exactly; factorials are memoized up to the largest n seen so far,
/// since the recurrence drivers request consecutive orders.
Rational factorial_reciprocal(unsigned long n);

} // namespace basel
