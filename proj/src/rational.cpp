#include "basel/rational.hpp"

#include <ostream>
#include <vector>

namespace basel {

Rational Rational::pow(long k) const {
    if (k == 0) return Rational(1);
    bool invert = k < 0;
    unsigned long e = invert ? -static_cast<unsigned long>(k) : k;
    if (invert && is_zero()) throw DomainError("zero to a negative power");
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), numerator().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), denominator().get_mpz_t(), e);
    return invert ? Rational(d, n) : Rational(n, d);
}

std::string Rational::to_string() const {
    std::string s = numerator().get_str();
    if (!is_integer()) {
        s += '/';
        s += denominator().get_str();
    }
    return s;
}

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

std::ostream& operator<<(std::ostream& os, const Rational& a) {
    return os << a.to_string();
}

BigInt factorial(unsigned long n) {
    thread_local std::vector<BigInt> memo{BigInt(1)};
    while (memo.size() <= n) {
        memo.push_back(memo.back() * static_cast<unsigned long>(memo.size()));
    }
    return memo[n];
}

Rational factorial_reciprocal(unsigned long n) {
    return Rational(BigInt(1), factorial(n));
}

} // namespace basel
