#pragma once

// Test-side oracles, kept independent of the library paths they check.

#include <cstdint>
#include <random>
#include <vector>

#include "basel/rational.hpp"

namespace testutil {

using basel::BigInt;
using basel::Rational;

// Bernoulli number B_n by the Akiyama-Tanigawa transform; a different route
// than the recurrence the library uses for tail corrections.
inline Rational bernoulli_oracle(int n) {
    std::vector<Rational> a(static_cast<size_t>(n) + 1);
    Rational b(0);
    for (int m = 0; m <= n; ++m) {
        a[static_cast<size_t>(m)] = Rational(1, m + 1);
        for (int j = m; j >= 1; --j) {
            a[static_cast<size_t>(j - 1)] =
                Rational(j) * (a[static_cast<size_t>(j - 1)] - a[static_cast<size_t>(j)]);
        }
        b = a[0];
    }
    return b;
}

// zeta(2k) / pi^(2k) by the Bernoulli route: |B_2k| 2^(2k-1) / (2k)!.
inline Rational zeta_coeff_oracle(int two_k) {
    BigInt two_pow = BigInt(1) << (two_k - 1);
    Rational numerator = abs(bernoulli_oracle(two_k)) * Rational(two_pow);
    return numerator / Rational(basel::factorial(static_cast<unsigned long>(two_k)));
}

// Dense univariate polynomial over the rationals; the ring used to check
// recurrence rows as polynomial identities in an indeterminate.
class Poly {
public:
    Poly() = default;
    Poly(long v) : Poly(Rational(v)) {}  // NOLINT(google-explicit-constructor)
    Poly(Rational r) {                   // NOLINT(google-explicit-constructor)
        if (!r.is_zero()) c_.push_back(std::move(r));
    }

    static Poly monomial(Rational coeff, int degree) {
        Poly p;
        if (coeff.is_zero()) return p;
        p.c_.assign(static_cast<size_t>(degree) + 1, Rational(0));
        p.c_.back() = std::move(coeff);
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int i) const {
        return i >= 0 && i <= degree() ? c_[static_cast<size_t>(i)] : Rational(0);
    }

    friend Poly operator+(const Poly& x, const Poly& y) {
        Poly r;
        r.c_.resize(std::max(x.c_.size(), y.c_.size()), Rational(0));
        for (size_t i = 0; i < r.c_.size(); ++i) {
            if (i < x.c_.size()) r.c_[i] += x.c_[i];
            if (i < y.c_.size()) r.c_[i] += y.c_[i];
        }
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& x, const Poly& y) {
        Poly neg = y;
        for (Rational& c : neg.c_) c = -c;
        return x + neg;
    }
    friend Poly operator*(const Poly& x, const Poly& y) {
        Poly r;
        if (x.c_.empty() || y.c_.empty()) return r;
        r.c_.assign(x.c_.size() + y.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < x.c_.size(); ++i) {
            for (size_t j = 0; j < y.c_.size(); ++j) {
                r.c_[i + j] += x.c_[i] * y.c_[j];
            }
        }
        r.trim();
        return r;
    }
    friend bool operator==(const Poly& x, const Poly& y) { return x.c_ == y.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// Deterministic random rationals for property tests.
class RationalGen {
public:
    explicit RationalGen(std::uint64_t seed) : rng_(seed) {}

    Rational next(long num_range = 9, long den_range = 9) {
        std::uniform_int_distribution<long> num(-num_range, num_range);
        std::uniform_int_distribution<long> den(1, den_range);
        return Rational(num(rng_), den(rng_));
    }

    Rational next_nonzero(long num_range = 9, long den_range = 9) {
        for (;;) {
            Rational r = next(num_range, den_range);
            if (!r.is_zero()) return r;
        }
    }

    long next_size(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(rng_);
    }

private:
    std::mt19937_64 rng_;
};

} // namespace testutil
