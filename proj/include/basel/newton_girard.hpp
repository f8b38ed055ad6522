#pragma once

#include <concepts>
#include <span>
#include <vector>

#include "basel/rational.hpp"

namespace basel {

/// Value types the recurrence runs over: exact rationals, quadratic-field
/// values, polynomials. Needs ring arithmetic plus construction from long.
template <typename R>
concept RingValue = std::constructible_from<R, long> && requires(R a, R b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a* b } -> std::convertible_to<R>;
};

/// Power sums from elementary symmetric values by the recurrence
///
///   p_k = p_{k-1} e_1 - p_{k-2} e_2 + ... + (-1)^{k-2} p_1 e_{k-1}
///                                         + (-1)^{k-1} k e_k,
///
/// the row pattern P = e1; Q = P e1 - 2 e2; R = Q e1 - P e2 + 3 e3; ...
/// Elementary values are pulled lazily from `elementary(j)` (1-based),
/// exactly e_1..e_k_max once each, in order.
template <RingValue R, typename Provider>
std::vector<R> power_sums_generic(Provider&& elementary, int k_max) {
    if (k_max < 1) throw DomainError("power sums need k_max >= 1");
    std::vector<R> es;
    std::vector<R> ps;
    es.reserve(static_cast<size_t>(k_max));
    ps.reserve(static_cast<size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) {
        es.push_back(elementary(k));
        R sum = R(k) * es.back();
        if (k % 2 == 0) sum = R(0) - sum;
        for (int i = 1; i < k; ++i) {
            R term = ps[static_cast<size_t>(k - i - 1)] * es[static_cast<size_t>(i - 1)];
            sum = (i % 2 == 1) ? sum + term : sum - term;
        }
        ps.push_back(sum);
    }
    return ps;
}

/// Elementary symmetric values e_1..e_m of a root family: e_j is the sum of
/// all products of j distinct roots. A contiguous prefix; vanishing orders
/// are explicit zeros.
struct ElementarySeq {
    std::vector<Rational> values;

    int size() const { return static_cast<int>(values.size()); }
    const Rational& at(int j) const { return values.at(static_cast<size_t>(j - 1)); }
};

/// Power sums p_1..p_k of a root family: p_k is the sum of k-th powers of
/// all roots.
struct PowerSumSeq {
    std::vector<Rational> values;

    int size() const { return static_cast<int>(values.size()); }
    const Rational& at(int k) const { return values.at(static_cast<size_t>(k - 1)); }

    friend bool operator==(const PowerSumSeq& a, const PowerSumSeq& b) {
        return a.values == b.values;
    }
};

/// p_1..p_k_max from e_1..e_k_max. ArityError when e is shorter than k_max;
/// finite families are padded with explicit zeros by the caller.
PowerSumSeq power_sums_from_elementary(const ElementarySeq& e, int k_max);

/// Elementary symmetric values of an explicit finite root multiset, by
/// direct polynomial expansion of prod (x + root_i).
ElementarySeq elementary_from_roots(std::span<const Rational> roots);

/// Brute-force oracle: p_k = sum of roots^k by literal summation.
PowerSumSeq power_sums_from_roots(std::span<const Rational> roots, int k_max);

} // namespace basel
