#include "basel/newton_girard.hpp"

namespace basel {

PowerSumSeq power_sums_from_elementary(const ElementarySeq& e, int k_max) {
    if (k_max < 1) throw DomainError("power sums need k_max >= 1");
    if (e.size() < k_max) {
        throw ArityError("need " + std::to_string(k_max) + " elementary values, have " +
                         std::to_string(e.size()));
    }
    auto provider = [&e](int j) { return e.at(j); };
    return PowerSumSeq{power_sums_generic<Rational>(provider, k_max)};
}

ElementarySeq elementary_from_roots(std::span<const Rational> roots) {
    if (roots.empty()) throw ArityError("elementary values need at least one root");
    // Multiply out prod (x + r_i); coefficient j is e_j.
    std::vector<Rational> e(roots.size(), Rational(0));
    size_t used = 0;
    for (const Rational& r : roots) {
        ++used;
        for (size_t j = used; j-- > 1;) {
            e[j] += r * e[j - 1];
        }
        e[0] += r;
    }
    return ElementarySeq{std::move(e)};
}

PowerSumSeq power_sums_from_roots(std::span<const Rational> roots, int k_max) {
    if (k_max < 1) throw DomainError("power sums need k_max >= 1");
    std::vector<Rational> p(static_cast<size_t>(k_max), Rational(0));
    for (const Rational& r : roots) {
        Rational power = r;
        for (int k = 1; k <= k_max; ++k) {
            p[static_cast<size_t>(k - 1)] += power;
            if (k < k_max) power *= r;
        }
    }
    return PowerSumSeq{std::move(p)};
}

} // namespace basel
