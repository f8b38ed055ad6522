#include "basel/closed_forms.hpp"

#include <stdexcept>

#include "basel/series_roots.hpp"

namespace basel {
namespace {

void require_even(int n, const char* what) {
    if (n < 2 || n % 2 != 0) {
        throw DomainError(std::string(what) + " needs an even order >= 2, got " +
                          std::to_string(n));
    }
}

void require_odd(int n, const char* what) {
    if (n < 1 || n % 2 != 1) {
        throw DomainError(std::string(what) + " needs an odd order >= 1, got " +
                          std::to_string(n));
    }
}

Rational power_of_two(int n) {
    BigInt p = BigInt(1) << n;
    return Rational(p);
}

// lambda/beta coefficient from a zigzag power sum: (q^n / 2) z_n in p-form
// is z_n / 2^(n+1).
Rational half_power_coeff(const Rational& z_n, int n) {
    return z_n / power_of_two(n + 1);
}

ClosedConstant lambda_from_zigzag(const PowerSumSeq& z, int two_k) {
    ClosedConstant by_zigzag(half_power_coeff(z.at(two_k), two_k), two_k);
    ClosedConstant by_zeta =
        (Rational(1) - power_of_two(two_k).reciprocal()) * zeta_even(two_k);
    if (by_zigzag != by_zeta) {
        throw std::logic_error("lambda routes disagree at order " + std::to_string(two_k));
    }
    return by_zigzag;
}

} // namespace

std::string kind_name(SeriesKind kind) {
    switch (kind) {
        case SeriesKind::zeta: return "zeta";
        case SeriesKind::lambda: return "lambda";
        case SeriesKind::beta: return "beta";
        case SeriesKind::leibniz: return "leibniz";
        case SeriesKind::newton_alternating: return "newton_alternating";
        case SeriesKind::third_free_first_power: return "third_free_first_power";
        case SeriesKind::third_free_squares: return "third_free_squares";
    }
    return "?";
}

SeriesId::SeriesId(SeriesKind kind, int exponent) : kind(kind), exponent(exponent) {
    switch (kind) {
        case SeriesKind::zeta:
        case SeriesKind::lambda:
            require_even(exponent, kind_name(kind).c_str());
            break;
        case SeriesKind::beta:
            require_odd(exponent, "beta");
            break;
        case SeriesKind::leibniz:
        case SeriesKind::newton_alternating:
        case SeriesKind::third_free_first_power:
            if (exponent != 1) throw DomainError(kind_name(kind) + " is a first-power series");
            break;
        case SeriesKind::third_free_squares:
            if (exponent != 2) throw DomainError("third_free_squares has exponent 2");
            break;
    }
}

std::string SeriesId::name() const {
    return kind_name(kind) + "(" + std::to_string(exponent) + ")";
}

ClosedConstant zeta_even(int two_k) {
    require_even(two_k, "zeta");
    int k = two_k / 2;
    PowerSumSeq p = power_sums_from_elementary(elementary_for_sinc_roots(k), k);
    return ClosedConstant(p.at(k), two_k);
}

std::vector<ClosedFormEntry> zeta_even_table(int max_order) {
    require_even(max_order, "zeta table");
    int k_max = max_order / 2;
    PowerSumSeq p = power_sums_from_elementary(elementary_for_sinc_roots(k_max), k_max);
    std::vector<ClosedFormEntry> rows;
    rows.reserve(static_cast<size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) {
        rows.push_back({SeriesId(SeriesKind::zeta, 2 * k), ClosedConstant(p.at(k), 2 * k)});
    }
    return rows;
}

ClosedConstant lambda_even(int two_k) {
    require_even(two_k, "lambda");
    return lambda_from_zigzag(zigzag_power_sums(two_k), two_k);
}

ClosedConstant beta_odd(int n) {
    require_odd(n, "beta");
    PowerSumSeq z = zigzag_power_sums(n);
    return ClosedConstant(half_power_coeff(z.at(n), n), n);
}

std::vector<ClosedFormEntry> odd_series_table(int max_order) {
    if (max_order < 1) throw DomainError("odd-series table needs max_order >= 1");
    PowerSumSeq z = zigzag_power_sums(max_order);
    std::vector<ClosedFormEntry> rows;
    rows.reserve(static_cast<size_t>(max_order));
    for (int n = 1; n <= max_order; ++n) {
        if (n % 2 == 1) {
            rows.push_back({SeriesId(SeriesKind::beta, n),
                            ClosedConstant(half_power_coeff(z.at(n), n), n)});
        } else {
            rows.push_back({SeriesId(SeriesKind::lambda, n), lambda_from_zigzag(z, n)});
        }
    }
    return rows;
}

Rational lambda_to_zeta_factor(int two_k) {
    require_even(two_k, "lambda_to_zeta_factor");
    Rational p = power_of_two(two_k);
    return p / (p - Rational(1));
}

ClosedConstant zeta2_drop_multiples(long m) {
    if (m < 2) throw DomainError("dropping multiples needs m >= 2");
    Rational keep = Rational(1) - Rational(1, m).pow(2);
    return keep * zeta_even(2);
}

std::vector<ClosedFormEntry> first_power_closed_forms() {
    return {
        {SeriesId(SeriesKind::leibniz, 1), ClosedConstant(Rational(1, 4), 1)},
        {SeriesId(SeriesKind::newton_alternating, 1), ClosedConstant(Rational(1, 2), 1, 2)},
        {SeriesId(SeriesKind::third_free_first_power, 1), ClosedConstant(Rational(2, 3), 1, 3)},
    };
}

ClosedConstant closed_form_of(const SeriesId& id) {
    switch (id.kind) {
        case SeriesKind::zeta: return zeta_even(id.exponent);
        case SeriesKind::lambda: return lambda_even(id.exponent);
        case SeriesKind::beta: return beta_odd(id.exponent);
        case SeriesKind::leibniz: return ClosedConstant(Rational(1, 4), 1);
        case SeriesKind::newton_alternating: return ClosedConstant(Rational(1, 2), 1, 2);
        case SeriesKind::third_free_first_power:
            return ClosedConstant(Rational(2, 3), 1, 3);
        case SeriesKind::third_free_squares: return zeta2_drop_multiples(3);
    }
    throw DomainError("unknown series kind");
}

std::vector<RatioIdentity> ratio_identities(int max_order) {
    if (max_order < 4) throw DomainError("ratio chain needs max_order >= 4");
    require_even(max_order, "ratio chain");
    std::vector<ClosedFormEntry> zetas = zeta_even_table(max_order);
    std::vector<RatioIdentity> chain;
    chain.reserve(zetas.size());
    // Degenerate first link: ratio against the constant one series.
    chain.push_back({2, 0, zetas[0].value.coeff().reciprocal()});
    for (size_t i = 1; i < zetas.size(); ++i) {
        chain.push_back({zetas[i].series.exponent, zetas[i - 1].series.exponent,
                         zetas[i - 1].value.coeff() / zetas[i].value.coeff()});
    }
    return chain;
}

std::vector<PiExpressionRow> pi_expression_table(int rows) {
    if (rows < 1) throw DomainError("expression table needs at least one row");
    std::vector<ClosedFormEntry> forms = odd_series_table(rows);
    std::vector<PiExpressionRow> table;
    table.reserve(static_cast<size_t>(rows));
    table.push_back(
        {forms[0].value.coeff().reciprocal(), SeriesId(SeriesKind::beta, 1), std::nullopt});
    for (int j = 2; j <= rows; ++j) {
        const ClosedFormEntry& num = forms[static_cast<size_t>(j - 1)];
        const ClosedFormEntry& den = forms[static_cast<size_t>(j - 2)];
        table.push_back(
            {den.value.coeff() / num.value.coeff(), num.series, den.series});
    }
    return table;
}

TermPattern term_pattern(const SeriesId& id) {
    switch (id.kind) {
        case SeriesKind::zeta: return {id.exponent, 1, {1}};
        case SeriesKind::lambda: return {id.exponent, 2, {0, 1}};
        case SeriesKind::beta:
        case SeriesKind::leibniz: return {id.exponent, 4, {0, 1, 0, -1}};
        case SeriesKind::newton_alternating:
            return {id.exponent, 8, {0, 1, 0, 1, 0, -1, 0, -1}};
        case SeriesKind::third_free_first_power:
            return {id.exponent, 6, {0, 1, 1, 0, -1, -1}};
        case SeriesKind::third_free_squares: return {id.exponent, 3, {0, 1, 1}};
    }
    throw DomainError("unknown series kind");
}

SeriesTerms series_terms(const SeriesId& id) {
    TermPattern pattern = term_pattern(id);
    const int period = pattern.period;
    bool alternating = false;
    for (int r = 0; r < period; ++r) {
        if (pattern.sign_by_residue[static_cast<size_t>(r)] < 0) alternating = true;
    }
    SeriesTerms terms;
    terms.exponent = pattern.exponent;
    terms.alternating = alternating;
    if (!alternating) {
        for (int r = 0; r < period; ++r) {
            if (pattern.sign_by_residue[static_cast<size_t>(r)] != 0) {
                terms.forms.push_back({period, r == 0 ? period : r});
            }
        }
        return terms;
    }
    // Alternating patterns flip sign every half period; fold the table into
    // forms over the half period with the (-1)^i prefactor implied.
    if (period % 2 != 0) throw std::logic_error("alternating pattern with odd period");
    const int half = period / 2;
    for (int r = 0; r < half; ++r) {
        int s = pattern.sign_by_residue[static_cast<size_t>(r)];
        int flipped = pattern.sign_by_residue[static_cast<size_t>(r + half)];
        if (s + flipped != 0) throw std::logic_error("pattern lacks half-period antisymmetry");
        if (s > 0) terms.forms.push_back({half, r == 0 ? half : r});
    }
    return terms;
}

} // namespace basel
