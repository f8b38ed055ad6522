#pragma once

#include <optional>
#include <string>
#include <vector>

#include "basel/closed_constant.hpp"
#include "basel/newton_girard.hpp"

namespace basel {

enum class SeriesKind {
    zeta,                    // 1 + 1/2^n + 1/3^n + ...
    lambda,                  // 1 + 1/3^n + 1/5^n + ...
    beta,                    // 1 - 1/3^n + 1/5^n - ...
    leibniz,                 // beta at the first power
    newton_alternating,      // 1 + 1/3 - 1/5 - 1/7 + 1/9 + ...
    third_free_first_power,  // 1 + 1/2 - 1/4 - 1/5 + 1/7 + 1/8 - ...
    third_free_squares,      // 1 + 1/4 + 1/16 + 1/25 + ... (multiples of 3 absent)
};

std::string kind_name(SeriesKind kind);

/// A series identity target: the kind plus the power of the denominators.
/// Closed forms exist only for even zeta/lambda orders and odd beta orders;
/// the constructor enforces that.
struct SeriesId {
    SeriesKind kind;
    int exponent;

    SeriesId(SeriesKind kind, int exponent);

    /// "zeta(4)", "beta(3)", "newton_alternating(1)", ...
    std::string name() const;

    /// Deterministic ordering for report aggregation.
    friend bool operator<(const SeriesId& a, const SeriesId& b) {
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return a.exponent < b.exponent;
    }
    friend bool operator==(const SeriesId& a, const SeriesId& b) {
        return a.kind == b.kind && a.exponent == b.exponent;
    }
};

struct ClosedFormEntry {
    SeriesId series;
    ClosedConstant value;
};

/// zeta(2k) = p_k * pi^2k with p_k the k-th power sum of the family
/// {1/(n^2 pi^2)}: 1/6, 1/90, 1/945, 1/9450, 1/93555, 691/638512875, ...
ClosedConstant zeta_even(int two_k);

/// All even orders up to max_order from a single recurrence run.
std::vector<ClosedFormEntry> zeta_even_table(int max_order);

/// lambda(2k) from the y = 1 power sums: (q^2k / 2) z_2k with q = pi/2.
/// Both this route and (1 - 2^-2k) zeta(2k) are computed and must agree
/// exactly; the zigzag route is the defining one.
ClosedConstant lambda_even(int two_k);

/// beta(2k+1) = (q^n / 2) z_n, n odd: pi/4, pi^3/32, 5 pi^5/1536, ...
ClosedConstant beta_odd(int n);

/// beta rows at odd orders and lambda rows at even orders, up to max_order,
/// from a single zigzag run.
std::vector<ClosedFormEntry> odd_series_table(int max_order);

/// 2^n / (2^n - 1): lambda(n) times this factor is zeta(n).
Rational lambda_to_zeta_factor(int two_k);

/// Sum of 1/n^2 over n not divisible by m: (1 - 1/m^2) zeta(2).
ClosedConstant zeta2_drop_multiples(long m);

/// The three first-power closed forms: the Leibniz series pi/4, the
/// alternating series pi/(2 sqrt(2)) published by Newton, and the
/// multiples-of-3-free series 2 pi/(3 sqrt(3)).
std::vector<ClosedFormEntry> first_power_closed_forms();

/// The closed form of any supported series.
ClosedConstant closed_form_of(const SeriesId& id);

/// One step of the ratio chain: factor * zeta(num_order) / zeta(den_order)
/// equals pi^2 exactly. The degenerate first entry divides by the constant
/// one series (den_order 0): 6 zeta(2) = pi^2.
struct RatioIdentity {
    int numerator_order;
    int denominator_order;
    Rational factor;
};

/// Entries 6, 15, 21/2, 10, 99/10, 6825/691, ... up to max_order (even,
/// >= 4).
std::vector<RatioIdentity> ratio_identities(int max_order);

/// A row "pi = coefficient * numerator / denominator" over the lambda and
/// beta series: pi = 4 beta(1), pi = 2 lambda(2)/beta(1), ...
/// Coefficients are derived from the closed forms, not tabulated.
struct PiExpressionRow {
    Rational coefficient;
    SeriesId numerator;
    std::optional<SeriesId> denominator;
};

std::vector<PiExpressionRow> pi_expression_table(int rows = 7);

/// Sign pattern of a series as a period table over residue classes of the
/// denominator: sign_by_residue[m % period] is +1, -1, or 0 (term absent).
struct TermPattern {
    int exponent;
    int period;
    std::vector<int> sign_by_residue;

    int sign_of(long m) const { return sign_by_residue[static_cast<size_t>(m % period)]; }
};

TermPattern term_pattern(const SeriesId& id);

/// Summation view of a series: terms sum_{forms} 1/(stride*i + offset)^n
/// over i = 0, 1, 2, ..., constant-sign or with sign (-1)^i. Derived from
/// the period table; the two views agree term by term.
struct LinearForm {
    long stride;
    long offset;
};

struct SeriesTerms {
    int exponent;
    std::vector<LinearForm> forms;
    bool alternating;
};

SeriesTerms series_terms(const SeriesId& id);

} // namespace basel
