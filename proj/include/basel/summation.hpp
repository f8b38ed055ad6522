#pragma once

#include <utility>
#include <vector>

#include "basel/closed_constant.hpp"
#include "basel/closed_forms.hpp"
#include "basel/summation_report.hpp"

namespace basel {

/// Digits ceiling for the summation operations specifically; the tail
/// machinery sizes its correction order from this.
inline constexpr int kMaxSumDigits = 200;

/// Sum of a constant-sign even-power series (zeta, lambda, or the
/// multiples-of-3-free squares) to absolute error below 10^(-digits):
/// N leading terms summed directly plus an integral-with-corrections tail
/// estimate whose residual bound is computed exactly and reported as
/// rigorous.
std::pair<BigFloat, SummationReport> sum_even_power_series(const SeriesId& id, int digits);

/// Sum of an alternating or mixed-sign series (beta, Leibniz, the Newton
/// series, the multiples-of-3-free first powers) by a Chebyshev-weighted
/// alternating transform, cross-validated by doubling the work; the
/// residual is the observed agreement and is flagged empirical.
std::pair<BigFloat, SummationReport> sum_alternating_series(const SeriesId& id, int digits);

/// Dispatch on the series' sign structure.
std::pair<BigFloat, SummationReport> sum_series(const SeriesId& id, int digits);

/// |closed_eval(closed, digits) - numeric sum of the series|. Callers
/// assert this against 10^(1-digits).
BigFloat verify_identity(const ClosedConstant& closed, const SeriesId& series, int digits);

/// Exact Bernoulli numbers B_0..B_m (B_1 = -1/2 convention); the weights of
/// the tail correction.
std::vector<Rational> bernoulli_numbers(int m);

} // namespace basel
