#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "basel/closed_forms.hpp"
#include "basel/series_roots.hpp"
#include "basel/summation.hpp"

namespace basel {

// Process exit codes, asserted by the CLI harness tests.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

enum class OutputFormat { text, json, csv };

OutputFormat parse_format(const std::string& name);

/// One table row. Rational coefficients are carried as decimal integer
/// strings so arbitrarily large values survive serialization losslessly.
struct OutputRecord {
    std::string series;
    int exponent = 0;
    std::string coeff_numerator = "0";
    std::string coeff_denominator = "1";
    int pi_power = 0;
    int inv_sqrt = 1;
    std::optional<std::string> decimal;
    std::optional<std::string> residual;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

struct Table {
    std::string command;
    std::map<std::string, std::string> parameters;
    std::vector<OutputRecord> rows;

    friend bool operator==(const Table&, const Table&) = default;
};

std::string render_table_json(const Table& table);
std::string render_table_csv(const Table& table);
Table parse_table_json(const std::string& text);

/// The leading terms of a series as display text, e.g.
/// "1 + 1/2^2 + 1/3^2 + 1/4^2 + ...".
std::string series_prefix(const SeriesId& id, int shown);

// Command runners shared by the CLI binary and the test harness. Each
// renders to `os` and returns the process exit code.

int run_zeta(std::ostream& os, int max_order, OutputFormat format,
             std::optional<int> digits);
int run_odd_series(std::ostream& os, int max_order, OutputFormat format,
                   std::optional<int> digits);
int run_zigzag(std::ostream& os, int max_order, OutputFormat format);
int run_pi_identities(std::ostream& os, int digits, OutputFormat format);
int run_arc_sums(std::ostream& os, SineTag sine, int k_max, long n_pairs, int digits,
                 OutputFormat format);

/// Runs every identity: the zeta, lambda and beta closed forms, the Newton
/// and multiples-of-3-free sums, the ratio chain, and the pi expression
/// rows. `corrupt` (testing hook) perturbs the named closed form so the
/// failure path can be exercised.
int run_verify(std::ostream& os, int digits, OutputFormat format,
               const std::string& corrupt = "");

} // namespace basel
