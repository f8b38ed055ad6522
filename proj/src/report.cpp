#include "basel/report.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace basel {
namespace {

using nlohmann::json;

const char* const kCsvHeader =
    "series,exponent,coeff_numerator,coeff_denominator,pi_power,inv_sqrt,decimal,residual";

std::string align_columns(const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width;
    for (const auto& row : rows) {
        if (row.size() > width.size()) width.resize(row.size(), 0);
        for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::ostringstream out;
    for (const auto& row : rows) {
        std::string line;
        for (size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
    return out.str();
}

OutputRecord record_for(std::string series, int exponent, const ClosedConstant& c) {
    OutputRecord r;
    r.series = std::move(series);
    r.exponent = exponent;
    r.coeff_numerator = c.coeff().numerator().get_str();
    r.coeff_denominator = c.coeff().denominator().get_str();
    r.pi_power = c.pi_power();
    r.inv_sqrt = c.inv_sqrt();
    return r;
}

// Power-sum letters of the classical presentation (no U).
const char* zeta_letter(int order) {
    static const char* const letters[] = {"P", "Q", "R", "S", "T", "V", "W", "X"};
    int k = order / 2;
    return (k >= 1 && k <= 8) ? letters[k - 1] : nullptr;
}

json table_to_json(const Table& t) {
    json rows = json::array();
    for (const OutputRecord& r : t.rows) {
        json row;
        row["series"] = r.series;
        row["exponent"] = r.exponent;
        row["coeff_numerator"] = r.coeff_numerator;
        row["coeff_denominator"] = r.coeff_denominator;
        row["pi_power"] = r.pi_power;
        row["inv_sqrt"] = r.inv_sqrt;
        if (r.decimal) row["decimal"] = *r.decimal;
        if (r.residual) row["residual"] = *r.residual;
        rows.push_back(std::move(row));
    }
    json j;
    j["command"] = t.command;
    j["parameters"] = t.parameters;
    j["rows"] = std::move(rows);
    return j;
}

void emit(std::ostream& os, const Table& t, OutputFormat format, const std::string& text) {
    switch (format) {
        case OutputFormat::text: os << text; break;
        case OutputFormat::json: os << render_table_json(t); break;
        case OutputFormat::csv: os << render_table_csv(t); break;
    }
}

void check_digits_arg(int digits) {
    if (digits < 1) throw DomainError("--digits must be >= 1");
}

// q-form of a closed constant: p = 2q, so c p^n becomes (c 2^n) q^n.
ClosedConstant quarter_form(const ClosedConstant& c) {
    BigInt scale = BigInt(1) << c.pi_power();
    return Rational(scale) * c;
}

} // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::text;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw DomainError("unknown format '" + name + "' (expected text, json or csv)");
}

std::string render_table_json(const Table& t) {
    return table_to_json(t).dump(2) + "\n";
}

std::string render_table_csv(const Table& t) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const OutputRecord& r : t.rows) {
        out << r.series << ',' << r.exponent << ',' << r.coeff_numerator << ','
            << r.coeff_denominator << ',' << r.pi_power << ',' << r.inv_sqrt << ','
            << r.decimal.value_or("") << ',' << r.residual.value_or("") << '\n';
    }
    return out.str();
}

Table parse_table_json(const std::string& text) {
    json j = json::parse(text);
    Table t;
    t.command = j.at("command").get<std::string>();
    for (const auto& [key, value] : j.at("parameters").items()) {
        t.parameters[key] = value.get<std::string>();
    }
    for (const json& row : j.at("rows")) {
        OutputRecord r;
        r.series = row.at("series").get<std::string>();
        r.exponent = row.at("exponent").get<int>();
        r.coeff_numerator = row.at("coeff_numerator").get<std::string>();
        r.coeff_denominator = row.at("coeff_denominator").get<std::string>();
        r.pi_power = row.at("pi_power").get<int>();
        r.inv_sqrt = row.at("inv_sqrt").get<int>();
        if (row.contains("decimal")) r.decimal = row.at("decimal").get<std::string>();
        if (row.contains("residual")) r.residual = row.at("residual").get<std::string>();
        t.rows.push_back(std::move(r));
    }
    return t;
}

std::string series_prefix(const SeriesId& id, int shown) {
    TermPattern pattern = term_pattern(id);
    std::string out;
    int emitted = 0;
    long m = 1;
    for (; emitted < shown || out.empty(); ++m) {
        int sign = pattern.sign_of(m);
        if (sign == 0) continue;
        if (emitted >= shown) break;
        std::string term;
        if (m == 1) {
            term = "1";
        } else if (pattern.exponent == 1) {
            term = "1/" + std::to_string(m);
        } else {
            term = "1/" + std::to_string(m) + "^" + std::to_string(pattern.exponent);
        }
        if (emitted == 0) {
            out = term;
        } else {
            out += (sign > 0 ? " + " : " - ") + term;
        }
        ++emitted;
    }
    for (;; ++m) {
        int sign = pattern.sign_of(m);
        if (sign == 0) continue;
        out += sign > 0 ? " + ..." : " - ...";
        break;
    }
    return out;
}

int run_zeta(std::ostream& os, int max_order, OutputFormat format,
             std::optional<int> digits) {
    if (max_order < 2 || max_order % 2 != 0) {
        throw DomainError("--max-order must be even and >= 2");
    }
    if (digits) check_digits_arg(*digits);

    std::vector<ClosedFormEntry> entries = zeta_even_table(max_order);
    Table t;
    t.command = "zeta";
    t.parameters["max_order"] = std::to_string(max_order);
    if (digits) t.parameters["digits"] = std::to_string(*digits);

    std::vector<std::vector<std::string>> lines;
    for (const ClosedFormEntry& e : entries) {
        OutputRecord r = record_for("zeta", e.series.exponent, e.value);
        std::vector<std::string> line{series_prefix(e.series, 4),
                                      "= " + e.value.to_string("p")};
        if (const char* letter = zeta_letter(e.series.exponent)) {
            line.push_back(std::string("= ") + letter);
        } else {
            line.emplace_back();
        }
        if (digits) {
            r.decimal = closed_eval(e.value, *digits).to_decimal_string(*digits);
            line.push_back("= " + *r.decimal);
        }
        t.rows.push_back(std::move(r));
        lines.push_back(std::move(line));
    }
    emit(os, t, format, align_columns(lines));
    return kExitOk;
}

int run_odd_series(std::ostream& os, int max_order, OutputFormat format,
                   std::optional<int> digits) {
    if (max_order < 1) throw DomainError("--max-order must be >= 1");
    if (digits) check_digits_arg(*digits);

    std::vector<ClosedFormEntry> entries = odd_series_table(max_order);
    Table t;
    t.command = "odd-series";
    t.parameters["max_order"] = std::to_string(max_order);
    if (digits) t.parameters["digits"] = std::to_string(*digits);

    std::vector<std::vector<std::string>> lines;
    for (const ClosedFormEntry& e : entries) {
        OutputRecord r = record_for(kind_name(e.series.kind), e.series.exponent, e.value);
        std::vector<std::string> line{e.series.name(), series_prefix(e.series, 4),
                                      "= " + e.value.to_string("p"),
                                      "= " + quarter_form(e.value).to_string("q")};
        if (digits) {
            r.decimal = closed_eval(e.value, *digits).to_decimal_string(*digits);
            line.push_back("= " + *r.decimal);
        }
        t.rows.push_back(std::move(r));
        lines.push_back(std::move(line));
    }
    emit(os, t, format, align_columns(lines));
    return kExitOk;
}

int run_zigzag(std::ostream& os, int max_order, OutputFormat format) {
    if (max_order < 1) throw DomainError("--max-order must be >= 1");
    PowerSumSeq z = zigzag_power_sums(max_order);

    Table t;
    t.command = "zigzag";
    t.parameters["max_order"] = std::to_string(max_order);

    std::vector<std::vector<std::string>> lines;
    lines.push_back({"k", "p_k", "(k-1)! p_k"});
    for (int k = 1; k <= max_order; ++k) {
        OutputRecord r;
        r.series = "zigzag";
        r.exponent = k;
        r.coeff_numerator = z.at(k).numerator().get_str();
        r.coeff_denominator = z.at(k).denominator().get_str();
        r.pi_power = 0;
        r.inv_sqrt = 1;
        t.rows.push_back(r);
        Rational integer = Rational(factorial(static_cast<unsigned long>(k - 1))) * z.at(k);
        lines.push_back({std::to_string(k), z.at(k).to_string(), integer.to_string()});
    }
    emit(os, t, format, align_columns(lines));
    return kExitOk;
}

int run_pi_identities(std::ostream& os, int digits, OutputFormat format) {
    check_digits_arg(digits);
    const int work = digits + 2;
    if (work > kMaxSumDigits) {
        throw ResourceError("pi-identities supports at most " +
                            std::to_string(kMaxSumDigits - 2) + " digits");
    }
    const long prec = bits_for_digits(work) + 16;
    const BigFloat pi = compute_pi_bits(prec);
    const BigFloat pi_sq = pi * pi;
    const BigFloat threshold = pow10(1 - digits, 96);

    std::map<std::string, BigFloat> sums;
    auto sum_of = [&](const SeriesId& id) -> const BigFloat& {
        auto it = sums.find(id.name());
        if (it == sums.end()) {
            it = sums.emplace(id.name(), sum_series(id, work).first).first;
        }
        return it->second;
    };

    Table t;
    t.command = "pi-identities";
    t.parameters["digits"] = std::to_string(digits);

    std::vector<std::vector<std::string>> lines;
    lines.push_back(
        {"expression", "series sum", "estimate", "reference", "residual", "status"});
    bool all_ok = true;

    auto add_row = [&](const std::string& name, int exponent, const Rational& coeff,
                       int pi_power, const BigFloat& series_sum, const BigFloat& estimate,
                       const BigFloat& reference) {
        BigFloat residual = abs(estimate - reference);
        bool ok = residual < threshold;
        all_ok = all_ok && ok;
        OutputRecord r;
        r.series = name;
        r.exponent = exponent;
        r.coeff_numerator = coeff.numerator().get_str();
        r.coeff_denominator = coeff.denominator().get_str();
        r.pi_power = pi_power;
        r.inv_sqrt = 1;
        r.decimal = estimate.to_decimal_string(digits);
        r.residual = residual.to_scientific_string(3);
        t.rows.push_back(r);
        lines.push_back({name, series_sum.to_decimal_string(digits), *r.decimal,
                         reference.to_decimal_string(digits), *r.residual,
                         ok ? "ok" : "FAIL"});
    };

    for (const PiExpressionRow& row : pi_expression_table()) {
        BigFloat estimate = BigFloat(row.coefficient, prec) * sum_of(row.numerator);
        std::string name = row.coefficient.to_string() + "*" + row.numerator.name();
        if (row.denominator) {
            estimate /= sum_of(*row.denominator);
            name += "/" + row.denominator->name();
        }
        add_row("pi = " + name, row.numerator.exponent, row.coefficient, 1,
                sum_of(row.numerator), estimate, pi);
    }
    for (const RatioIdentity& link : ratio_identities(12)) {
        SeriesId hi(SeriesKind::zeta, link.numerator_order);
        BigFloat estimate = BigFloat(link.factor, prec) * sum_of(hi);
        std::string name = link.factor.to_string() + "*" + hi.name();
        if (link.denominator_order > 0) {
            SeriesId lo(SeriesKind::zeta, link.denominator_order);
            estimate /= sum_of(lo);
            name += "/" + lo.name();
        }
        add_row("pi^2 = " + name, link.numerator_order, link.factor, 2, sum_of(hi),
                estimate, pi_sq);
    }

    std::ostringstream text;
    text << align_columns(lines);
    text << (all_ok ? "all identities within " : "FAILURES above ")
         << threshold.to_scientific_string(1) << " of the reference\n";
    emit(os, t, format, text.str());
    return all_ok ? kExitOk : kExitVerifyFailure;
}

int run_arc_sums(std::ostream& os, SineTag sine, int k_max, long n_pairs, int digits,
                 OutputFormat format) {
    if (k_max < 1) throw DomainError("--k-max must be >= 1");
    if (n_pairs < 1) throw DomainError("--n-pairs must be >= 1");
    check_digits_arg(digits);

    SineCase sine_case = SineCase::from_tag(sine);
    std::vector<QuadExt> predictions = sine_power_sums(sine_case.y, k_max);

    Table t;
    t.command = "arc-sums";
    t.parameters["sine"] = sine_case.y.to_string();
    t.parameters["n_pairs"] = std::to_string(n_pairs);
    t.parameters["digits"] = std::to_string(digits);

    std::vector<std::vector<std::string>> lines;
    lines.push_back({"k", "prediction", "prediction (dec)", "partial sum", "gap"});
    for (int k = 1; k <= k_max; ++k) {
        const QuadExt& prediction = predictions[static_cast<size_t>(k - 1)];
        auto [partial, report] = arc_power_sum_partial(sine_case, k, n_pairs, digits);
        BigFloat predicted = prediction.eval(digits);
        BigFloat gap = abs(partial - predicted);

        OutputRecord r;
        r.series = "arc_sum";
        r.exponent = k;
        if (prediction.is_rational()) {
            r.coeff_numerator = prediction.rational_part().numerator().get_str();
            r.coeff_denominator = prediction.rational_part().denominator().get_str();
            r.inv_sqrt = 1;
        } else if (prediction.rational_part().is_zero()) {
            // b sqrt(d) = (b d)/sqrt(d)
            Rational coeff = prediction.radical_part() * Rational(prediction.disc());
            r.coeff_numerator = coeff.numerator().get_str();
            r.coeff_denominator = coeff.denominator().get_str();
            r.inv_sqrt = prediction.disc();
        } else {
            throw std::logic_error("mixed prediction for " + std::to_string(k));
        }
        r.pi_power = 0;
        r.decimal = partial.to_decimal_string(digits);
        r.residual = gap.to_scientific_string(3);
        t.rows.push_back(r);
        lines.push_back({std::to_string(k), prediction.to_string(),
                         predicted.to_decimal_string(digits), *r.decimal, *r.residual});
    }

    std::ostringstream text;
    text << "sine " << sine_case.y.to_string() << ", least arc "
         << sine_case.least_arc_over_pi.to_string() << "*p, " << n_pairs << " pairs\n";
    text << align_columns(lines);
    emit(os, t, format, text.str());
    return kExitOk;
}

int run_verify(std::ostream& os, int digits, OutputFormat format,
               const std::string& corrupt) {
    check_digits_arg(digits);
    const int work = digits + 2;
    if (work > kMaxSumDigits) {
        throw ResourceError("verify supports at most " + std::to_string(kMaxSumDigits - 2) +
                            " digits");
    }
    const long prec = bits_for_digits(work) + 16;
    const BigFloat pi = compute_pi_bits(prec);
    const BigFloat pi_sq = pi * pi;
    const BigFloat threshold = pow10(1 - digits, 96);

    std::map<std::string, BigFloat> sums;
    auto sum_of = [&](const SeriesId& id) -> const BigFloat& {
        auto it = sums.find(id.name());
        if (it == sums.end()) {
            it = sums.emplace(id.name(), sum_series(id, work).first).first;
        }
        return it->second;
    };
    auto maybe_corrupt = [&](const std::string& name, const ClosedConstant& c) {
        return name == corrupt ? Rational(1001, 1000) * c : c;
    };

    Table t;
    t.command = "verify";
    t.parameters["digits"] = std::to_string(digits);

    std::vector<std::vector<std::string>> lines;
    lines.push_back({"identity", "closed form", "series sum", "residual", "status"});
    bool all_ok = true;
    std::vector<std::string> failures;

    auto note = [&](bool ok, const std::string& name) {
        all_ok = all_ok && ok;
        if (!ok) failures.push_back(name);
    };

    // Closed form against its own series, the bridge both layers must agree
    // on.
    std::vector<SeriesId> identities;
    for (int n = 2; n <= 12; n += 2) identities.emplace_back(SeriesKind::zeta, n);
    for (int n = 2; n <= 8; n += 2) identities.emplace_back(SeriesKind::lambda, n);
    for (int n = 1; n <= 7; n += 2) identities.emplace_back(SeriesKind::beta, n);
    identities.emplace_back(SeriesKind::newton_alternating, 1);
    identities.emplace_back(SeriesKind::third_free_first_power, 1);
    identities.emplace_back(SeriesKind::third_free_squares, 2);
    std::sort(identities.begin(), identities.end());

    for (const SeriesId& id : identities) {
        ClosedConstant closed = maybe_corrupt(id.name(), closed_form_of(id));
        const BigFloat& sum = sum_of(id);
        BigFloat residual = abs(closed_eval(closed, work) - sum);
        bool ok = residual < threshold;
        note(ok, id.name());

        OutputRecord r = record_for(kind_name(id.kind), id.exponent, closed);
        r.decimal = sum.to_decimal_string(digits);
        r.residual = residual.to_scientific_string(3);
        t.rows.push_back(r);
        lines.push_back({id.name(), closed.to_string("p"), *r.decimal, *r.residual,
                         ok ? "ok" : "FAIL"});
    }

    for (const RatioIdentity& link : ratio_identities(12)) {
        SeriesId hi(SeriesKind::zeta, link.numerator_order);
        std::string name = link.factor.to_string() + "*" + hi.name();
        BigFloat estimate = BigFloat(link.factor, prec) * sum_of(hi);
        if (link.denominator_order > 0) {
            SeriesId lo(SeriesKind::zeta, link.denominator_order);
            estimate /= sum_of(lo);
            name += "/" + lo.name();
        }
        BigFloat residual = abs(estimate - pi_sq);
        bool ok = residual < threshold;
        note(ok, name);

        OutputRecord r;
        r.series = name;
        r.exponent = link.numerator_order;
        r.coeff_numerator = link.factor.numerator().get_str();
        r.coeff_denominator = link.factor.denominator().get_str();
        r.pi_power = 2;
        r.decimal = estimate.to_decimal_string(digits);
        r.residual = residual.to_scientific_string(3);
        t.rows.push_back(r);
        lines.push_back({name + " = pi^2", "pi^2", *r.decimal, *r.residual,
                         ok ? "ok" : "FAIL"});
    }

    for (const PiExpressionRow& row : pi_expression_table()) {
        std::string name = row.coefficient.to_string() + "*" + row.numerator.name();
        BigFloat estimate = BigFloat(row.coefficient, prec) * sum_of(row.numerator);
        if (row.denominator) {
            estimate /= sum_of(*row.denominator);
            name += "/" + row.denominator->name();
        }
        BigFloat residual = abs(estimate - pi);
        bool ok = residual < threshold;
        note(ok, name);

        OutputRecord r;
        r.series = name;
        r.exponent = row.numerator.exponent;
        r.coeff_numerator = row.coefficient.numerator().get_str();
        r.coeff_denominator = row.coefficient.denominator().get_str();
        r.pi_power = 1;
        r.decimal = estimate.to_decimal_string(digits);
        r.residual = residual.to_scientific_string(3);
        t.rows.push_back(r);
        lines.push_back({name + " = pi", "pi", *r.decimal, *r.residual, ok ? "ok" : "FAIL"});
    }

    std::ostringstream text;
    text << align_columns(lines);
    size_t total = t.rows.size();
    if (all_ok) {
        text << "verified " << total << "/" << total << " identities at " << digits
             << " digits\n";
    } else {
        text << failures.size() << " of " << total << " identities FAILED:";
        for (const std::string& f : failures) text << ' ' << f;
        text << '\n';
    }
    emit(os, t, format, text.str());
    return all_ok ? kExitOk : kExitVerifyFailure;
}

} // namespace basel
