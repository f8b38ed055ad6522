#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "basel/report.hpp"

namespace {

basel::SineTag parse_sine(const std::string& name) {
    if (name == "1" || name == "one") return basel::SineTag::one;
    if (name == "inv-sqrt2") return basel::SineTag::inv_sqrt2;
    if (name == "sqrt3-over-2") return basel::SineTag::half_sqrt3;
    throw basel::DomainError("unknown sine '" + name +
                             "' (expected 1, inv-sqrt2 or sqrt3-over-2)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact closed forms c*pi^k for classical reciprocal power series,\n"
                 "with arbitrary-precision numerical verification"};
    app.require_subcommand(1);
    bool timing = false;
    app.add_flag("--timing", timing, "report wall time on stderr");

    std::string format_name = "text";
    int max_order = 12;
    int digits = 0;
    int k_max = 4;
    long n_pairs = 100000;
    std::string sine_name = "1";
    std::string corrupt;

    CLI::App* zeta = app.add_subcommand("zeta", "closed forms of 1 + 1/2^n + 1/3^n + ...");
    zeta->add_option("--max-order", max_order, "largest (even) order")->capture_default_str();
    zeta->add_option("--format", format_name, "text, json or csv")->capture_default_str();
    zeta->add_option("--digits", digits, "append decimal evaluations");

    CLI::App* odd = app.add_subcommand(
        "odd-series", "closed forms of the odd-denominator series (lambda and beta)");
    odd->add_option("--max-order", max_order, "largest order")->capture_default_str();
    odd->add_option("--format", format_name, "text, json or csv")->capture_default_str();
    odd->add_option("--digits", digits, "append decimal evaluations");

    CLI::App* zigzag = app.add_subcommand("zigzag", "power sums of the sine-1 arc family");
    zigzag->add_option("--max-order", max_order, "largest order")->capture_default_str();
    zigzag->add_option("--format", format_name, "text, json or csv")->capture_default_str();

    CLI::App* ids = app.add_subcommand("pi-identities",
                                       "evaluate every expression equal to pi or pi^2");
    ids->add_option("--digits", digits, "target digits")->default_val(15);
    ids->add_option("--format", format_name, "text, json or csv")->capture_default_str();

    CLI::App* arcs = app.add_subcommand("arc-sums",
                                        "recurrence predictions vs partial sums over an arc family");
    arcs->add_option("--sine", sine_name, "1, inv-sqrt2 or sqrt3-over-2")->capture_default_str();
    arcs->add_option("--k-max", k_max, "largest power")->capture_default_str();
    arcs->add_option("--n-pairs", n_pairs, "pairs to sum")->capture_default_str();
    arcs->add_option("--digits", digits, "working digits")->default_val(12);
    arcs->add_option("--format", format_name, "text, json or csv")->capture_default_str();

    CLI::App* verify = app.add_subcommand("verify", "verify every identity numerically");
    verify->add_option("--digits", digits, "target digits")->default_val(20);
    verify->add_option("--format", format_name, "text, json or csv")->capture_default_str();
    verify->add_option("--corrupt", corrupt, "perturb the named closed form (testing hook)")
        ->group("");  // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return basel::kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    int code = basel::kExitOk;
    try {
        basel::OutputFormat format = basel::parse_format(format_name);
        std::optional<int> digits_opt;
        if (digits > 0) digits_opt = digits;

        if (zeta->parsed()) {
            code = basel::run_zeta(std::cout, max_order, format, digits_opt);
        } else if (odd->parsed()) {
            code = basel::run_odd_series(std::cout, max_order, format, digits_opt);
        } else if (zigzag->parsed()) {
            code = basel::run_zigzag(std::cout, max_order, format);
        } else if (ids->parsed()) {
            code = basel::run_pi_identities(std::cout, digits, format);
        } else if (arcs->parsed()) {
            code = basel::run_arc_sums(std::cout, parse_sine(sine_name), k_max, n_pairs,
                                       digits, format);
        } else if (verify->parsed()) {
            code = basel::run_verify(std::cout, digits, format, corrupt);
        }
    } catch (const basel::ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return basel::kExitResource;
    } catch (const basel::DomainError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return basel::kExitUsage;
    } catch (const basel::ArityError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return basel::kExitUsage;
    }

    if (timing) {
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start);
        std::cerr << "elapsed: " << elapsed.count() << " ms\n";
    }
    return code;
}
