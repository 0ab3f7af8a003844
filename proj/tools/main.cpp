#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mtk/cli.hpp"
#include "mtk/modmath.hpp"

// exit statuses: 0 success, 1 verification counterexample / no CRT solution,
// 2 usage or parse error, 3 range error
int main(int argc, char** argv) {
    CLI::App app{"congruence toolkit for Mersenne numbers M_p = 2^p - 1"};
    app.require_subcommand(1);

    auto* table = app.add_subcommand("table", "emit the congruence table for primes p <= pmax");
    mtk::cli::TableSpec table_spec;
    std::string table_format = "md";
    table->add_option("--pmax", table_spec.p_max, "largest exponent column (<= 63)")
        ->capture_default_str();
    table->add_option("--moduli", table_spec.moduli, "fingerprint moduli (default 2..10)")
        ->delimiter(',');
    table->add_option("--format", table_format, "output format")
        ->check(CLI::IsMember({"md", "csv"}))
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run theorem verifiers and report counterexamples");
    std::vector<std::string> verify_ids = {"all"};
    mtk::VerifyOptions verify_opts;
    verify->add_option("--theorems", verify_ids, "theorem ids, or \"all\"")->delimiter(',');
    verify->add_option("--pmax", verify_opts.p_max, "prime bound (n bound for T3)")
        ->capture_default_str();
    verify->add_option("--amax", verify_opts.a_max, "base bound for C1/C2/T8/T9/T10")
        ->capture_default_str();

    auto* crt = app.add_subcommand("crt", "combine congruences with the Chinese Remainder Theorem");
    std::vector<std::string> crt_texts;
    crt->add_option("congruences", crt_texts, "congruences as \"r mod m\"")->required();

    auto* search = app.add_subcommand("search", "classify prime exponents against the filters");
    uint64_t search_pmax = 61;
    search->add_option("--pmax", search_pmax, "largest exponent")->capture_default_str();

    auto* perfect = app.add_subcommand("perfect", "construct even perfect numbers 2^(p-1) * M_p");
    uint64_t perfect_pmax = 31;
    perfect->add_option("--pmax", perfect_pmax, "largest exponent (<= 31)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*table) {
            table_spec.format = table_format == "csv" ? mtk::cli::TableFormat::csv
                                                      : mtk::cli::TableFormat::markdown;
            std::cout << mtk::cli::render_table(table_spec);
            return 0;
        }
        if (*verify)
            return mtk::cli::run_verify(verify_ids, verify_opts, std::cout);
        if (*crt) {
            std::cout << mtk::cli::run_crt(crt_texts) << '\n';
            return 0;
        }
        if (*search) {
            std::cout << mtk::cli::render_search(search_pmax);
            return 0;
        }
        if (*perfect) {
            std::cout << mtk::cli::render_perfect(perfect_pmax);
            return 0;
        }
    } catch (const mtk::no_solution_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::range_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
