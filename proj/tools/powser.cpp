// powser command-line tool: exact truncated power series arithmetic,
// Toeplitz-Hessenberg determinants, Bernoulli/Stirling/partition tables,
// the identity verification suites, and the power-algorithm bench.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "powser/powser.hpp"

namespace {

using namespace powser;

series load_series(const std::string& file, const std::string& coeffs, long long order_flag) {
    if (file.empty() == coeffs.empty())
        throw parse_error("provide exactly one of --series FILE or --coeffs LIST");
    std::vector<rational> c;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in)
            throw parse_error("cannot open series file '" + file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        c = parse_series_json(buf.str()).coeffs();
    } else {
        c = parse_rational_list(coeffs);
    }
    if (order_flag >= 0) {
        const std::size_t want = static_cast<std::size_t>(order_flag) + 1;
        if (c.size() > want && !file.empty())
            c.resize(want);  // explicit working order: truncate file input
        else if (c.size() > want)
            throw parse_error("--coeffs lists more than order+1 coefficients");
        else
            c.resize(want, rational(0));
    }
    return series(std::move(c));
}

void print_coefficients(const series& f) {
    std::cout << "n,coeff\n";
    for (std::size_t i = 0; i <= f.order(); ++i)
        std::cout << i << ',' << to_string(f[i]) << '\n';
}

int cmd_pow(const series& f, long long k, const std::string& alg) {
    if (alg == "all") {
        const series ref = pow_miller(f, k);
        std::string agreed = "miller";
        for (power_algorithm a :
             {power_algorithm::closed_form, power_algorithm::double_sum, power_algorithm::hat,
              power_algorithm::nested, power_algorithm::derivative}) {
            if (!power_algorithm_applicable(a, f, k)) continue;
            const series got = pow(f, k, a);
            if (!(got == ref)) {
                std::cerr << "disagreement: " << to_string(a) << " differs from miller\n";
                return 1;
            }
            agreed += ' ';
            agreed += to_string(a);
        }
        print_coefficients(ref);
        std::cout << "all algorithms agree (" << agreed << ")\n";
        return 0;
    }
    const auto parsed = power_algorithm_from_string(alg);
    if (!parsed)
        throw parse_error("unknown power algorithm '" + alg + "'");
    print_coefficients(pow(f, k, *parsed));
    return 0;
}

int cmd_inv(const series& f, const std::string& alg) {
    if (alg == "recursive") {
        print_coefficients(inverse_recursive(f));
    } else if (alg == "wronski") {
        print_coefficients(inverse_wronski(f));
    } else if (alg == "both") {
        const series a = inverse_recursive(f);
        const series b = inverse_wronski(f);
        if (!(a == b)) {
            std::cerr << "disagreement: wronski differs from recursive\n";
            return 1;
        }
        print_coefficients(a);
        std::cout << "both algorithms agree (recursive wronski)\n";
    } else {
        throw parse_error("unknown inverse algorithm '" + alg + "'");
    }
    return 0;
}

int cmd_det(const std::string& band_text, const std::string& alg) {
    const auto band = parse_rational_list(band_text);
    const hessenberg_spec spec(band, band.size() - 1);
    if (alg == "recursive") {
        std::cout << to_string(det_recursive(spec)) << '\n';
    } else if (alg == "trudi") {
        std::cout << to_string(det_trudi(spec)) << '\n';
    } else if (alg == "composition") {
        std::cout << to_string(det_composition(spec)) << '\n';
    } else if (alg == "all") {
        const rational a = det_recursive(spec);
        const rational b = det_trudi(spec);
        const rational c = det_composition(spec);
        if (a != b || a != c) {
            std::cerr << "disagreement: recursive " << to_string(a) << ", trudi " << to_string(b)
                      << ", composition " << to_string(c) << '\n';
            return 1;
        }
        std::cout << to_string(a) << " (all methods agree)\n";
    } else {
        throw parse_error("unknown determinant algorithm '" + alg + "'");
    }
    return 0;
}

void print_value_table(const std::vector<rational>& values, const std::string& format) {
    if (format == "json") {
        std::cout << '[';
        for (std::size_t n = 0; n < values.size(); ++n) {
            if (n) std::cout << ',';
            std::cout << '"' << to_string(values[n]) << '"';
        }
        std::cout << "]\n";
        return;
    }
    std::cout << "n,value\n";
    for (std::size_t n = 0; n < values.size(); ++n)
        std::cout << n << ',' << to_string(values[n]) << '\n';
}

int cmd_stirling(std::size_t max_n, const std::string& method, const std::string& format) {
    stirling_method m;
    if (method == "multinomial")
        m = stirling_method::multinomial;
    else if (method == "paper")
        m = stirling_method::paper_recurrence;
    else if (method == "classic")
        m = stirling_method::classic;
    else
        throw parse_error("unknown stirling method '" + method + "'");
    const auto table = stirling_numbers(max_n, m);
    if (format == "json") {
        std::cout << '[';
        for (std::size_t n = 0; n <= max_n; ++n) {
            if (n) std::cout << ',';
            std::cout << '[';
            for (std::size_t k = 0; k <= n; ++k) {
                if (k) std::cout << ',';
                std::cout << '"' << table.at(n, k).str() << '"';
            }
            std::cout << ']';
        }
        std::cout << "]\n";
        return 0;
    }
    std::cout << "n,k,value\n";
    for (std::size_t n = 0; n <= max_n; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            std::cout << n << ',' << k << ',' << table.at(n, k).str() << '\n';
    return 0;
}

int cmd_partition(std::size_t max_n, const std::string& method, const std::string& format) {
    std::vector<bigint> p;
    if (method == "pentagonal")
        p = partition_numbers_pentagonal(max_n);
    else if (method == "determinant")
        p = partition_numbers_det(max_n);
    else
        throw parse_error("unknown partition method '" + method + "'");
    if (format == "json") {
        std::cout << '[';
        for (std::size_t n = 0; n < p.size(); ++n) {
            if (n) std::cout << ',';
            std::cout << '"' << p[n].str() << '"';
        }
        std::cout << "]\n";
        return 0;
    }
    std::cout << "n,p\n";
    for (std::size_t n = 0; n < p.size(); ++n)
        std::cout << n << ',' << p[n].str() << '\n';
    return 0;
}

void parse_range(const std::string& text, long long& lo, long long& hi, const char* what) {
    const auto pos = text.find("..");
    if (pos == std::string::npos)
        throw parse_error(std::string(what) + " must look like LO..HI");
    try {
        lo = std::stoll(text.substr(0, pos));
        hi = std::stoll(text.substr(pos + 2));
    } catch (const std::exception&) {
        throw parse_error(std::string(what) + " must look like LO..HI");
    }
    if (lo > hi)
        throw parse_error(std::string(what) + ": LO must not exceed HI");
}

int cmd_verify(const std::string& suite, const verify_options& opt) {
    std::vector<suite_result> results;
    if (suite == "all" || suite == "series") results.push_back(run_series_suite(opt));
    if (suite == "all" || suite == "numbers") results.push_back(run_numbers_suite(opt));
    if (suite == "all" || suite == "partitions") results.push_back(run_partitions_suite(opt));
    if (results.empty())
        throw parse_error("unknown suite '" + suite + "'");
    std::uint64_t failures = 0, checks = 0;
    for (const auto& r : results) {
        for (const auto& rep : r.flag_examples)
            std::cout << rep.to_json() << '\n';
        for (const auto& rep : r.failures)
            std::cout << rep.to_json() << '\n';
        std::cout << "suite " << r.name << ": " << r.checks << " checks, " << r.failures.size()
                  << " failures, " << r.flagged << " flagged\n";
        failures += r.failures.size();
        checks += r.checks;
    }
    if (failures) {
        std::cout << "verify: FAIL (" << failures << " of " << checks << " checks)\n";
        return 1;
    }
    std::cout << "verify: PASS (" << checks << " checks)\n";
    return 0;
}

int cmd_bench(const bench_options& opt) {
    const auto records = run_pow_bench(opt);
    std::cout << bench_csv_header() << '\n';
    for (const auto& r : records)
        std::cout << bench_csv_row(r) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact truncated power series toolkit"};
    app.require_subcommand(1);

    std::string series_file, coeffs_text, band_text, suite, only_id;
    std::string pow_alg = "miller", inv_alg = "both", det_alg = "all";
    std::string bern_method = "series", genb_method_name = "power", stir_method = "classic";
    std::string part_method = "pentagonal", psum_method = "direct";
    std::string table_format = "csv", bench_op = "pow", bench_format = "csv";
    std::string k_range_text, order_range_text = "4..16";
    long long k = 0, order_flag = -1, m_order = 1;
    std::size_t max_n = 10;
    std::size_t powersum_m = 0, powersum_n = 0;
    verify_options vopt;
    bench_options bopt;

    auto* pow_cmd = app.add_subcommand("pow", "k-th power of a series");
    pow_cmd->add_option("--series", series_file, "series literal JSON file");
    pow_cmd->add_option("--coeffs", coeffs_text, "inline coefficients, e.g. \"1,-1/2,1/6\"");
    pow_cmd->add_option("--k", k, "integer exponent")->required();
    pow_cmd->add_option("--order", order_flag, "working truncation order");
    pow_cmd->add_option("--alg", pow_alg, "miller|closed|double|hat|nested|deriv|all");

    auto* inv_cmd = app.add_subcommand("inv", "multiplicative inverse of a series");
    inv_cmd->add_option("--series", series_file, "series literal JSON file");
    inv_cmd->add_option("--coeffs", coeffs_text, "inline coefficients");
    inv_cmd->add_option("--order", order_flag, "working truncation order");
    inv_cmd->add_option("--alg", inv_alg, "recursive|wronski|both");

    auto* det_cmd = app.add_subcommand("det", "Toeplitz-Hessenberg determinant");
    det_cmd->add_option("--band", band_text, "band a_0,a_1,...,a_n")->required();
    det_cmd->add_option("--alg", det_alg, "recursive|trudi|composition|all");

    auto* bern_cmd = app.add_subcommand("bernoulli", "Bernoulli numbers B_0..B_N");
    bern_cmd->add_option("--max", max_n, "largest index N")->required();
    bern_cmd->add_option("--method", bern_method, "series|determinant|trudi");
    bern_cmd->add_option("--format", table_format, "csv|json");

    auto* genb_cmd = app.add_subcommand("genbernoulli", "generalized Bernoulli numbers B_n^(m)");
    genb_cmd->add_option("--m", m_order, "order m (any integer)")->required();
    genb_cmd->add_option("--max", max_n, "largest index N")->required();
    genb_cmd->add_option("--method", genb_method_name, "power|multinomial-neg|multinomial-pos");
    genb_cmd->add_option("--format", table_format, "csv|json");

    auto* stir_cmd = app.add_subcommand("stirling", "Stirling numbers of the second kind");
    stir_cmd->add_option("--max", max_n, "largest n")->required();
    stir_cmd->add_option("--method", stir_method, "multinomial|paper|classic");
    stir_cmd->add_option("--format", table_format, "csv|json");

    auto* part_cmd = app.add_subcommand("partition", "partition function p(0)..p(N)");
    part_cmd->add_option("--max", max_n, "largest n")->required();
    part_cmd->add_option("--method", part_method, "pentagonal|determinant");
    part_cmd->add_option("--format", table_format, "csv|json");

    auto* psum_cmd = app.add_subcommand("powersum", "1^m + 2^m + ... + n^m");
    psum_cmd->add_option("--m", powersum_m, "exponent m")->required();
    psum_cmd->add_option("--n", powersum_n, "upper limit n")->required();
    psum_cmd->add_option("--method", psum_method, "bernoulli|stirling|direct");

    auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
    verify_cmd->add_option("--suite", suite, "all|series|numbers|partitions")->default_val("all");
    verify_cmd->add_option("--id", only_id, "restrict the identity registry to one id");
    verify_cmd->add_option("--max-n", vopt.max_n, "largest n in the identity grid");
    verify_cmd->add_option("--k-range", k_range_text, "identity k range, e.g. -6..6");
    verify_cmd->add_option("--seed", vopt.seed, "RNG seed for the random suites");
    verify_cmd->add_option("--count", vopt.series_count, "random series count");
    verify_cmd->add_option("--max-order", vopt.max_order, "largest random series order");

    auto* bench_cmd = app.add_subcommand("bench", "power-algorithm benchmark");
    bench_cmd->add_option("--op", bench_op, "operation to bench (pow)");
    bench_cmd->add_option("--order-range", order_range_text, "orders LO..HI");
    bench_cmd->add_option("--k", bopt.k, "exponent");
    bench_cmd->add_option("--repeats", bopt.repeats, "timing repeats per point");
    bench_cmd->add_option("--format", bench_format, "csv");
    bench_cmd->add_option("--seed", bopt.seed, "seed for the input series");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(pow_cmd))
            return cmd_pow(load_series(series_file, coeffs_text, order_flag), k, pow_alg);
        if (app.got_subcommand(inv_cmd))
            return cmd_inv(load_series(series_file, coeffs_text, order_flag), inv_alg);
        if (app.got_subcommand(det_cmd))
            return cmd_det(band_text, det_alg);
        if (app.got_subcommand(bern_cmd)) {
            bernoulli_method bm;
            if (bern_method == "series")
                bm = bernoulli_method::series;
            else if (bern_method == "determinant")
                bm = bernoulli_method::determinant;
            else if (bern_method == "trudi")
                bm = bernoulli_method::trudi;
            else
                throw parse_error("unknown bernoulli method '" + bern_method + "'");
            print_value_table(bernoulli_numbers(max_n, bm), table_format);
            return 0;
        }
        if (app.got_subcommand(genb_cmd)) {
            genb_method gm;
            if (genb_method_name == "power")
                gm = genb_method::power;
            else if (genb_method_name == "multinomial-neg")
                gm = genb_method::multinomial_neg;
            else if (genb_method_name == "multinomial-pos")
                gm = genb_method::multinomial_pos;
            else
                throw parse_error("unknown genbernoulli method '" + genb_method_name + "'");
            print_value_table(generalized_bernoulli_numbers(m_order, max_n, gm), table_format);
            return 0;
        }
        if (app.got_subcommand(stir_cmd))
            return cmd_stirling(max_n, stir_method, table_format);
        if (app.got_subcommand(part_cmd))
            return cmd_partition(max_n, part_method, table_format);
        if (app.got_subcommand(psum_cmd)) {
            power_sum_method pm;
            if (psum_method == "bernoulli")
                pm = power_sum_method::bernoulli;
            else if (psum_method == "stirling")
                pm = power_sum_method::stirling;
            else if (psum_method == "direct")
                pm = power_sum_method::direct;
            else
                throw parse_error("unknown powersum method '" + psum_method + "'");
            std::cout << power_sum(powersum_m, powersum_n, pm).str() << '\n';
            return 0;
        }
        if (app.got_subcommand(verify_cmd)) {
            if (!k_range_text.empty())
                parse_range(k_range_text, vopt.k_lo, vopt.k_hi, "--k-range");
            vopt.only_id = only_id;
            if (!only_id.empty()) {
                const auto& ids = identity_checker::ids();
                if (std::find(ids.begin(), ids.end(), only_id) == ids.end())
                    throw parse_error("unknown identity id '" + only_id + "'");
                suite = "numbers";
            }
            return cmd_verify(suite, vopt);
        }
        if (app.got_subcommand(bench_cmd)) {
            if (bench_op != "pow")
                throw parse_error("only --op pow is benchable");
            if (bench_format != "csv")
                throw parse_error("only --format csv is supported for bench");
            long long lo = 0, hi = 0;
            parse_range(order_range_text, lo, hi, "--order-range");
            if (lo < 0)
                throw parse_error("--order-range must be nonnegative");
            bopt.order_lo = static_cast<std::size_t>(lo);
            bopt.order_hi = static_cast<std::size_t>(hi);
            return cmd_bench(bopt);
        }
    } catch (const non_invertible_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const hypothesis_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const parse_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
