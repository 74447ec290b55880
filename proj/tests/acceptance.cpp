// Acceptance suite: one pass/fail line per criterion, each run at its stated
// tolerance (exact equality everywhere) and wall-clock budget. The CLI
// binary path comes in as argv[1]; criteria 9 and 10 drive it end to end.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "powser/powser.hpp"
#include "subprocess.hpp"

using namespace powser;

namespace {

std::string g_cli;
int g_failures = 0;

struct outcome {
    bool pass = true;
    std::uint64_t checks = 0;
    std::string detail;
    std::string note;

    void require(bool ok, const std::string& what) {
        ++checks;
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<void(outcome&)>& body) {
    outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = elapsed <= budget_seconds;
    const bool pass = out.pass && in_budget;
    if (!pass) ++g_failures;
    std::printf("[%s] criterion %d: %s — %llu checks (%.1fs, budget %.0fs)\n",
                pass ? "PASS" : "FAIL", number, name.c_str(),
                static_cast<unsigned long long>(out.checks), elapsed, budget_seconds);
    if (!out.note.empty())
        std::printf("       %s\n", out.note.c_str());
    if (!out.pass)
        std::printf("       first failure: %s\n", out.detail.c_str());
    else if (!in_budget)
        std::printf("       over budget\n");
    std::fflush(stdout);
}

std::string diff_series(const series& got, const series& want) {
    for (std::size_t i = 0; i <= got.order(); ++i)
        if (got[i] != want[i])
            return "coefficient " + std::to_string(i) + ": " + to_string(got[i]) +
                   " != " + to_string(want[i]);
    return "";
}

void check_series(outcome& out, const series& got, const series& want, const std::string& what) {
    const std::string diff = diff_series(got, want);
    out.require(diff.empty(), what + ": " + diff);
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(fields));
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: powser_acceptance <path-to-powser-cli>\n");
        return 2;
    }
    g_cli = argv[1];

    const auto corpus = random_series_corpus({});  // 200 series, order <= 24, seeded

    criterion(1, "cross-algorithm power equivalence", 300.0, [&](outcome& out) {
        for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
            const series& f = corpus[idx];
            const std::size_t cap = std::min<std::size_t>(f.order(), 18);
            const series f_cap = f.truncated(cap);
            for (long long k = -6; k <= 6; ++k) {
                const series ref = pow_miller(f, k);
                const series ref_cap = ref.truncated(cap);
                const std::string at = "series " + std::to_string(idx) + ", k " + std::to_string(k);
                check_series(out, pow_derivative(f, k), ref, "derivative vs miller at " + at);
                check_series(out, pow_closed_form(f_cap, k), ref_cap,
                             "closed form vs miller at " + at);
                if (k >= 0) {
                    check_series(out, pow_nested(f, k), ref, "nested vs miller at " + at);
                    check_series(out, pow_double_sum(f_cap, k), ref_cap,
                                 "double sum vs miller at " + at);
                    check_series(out, pow_hat(f_cap, k), ref_cap, "hat vs miller at " + at);
                }
            }
        }
    });

    criterion(2, "inverse equivalence", 30.0, [&](outcome& out) {
        for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
            const series& f = corpus[idx];
            const series inv_w = inverse_wronski(f);
            const std::string at = "series " + std::to_string(idx);
            check_series(out, inv_w, inverse_recursive(f), "wronski vs recursive at " + at);
            check_series(out, mul(f, inv_w), series::one(f.order()),
                         "f * f^-1 vs 1 at " + at);
        }
    });

    criterion(3, "determinant triple agreement", 30.0, [&](outcome& out) {
        corpus_rng rng(default_seed + 2);
        for (int t = 0; t < 100; ++t) {
            const std::size_t order = rng.below(11);
            std::vector<rational> band(order + 1);
            for (auto& x : band) x = rng.coefficient(false);
            const hessenberg_spec spec(band, order);
            const rational expected = oracle::det_oracle(spec);
            const std::string at = "band " + std::to_string(t);
            out.require(det_recursive(spec) == expected, "recursive vs cofactor oracle at " + at);
            out.require(det_trudi(spec) == expected, "trudi vs cofactor oracle at " + at);
            out.require(det_composition(spec) == expected,
                        "composition vs cofactor oracle at " + at);
        }
    });

    criterion(4, "Bernoulli ground truth", 30.0, [](outcome& out) {
        const auto b = bernoulli_numbers(40, bernoulli_method::series);
        out.require(b == bernoulli_numbers(40, bernoulli_method::determinant),
                    "series vs determinant method");
        out.require(b == bernoulli_numbers(40, bernoulli_method::trudi),
                    "series vs trudi method");
        out.require(b[1] == make_rational(-1, 2), "B_1 = -1/2");
        out.require(b[12] == make_rational(-691, 2730), "B_12 = -691/2730");
        const auto s = stirling_numbers(40, stirling_method::classic);
        for (std::size_t n = 0; n <= 40; ++n) {
            rational acc(0);
            for (std::size_t k = 0; k <= n; ++k) {
                rational term = rational(factorial(k) * s.at(n, k)) / rational(k + 1);
                if (k % 2 == 1) term = -term;
                acc += term;
            }
            out.require(b[n] == acc, "Stirling-sum oracle at n " + std::to_string(n));
        }
    });

    criterion(5, "generalized Bernoulli methods and Stirling link", 60.0, [](outcome& out) {
        for (long long m = -6; m <= 6; ++m) {
            const auto p = generalized_bernoulli_numbers(m, 20, genb_method::power);
            out.require(p == generalized_bernoulli_numbers(m, 20, genb_method::multinomial_neg),
                        "power vs multinomial_neg at m " + std::to_string(m));
            out.require(p == generalized_bernoulli_numbers(m, 20, genb_method::multinomial_pos),
                        "power vs multinomial_pos at m " + std::to_string(m));
        }
        const auto minus1 = generalized_bernoulli_numbers(-1, 20, genb_method::power);
        for (std::size_t n = 0; n <= 20; ++n)
            out.require(minus1[n] == make_rational(1, n + 1),
                        "B_n^(-1) = 1/(n+1) at n " + std::to_string(n));
        const auto s = stirling_numbers(26, stirling_method::classic);
        for (long long k = 0; k <= 6; ++k) {
            const auto row = generalized_bernoulli_numbers(-k, 20, genb_method::power);
            for (std::size_t n = 0; n <= 20; ++n) {
                const rational lhs = rational(binomial(static_cast<long long>(n) + k, k)) * row[n];
                out.require(lhs == rational(s.at(n + static_cast<std::size_t>(k),
                                                 static_cast<std::size_t>(k))),
                            "binom(n+k,k) B_n^(-k) = S(n+k,k) at n " + std::to_string(n) +
                                ", k " + std::to_string(k));
            }
        }
    });

    criterion(6, "identity registry", 180.0, [](outcome& out) {
        identity_checker checker;
        std::uint64_t flagged = 0;
        bool split_flag_seen = false, deriv_flag_seen = false;
        auto take = [&](const identity_report& rep) {
            out.require(rep.pass, rep.to_json());
            if (!rep.flag.empty()) {
                ++flagged;
                if (rep.identity == "genb_split_recurrences") split_flag_seen = true;
                if (rep.identity == "genb_derivative_recurrence") deriv_flag_seen = true;
            }
        };
        for (long long n = 30; n >= 1; --n) {
            take(checker.check("bernoulli_reciprocal", {{"n", n}}));
            take(checker.check("euler_classic", {{"n", n}}));
            for (long long m = 1; m <= 6; ++m)
                take(checker.check("genb_det_pair", {{"n", n}, {"m", m}}));
            for (long long k = 0; k <= 6; ++k) {
                take(checker.check("genb_stirling_orthogonality", {{"n", n}, {"k", k}}));
                take(checker.check("genb_neg_is_stirling", {{"n", n}, {"k", k}}));
            }
            for (long long k = 1; k <= 6; ++k)
                take(checker.check("genb_split_recurrences", {{"n", n}, {"k", k}}));
            for (long long k = -6; k <= 6; ++k) {
                take(checker.check("genb_binomial_transform", {{"n", n}, {"k", k}}));
                take(checker.check("genb_derivative_recurrence", {{"n", n}, {"k", k}}));
                take(checker.check("genb_euler_recurrence", {{"n", n}, {"k", k}}));
                if (k != 0) {
                    take(checker.check("genb_ladder", {{"n", n}, {"k", k}}));
                    take(checker.check("euler_generalized", {{"n", n}, {"k", k}}));
                }
            }
        }
        take(checker.check("euler_classic", {{"n", 0}}));
        for (long long k = -6; k <= 6; ++k) {
            take(checker.check("genb_binomial_transform", {{"n", 0}, {"k", k}}));
            take(checker.check("genb_derivative_recurrence", {{"n", 0}, {"k", k}}));
            take(checker.check("genb_euler_recurrence", {{"n", 0}, {"k", k}}));
            if (k != 0) take(checker.check("euler_generalized", {{"n", 0}, {"k", k}}));
        }
        // the two displays whose verbatim index deviates from their own
        // derivation must surface as flagged reports, not silent passes
        out.require(split_flag_seen, "expected flagged reports for genb_split_recurrences");
        out.require(deriv_flag_seen, "expected flagged reports for genb_derivative_recurrence");
        out.note = "flagged reports: " + std::to_string(flagged) +
                   " (verbatim-display deviations, derived form verified)";
    });

    criterion(7, "partition function routes", 60.0, [](outcome& out) {
        const auto p = partition_numbers_pentagonal(500);
        const auto dp = oracle::partition_counts_dp(500);
        for (std::size_t n = 0; n <= 500; ++n)
            out.require(p[n] == dp[n], "pentagonal vs DP oracle at n " + std::to_string(n));
        out.require(p[100] == 190569292, "p(100) spot value");
        const auto p_det = partition_numbers_det(60);
        for (std::size_t n = 0; n <= 60; ++n)
            out.require(p_det[n] == p[n], "determinant route at n " + std::to_string(n));
        out.require(verify_gf_identity(200).pass, "generating-function identity at N = 200");
        out.require(verify_euler_product(60).pass, "Euler product at N = 60");
    });

    criterion(8, "power sum routes (m >= 1; closed forms carry 0^0 at m = 0)", 10.0,
              [](outcome& out) {
                  for (std::size_t m = 1; m <= 10; ++m)
                      for (std::size_t n = 0; n <= 50; ++n) {
                          const bigint d = power_sum(m, n, power_sum_method::direct);
                          const std::string at = "m " + std::to_string(m) + ", n " +
                                                 std::to_string(n);
                          out.require(power_sum(m, n, power_sum_method::bernoulli) == d,
                                      "bernoulli route at " + at);
                          out.require(power_sum(m, n, power_sum_method::stirling) == d,
                                      "stirling route at " + at);
                      }
              });

    criterion(9, "benchmark sanity", 120.0, [](outcome& out) {
        const std::string cmd =
            g_cli + " bench --op pow --order-range 4..16 --k 3 --repeats 2 --seed 42";
        const auto run1 = testutil::run_command(cmd);
        const auto run2 = testutil::run_command(cmd);
        out.require(run1.exit_code == 0 && run2.exit_code == 0, "bench exit status");
        const auto csv1 = parse_csv(run1.output);
        const auto csv2 = parse_csv(run2.output);
        out.require(!csv1.empty() && csv1[0] ==
                        std::vector<std::string>{"algorithm", "order", "k", "repeats",
                                                 "best_wall_ns", "term_count"},
                    "CSV header");
        out.require(csv1.size() == csv2.size(), "same row count across runs");
        const auto p = partition_numbers_pentagonal(16);
        bigint closed_sum(0);
        std::vector<bigint> closed_expect(17);
        for (std::size_t n = 1; n <= 16; ++n) {
            closed_sum += p[n];
            closed_expect[n] = closed_sum;
        }
        std::uint64_t miller8 = 0, miller16 = 0, closed8 = 0, closed16 = 0;
        for (std::size_t r = 1; r < csv1.size(); ++r) {
            const auto& row = csv1[r];
            out.require(row.size() == 6, "row " + std::to_string(r) + " has 6 fields");
            if (row.size() != 6) continue;
            const std::string& alg = row[0];
            const unsigned long long order = std::stoull(row[1]);
            const unsigned long long terms = std::stoull(row[5]);
            out.require(std::stoull(row[4]) > 0, "wall time is positive");
            if (alg == "miller") {
                out.require(bigint(terms) == bigint(order * (order + 1) / 2),
                            "miller step count is quadratic at order " + row[1]);
                if (order == 8) miller8 = terms;
                if (order == 16) miller16 = terms;
            } else if (alg == "closed") {
                out.require(bigint(terms) == closed_expect[order],
                            "closed-form term count equals the partition sum at order " + row[1]);
                if (order == 8) closed8 = terms;
                if (order == 16) closed16 = terms;
            }
            // determinism: every column except the wall time matches run 2
            const auto& other = csv2[r];
            out.require(other.size() == 6 && row[0] == other[0] && row[1] == other[1] &&
                            row[2] == other[2] && row[3] == other[3] && row[5] == other[5],
                        "deterministic columns equal across runs at row " + std::to_string(r));
        }
        out.require(miller8 > 0 && miller16 > 0 && closed8 > 0 && closed16 > 0,
                    "found rows for orders 8 and 16");
        // superpolynomial vs quadratic growth: the closed-form ratio must
        // clearly outpace the miller ratio over the same doubling
        out.require(closed16 * miller8 > 3 * miller16 * closed8,
                    "closed-form term growth outpaces the quadratic recurrence");
    });

    criterion(10, "verify determinism", 900.0, [](outcome& out) {
        const std::string cmd = g_cli + " verify --suite all";
        const auto run1 = testutil::run_command(cmd);
        const auto run2 = testutil::run_command(cmd);
        out.require(run1.exit_code == 0, "first verify run exits 0");
        out.require(run2.exit_code == 0, "second verify run exits 0");
        out.require(run1.output == run2.output, "byte-identical stdout across runs");
        out.require(run1.output.find("verify: PASS") != std::string::npos,
                    "verify reports PASS");
    });

    if (g_failures == 0) {
        std::printf("acceptance: all 10 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
