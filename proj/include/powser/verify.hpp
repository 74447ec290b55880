#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "powser/combinatorics.hpp"
#include "powser/corpus.hpp"
#include "powser/hessenberg.hpp"
#include "powser/numbers.hpp"
#include "powser/partitions.hpp"
#include "powser/rational.hpp"
#include "powser/report.hpp"
#include "powser/series.hpp"

namespace powser {

struct verify_options {
    std::uint64_t seed = default_seed;
    std::size_t series_count = 200;
    std::size_t max_order = 24;
    /// Order cap for the partition-enumerating power algorithms (closed
    /// form, double sum, hat); their cost grows with the partition count.
    std::size_t partition_alg_cap = 18;
    long long max_n = 30;
    long long k_lo = -6;
    long long k_hi = 6;
    std::string only_id;  // restrict the identity registry to one id
};

struct suite_result {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t flagged = 0;
    std::vector<identity_report> failures;
    std::vector<identity_report> flag_examples;  // first flagged report per identity

    bool ok() const { return failures.empty(); }
};

namespace detail {

struct suite_recorder {
    suite_result& out;

    void take(identity_report rep) {
        ++out.checks;
        if (!rep.flag.empty()) {
            ++out.flagged;
            const bool seen = std::any_of(
                out.flag_examples.begin(), out.flag_examples.end(),
                [&](const identity_report& r) { return r.identity == rep.identity; });
            if (!seen) out.flag_examples.push_back(rep);
        }
        if (!rep.pass) out.failures.push_back(std::move(rep));
    }

    void expect(bool ok, std::string identity, identity_params params, std::string detail_on_fail) {
        identity_report rep;
        rep.identity = std::move(identity);
        rep.params = std::move(params);
        rep.pass = ok;
        rep.lhs = ok ? "ok" : std::move(detail_on_fail);
        rep.rhs = "ok";
        take(std::move(rep));
    }

    /// Compare two same-order series; on mismatch the report names the first
    /// differing coefficient.
    void expect_series_eq(const series& got, const series& want, std::string identity,
                          identity_params params) {
        std::string detail;
        bool ok = true;
        for (std::size_t i = 0; i <= got.order(); ++i)
            if (got[i] != want[i]) {
                ok = false;
                detail = "coefficient " + std::to_string(i) + ": " + to_string(got[i]) +
                         " != " + to_string(want[i]);
                break;
            }
        expect(ok, std::move(identity), std::move(params), std::move(detail));
    }
};

}  // namespace detail

/// Random-series checks: cross-algorithm power agreement against the Miller
/// recurrence, inverse laws, group laws, derivative rules, the binomial
/// transform, the negative-binomial corollary, and the three-way determinant
/// agreement on random bands.
inline suite_result run_series_suite(const verify_options& opt) {
    suite_result res;
    res.name = "series";
    detail::suite_recorder rec{res};

    const auto corpus =
        random_series_corpus({.seed = opt.seed, .count = opt.series_count, .max_order = opt.max_order});
    corpus_rng partner_rng(opt.seed + 1);

    for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
        const series& f = corpus[idx];
        const long long i_param = static_cast<long long>(idx);
        const std::size_t n = f.order();

        // inverse equivalence and f * f^{-1} = 1
        const series inv_w = inverse_wronski(f);
        rec.expect_series_eq(inv_w, inverse_recursive(f), "inverse_agreement", {{"series", i_param}});
        rec.expect_series_eq(mul(f, inv_w), series::one(n), "inverse_product", {{"series", i_param}});

        const std::size_t cap = std::min(n, opt.partition_alg_cap);
        const series f_cap = f.truncated(cap);

        for (long long k = opt.k_lo; k <= opt.k_hi; ++k) {
            const series ref = pow_miller(f, k);
            const series ref_cap = ref.truncated(cap);
            identity_params params{{"series", i_param}, {"k", k}};
            rec.expect_series_eq(pow_derivative(f, k), ref, "pow_derivative_vs_miller", params);
            rec.expect_series_eq(pow_closed_form(f_cap, k), ref_cap, "pow_closed_vs_miller",
                                 params);
            if (k >= 0) {
                rec.expect_series_eq(pow_nested(f, k), ref, "pow_nested_vs_miller", params);
                rec.expect_series_eq(pow_double_sum(f_cap, k), ref_cap, "pow_double_vs_miller",
                                     params);
                rec.expect_series_eq(pow_hat(f_cap, k), ref_cap, "pow_hat_vs_miller", params);
            } else {
                rec.expect_series_eq(pow_miller(inv_w, -k), ref, "pow_negative_via_inverse",
                                     params);
            }
        }

        // identity and empty powers
        rec.expect_series_eq(pow_miller(f, 1), f, "pow_one_is_identity", {{"series", i_param}});
        rec.expect_series_eq(pow_miller(f, 0), series::one(n), "pow_zero_is_one",
                             {{"series", i_param}});

        // group laws on a subset (cheap but redundant at full volume)
        if (idx % 4 == 0) {
            for (long long j = -2; j <= 3; ++j)
                for (long long k = -2; k <= 3; ++k) {
                    identity_params params{{"series", i_param}, {"j", j}, {"k", k}};
                    rec.expect_series_eq(mul(pow_miller(f, j), pow_miller(f, k)),
                                         pow_miller(f, j + k), "pow_product_law", params);
                    rec.expect_series_eq(pow_miller(pow_miller(f, j), k), pow_miller(f, j * k),
                                         "pow_composition_law", params);
                }
        }

        // product rule and chain rule at order n-1
        if (n >= 1) {
            const series g = partner_rng.make_series_of_order(n, false);
            const series lhs = derivative(mul(f, g));
            const series rhs = mul(derivative(f), g.truncated(n - 1)) +
                               mul(f.truncated(n - 1), derivative(g));
            rec.expect_series_eq(lhs, rhs, "derivative_product_rule", {{"series", i_param}});
            for (long long k : {2LL, -1LL}) {
                const series chain_lhs = derivative(pow_miller(f, k));
                const series chain_rhs =
                    rational(k) * mul(derivative(f), pow_miller(f, k - 1).truncated(n - 1));
                rec.expect_series_eq(chain_lhs, chain_rhs, "derivative_chain_rule",
                                     {{"series", i_param}, {"k", k}});
            }
        }

        // binomial transform on the unit-normalized series
        const series h = f * (rational(1) / f[0]);
        std::vector<long long> transform_ks{opt.k_lo, -2, 0, 1, 3, opt.k_hi};
        std::sort(transform_ks.begin(), transform_ks.end());
        transform_ks.erase(std::unique(transform_ks.begin(), transform_ks.end()),
                           transform_ks.end());
        for (long long k : transform_ks)
            rec.take(verify_binomial_transform(h, k, n));
    }

    for (long long k = 1; k <= std::max(1LL, opt.k_hi); ++k)
        for (long long n = 0; n <= opt.max_n; ++n)
            rec.take(verify_negative_binomial_corollary(k, static_cast<std::size_t>(n)));

    // determinant triple agreement on random bands (a_0 may be zero)
    corpus_rng det_rng(opt.seed + 2);
    for (std::size_t t = 0; t < 100; ++t) {
        const std::size_t order = det_rng.below(11);
        std::vector<rational> band(order + 1);
        for (auto& x : band) x = det_rng.coefficient(false);
        const hessenberg_spec spec(band, order);
        const rational d = det_recursive(spec);
        const rational d_trudi = det_trudi(spec);
        const rational d_comp = det_composition(spec);
        identity_params params{{"band", static_cast<long long>(t)},
                               {"order", static_cast<long long>(order)}};
        rec.expect(d_trudi == d, "det_trudi_vs_recursive", params,
                   "trudi " + to_string(d_trudi) + " != " + to_string(d));
        rec.expect(d_comp == d, "det_composition_vs_recursive", params,
                   "composition " + to_string(d_comp) + " != " + to_string(d));
        // delta polynomial contract: evaluating at s reproduces the
        // determinant with subdiagonal -s
        if (order >= 1) {
            const rational s = det_rng.coefficient(false);
            const auto dp = make_delta_polynomial(
                std::span<const rational>(band.data() + 1, order), order);
            std::vector<rational> shifted(band);
            shifted[0] = -s;
            rec.expect(dp.eval_at(s) == det_recursive(hessenberg_spec(shifted, order)),
                       "delta_eval_contract", params, "delta eval mismatch");
        }
    }

    return res;
}

/// Number-table method agreement plus the full identity registry over the
/// configured parameter grid.
inline suite_result run_numbers_suite(const verify_options& opt) {
    suite_result res;
    res.name = "numbers";
    detail::suite_recorder rec{res};

    // Bernoulli: three methods, structural invariants, spot values
    {
        const auto b = bernoulli_numbers(40, bernoulli_method::series);
        const auto b_det = bernoulli_numbers(40, bernoulli_method::determinant);
        const auto b_tru = bernoulli_numbers(40, bernoulli_method::trudi);
        rec.expect(b == b_det, "bernoulli_series_vs_determinant", {{"N", 40}}, "tables differ");
        rec.expect(b == b_tru, "bernoulli_series_vs_trudi", {{"N", 40}}, "tables differ");
        rec.expect(b[0] == 1 && b[1] == make_rational(-1, 2) && b[12] == make_rational(-691, 2730),
                   "bernoulli_spot_values", {}, "B_0, B_1 or B_12 off");
        bool odd_zero = true, signs = true;
        for (std::size_t m = 1; 2 * m + 1 <= 40; ++m)
            odd_zero = odd_zero && b[2 * m + 1] == 0;
        for (std::size_t m = 1; 2 * m <= 40; ++m)
            signs = signs && (m % 2 == 1 ? b[2 * m] > 0 : b[2 * m] < 0);
        rec.expect(odd_zero, "bernoulli_odd_vanish", {{"N", 40}}, "odd-index entry nonzero");
        rec.expect(signs, "bernoulli_even_sign_alternation", {{"N", 40}}, "sign pattern broken");
    }

    // Generalized Bernoulli: three methods for every m in [k_lo, k_hi]
    for (long long m = opt.k_lo; m <= opt.k_hi; ++m) {
        const auto g = generalized_bernoulli_numbers(m, 20, genb_method::power);
        const auto g_neg = generalized_bernoulli_numbers(m, 20, genb_method::multinomial_neg);
        const auto g_pos = generalized_bernoulli_numbers(m, 20, genb_method::multinomial_pos);
        identity_params params{{"m", m}, {"N", 20}};
        rec.expect(g == g_neg, "genb_power_vs_multinomial_neg", params, "tables differ");
        rec.expect(g == g_pos, "genb_power_vs_multinomial_pos", params, "tables differ");
        rec.expect(g[0] == 1, "genb_row_starts_at_one", params, "B_0 != 1");
    }
    {
        const auto g1 = generalized_bernoulli_numbers(1, 20, genb_method::power);
        const auto b = bernoulli_numbers(20, bernoulli_method::series);
        rec.expect(g1 == b, "genb_order_one_is_bernoulli", {{"N", 20}}, "row m=1 differs");
        const auto gm1 = generalized_bernoulli_numbers(-1, 20, genb_method::power);
        bool ok = true;
        for (std::size_t n = 0; n <= 20; ++n)
            ok = ok && gm1[n] == make_rational(1, n + 1);
        rec.expect(ok, "genb_order_minus_one_is_harmonic", {{"N", 20}}, "B_n^(-1) != 1/(n+1)");
        const auto g0 = generalized_bernoulli_numbers(0, 20, genb_method::power);
        ok = g0[0] == 1;
        for (std::size_t n = 1; n <= 20; ++n) ok = ok && g0[n] == 0;
        rec.expect(ok, "genb_order_zero_is_one", {{"N", 20}}, "row m=0 not (1,0,...)");
    }

    // Stirling: three methods and edge values
    {
        const auto s = stirling_numbers(25, stirling_method::classic);
        const auto s_mult = stirling_numbers(25, stirling_method::multinomial);
        const auto s_rec = stirling_numbers(25, stirling_method::paper_recurrence);
        bool mult_ok = true, rec_ok = true, edges = true;
        for (std::size_t n = 0; n <= 25; ++n)
            for (std::size_t k = 0; k <= n; ++k) {
                mult_ok = mult_ok && s.at(n, k) == s_mult.at(n, k);
                rec_ok = rec_ok && s.at(n, k) == s_rec.at(n, k);
            }
        for (std::size_t n = 1; n <= 25; ++n)
            edges = edges && s.at(n, n) == 1 && s.at(n, 1) == 1 && s.at(n, 0) == 0;
        rec.expect(mult_ok, "stirling_classic_vs_multinomial", {{"N", 25}}, "tables differ");
        rec.expect(rec_ok, "stirling_classic_vs_recurrence", {{"N", 25}}, "tables differ");
        rec.expect(edges, "stirling_edge_values", {{"N", 25}}, "edge entries off");
    }

    // Power sums: the three routes agree for m >= 1 (at m = 0 the closed
    // forms include the 0^0 = 1 term, pinned by unit test, excluded here)
    for (std::size_t m = 1; m <= 10; ++m)
        for (std::size_t n = 0; n <= 50; n += (n < 10 ? 1 : 5)) {
            const bigint d = power_sum(m, n, power_sum_method::direct);
            const bigint vb = power_sum(m, n, power_sum_method::bernoulli);
            const bigint vs = power_sum(m, n, power_sum_method::stirling);
            rec.expect(d == vb && d == vs, "power_sum_routes_agree",
                       {{"m", static_cast<long long>(m)}, {"n", static_cast<long long>(n)}},
                       "direct " + d.str() + ", bernoulli " + vb.str() + ", stirling " + vs.str());
        }

    // Identity registry over the parameter grid; n runs downward so the
    // checker's caches are built once at full size.
    identity_checker checker;
    auto want = [&](const char* id) { return opt.only_id.empty() || opt.only_id == id; };
    const long long klo = opt.k_lo, khi = opt.k_hi, nmax = opt.max_n;
    if (want("bernoulli_reciprocal"))
        for (long long n = nmax; n >= 1; --n)
            rec.take(checker.check("bernoulli_reciprocal", {{"n", n}}));
    if (want("genb_det_pair"))
        for (long long n = nmax; n >= 1; --n)
            for (long long m = 1; m <= khi; ++m)
                rec.take(checker.check("genb_det_pair", {{"n", n}, {"m", m}}));
    if (want("genb_stirling_orthogonality"))
        for (long long n = nmax; n >= 1; --n)
            for (long long k = 0; k <= khi; ++k)
                rec.take(checker.check("genb_stirling_orthogonality", {{"n", n}, {"k", k}}));
    if (want("genb_neg_is_stirling"))
        for (long long n = nmax; n >= 1; --n)
            for (long long k = 0; k <= khi; ++k)
                rec.take(checker.check("genb_neg_is_stirling", {{"n", n}, {"k", k}}));
    if (want("genb_split_recurrences"))
        for (long long n = nmax; n >= 1; --n)
            for (long long k = 1; k <= khi; ++k)
                rec.take(checker.check("genb_split_recurrences", {{"n", n}, {"k", k}}));
    if (want("genb_binomial_transform"))
        for (long long n = nmax; n >= 0; --n)
            for (long long k = klo; k <= khi; ++k)
                rec.take(checker.check("genb_binomial_transform", {{"n", n}, {"k", k}}));
    if (want("genb_derivative_recurrence"))
        for (long long n = nmax; n >= 0; --n)
            for (long long k = klo; k <= khi; ++k)
                rec.take(checker.check("genb_derivative_recurrence", {{"n", n}, {"k", k}}));
    if (want("genb_euler_recurrence"))
        for (long long n = nmax; n >= 0; --n)
            for (long long k = klo; k <= khi; ++k)
                rec.take(checker.check("genb_euler_recurrence", {{"n", n}, {"k", k}}));
    if (want("genb_ladder"))
        for (long long n = nmax; n >= 1; --n)
            for (long long k = klo; k <= khi; ++k) {
                if (k == 0) continue;
                rec.take(checker.check("genb_ladder", {{"n", n}, {"k", k}}));
            }
    if (want("euler_classic"))
        for (long long n = nmax; n >= 0; --n)
            rec.take(checker.check("euler_classic", {{"n", n}}));
    if (want("euler_generalized"))
        for (long long n = nmax; n >= 0; --n)
            for (long long k = klo; k <= khi; ++k) {
                if (k == 0) continue;
                rec.take(checker.check("euler_generalized", {{"n", n}, {"k", k}}));
            }

    return res;
}

/// Partition-function checks: pentagonal recurrence vs. determinant route,
/// the dual determinant, and the two generating-function identities.
inline suite_result run_partitions_suite(const verify_options&) {
    suite_result res;
    res.name = "partitions";
    detail::suite_recorder rec{res};

    const auto p = partition_numbers_pentagonal(500);
    rec.expect(p[0] == 1 && p[1] == 1 && p[5] == 7 && p[100] == bigint(190569292),
               "partition_spot_values", {}, "p(0), p(1), p(5) or p(100) off");
    bool increasing = true;
    for (std::size_t n = 2; n <= 500; ++n)
        increasing = increasing && p[n] > p[n - 1];
    rec.expect(increasing, "partition_strictly_increasing", {{"N", 500}}, "p not increasing");

    const auto p_det = partition_numbers_det(60);
    bool det_ok = true;
    for (std::size_t n = 0; n <= 60; ++n)
        det_ok = det_ok && p_det[n] == p[n];
    rec.expect(det_ok, "partition_det_vs_pentagonal", {{"N", 60}}, "determinant route differs");

    const auto pent = pentagonal_coeffs(40);
    for (std::size_t n = 1; n <= 40; ++n)
        rec.expect(pentagonal_det(n) == pent[n], "pentagonal_det_vs_coeffs",
                   {{"n", static_cast<long long>(n)}},
                   "det gives " + std::to_string(pentagonal_det(n)) + ", series says " +
                       std::to_string(pent[n]));

    rec.take(verify_gf_identity(200));
    rec.take(verify_euler_product(60));
    return res;
}

}  // namespace powser
