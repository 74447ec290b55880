#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "powser/numbers.hpp"

using namespace powser;

TEST_CASE("bernoulli methods agree and hit the known values") {
    const auto b = bernoulli_numbers(40, bernoulli_method::series);
    CHECK(b == bernoulli_numbers(40, bernoulli_method::determinant));
    CHECK(b == bernoulli_numbers(40, bernoulli_method::trudi));
    CHECK(b[0] == 1);
    CHECK(b[1] == make_rational(-1, 2));
    CHECK(b[2] == make_rational(1, 6));
    CHECK(b[4] == make_rational(-1, 30));
    CHECK(b[12] == make_rational(-691, 2730));
}

TEST_CASE("bernoulli structural invariants") {
    const auto b = bernoulli_numbers(40, bernoulli_method::series);
    for (std::size_t m = 1; 2 * m + 1 <= 40; ++m)
        CHECK(b[2 * m + 1] == 0);
    for (std::size_t m = 1; 2 * m <= 40; ++m) {
        if (m % 2 == 1)
            CHECK(b[2 * m] > 0);
        else
            CHECK(b[2 * m] < 0);
    }
}

TEST_CASE("bernoulli values match the independent Stirling-sum oracle") {
    // B_n = sum_k (-1)^k k! S(n,k) / (k+1)
    const auto b = bernoulli_numbers(40, bernoulli_method::series);
    const auto s = stirling_numbers(40, stirling_method::classic);
    for (std::size_t n = 0; n <= 40; ++n) {
        rational acc(0);
        for (std::size_t k = 0; k <= n; ++k) {
            rational term = rational(factorial(k) * s.at(n, k)) / rational(k + 1);
            if (k % 2 == 1) term = -term;
            acc += term;
        }
        CHECK(b[n] == acc);
    }
}

TEST_CASE("generalized bernoulli rows: special orders") {
    const auto zero_row = generalized_bernoulli_numbers(0, 10, genb_method::power);
    CHECK(zero_row[0] == 1);
    for (std::size_t n = 1; n <= 10; ++n) CHECK(zero_row[n] == 0);

    const auto minus1 = generalized_bernoulli_numbers(-1, 12, genb_method::power);
    for (std::size_t n = 0; n <= 12; ++n)
        CHECK(minus1[n] == make_rational(1, n + 1));

    const auto row1 = generalized_bernoulli_numbers(1, 20, genb_method::power);
    CHECK(row1 == bernoulli_numbers(20, bernoulli_method::series));

    const auto row2 = generalized_bernoulli_numbers(2, 5, genb_method::power);
    CHECK(row2[1] == -1);  // 2 B_1 B_0 convolution
}

TEST_CASE("generalized bernoulli methods agree for m in [-6,6]") {
    for (long long m = -6; m <= 6; ++m) {
        const auto p = generalized_bernoulli_numbers(m, 20, genb_method::power);
        CHECK(p == generalized_bernoulli_numbers(m, 20, genb_method::multinomial_neg));
        CHECK(p == generalized_bernoulli_numbers(m, 20, genb_method::multinomial_pos));
    }
}

TEST_CASE("stirling methods agree and match brute force") {
    const auto classic = stirling_numbers(25, stirling_method::classic);
    const auto mult = stirling_numbers(25, stirling_method::multinomial);
    const auto paper = stirling_numbers(25, stirling_method::paper_recurrence);
    for (std::size_t n = 0; n <= 25; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            CHECK(classic.at(n, k) == mult.at(n, k));
            CHECK(classic.at(n, k) == paper.at(n, k));
            CHECK(classic.at(n, k) >= 0);
        }
    CHECK(classic.at(4, 2) == 7);
    CHECK(classic.at(5, 3) == 25);
    CHECK(classic.at(4, 2) == oracle::stirling_bruteforce(4, 2));
    CHECK(classic.at(5, 3) == oracle::stirling_bruteforce(5, 3));
    for (unsigned n = 0; n <= 8; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(classic.at(n, k) == oracle::stirling_bruteforce(n, k));
    for (std::size_t n = 1; n <= 25; ++n) {
        CHECK(classic.at(n, n) == 1);
        CHECK(classic.at(n, 1) == 1);
        CHECK(classic.at(n, 0) == 0);
    }
}

TEST_CASE("stirling row sums are Bell numbers") {
    const auto s = stirling_numbers(20, stirling_method::classic);
    const auto bell = oracle::bell_numbers(20);
    for (std::size_t n = 0; n <= 20; ++n) {
        bigint row(0);
        for (std::size_t k = 0; k <= n; ++k) row += s.at(n, k);
        CHECK(row == bell[n]);
    }
}

TEST_CASE("power sums") {
    CHECK(power_sum(2, 3, power_sum_method::direct) == 14);
    CHECK(power_sum(1, 100, power_sum_method::direct) == 5050);
    CHECK(power_sum(5, 10, power_sum_method::direct) == 220825);
    for (std::size_t m = 1; m <= 10; ++m)
        for (std::size_t n = 0; n <= 50; n += 7) {
            const bigint d = power_sum(m, n, power_sum_method::direct);
            CHECK(power_sum(m, n, power_sum_method::bernoulli) == d);
            CHECK(power_sum(m, n, power_sum_method::stirling) == d);
        }
}

TEST_CASE("power sum closed forms include the 0^0 term at m = 0") {
    // pinned behavior: the two closed forms evaluate sum_{k=0..n} k^m with
    // 0^0 = 1, so they exceed the literal sum by exactly one at m = 0
    for (std::size_t n : {1, 5, 17}) {
        CHECK(power_sum(0, n, power_sum_method::direct) == bigint(n));
        CHECK(power_sum(0, n, power_sum_method::bernoulli) == bigint(n + 1));
        CHECK(power_sum(0, n, power_sum_method::stirling) == bigint(n + 1));
    }
}

TEST_CASE("identity registry spot checks") {
    CHECK(verify_identity("euler_classic", {{"n", 6}}).pass);

    const auto neg_stirling = verify_identity("genb_neg_is_stirling", {{"n", 3}, {"k", 2}});
    CHECK(neg_stirling.pass);
    CHECK(neg_stirling.lhs == "[15, 0]");

    const auto ladder = verify_identity("genb_ladder", {{"n", 1}, {"k", 1}});
    CHECK(ladder.pass);
    CHECK(ladder.lhs == "-1");  // B_1^{(2)} = (1-1) B_1 - B_0
}

TEST_CASE("identity registry hypothesis violations are typed errors") {
    CHECK_THROWS_AS(verify_identity("genb_ladder", {{"n", 2}, {"k", 0}}), hypothesis_error);
    CHECK_THROWS_AS(verify_identity("euler_generalized", {{"n", 2}, {"k", 0}}), hypothesis_error);
    CHECK_THROWS_AS(verify_identity("no_such_identity", {{"n", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(verify_identity("genb_ladder", {{"k", 1}}), std::invalid_argument);
}

TEST_CASE("verbatim-display deviations are flagged, not silently fixed") {
    // the negative-order display of the split recurrence deviates from its
    // derivation for k >= 2; the checker must pass on the derived form and
    // carry the verbatim evidence in the flag
    const auto split = verify_identity("genb_split_recurrences", {{"n", 2}, {"k", 2}});
    CHECK(split.pass);
    CHECK_FALSE(split.flag.empty());

    const auto split_k1 = verify_identity("genb_split_recurrences", {{"n", 5}, {"k", 1}});
    CHECK(split_k1.pass);
    CHECK(split_k1.flag.empty());  // empty inner sums: display and derivation coincide

    const auto deriv = verify_identity("genb_derivative_recurrence", {{"n", 1}, {"k", 1}});
    CHECK(deriv.pass);
    CHECK_FALSE(deriv.flag.empty());

    const auto deriv_n0 = verify_identity("genb_derivative_recurrence", {{"n", 0}, {"k", 3}});
    CHECK(deriv_n0.pass);
    CHECK(deriv_n0.flag.empty());  // B_0^{(m)} = 1 for every m: no deviation at n = 0
}

TEST_CASE("every registered identity passes on a small diagonal") {
    identity_checker checker;
    for (const auto& id : identity_checker::ids()) {
        identity_params params{{"n", 3}};
        if (id == "genb_det_pair") params.push_back({"m", 2});
        else if (id != "bernoulli_reciprocal" && id != "euler_classic") params.push_back({"k", 2});
        const auto rep = checker.check(id, params);
        INFO(id << ": " << rep.to_json());
        CHECK(rep.pass);
    }
}
