#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "powser/combinatorics.hpp"
#include "powser/errors.hpp"
#include "powser/hessenberg.hpp"
#include "powser/rational.hpp"
#include "powser/report.hpp"
#include "powser/series.hpp"

namespace powser {

// Convention note: Bernoulli numbers here are defined through the reciprocal
// of 1 + sum_{n>=1} X^n/(n+1)!, which gives B_1 = -1/2 (the other common
// convention has B_1 = +1/2). Every identity below depends on this choice.

/// 1 + sum_{n>=1} X^n/(n+1)! truncated at the given order.
inline series bernoulli_base_series(std::size_t order) {
    std::vector<rational> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n)
        c[n] = make_rational(1, factorial(n + 1));
    return series(std::move(c));
}

enum class bernoulli_method { series, determinant, trudi };

/// B_0..B_max_n. All methods produce identical tables:
///  - series: invert the base series, scale coefficient n by n!.
///  - determinant: B_n = (-1)^n n! det(TH_n(1, 1/2!, ..., 1/(n+1)!)).
///  - trudi: the multinomial expansion of that determinant with entries
///    -1/(i+1)!.
inline std::vector<rational> bernoulli_numbers(std::size_t max_n, bernoulli_method method) {
    std::vector<rational> out(max_n + 1);
    switch (method) {
        case bernoulli_method::series: {
            const series inv = inverse_recursive(bernoulli_base_series(max_n));
            for (std::size_t n = 0; n <= max_n; ++n)
                out[n] = inv[n] * rational(factorial(n));
            break;
        }
        case bernoulli_method::determinant: {
            std::vector<rational> band(max_n + 1);
            band[0] = 1;
            for (std::size_t i = 1; i <= max_n; ++i)
                band[i] = make_rational(1, factorial(i + 1));
            const auto dets = det_recursive_prefix(hessenberg_spec(std::move(band), max_n));
            for (std::size_t n = 0; n <= max_n; ++n) {
                out[n] = dets[n] * rational(factorial(n));
                if (n % 2 == 1) out[n] = -out[n];
            }
            break;
        }
        case bernoulli_method::trudi: {
            std::vector<rational> entries(max_n);  // entries[i-1] = -1/(i+1)!
            for (std::size_t i = 1; i <= max_n; ++i)
                entries[i - 1] = make_rational(-1, factorial(i + 1));
            out[0] = 1;
            for (std::size_t n = 1; n <= max_n; ++n) {
                rational acc(0);
                for_each_weighted_partition(
                    static_cast<std::uint32_t>(n), [&](const weighted_partition& wp) {
                        rational term(multinomial(wp));
                        for (std::uint32_t i = 0; i < wp.weight; ++i)
                            if (wp.multiplicities[i] != 0)
                                term *= pow_rational(entries[i], wp.multiplicities[i]);
                        acc += term;
                    });
                out[n] = acc * rational(factorial(n));
            }
            break;
        }
    }
    return out;
}

enum class genb_method { power, multinomial_neg, multinomial_pos };

/// Generalized Bernoulli numbers B_n^{(m)} for n = 0..max_n, any integer m:
/// n! times coefficient n of the (-m)-th power of the base series. The two
/// multinomial methods expand that power over weighted partitions, with
/// (-1)^l binom(m+l-1, l) over base entries or binom(m, l) over B_i/i!.
inline std::vector<rational> generalized_bernoulli_numbers(long long m, std::size_t max_n,
                                                           genb_method method) {
    std::vector<rational> out(max_n + 1);
    switch (method) {
        case genb_method::power: {
            const series p = pow_miller(bernoulli_base_series(max_n), -m);
            for (std::size_t n = 0; n <= max_n; ++n)
                out[n] = p[n] * rational(factorial(n));
            break;
        }
        case genb_method::multinomial_neg: {
            std::vector<rational> entries(max_n);
            for (std::size_t i = 1; i <= max_n; ++i)
                entries[i - 1] = make_rational(1, factorial(i + 1));
            out[0] = 1;
            for (std::size_t n = 1; n <= max_n; ++n) {
                rational acc(0);
                for_each_weighted_partition(
                    static_cast<std::uint32_t>(n), [&](const weighted_partition& wp) {
                        const long long l = wp.parts;
                        const bigint w = binomial(m + l - 1, l);
                        if (w == 0) return;
                        rational term = rational(w) * rational(multinomial(wp));
                        for (std::uint32_t i = 0; i < wp.weight; ++i)
                            if (wp.multiplicities[i] != 0)
                                term *= pow_rational(entries[i], wp.multiplicities[i]);
                        if (l % 2 == 1) term = -term;
                        acc += term;
                    });
                out[n] = acc * rational(factorial(n));
            }
            break;
        }
        case genb_method::multinomial_pos: {
            const auto bern = bernoulli_numbers(max_n, bernoulli_method::series);
            std::vector<rational> entries(max_n);  // entries[i-1] = B_i/i!
            for (std::size_t i = 1; i <= max_n; ++i)
                entries[i - 1] = bern[i] / rational(factorial(i));
            out[0] = 1;
            for (std::size_t n = 1; n <= max_n; ++n) {
                rational acc(0);
                for_each_weighted_partition(
                    static_cast<std::uint32_t>(n), [&](const weighted_partition& wp) {
                        const bigint w = binomial(m, wp.parts);
                        if (w == 0) return;
                        rational term = rational(w) * rational(multinomial(wp));
                        for (std::uint32_t i = 0; i < wp.weight; ++i)
                            if (wp.multiplicities[i] != 0)
                                term *= pow_rational(entries[i], wp.multiplicities[i]);
                        acc += term;
                    });
                out[n] = acc * rational(factorial(n));
            }
            break;
        }
    }
    return out;
}

/// Triangle S(n,k), 0 <= k <= n <= max_n. at() returns 0 above the diagonal.
class stirling_table {
public:
    explicit stirling_table(std::vector<std::vector<bigint>> rows) : rows_(std::move(rows)) {}

    std::size_t max_n() const { return rows_.size() - 1; }

    const bigint& at(std::size_t n, std::size_t k) const {
        static const bigint zero(0);
        if (k > n) return zero;
        return rows_.at(n).at(k);
    }

private:
    std::vector<std::vector<bigint>> rows_;
};

enum class stirling_method { multinomial, paper_recurrence, classic };

/// Stirling numbers of the second kind by three routes:
///  - multinomial: S(n,k) = sum over k-part weighted partitions of n of
///    n!/(k_1!...k_n!) prod (1/i!)^{k_i}; integrality of the rational sum is
///    asserted.
///  - paper_recurrence: S(n+1,k+1) = (1/(k+1)) sum_i binom(n+1,i) S(n+1-i,k).
///  - classic: S(n,k) = k S(n-1,k) + S(n-1,k-1).
inline stirling_table stirling_numbers(std::size_t max_n, stirling_method method) {
    std::vector<std::vector<bigint>> rows(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n)
        rows[n].assign(n + 1, bigint(0));
    rows[0][0] = 1;
    switch (method) {
        case stirling_method::classic: {
            for (std::size_t n = 1; n <= max_n; ++n)
                for (std::size_t k = 1; k <= n; ++k) {
                    bigint v = rows[n - 1][k - 1];
                    if (k <= n - 1) v += bigint(k) * rows[n - 1][k];
                    rows[n][k] = v;
                }
            break;
        }
        case stirling_method::multinomial: {
            for (std::size_t n = 1; n <= max_n; ++n) {
                std::vector<rational> acc(n + 1);
                for_each_weighted_partition(
                    static_cast<std::uint32_t>(n), [&](const weighted_partition& wp) {
                        rational term(factorial(n));
                        for (std::uint32_t i = 0; i < wp.weight; ++i)
                            if (wp.multiplicities[i] != 0) {
                                term /= rational(factorial(wp.multiplicities[i]));
                                term *= pow_rational(make_rational(1, factorial(i + 1)),
                                                     wp.multiplicities[i]);
                            }
                        acc[wp.parts] += term;
                    });
                for (std::size_t k = 1; k <= n; ++k)
                    rows[n][k] = to_integer(acc[k]);
            }
            break;
        }
        case stirling_method::paper_recurrence: {
            for (std::size_t k = 1; k <= max_n; ++k) {
                for (std::size_t n = k; n <= max_n; ++n) {
                    bigint acc(0);
                    for (std::size_t i = 1; i + k <= n + 1; ++i)
                        acc += binomial(static_cast<long long>(n), static_cast<long long>(i)) *
                               rows[n - i][k - 1];
                    if (acc % bigint(k) != 0)
                        throw std::logic_error("stirling recurrence produced a non-integer");
                    rows[n][k] = acc / bigint(k);
                }
            }
            break;
        }
    }
    return stirling_table(std::move(rows));
}

enum class power_sum_method { bernoulli, stirling, direct };

/// 1^m + 2^m + ... + n^m, exactly. The direct route sums literally; the
/// Bernoulli route uses the (m+1)-term binomial formula over B_j; the
/// Stirling route sums binom(n+1,j+1) j! S(m,j). Note that the two closed
/// forms implicitly include a k = 0 term 0^m read as 0^0 = 1, so for m = 0
/// they evaluate to n+1 while the literal sum is n; callers comparing routes
/// should use m >= 1.
inline bigint power_sum(std::size_t m, std::size_t n, power_sum_method method) {
    switch (method) {
        case power_sum_method::direct: {
            bigint acc(0);
            for (std::size_t i = 1; i <= n; ++i)
                acc += pow_int(bigint(i), m);
            return acc;
        }
        case power_sum_method::bernoulli: {
            const auto bern = bernoulli_numbers(m, bernoulli_method::series);
            rational acc(0);
            const rational np1(n + 1);
            for (std::size_t j = 0; j <= m; ++j)
                acc += rational(binomial(static_cast<long long>(m) + 1,
                                         static_cast<long long>(j))) *
                       pow_rational(np1, static_cast<long long>(m - j + 1)) * bern[j];
            return to_integer(acc / rational(m + 1));
        }
        case power_sum_method::stirling: {
            const auto table = stirling_numbers(m, stirling_method::classic);
            bigint acc(0);
            const std::size_t jmax = n < m ? n : m;
            for (std::size_t j = 0; j <= jmax; ++j)
                acc += binomial(static_cast<long long>(n) + 1, static_cast<long long>(j) + 1) *
                       factorial(j) * table.at(m, j);
            return acc;
        }
    }
    throw std::invalid_argument("unknown power sum method");
}

// ---------------------------------------------------------------------------
// Identity registry
// ---------------------------------------------------------------------------

using identity_params = std::vector<std::pair<std::string, long long>>;

/// Evaluates the registered identities exactly, caching the number tables
/// between checks. Where a source display disagrees with the form its own
/// derivation forces, the derived form decides pass and the verbatim value
/// is reported in the flag (never silently dropped).
class identity_checker {
public:
    static const std::vector<std::string>& ids() {
        static const std::vector<std::string> v{
            "bernoulli_reciprocal",      "genb_det_pair",
            "genb_stirling_orthogonality", "genb_neg_is_stirling",
            "genb_split_recurrences",    "genb_binomial_transform",
            "genb_derivative_recurrence", "genb_euler_recurrence",
            "genb_ladder",               "euler_classic",
            "euler_generalized"};
        return v;
    }

    identity_report check(std::string_view id, const identity_params& params) {
        identity_report rep;
        rep.identity = std::string(id);
        rep.params = params;
        if (id == "bernoulli_reciprocal")
            check_bernoulli_reciprocal(rep, need(params, "n"));
        else if (id == "genb_det_pair")
            check_genb_det_pair(rep, need(params, "n"), need(params, "m"));
        else if (id == "genb_stirling_orthogonality")
            check_stirling_orthogonality(rep, need(params, "n"), need(params, "k"));
        else if (id == "genb_neg_is_stirling")
            check_neg_is_stirling(rep, need(params, "n"), need(params, "k"));
        else if (id == "genb_split_recurrences")
            check_split_recurrences(rep, need(params, "n"), need(params, "k"));
        else if (id == "genb_binomial_transform")
            check_binomial_transform(rep, need(params, "n"), need(params, "k"));
        else if (id == "genb_derivative_recurrence")
            check_derivative_recurrence(rep, need(params, "n"), need(params, "k"));
        else if (id == "genb_euler_recurrence")
            check_euler_recurrence(rep, need(params, "n"), need(params, "k"));
        else if (id == "genb_ladder")
            check_ladder(rep, need(params, "n"), need(params, "k"));
        else if (id == "euler_classic")
            check_euler_classic(rep, need(params, "n"));
        else if (id == "euler_generalized")
            check_euler_generalized(rep, need(params, "n"), need(params, "k"));
        else
            throw std::invalid_argument("unknown identity id '" + std::string(id) + "'");
        return rep;
    }

private:
    static long long need(const identity_params& params, std::string_view key) {
        for (const auto& [k, v] : params)
            if (k == key) return v;
        throw std::invalid_argument("missing identity parameter '" + std::string(key) + "'");
    }

    const std::vector<rational>& bern(std::size_t upto) {
        if (bern_.size() < upto + 1)
            bern_ = bernoulli_numbers(upto, bernoulli_method::series);
        return bern_;
    }

    const std::vector<rational>& genb(long long m, std::size_t upto) {
        auto it = genb_.find(m);
        if (it == genb_.end() || it->second.size() < upto + 1) {
            auto row = generalized_bernoulli_numbers(m, upto, genb_method::power);
            it = genb_.insert_or_assign(m, std::move(row)).first;
        }
        return it->second;
    }

    const stirling_table& stirling(std::size_t upto) {
        if (!stirling_ || stirling_->max_n() < upto)
            stirling_.emplace(stirling_numbers(upto, stirling_method::classic));
        return *stirling_;
    }

    static void finish(identity_report& rep, std::vector<rational> lhs,
                       std::vector<rational> rhs) {
        rep.pass = lhs == rhs;
        auto render = [](const std::vector<rational>& v) {
            if (v.size() == 1) return to_string(v[0]);
            std::string s = "[";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) s += ", ";
                s += to_string(v[i]);
            }
            return s + "]";
        };
        rep.lhs = render(lhs);
        rep.rhs = render(rhs);
    }

    void check_euler_classic(identity_report& rep, long long n_) {
        if (n_ < 0) throw hypothesis_error("euler_classic needs n >= 0");
        const std::size_t n = static_cast<std::size_t>(n_);
        const auto& B = bern(n);
        rational main_lhs(0);
        for (std::size_t i = 0; i <= n; ++i)
            main_lhs += rational(binomial(n_, static_cast<long long>(i))) * B[i] * B[n - i];
        rational main_rhs = rational(1 - n_) * B[n];
        if (n >= 1) main_rhs -= rational(n_) * B[n - 1];
        std::vector<rational> lhs{main_lhs}, rhs{main_rhs};
        if (n >= 4) {
            rational t_lhs(0);
            for (std::size_t i = 2; i + 2 <= n; ++i)
                t_lhs += rational(binomial(n_, static_cast<long long>(i))) * B[i] * B[n - i];
            lhs.push_back(t_lhs);
            rhs.push_back(rational(-(n_ + 1)) * B[n]);
        }
        finish(rep, std::move(lhs), std::move(rhs));
    }

    void check_euler_generalized(identity_report& rep, long long n_, long long k) {
        if (k == 0) throw hypothesis_error("euler_generalized needs k != 0");
        if (n_ < 0) throw hypothesis_error("euler_generalized needs n >= 0");
        const std::size_t n = static_cast<std::size_t>(n_);
        const auto& B = bern(n);
        const auto& Bk = genb(k, n);
        rational main_lhs(0);
        for (std::size_t i = 0; i <= n; ++i)
            main_lhs += rational(binomial(n_, static_cast<long long>(i))) * B[i] * Bk[n - i];
        rational main_rhs = (rational(1) - rational(n_) / rational(k)) * Bk[n];
        if (n >= 1) main_rhs -= rational(n_) * Bk[n - 1];
        std::vector<rational> lhs{main_lhs}, rhs{main_rhs};
        if (n >= 4) {
            rational t_lhs(0);
            for (std::size_t i = 2; i + 2 <= n; ++i)
                t_lhs += rational(binomial(n_, static_cast<long long>(i))) * B[i] * Bk[n - i];
            rational t_rhs = -rational(n_) / rational(k) * Bk[n] -
                             rational(n_) / rational(2) * Bk[n - 1] +
                             rational(k) * rational(n_) / rational(2) * B[n - 1] - B[n];
            lhs.push_back(t_lhs);
            rhs.push_back(t_rhs);
        }
        finish(rep, std::move(lhs), std::move(rhs));
    }

    void check_ladder(identity_report& rep, long long n_, long long k) {
        if (k == 0) throw hypothesis_error("genb_ladder needs k != 0");
        if (n_ < 1) throw hypothesis_error("genb_ladder needs n >= 1");
        const std::size_t n = static_cast<std::size_t>(n_);
        const auto& Bk = genb(k, n);
        const auto& Bk1 = genb(k + 1, n);
        const rational rhs = (rational(1) - rational(n_) / rational(k)) * Bk[n] -
                             rational(n_) * Bk[n - 1];
        finish(rep, {Bk1[n]}, {rhs});
    }

    void check_bernoulli_reciprocal(identity_report& rep, long long n_) {
        if (n_ < 1) throw hypothesis_error("bernoulli_reciprocal needs n >= 1");
        const std::size_t n = static_cast<std::size_t>(n_);
        const auto& B = bern(n);
        std::vector<rational> entries(n);  // B_i / i!
        for (std::size_t i = 1; i <= n; ++i)
            entries[i - 1] = B[i] / rational(factorial(i));
        rational mult_rhs(0);
        for_each_weighted_partition(
            static_cast<std::uint32_t>(n), [&](const weighted_partition& wp) {
                rational term(multinomial(wp));
                for (std::uint32_t i = 0; i < wp.weight; ++i)
                    if (wp.multiplicities[i] != 0)
                        term *= pow_rational(entries[i], wp.multiplicities[i]);
                if (wp.parts % 2 == 1) term = -term;
                mult_rhs += term;
            });
        std::vector<rational> band(n + 1);
        band[0] = 1;
        for (std::size_t i = 1; i <= n; ++i) band[i] = entries[i - 1];
        const rational det = det_recursive(hessenberg_spec(std::move(band), n));
        const rational inv_fact = make_rational(1, factorial(n + 1));
        finish(rep, {inv_fact, n % 2 == 0 ? inv_fact : -inv_fact}, {mult_rhs, det});
    }

    void check_genb_det_pair(identity_report& rep, long long n_, long long m) {
        if (n_ < 1 || m < 1) throw hypothesis_error("genb_det_pair needs n, m >= 1");
        const std::size_t n = static_cast<std::size_t>(n_);
        const auto& Bm = genb(m, n);
        const auto& Bneg = genb(-m, n);
        std::vector<rational> entries(n);  // B_i^{(-m)} / i!
        for (std::size_t i = 1; i <= n; ++i)
            entries[i - 1] = Bneg[i] / rational(factorial(i));
        std::vector<rational> band(n + 1);
        band[0] = 1;
        for (std::size_t i = 1; i <= n; ++i) band[i] = entries[i - 1];
        const rational det = det_recursive(hessenberg_spec(std::move(band), n));
        rational mult_rhs(0);
        for_each_weighted_partition(
            static_cast<std::uint32_t>(n), [&](const weighted_partition& wp) {
                rational term(multinomial(wp));
                for (std::uint32_t i = 0; i < wp.weight; ++i)
                    if (wp.multiplicities[i] != 0)
                        term *= pow_rational(entries[i], wp.multiplicities[i]);
                if (wp.parts % 2 == 1) term = -term;
                mult_rhs += term;
            });
        const rational scaled = Bm[n] / rational(factorial(n));
        finish(rep, {n % 2 == 0 ? scaled : -scaled, scaled}, {det, mult_rhs});
    }

    void check_stirling_orthogonality(identity_report& rep, long long n_, long long k) {
        if (n_ < 1 || k < 0)
            throw hypothesis_error("genb_stirling_orthogonality needs n >= 1, k >= 0");
        const std::size_t n = static_cast<std::size_t>(n_);
        const std::size_t ks = static_cast<std::size_t>(k);
        const auto& Bk = genb(k, n);
        const auto& S = stirling(n + ks);
        rational sum(0);
        for (std::size_t i = 0; i <= n; ++i)
            sum += rational(binomial(n_ + k, n_ - static_cast<long long>(i))) * Bk[n - i] *
                   rational(S.at(i + ks, ks));
        std::vector<rational> lhs{sum}, rhs{rational(0)};
        if (k == 1) {
            const auto& B = bern(n);
            rational special(0);
            for (std::size_t i = 0; i <= n; ++i)
                special += rational(binomial(n_ + 1, n_ - static_cast<long long>(i))) * B[n - i];
            lhs.push_back(special);
            rhs.push_back(rational(0));
        }
        finish(rep, std::move(lhs), std::move(rhs));
    }

    void check_neg_is_stirling(identity_report& rep, long long n_, long long k) {
        if (n_ < 1 || k < 0)
            throw hypothesis_error("genb_neg_is_stirling needs n >= 1, k >= 0");
        const std::size_t n = static_cast<std::size_t>(n_);
        const std::size_t ks = static_cast<std::size_t>(k);
        const auto& Bneg = genb(-k, n);
        const auto& Bk = genb(k, n);
        const auto& S = stirling(n + ks);
        const rational first_lhs = rational(binomial(n_ + k, k)) * Bneg[n];
        rational orth(0);
        for (std::size_t i = 0; i <= n; ++i)
            orth += rational(binomial(n_ + k, n_ - static_cast<long long>(i))) *
                    rational(binomial(static_cast<long long>(i) + k,
                                      static_cast<long long>(i))) *
                    Bk[n - i] * Bneg[i];
        finish(rep, {first_lhs, orth}, {rational(S.at(n + ks, ks)), rational(0)});
    }

    void check_split_recurrences(identity_report& rep, long long n_, long long k) {
        if (n_ < 1 || k < 1)
            throw hypothesis_error("genb_split_recurrences needs n >= 1, k >= 1");
        const std::size_t n = static_cast<std::size_t>(n_);
        const auto& B = bern(n);
        rational pos_rhs = rational(k) * B[n];
        rational neg_rhs_verbatim = rational(k) / rational(n_ + 1);
        rational neg_rhs_derived = neg_rhs_verbatim;
        for (std::size_t i = 1; i + 1 <= n; ++i) {
            rational pos_inner(0), neg_inner_v(0), neg_inner_d(0);
            for (long long l = 1; l <= k - 1; ++l) {
                pos_inner += genb(k - l, n)[n - i];
                neg_inner_v += genb(-k - l, n)[n - i];
                neg_inner_d += genb(-k + l, n)[n - i];
            }
            const rational w(binomial(n_, static_cast<long long>(i)));
            pos_rhs += w * B[i] * pos_inner;
            neg_rhs_verbatim += w / rational(i + 1) * neg_inner_v;
            neg_rhs_derived += w / rational(i + 1) * neg_inner_d;
        }
        const rational pos_lhs = genb(k, n)[n];
        const rational neg_lhs = genb(-k, n)[n];
        const bool verbatim_ok = neg_lhs == neg_rhs_verbatim;
        const bool derived_ok = neg_lhs == neg_rhs_derived;
        finish(rep, {pos_lhs, neg_lhs},
               {pos_rhs, verbatim_ok ? neg_rhs_verbatim : neg_rhs_derived});
        rep.pass = pos_lhs == pos_rhs && (verbatim_ok || derived_ok);
        if (!verbatim_ok && derived_ok)
            rep.flag = "verbatim negative-order display B^(-k-l) gives " +
                       to_string(neg_rhs_verbatim) +
                       " != lhs; the derivation's index B^(-(k-l)) matches";
    }

    void check_binomial_transform(identity_report& rep, long long n_, long long k) {
        if (n_ < 0) throw hypothesis_error("genb_binomial_transform needs n >= 0");
        const std::size_t n = static_cast<std::size_t>(n_);
        std::vector<rational> bn(n + 1);  // B_n^{(j)} for j = 0..n
        for (std::size_t j = 0; j <= n; ++j)
            bn[j] = genb(static_cast<long long>(j), n)[n];
        const rational lhs1 = genb(k, n)[n];
        rational rhs1(0);
        for (std::size_t j = 0; j <= n; ++j) {
            const bigint w = binomial(k, static_cast<long long>(j)) *
                             binomial(n_ - k, n_ - static_cast<long long>(j));
            if (w != 0) rhs1 += rational(w) * bn[j];
        }
        const rational lhs2 = rational(binomial(n_ + k, n_)) * lhs1;
        rational rhs2(0);
        for (std::size_t j = 0; j <= n; ++j) {
            const bigint w = binomial(n_ + k, n_ + static_cast<long long>(j)) *
                             binomial(n_ + static_cast<long long>(j), n_) *
                             binomial(n_ - k, n_ - static_cast<long long>(j));
            if (w != 0) rhs2 += rational(w) * bn[j];
        }
        finish(rep, {lhs1, lhs2}, {rhs1, rhs2});
    }

    void check_derivative_recurrence(identity_report& rep, long long n_, long long k) {
        if (n_ < 0) throw hypothesis_error("genb_derivative_recurrence needs n >= 0");
        const std::size_t n = static_cast<std::size_t>(n_);
        const auto& B = bern(n + 1);
        rational first_rhs(0), second_rhs_verbatim(0), second_rhs_derived(0);
        for (std::size_t i = 0; i <= n; ++i) {
            const rational w(binomial(n_, static_cast<long long>(i)));
            first_rhs += w * B[i + 1] * genb(k - 1, n)[n - i];
            const rational wi = w / rational(i + 2);
            second_rhs_verbatim += wi * genb(-k - 1, n)[n - i];
            second_rhs_derived += wi * genb(-k + 1, n)[n - i];
        }
        first_rhs *= rational(k);
        second_rhs_verbatim *= rational(k);
        second_rhs_derived *= rational(k);
        const rational first_lhs = genb(k, n + 1)[n + 1];
        const rational second_lhs = genb(-k, n + 1)[n + 1];
        const bool verbatim_ok = second_lhs == second_rhs_verbatim;
        const bool derived_ok = second_lhs == second_rhs_derived;
        finish(rep, {first_lhs, second_lhs},
               {first_rhs, verbatim_ok ? second_rhs_verbatim : second_rhs_derived});
        rep.pass = first_lhs == first_rhs && (verbatim_ok || derived_ok);
        if (!verbatim_ok && derived_ok)
            rep.flag = "verbatim display B^(-k-1) gives " + to_string(second_rhs_verbatim) +
                       " != lhs; the derivation's index B^(-(k-1)) matches";
    }

    void check_euler_recurrence(identity_report& rep, long long n_, long long k) {
        if (n_ < 0) throw hypothesis_error("genb_euler_recurrence needs n >= 0");
        const std::size_t n = static_cast<std::size_t>(n_);
        const auto& B = bern(n + 1);
        const auto& Bk = genb(k, n);
        const auto& Bneg = genb(-k, n);
        rational first_rhs(0), second_rhs(0);
        for (std::size_t i = 0; i <= n; ++i) {
            const rational w = rational(k) * rational(binomial(n_, static_cast<long long>(i))) -
                               rational(binomial(n_, static_cast<long long>(i) + 1));
            if (w == 0) continue;
            first_rhs += w * B[i + 1] * Bk[n - i];
            second_rhs += w / rational(i + 2) * Bneg[n - i];
        }
        finish(rep, {genb(k, n + 1)[n + 1], genb(-k, n + 1)[n + 1]}, {first_rhs, second_rhs});
    }

    std::vector<rational> bern_;
    std::map<long long, std::vector<rational>> genb_;
    std::optional<stirling_table> stirling_;
};

/// One-off check of a registered identity (see identity_checker for the
/// registry and the verbatim-vs-derived flag semantics).
inline identity_report verify_identity(std::string_view id, const identity_params& params) {
    identity_checker checker;
    return checker.check(id, params);
}

}  // namespace powser
