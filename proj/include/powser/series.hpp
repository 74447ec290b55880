#pragma once

#include <cstddef>
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

namespace powser {

/// Formal power series truncated at an explicit order N: coefficients
/// a_0..a_N, trailing zeros kept. All binary operations insist on matching
/// orders; mixing orders is an error, never a silent re-truncation.
class series {
public:
    explicit series(std::vector<rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("series needs at least the constant coefficient");
    }

    static series zero(std::size_t order) {
        return series(std::vector<rational>(order + 1));
    }
    static series constant(const rational& c, std::size_t order) {
        std::vector<rational> v(order + 1);
        v[0] = c;
        return series(std::move(v));
    }
    static series one(std::size_t order) { return constant(rational(1), order); }

    std::size_t order() const { return coeffs_.size() - 1; }
    const rational& operator[](std::size_t i) const { return coeffs_[i]; }
    rational& operator[](std::size_t i) { return coeffs_[i]; }
    const std::vector<rational>& coeffs() const { return coeffs_; }

    /// First index with a nonzero coefficient, or empty for the zero series.
    std::optional<std::size_t> valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return i;
        return std::nullopt;
    }

    /// Copy truncated to a lower order (new_order <= order).
    series truncated(std::size_t new_order) const {
        if (new_order > order())
            throw order_mismatch_error("cannot truncate to a higher order");
        return series(std::vector<rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
    }

    bool operator==(const series& o) const {
        if (order() != o.order())
            throw order_mismatch_error("comparing series of different truncation orders");
        return coeffs_ == o.coeffs_;
    }
    bool operator!=(const series& o) const { return !(*this == o); }

private:
    std::vector<rational> coeffs_;
};

namespace detail {
inline void require_same_order(const series& f, const series& g, const char* what) {
    if (f.order() != g.order())
        throw order_mismatch_error(std::string(what) + ": operand truncation orders differ");
}
}  // namespace detail

inline series operator+(const series& f, const series& g) {
    detail::require_same_order(f, g, "add");
    std::vector<rational> c(f.order() + 1);
    for (std::size_t i = 0; i <= f.order(); ++i) c[i] = f[i] + g[i];
    return series(std::move(c));
}

inline series operator-(const series& f, const series& g) {
    detail::require_same_order(f, g, "sub");
    std::vector<rational> c(f.order() + 1);
    for (std::size_t i = 0; i <= f.order(); ++i) c[i] = f[i] - g[i];
    return series(std::move(c));
}

inline series operator*(const series& f, const rational& c) {
    std::vector<rational> v(f.coeffs());
    for (auto& x : v) x *= c;
    return series(std::move(v));
}
inline series operator*(const rational& c, const series& f) { return f * c; }

/// Cauchy product truncated at the common order.
inline series mul(const series& f, const series& g) {
    detail::require_same_order(f, g, "mul");
    const std::size_t n = f.order();
    std::vector<rational> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (g[j] == 0) continue;
            c[i + j] += f[i] * g[j];
        }
    }
    return series(std::move(c));
}

inline series operator*(const series& f, const series& g) { return mul(f, g); }

/// Formal derivative: coefficient i of f' is (i+1) * f_{i+1}. Result order
/// drops by one; differentiating an order-0 series is an error.
inline series derivative(const series& f) {
    if (f.order() == 0)
        throw order_mismatch_error("derivative needs order >= 1");
    std::vector<rational> c(f.order());
    for (std::size_t i = 0; i + 1 <= f.order(); ++i)
        c[i] = rational(i + 1) * f[i + 1];
    return series(std::move(c));
}

/// Multiplicative inverse by the convolution recurrence
/// g_0 = 1/f_0, g_n = -(1/f_0) sum_{i=1..n} f_i g_{n-i}.
inline series inverse_recursive(const series& f) {
    if (f[0] == 0)
        throw non_invertible_error("inverse of a series with zero constant term");
    const std::size_t n = f.order();
    std::vector<rational> g(n + 1);
    const rational inv0 = rational(1) / f[0];
    g[0] = inv0;
    for (std::size_t m = 1; m <= n; ++m) {
        rational acc(0);
        for (std::size_t i = 1; i <= m; ++i)
            acc += f[i] * g[m - i];
        g[m] = -inv0 * acc;
    }
    return series(std::move(g));
}

/// Multiplicative inverse via Toeplitz-Hessenberg determinants:
/// b_n = (-1)^n det(TH_n(a_0,...,a_n)) / a_0^{n+1}.
inline series inverse_wronski(const series& f) {
    if (f[0] == 0)
        throw non_invertible_error("inverse of a series with zero constant term");
    const std::size_t n = f.order();
    const auto dets = det_recursive_prefix(hessenberg_spec(f.coeffs(), n));
    std::vector<rational> b(n + 1);
    rational a0_pow = f[0];  // a_0^{m+1}
    for (std::size_t m = 0; m <= n; ++m) {
        b[m] = dets[m] / a0_pow;
        if (m % 2 == 1) b[m] = -b[m];
        a0_pow *= f[0];
    }
    return series(std::move(b));
}

enum class power_algorithm { miller, closed_form, double_sum, hat, nested, derivative };

inline std::string_view to_string(power_algorithm a) {
    switch (a) {
        case power_algorithm::miller: return "miller";
        case power_algorithm::closed_form: return "closed";
        case power_algorithm::double_sum: return "double";
        case power_algorithm::hat: return "hat";
        case power_algorithm::nested: return "nested";
        case power_algorithm::derivative: return "deriv";
    }
    return "?";
}

inline std::optional<power_algorithm> power_algorithm_from_string(std::string_view s) {
    if (s == "miller") return power_algorithm::miller;
    if (s == "closed") return power_algorithm::closed_form;
    if (s == "double") return power_algorithm::double_sum;
    if (s == "hat") return power_algorithm::hat;
    if (s == "nested") return power_algorithm::nested;
    if (s == "deriv") return power_algorithm::derivative;
    return std::nullopt;
}

namespace detail {

/// Shared handling of f_0 = 0 with k >= 0: factor f = X^v g with g_0 != 0,
/// raise g, shift by v*k. Returns nullopt when f_0 != 0 (caller proceeds).
template <typename PowFn>
std::optional<series> pow_shifted_if_needed(const series& f, long long k, PowFn&& pw) {
    if (f[0] != 0) return std::nullopt;
    if (k < 0)
        throw non_invertible_error("negative power of a series with zero constant term");
    const std::size_t n = f.order();
    if (k == 0) return series::one(n);
    const auto v = f.valuation();
    if (!v) return series::zero(n);
    const unsigned long long shift =
        static_cast<unsigned long long>(*v) * static_cast<unsigned long long>(k);
    if (shift > n) return series::zero(n);
    series g(std::vector<rational>(f.coeffs().begin() + static_cast<std::ptrdiff_t>(*v),
                                   f.coeffs().end()));
    series gk = pw(g, k);
    std::vector<rational> out(n + 1);
    for (std::size_t i = 0; i + shift <= n && i <= gk.order(); ++i)
        out[i + static_cast<std::size_t>(shift)] = gk[i];
    return series(std::move(out));
}

}  // namespace detail

/// k-th power by the Miller/Euler recurrence
/// a_0(k) = f_0^k,  a_m(k) = (1/(m f_0)) sum_{i=1..m} (ik - m + i) f_i a_{m-i}(k).
/// Works for any integer k when f_0 != 0; for f_0 = 0 and k >= 0 the power is
/// computed on the valuation-shifted unit part. Counter: inner-loop steps.
inline series pow_miller(const series& f, long long k, op_counter* counter = nullptr) {
    if (auto shifted = detail::pow_shifted_if_needed(
            f, k, [&](const series& g, long long kk) { return pow_miller(g, kk, counter); }))
        return *shifted;
    const std::size_t n = f.order();
    std::vector<rational> a(n + 1);
    a[0] = pow_rational(f[0], k);
    for (std::size_t m = 1; m <= n; ++m) {
        rational acc(0);
        for (std::size_t i = 1; i <= m; ++i) {
            if (counter) ++counter->terms;
            if (f[i] == 0) continue;
            const long long weight =
                k * static_cast<long long>(i) - static_cast<long long>(m - i);
            if (weight == 0) continue;
            acc += rational(weight) * f[i] * a[m - i];
        }
        a[m] = acc / (rational(m) * f[0]);
    }
    return series(std::move(a));
}

/// The bracket map [p]_k^r evaluated at a0: sum_l binom(k,l) c_l a0^{k-l},
/// where c_l are the delta-polynomial coefficients grouped by parts.
/// binom(k,l) uses the falling factorial, so any integer k is valid; for
/// nonnegative k the terms with l > k vanish, and with a0 = 0 the surviving
/// term is the Kronecker-delta l = k one (0^0 = 1). a0 = 0 with negative k
/// is an error.
inline rational bracket_eval(const delta_polynomial& p, long long k, std::size_t r,
                             const rational& a0) {
    if (p.degree() != r)
        throw std::invalid_argument("bracket_eval: polynomial degree must equal r");
    if (a0 == 0 && k < 0)
        throw non_invertible_error("bracket map at a0 = 0 with negative k");
    rational acc(0);
    for (std::size_t l = 0; l <= r; ++l) {
        if (p.coeff_for_parts(l) == 0) continue;
        const bigint b = binomial(k, static_cast<long long>(l));
        if (b == 0) continue;
        const long long e = k - static_cast<long long>(l);
        acc += rational(b) * p.coeff_for_parts(l) * pow_rational(a0, e);
    }
    return acc;
}

/// Closed-form k-th power: coefficient n is the bracket map applied to the
/// delta polynomial of (f_1..f_n). Exponential in n (weighted-partition
/// enumeration); the benchmark counterpart of pow_miller. Counter: partitions
/// enumerated.
inline series pow_closed_form(const series& f, long long k, op_counter* counter = nullptr) {
    if (f[0] == 0 && k < 0)
        throw non_invertible_error("negative power of a series with zero constant term");
    const std::size_t n = f.order();
    std::vector<rational> out(n + 1);
    out[0] = pow_rational(f[0], k);
    std::span<const rational> tail(f.coeffs().data() + 1, n);
    for (std::size_t m = 1; m <= n; ++m)
        out[m] = bracket_eval(make_delta_polynomial(tail.first(m), m, counter), k, m, f[0]);
    return series(std::move(out));
}

namespace detail {
/// Weights w_p = binom(k,p) a0^{k-p} (or the hat variant with p+1) with the
/// conventions: binom(k,p) = 0 kills the term before any power of a0 is
/// taken, and 0^0 = 1.
inline std::vector<rational> binomial_weights(long long k, const rational& a0, std::size_t n,
                                              bool hat) {
    std::vector<rational> w(n + 1);
    for (std::size_t p = 1; p <= n; ++p) {
        const long long upper = hat ? static_cast<long long>(p) + 1 : static_cast<long long>(p);
        const bigint b = binomial(k, upper);
        if (b == 0) continue;
        const long long e = k - upper;
        if (a0 == 0 && e < 0) continue;  // unreachable for k >= upper
        w[p] = rational(b) * pow_rational(a0, e);
    }
    return w;
}
}  // namespace detail

/// k-th power (k >= 0) by the double sum over weighted partitions grouped
/// by part count p, weighted with binom(k,p) a0^{k-p}. Counter: partitions
/// enumerated.
inline series pow_double_sum(const series& f, long long k, op_counter* counter = nullptr) {
    if (k < 0)
        throw hypothesis_error("double-sum power is stated for k >= 0");
    const std::size_t n = f.order();
    std::vector<rational> out(n + 1);
    out[0] = pow_rational(f[0], k);
    for (std::size_t m = 1; m <= n; ++m) {
        const auto w = detail::binomial_weights(k, f[0], m, /*hat=*/false);
        rational acc(0);
        for_each_weighted_partition(
            static_cast<std::uint32_t>(m), [&](const weighted_partition& wp) {
                if (counter) ++counter->terms;
                if (w[wp.parts] == 0) return;
                rational term(multinomial(wp));
                for (std::uint32_t i = 0; i < wp.weight; ++i)
                    if (wp.multiplicities[i] != 0)
                        term *= pow_rational(f[i + 1], wp.multiplicities[i]);
                acc += w[wp.parts] * term;
            });
        out[m] = acc;
    }
    return series(std::move(out));
}

/// k-th power (k >= 1) via the hat sequence: build the hat coefficients from
/// the partition double sum with binom(k,p+1) a0^{k-p-1} weights, then
/// convolve: a_{n+1}(k) = sum_{i=0..n} a_{i+1} hat_{n-i}(k). k = 0 returns
/// the constant 1 series. Counter: partitions enumerated plus convolution
/// steps.
inline series pow_hat(const series& f, long long k, op_counter* counter = nullptr) {
    if (k < 0)
        throw hypothesis_error("hat power is stated for k >= 0");
    const std::size_t n = f.order();
    if (k == 0) return series::one(n);
    std::vector<rational> hat(n);  // hat[m] = hat_m(k), needed for m <= n-1
    if (n > 0) {
        hat[0] = rational(binomial(k, 1)) * pow_rational(f[0], k - 1);
        for (std::size_t m = 1; m + 1 <= n; ++m) {
            const auto w = detail::binomial_weights(k, f[0], m, /*hat=*/true);
            rational acc(0);
            for_each_weighted_partition(
                static_cast<std::uint32_t>(m), [&](const weighted_partition& wp) {
                    if (counter) ++counter->terms;
                    if (w[wp.parts] == 0) return;
                    rational term(multinomial(wp));
                    for (std::uint32_t i = 0; i < wp.weight; ++i)
                        if (wp.multiplicities[i] != 0)
                            term *= pow_rational(f[i + 1], wp.multiplicities[i]);
                    acc += w[wp.parts] * term;
                });
            hat[m] = acc;
        }
    }
    std::vector<rational> out(n + 1);
    out[0] = pow_rational(f[0], k);
    for (std::size_t m = 0; m + 1 <= n; ++m) {
        rational acc(0);
        for (std::size_t i = 0; i <= m; ++i) {
            if (counter) ++counter->terms;
            acc += f[i + 1] * hat[m - i];
        }
        out[m + 1] = acc;
    }
    return series(std::move(out));
}

/// k-th power (k >= 0) by the nested recurrence over all lower powers:
/// a_{n+1}(k) = a_{n+1} a_0^{k-1} k + sum_{i=1..n} a_i sum_{l=1..k-1}
/// a_0^{l-1} a_{n+1-i}(k-l), memoized in a (k+1) x (N+1) table filled
/// row-major in k. Counter: inner (i,l) steps.
inline series pow_nested(const series& f, long long k, op_counter* counter = nullptr) {
    if (k < 0)
        throw hypothesis_error("nested power is stated for k >= 0");
    const std::size_t n = f.order();
    const std::size_t rows = static_cast<std::size_t>(k) + 1;
    std::vector<rational> a0pow(rows);  // a0pow[j] = f_0^j
    a0pow[0] = 1;
    for (std::size_t j = 1; j < rows; ++j) a0pow[j] = a0pow[j - 1] * f[0];
    std::vector<std::vector<rational>> table(rows, std::vector<rational>(n + 1));
    table[0][0] = 1;
    for (std::size_t j = 1; j < rows; ++j) {
        table[j][0] = a0pow[j];
        for (std::size_t m = 1; m <= n; ++m) {
            rational acc = f[m] * a0pow[j - 1] * rational(j);
            for (std::size_t i = 1; i + 1 <= m; ++i) {
                if (f[i] == 0) {
                    if (counter) counter->terms += j - 1;
                    continue;
                }
                rational inner(0);
                for (std::size_t l = 1; l < j; ++l) {
                    if (counter) ++counter->terms;
                    inner += a0pow[l - 1] * table[j - l][m - i];
                }
                acc += f[i] * inner;
            }
            table[j][m] = acc;
        }
    }
    return series(std::move(table[rows - 1]));
}

/// k-th power through the derivative relation
/// n a_n(k) = k sum_{i=1..n} i a_i a_{n-i}(k-1), grounded at k = 0; negative
/// k is served by raising the Wronski inverse to -k. Counter: inner steps.
inline series pow_derivative(const series& f, long long k, op_counter* counter = nullptr) {
    if (k < 0) {
        if (f[0] == 0)
            throw non_invertible_error("negative power of a series with zero constant term");
        return pow_derivative(inverse_wronski(f), -k, counter);
    }
    const std::size_t n = f.order();
    std::vector<rational> prev(n + 1), cur(n + 1);
    prev[0] = 1;  // k = 0 row
    for (long long j = 1; j <= k; ++j) {
        cur.assign(n + 1, rational(0));
        cur[0] = pow_rational(f[0], j);
        for (std::size_t m = 1; m <= n; ++m) {
            rational acc(0);
            for (std::size_t i = 1; i <= m; ++i) {
                if (counter) ++counter->terms;
                if (f[i] == 0) continue;
                acc += rational(i) * f[i] * prev[m - i];
            }
            cur[m] = acc * rational(j) / rational(m);
        }
        std::swap(prev, cur);
    }
    return series(std::move(prev));
}

inline series pow(const series& f, long long k, power_algorithm alg,
                  op_counter* counter = nullptr) {
    switch (alg) {
        case power_algorithm::miller: return pow_miller(f, k, counter);
        case power_algorithm::closed_form: return pow_closed_form(f, k, counter);
        case power_algorithm::double_sum: return pow_double_sum(f, k, counter);
        case power_algorithm::hat: return pow_hat(f, k, counter);
        case power_algorithm::nested: return pow_nested(f, k, counter);
        case power_algorithm::derivative: return pow_derivative(f, k, counter);
    }
    throw std::invalid_argument("unknown power algorithm");
}

/// Whether an algorithm's stated hypotheses cover exponent k for series f.
inline bool power_algorithm_applicable(power_algorithm alg, const series& f, long long k) {
    if (k >= 0) return true;
    switch (alg) {
        case power_algorithm::double_sum:
        case power_algorithm::hat:
        case power_algorithm::nested:
            return false;
        default:
            return f[0] != 0;
    }
}

/// Coefficients of (1 - a_1 X - ... - a_p X^p)^{-1} to the given order by the
/// multinomial sum over weighted partitions with parts <= p.
inline series geometric_inverse_closed(std::span<const rational> a, std::size_t order) {
    std::vector<rational> b(order + 1);
    b[0] = 1;
    const std::uint32_t max_part = static_cast<std::uint32_t>(a.size());
    for (std::size_t m = 1; m <= order; ++m) {
        if (max_part == 0) break;  // empty sum: inverse of 1
        rational acc(0);
        for_each_weighted_partition(
            static_cast<std::uint32_t>(m),
            [&](const weighted_partition& wp) {
                rational term(multinomial(wp));
                for (std::uint32_t i = 0; i < wp.weight && i < max_part; ++i)
                    if (wp.multiplicities[i] != 0)
                        term *= pow_rational(a[i], wp.multiplicities[i]);
                acc += term;
            },
            max_part);
        b[m] = acc;
    }
    return series(std::move(b));
}

/// Check the two binomial-transform displays relating b_n(k) to b_n(j) for
/// j = 0..n, for a series with constant term 1 and any integer k.
inline identity_report verify_binomial_transform(const series& f, long long k, std::size_t n) {
    if (f[0] != 1)
        throw hypothesis_error("binomial transform check needs constant term 1");
    if (n > f.order())
        throw order_mismatch_error("binomial transform check needs n <= series order");
    std::vector<rational> bn(n + 1);  // bn[j] = coefficient n of f^j
    for (std::size_t j = 0; j <= n; ++j)
        bn[j] = pow_miller(f, static_cast<long long>(j))[n];
    const rational lhs1 = pow_miller(f, k)[n];
    rational rhs1(0);
    for (std::size_t j = 0; j <= n; ++j) {
        const bigint w = binomial(k, static_cast<long long>(j)) *
                         binomial(static_cast<long long>(n) - k,
                                  static_cast<long long>(n) - static_cast<long long>(j));
        if (w != 0) rhs1 += rational(w) * bn[j];
    }
    const rational lhs2 = rational(binomial(static_cast<long long>(n) + k,
                                            static_cast<long long>(n))) * lhs1;
    rational rhs2(0);
    for (std::size_t j = 0; j <= n; ++j) {
        const bigint w = binomial(static_cast<long long>(n) + k,
                                  static_cast<long long>(n) + static_cast<long long>(j)) *
                         binomial(static_cast<long long>(n) + static_cast<long long>(j),
                                  static_cast<long long>(n)) *
                         binomial(static_cast<long long>(n) - k,
                                  static_cast<long long>(n) - static_cast<long long>(j));
        if (w != 0) rhs2 += rational(w) * bn[j];
    }
    identity_report rep;
    rep.identity = "binomial_transform";
    rep.params = {{"k", k}, {"n", static_cast<long long>(n)}};
    rep.lhs = "[" + to_string(lhs1) + ", " + to_string(lhs2) + "]";
    rep.rhs = "[" + to_string(rhs1) + ", " + to_string(rhs2) + "]";
    rep.pass = lhs1 == rhs1 && lhs2 == rhs2;
    return rep;
}

/// Check binom(n+k-1, n) against the signed multinomial sum over weighted
/// partitions of n with parts <= k, with binom(k,j) in place of a_j.
inline identity_report verify_negative_binomial_corollary(long long k, std::size_t n) {
    if (k < 1)
        throw hypothesis_error("negative-binomial corollary needs k >= 1");
    const bigint lhs = binomial(static_cast<long long>(n) + k - 1, static_cast<long long>(n));
    std::vector<rational> binoms(static_cast<std::size_t>(k));
    for (long long j = 1; j <= k; ++j)
        binoms[static_cast<std::size_t>(j - 1)] = rational(binomial(k, j));
    rational rhs(0);
    if (n == 0) {
        rhs = 1;
    } else {
        for_each_weighted_partition(
            static_cast<std::uint32_t>(n),
            [&](const weighted_partition& wp) {
                rational term(multinomial(wp));
                for (std::uint32_t i = 0; i < wp.weight && i < binoms.size(); ++i)
                    if (wp.multiplicities[i] != 0)
                        term *= pow_rational(binoms[i], wp.multiplicities[i]);
                if ((n - wp.parts) % 2 == 1) term = -term;
                rhs += term;
            },
            static_cast<std::uint32_t>(k));
    }
    identity_report rep;
    rep.identity = "negative_binomial_corollary";
    rep.params = {{"k", k}, {"n", static_cast<long long>(n)}};
    rep.lhs = lhs.str();
    rep.rhs = to_string(rhs);
    rep.pass = rational(lhs) == rhs;
    return rep;
}

}  // namespace powser
