#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "powser/hessenberg.hpp"
#include "powser/rational.hpp"
#include "powser/report.hpp"
#include "powser/series.hpp"

namespace powser {

/// Coefficients of prod_{n>=1} (1 - X^n) up to order N: +-1 exactly at the
/// generalized pentagonal numbers m(3m+-1)/2 with sign (-1)^m, else 0.
inline std::vector<int> pentagonal_coeffs(std::size_t max_n) {
    std::vector<int> c(max_n + 1, 0);
    c[0] = 1;
    for (unsigned long long m = 1;; ++m) {
        const unsigned long long g1 = m * (3 * m - 1) / 2;
        const unsigned long long g2 = m * (3 * m + 1) / 2;
        if (g1 > max_n) break;
        const int sign = m % 2 == 0 ? 1 : -1;
        c[static_cast<std::size_t>(g1)] = sign;
        if (g2 <= max_n) c[static_cast<std::size_t>(g2)] = sign;
    }
    return c;
}

/// p(0)..p(N) by Euler's pentagonal recurrence
/// p(m) = sum_{n>=1} (-1)^{n+1} { p(m - (3n^2-n)/2) + p(m - (3n^2+n)/2) },
/// truncated at the largest pentagonal number <= m.
inline std::vector<bigint> partition_numbers_pentagonal(std::size_t max_n) {
    std::vector<bigint> p(max_n + 1);
    p[0] = 1;
    for (std::size_t m = 1; m <= max_n; ++m) {
        bigint acc(0);
        for (std::size_t n = 1;; ++n) {
            const std::size_t g1 = n * (3 * n - 1) / 2;
            if (g1 > m) break;
            const std::size_t g2 = n * (3 * n + 1) / 2;
            bigint term = p[m - g1];
            if (g2 <= m) term += p[m - g2];
            if (n % 2 == 0)
                acc -= term;
            else
                acc += term;
        }
        p[m] = acc;
    }
    return p;
}

/// p(0)..p(N) through the determinant route: p(n) = (-1)^n det(TH_n) with
/// band (1, a_1, ..., a_n) over the pentagonal coefficients.
inline std::vector<bigint> partition_numbers_det(std::size_t max_n) {
    const auto pent = pentagonal_coeffs(max_n);
    std::vector<rational> band(max_n + 1);
    band[0] = 1;
    for (std::size_t i = 1; i <= max_n; ++i) band[i] = pent[i];
    const auto dets = det_recursive_prefix(hessenberg_spec(std::move(band), max_n));
    std::vector<bigint> p(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n) {
        bigint v = to_integer(dets[n]);
        p[n] = n % 2 == 0 ? v : -v;
    }
    return p;
}

inline bigint partition_number_det(std::size_t n) {
    return partition_numbers_det(n).back();
}

/// The dual determinant: pentagonal coefficient a_n = (-1)^n det(TH_n) with
/// band (1, p(1), ..., p(n)). n >= 1.
inline int pentagonal_det(std::size_t n) {
    if (n < 1)
        throw hypothesis_error("pentagonal_det needs n >= 1");
    const auto p = partition_numbers_pentagonal(n);
    std::vector<rational> band(n + 1);
    band[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) band[i] = rational(p[i]);
    const bigint det = to_integer(det_recursive(hessenberg_spec(std::move(band), n)));
    const bigint v = n % 2 == 0 ? det : -det;
    if (v < -1 || v > 1)
        throw std::logic_error("pentagonal determinant outside {-1,0,1}");
    return static_cast<int>(v);
}

/// (pentagonal series) * (1 + sum p(n) X^n) == 1, checked to order N.
inline identity_report verify_gf_identity(std::size_t max_n) {
    const auto pent = pentagonal_coeffs(max_n);
    const auto p = partition_numbers_pentagonal(max_n);
    std::vector<rational> a(max_n + 1), b(max_n + 1);
    for (std::size_t i = 0; i <= max_n; ++i) {
        a[i] = pent[i];
        b[i] = rational(p[i]);
    }
    const series product = mul(series(std::move(a)), series(std::move(b)));
    identity_report rep;
    rep.identity = "partition_gf_product";
    rep.params = {{"N", static_cast<long long>(max_n)}};
    rep.pass = product == series::one(max_n);
    rep.lhs = "(euler function) * (partition gf) truncated at " + std::to_string(max_n);
    rep.rhs = "1";
    if (!rep.pass) {
        for (std::size_t i = 0; i <= max_n; ++i)
            if (product[i] != (i == 0 ? rational(1) : rational(0))) {
                rep.lhs = "coefficient " + std::to_string(i) + " = " + to_string(product[i]);
                rep.rhs = i == 0 ? "1" : "0";
                break;
            }
    }
    return rep;
}

/// prod_{n=1..N} (1 - X^n) truncated at order N equals the pentagonal
/// coefficient series, by iterated multiplication.
inline identity_report verify_euler_product(std::size_t max_n) {
    series prod = series::one(max_n);
    for (std::size_t n = 1; n <= max_n; ++n) {
        series factor = series::one(max_n);
        factor[n] = -1;
        prod = mul(prod, factor);
    }
    const auto pent = pentagonal_coeffs(max_n);
    bool ok = true;
    std::string mismatch;
    for (std::size_t i = 0; i <= max_n; ++i)
        if (prod[i] != rational(pent[i])) {
            ok = false;
            mismatch = "coefficient " + std::to_string(i) + ": product " + to_string(prod[i]) +
                       " vs pentagonal " + std::to_string(pent[i]);
            break;
        }
    identity_report rep;
    rep.identity = "pentagonal_euler_product";
    rep.params = {{"N", static_cast<long long>(max_n)}};
    rep.pass = ok;
    rep.lhs = ok ? "prod (1 - X^n) truncated at " + std::to_string(max_n) : mismatch;
    rep.rhs = "pentagonal coefficients";
    return rep;
}

}  // namespace powser
