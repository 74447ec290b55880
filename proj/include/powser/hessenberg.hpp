#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "powser/combinatorics.hpp"
#include "powser/rational.hpp"

namespace powser {

/// Counter threaded through the enumeration-heavy routines so the bench
/// harness can report deterministic work measures. terms counts either
/// multinomial terms or recurrence inner-loop steps, depending on the
/// algorithm; each routine documents which.
struct op_counter {
    std::uint64_t terms = 0;
};

/// Band a_0..a_n of the upper Toeplitz-Hessenberg matrix of size order:
/// a_1 on the main diagonal, a_{j+1} on the j-th superdiagonal, a_0 on the
/// subdiagonal, zero below. order 0 is the empty matrix (determinant 1).
/// Entries past band[order] are tolerated and ignored.
struct hessenberg_spec {
    std::vector<rational> band;
    std::size_t order = 0;

    hessenberg_spec(std::vector<rational> band_, std::size_t order_)
        : band(std::move(band_)), order(order_) {
        if (band.size() < order + 1)
            throw std::invalid_argument("hessenberg band needs order+1 entries");
    }
};

/// det(TH_0..TH_n) by the linear recurrence
/// det(TH_m) = sum_{i=1..m} (-1)^{i-1} a_0^{i-1} a_i det(TH_{m-i}).
inline std::vector<rational> det_recursive_prefix(const hessenberg_spec& spec) {
    std::vector<rational> det(spec.order + 1);
    det[0] = 1;
    std::vector<rational> a0pow(spec.order);  // a0pow[i-1] = a_0^{i-1}
    if (spec.order > 0) {
        a0pow[0] = 1;
        for (std::size_t i = 1; i + 1 <= spec.order; ++i)
            a0pow[i] = a0pow[i - 1] * spec.band[0];
    }
    for (std::size_t m = 1; m <= spec.order; ++m) {
        rational acc(0);
        for (std::size_t i = 1; i <= m; ++i) {
            rational term = a0pow[i - 1] * spec.band[i] * det[m - i];
            if (i % 2 == 0) term = -term;
            acc += term;
        }
        det[m] = acc;
    }
    return det;
}

inline rational det_recursive(const hessenberg_spec& spec) {
    return det_recursive_prefix(spec).back();
}

/// Trudi's multinomial expansion over weighted partitions of n.
inline rational det_trudi(const hessenberg_spec& spec) {
    const std::size_t n = spec.order;
    if (n == 0) return rational(1);
    std::vector<rational> neg_a0_pow(n + 1);
    neg_a0_pow[0] = 1;
    for (std::size_t i = 1; i <= n; ++i)
        neg_a0_pow[i] = neg_a0_pow[i - 1] * (-spec.band[0]);
    rational acc(0);
    for_each_weighted_partition(static_cast<std::uint32_t>(n), [&](const weighted_partition& wp) {
        rational term(multinomial(wp));
        for (std::uint32_t i = 0; i < wp.weight; ++i)
            if (wp.multiplicities[i] != 0)
                term *= pow_rational(spec.band[i + 1], wp.multiplicities[i]);
        acc += term * neg_a0_pow[n - wp.parts];
    });
    return acc;
}

/// Composition-sum form: sum over ordered tuples i_1+...+i_k = n, i_j >= 1.
inline rational det_composition(const hessenberg_spec& spec) {
    const std::size_t n = spec.order;
    if (n == 0) return rational(1);
    // by_parts[k] accumulates the sum of a_{i_1}...a_{i_k} over compositions
    // of n into k parts.
    std::vector<rational> by_parts(n + 1);
    rational product(1);
    auto descend = [&](auto&& self, std::size_t remaining, std::size_t parts_used) -> void {
        if (remaining == 0) {
            by_parts[parts_used] += product;
            return;
        }
        for (std::size_t first = 1; first <= remaining; ++first) {
            rational saved = product;
            product *= spec.band[first];
            self(self, remaining - first, parts_used + 1);
            product = std::move(saved);
        }
    };
    descend(descend, n, 0);
    rational acc(0);
    rational neg_a0_pow(1);
    for (std::size_t k = n; k >= 1; --k) {
        acc += neg_a0_pow * by_parts[k];
        neg_a0_pow *= -spec.band[0];
    }
    return acc;
}

/// Coefficients of the determinant of TH_n with -X on the subdiagonal,
/// grouped by number of parts: coeff_for_parts(l) multiplies X^{n-l}.
/// Equivalently c_l = l! * sum over l-part weighted partitions of n of
/// a_1^{k_1}...a_n^{k_n} / (k_1!...k_n!).
class delta_polynomial {
public:
    explicit delta_polynomial(std::vector<rational> coeff_by_parts)
        : coeff_by_parts_(std::move(coeff_by_parts)) {
        if (coeff_by_parts_.empty())
            throw std::invalid_argument("delta polynomial needs at least the l=0 coefficient");
    }

    std::size_t degree() const { return coeff_by_parts_.size() - 1; }
    const rational& coeff_for_parts(std::size_t l) const { return coeff_by_parts_.at(l); }

    /// Value of the polynomial at X = s. Callers substituting a concrete
    /// subdiagonal value b must pass s = -b (the matrix carries -X there).
    rational eval_at(const rational& s) const {
        // Horner in decreasing l: sum_l c_l s^{n-l}
        rational acc(0);
        for (std::size_t l = 0; l < coeff_by_parts_.size(); ++l) {
            acc *= s;
            acc += coeff_by_parts_[l];
        }
        return acc;
    }

private:
    std::vector<rational> coeff_by_parts_;
};

/// Build the delta polynomial of degree n from entries a_1..a_n (a[0] is a_1).
/// One enumeration pass over the weighted partitions of n, bucketed by parts.
inline delta_polynomial make_delta_polynomial(std::span<const rational> a, std::size_t n,
                                              op_counter* counter = nullptr) {
    if (a.size() < n)
        throw std::invalid_argument("delta polynomial needs n entries a_1..a_n");
    std::vector<rational> c(n + 1);
    if (n == 0) {
        c[0] = 1;
        return delta_polynomial(std::move(c));
    }
    for_each_weighted_partition(static_cast<std::uint32_t>(n), [&](const weighted_partition& wp) {
        if (counter) ++counter->terms;
        rational term(multinomial(wp));
        for (std::uint32_t i = 0; i < wp.weight; ++i)
            if (wp.multiplicities[i] != 0)
                term *= pow_rational(a[i], wp.multiplicities[i]);
        c[wp.parts] += term;
    });
    return delta_polynomial(std::move(c));
}

}  // namespace powser
