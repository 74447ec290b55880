#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "powser/rational.hpp"

namespace powser {

/// n! from a process-wide memoized table, grown on demand. Safe for
/// concurrent read/extend; returned references stay valid forever.
inline const bigint& factorial(std::size_t n) {
    static std::deque<bigint> table{bigint(1)};
    static std::shared_mutex mx;
    {
        std::shared_lock rd(mx);
        if (n < table.size()) return table[n];
    }
    std::unique_lock wr(mx);
    while (table.size() <= n)
        table.push_back(table.back() * bigint(table.size()));
    return table[n];
}

/// binom(k, r) by the falling factorial k(k-1)...(k-r+1)/r!, which is the
/// definition that stays valid for negative integer k. r < 0 gives 0.
inline bigint binomial(long long k, long long r) {
    if (r < 0) return bigint(0);
    if (k >= 0 && r > k) return bigint(0);
    bigint num(1);
    for (long long j = 0; j < r; ++j)
        num *= bigint(k - j);
    return num / factorial(static_cast<std::size_t>(r));
}

/// Solution of k_1 + 2*k_2 + ... + n*k_n = n. multiplicities[i-1] holds k_i;
/// parts = sum of the k_i.
struct weighted_partition {
    std::vector<std::uint32_t> multiplicities;
    std::uint32_t weight = 0;
    std::uint32_t parts = 0;
};

/// parts! / (k_1! k_2! ... k_n!)
inline bigint multinomial(const weighted_partition& wp) {
    bigint v = factorial(wp.parts);
    for (std::uint32_t m : wp.multiplicities)
        if (m > 1) v /= factorial(m);
    return v;
}

/// Visit every weighted partition of n exactly once, largest part first in
/// decreasing lexicographic order: n=3 gives (k_3=1), (k_1=1,k_2=1), (k_1=3).
/// n=0 yields the single empty partition. Parts above max_part are skipped
/// when max_part > 0. The reference passed to fn is reused between calls.
template <typename Fn>
void for_each_weighted_partition(std::uint32_t n, Fn&& fn, std::uint32_t max_part = 0) {
    weighted_partition wp;
    wp.multiplicities.assign(n, 0);
    wp.weight = n;
    const std::uint32_t cap = (max_part == 0 || max_part > n) ? n : max_part;
    auto descend = [&](auto&& self, std::uint32_t remaining, std::uint32_t biggest) -> void {
        if (remaining == 0) {
            fn(static_cast<const weighted_partition&>(wp));
            return;
        }
        for (std::uint32_t p = remaining < biggest ? remaining : biggest; p >= 1; --p) {
            ++wp.multiplicities[p - 1];
            ++wp.parts;
            self(self, remaining - p, p);
            --wp.multiplicities[p - 1];
            --wp.parts;
        }
    };
    if (n == 0) {
        fn(static_cast<const weighted_partition&>(wp));
        return;
    }
    descend(descend, n, cap);
}

/// Materialized enumeration, same order as for_each_weighted_partition.
inline std::vector<weighted_partition> enumerate_weighted_partitions(std::uint32_t n) {
    std::vector<weighted_partition> out;
    for_each_weighted_partition(n, [&](const weighted_partition& wp) { out.push_back(wp); });
    return out;
}

}  // namespace powser
