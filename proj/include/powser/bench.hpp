#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "powser/corpus.hpp"
#include "powser/series.hpp"

namespace powser {

/// One timed run of one power algorithm. term_count is the deterministic
/// work measure reported by the algorithm: enumerated weighted partitions
/// for the closed-form/double-sum/hat routes, recurrence inner-loop steps
/// for the others. best_wall_ns is the minimum over the repeats.
struct bench_record {
    std::string algorithm;
    std::size_t order = 0;
    long long k = 0;
    unsigned repeats = 0;
    std::uint64_t best_wall_ns = 0;
    std::uint64_t term_count = 0;
};

struct bench_options {
    std::size_t order_lo = 4;
    std::size_t order_hi = 16;
    long long k = 3;
    unsigned repeats = 3;
    std::uint64_t seed = default_seed;
};

/// Contrast the power algorithms on one seeded random series per order.
/// The input draws are deterministic for a fixed (seed, order range).
inline std::vector<bench_record> run_pow_bench(const bench_options& opt) {
    static constexpr power_algorithm algs[] = {
        power_algorithm::miller,     power_algorithm::closed_form, power_algorithm::double_sum,
        power_algorithm::hat,        power_algorithm::nested,      power_algorithm::derivative,
    };
    std::vector<bench_record> out;
    corpus_rng rng(opt.seed);
    for (std::size_t order = opt.order_lo; order <= opt.order_hi; ++order) {
        const series f = rng.make_series_of_order(order, /*unit_constant=*/true);
        for (power_algorithm alg : algs) {
            if (!power_algorithm_applicable(alg, f, opt.k)) continue;
            op_counter counter;
            pow(f, opt.k, alg, &counter);
            std::uint64_t best = ~std::uint64_t{0};
            for (unsigned r = 0; r < opt.repeats; ++r) {
                const auto t0 = std::chrono::steady_clock::now();
                pow(f, opt.k, alg);
                const auto t1 = std::chrono::steady_clock::now();
                const auto ns = static_cast<std::uint64_t>(
                    std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
                if (ns < best) best = ns;
            }
            if (best == 0) best = 1;  // clock granularity floor, wall_time > 0
            bench_record rec;
            rec.algorithm = std::string(to_string(alg));
            rec.order = order;
            rec.k = opt.k;
            rec.repeats = opt.repeats;
            rec.best_wall_ns = best;
            rec.term_count = counter.terms;
            out.push_back(std::move(rec));
        }
    }
    return out;
}

inline std::string bench_csv_header() {
    return "algorithm,order,k,repeats,best_wall_ns,term_count";
}

inline std::string bench_csv_row(const bench_record& r) {
    return r.algorithm + ',' + std::to_string(r.order) + ',' + std::to_string(r.k) + ',' +
           std::to_string(r.repeats) + ',' + std::to_string(r.best_wall_ns) + ',' +
           std::to_string(r.term_count);
}

}  // namespace powser
