#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "powser/rational.hpp"
#include "powser/series.hpp"

namespace powser {

/// Default seed for every randomized surface (verify suites, bench input).
inline constexpr std::uint64_t default_seed = 20240901;

/// Deterministic draws on top of mt19937_64. Bounded values come from a
/// plain modulo of the raw 64-bit stream: std::uniform_int_distribution is
/// implementation-defined, and identical output across standard libraries
/// matters more here than the negligible modulo bias.
class corpus_rng {
public:
    explicit corpus_rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform-ish value in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return gen_() % bound; }

    /// Numerator in [-9,9] (nonzero if required), denominator in [1,9].
    rational coefficient(bool nonzero) {
        long long num;
        if (nonzero) {
            num = 1 + static_cast<long long>(below(9));
            if (below(2)) num = -num;
        } else {
            num = static_cast<long long>(below(19)) - 9;
        }
        const long long den = 1 + static_cast<long long>(below(9));
        return make_rational(num, den);
    }

    /// Random series of order <= max_order; the constant term is nonzero
    /// when unit_constant is set.
    series make_series(std::size_t max_order, bool unit_constant) {
        return make_series_of_order(below(max_order + 1), unit_constant);
    }

    series make_series_of_order(std::size_t order, bool unit_constant) {
        std::vector<rational> c(order + 1);
        c[0] = coefficient(unit_constant);
        for (std::size_t i = 1; i <= order; ++i) c[i] = coefficient(false);
        return series(std::move(c));
    }

private:
    std::mt19937_64 gen_;
};

struct corpus_options {
    std::uint64_t seed = default_seed;
    std::size_t count = 200;
    std::size_t max_order = 24;
};

/// The seeded random-series corpus shared by the verify suite and the
/// acceptance run: count series of order <= max_order with nonzero constant
/// term, coefficients with numerator/denominator in [-9,9]/[1,9].
inline std::vector<series> random_series_corpus(const corpus_options& opt) {
    corpus_rng rng(opt.seed);
    std::vector<series> out;
    out.reserve(opt.count);
    for (std::size_t i = 0; i < opt.count; ++i)
        out.push_back(rng.make_series(opt.max_order, /*unit_constant=*/true));
    return out;
}

}  // namespace powser
