// Bernoulli numbers three ways, plus the partition function through its
// determinant identity.
#include <iostream>

#include "powser/powser.hpp"

using namespace powser;

int main() {
    const auto by_series = bernoulli_numbers(12, bernoulli_method::series);
    const auto by_det = bernoulli_numbers(12, bernoulli_method::determinant);
    const auto by_trudi = bernoulli_numbers(12, bernoulli_method::trudi);
    std::cout << "n, series, determinant, trudi\n";
    for (std::size_t n = 0; n <= 12; ++n)
        std::cout << n << ", " << to_string(by_series[n]) << ", " << to_string(by_det[n]) << ", "
                  << to_string(by_trudi[n]) << '\n';

    std::cout << "\np(n) via pentagonal recurrence vs determinant:\n";
    const auto p = partition_numbers_pentagonal(20);
    const auto p_det = partition_numbers_det(20);
    for (std::size_t n : {1, 5, 10, 20})
        std::cout << "p(" << n << ") = " << p[n].str() << " / " << p_det[n].str() << '\n';

    const auto rep = verify_identity("euler_classic", {{"n", 8}});
    std::cout << "\neuler_classic at n = 8: " << rep.to_json() << '\n';
}
