// Raise one series to a few powers by every algorithm and show the agreement.
#include <iostream>

#include "powser/powser.hpp"

using namespace powser;

int main() {
    const series f({rational(1), rational(1), make_rational(1, 2), make_rational(1, 6)});
    std::cout << "f = " << serialize_series_json(f) << "\n\n";
    for (long long k : {3LL, -2LL}) {
        std::cout << "f^" << k << ":\n";
        for (power_algorithm alg :
             {power_algorithm::miller, power_algorithm::closed_form, power_algorithm::double_sum,
              power_algorithm::hat, power_algorithm::nested, power_algorithm::derivative}) {
            if (!power_algorithm_applicable(alg, f, k)) continue;
            op_counter counter;
            const series result = pow(f, k, alg, &counter);
            std::cout << "  " << to_string(alg) << " (" << counter.terms
                      << " steps): " << serialize_series_json(result) << '\n';
        }
        std::cout << '\n';
    }
}
