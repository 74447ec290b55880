#pragma once

#include <stdexcept>
#include <string>

namespace powser {

/// Two series (or a series and an expected order) disagree on truncation order.
struct order_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A reciprocal or negative power was requested of something with no unit part.
struct non_invertible_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Parameters violate the stated hypotheses of an operation or identity.
struct hypothesis_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed textual input (rational literal, series file, band string).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace powser
