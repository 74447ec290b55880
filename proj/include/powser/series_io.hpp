#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "powser/errors.hpp"
#include "powser/rational.hpp"
#include "powser/series.hpp"

namespace powser {

/// Series literal: {"order": N, "coeffs": ["1", "-1/2", ...]} with exactly
/// order+1 coefficient strings, each "p" or "p/q".
inline series parse_series_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("series literal is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw parse_error("series literal needs an object with 'order' and 'coeffs'");
    if (!j["order"].is_number_unsigned())
        throw parse_error("series 'order' must be a nonnegative integer");
    const std::size_t order = j["order"].get<std::size_t>();
    if (!j["coeffs"].is_array())
        throw parse_error("series 'coeffs' must be an array of rational strings");
    const auto& arr = j["coeffs"];
    if (arr.size() != order + 1)
        throw parse_error("series 'coeffs' must hold exactly order+1 entries (got " +
                          std::to_string(arr.size()) + " for order " + std::to_string(order) +
                          ")");
    std::vector<rational> coeffs;
    coeffs.reserve(order + 1);
    for (const auto& item : arr) {
        if (!item.is_string())
            throw parse_error("series coefficients must be strings like \"-1/2\"");
        coeffs.push_back(parse_rational(item.get<std::string>()));
    }
    return series(std::move(coeffs));
}

inline std::string serialize_series_json(const series& f) {
    std::string out = "{\"order\":" + std::to_string(f.order()) + ",\"coeffs\":[";
    for (std::size_t i = 0; i <= f.order(); ++i) {
        if (i) out += ',';
        out += '"' + to_string(f[i]) + '"';
    }
    out += "]}";
    return out;
}

/// Comma-separated rational list, e.g. a CLI band "1,3,5" or inline coeffs.
inline std::vector<rational> parse_rational_list(std::string_view text) {
    std::vector<rational> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string_view piece =
            comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
        out.push_back(parse_rational(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace powser
