#pragma once

#include <string>
#include <utility>
#include <vector>

namespace powser {

/// Outcome of checking one identity at one parameter point. lhs/rhs carry
/// the exact values rendered as canonical rational strings (or bracketed
/// lists when an identity has several displays). pass is exact equality.
/// flag is empty for a clean check; otherwise it documents a discrepancy
/// between a verbatim source display and the form its own derivation forces
/// (the verified form decides pass, the flag keeps the verbatim evidence).
struct identity_report {
    std::string identity;
    std::vector<std::pair<std::string, long long>> params;
    std::string lhs;
    std::string rhs;
    bool pass = false;
    std::string flag;

    std::string to_json() const {
        auto escape = [](const std::string& s) {
            std::string out;
            out.reserve(s.size());
            for (char ch : s) {
                if (ch == '"' || ch == '\\') out += '\\';
                out += ch;
            }
            return out;
        };
        std::string j = "{\"identity\":\"" + escape(identity) + "\",\"params\":{";
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (i) j += ',';
            j += '"' + escape(params[i].first) + "\":" + std::to_string(params[i].second);
        }
        j += "},\"lhs\":\"" + escape(lhs) + "\",\"rhs\":\"" + escape(rhs) + "\",\"pass\":";
        j += pass ? "true" : "false";
        if (!flag.empty()) j += ",\"flag\":\"" + escape(flag) + '"';
        j += '}';
        return j;
    }
};

}  // namespace powser
