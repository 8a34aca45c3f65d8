#include "meandist/cliutil.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"
#include "meandist/auxint.hpp"
#include "meandist/error.hpp"

namespace meandist::cliutil {

const char* provenance_name(int v) {
    switch (static_cast<auxint::Provenance>(v)) {
        case auxint::Provenance::CLOSED_FORM: return "closed-form";
        case auxint::Provenance::QUADRATURE: return "quadrature";
        case auxint::Provenance::MONTE_CARLO: return "monte-carlo";
        case auxint::Provenance::MIXED: return "mixed";
    }
    return "unknown";
}

std::string render_moment_json(const std::string& subject, int p, double value,
                               const std::string& provenance, double error) {
    nlohmann::json j;
    j["subject"] = subject;
    j["p"] = p;
    j["value"] = value;
    j["provenance"] = provenance;
    j["error"] = error;
    return j.dump();
}

std::string format_significant(double value, int digits) {
    if (digits < 1) digits = 1;
    if (digits > 17) digits = 17;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    return buf;
}

double parse_angle(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw Error(ErrorCode::BAD_INPUT, "empty angle expression");

    double sign = 1;
    if (s[0] == '-') {
        sign = -1;
        s.erase(0, 1);
    } else if (s[0] == '+') {
        s.erase(0, 1);
    }

    if (s.rfind("atan(", 0) == 0 && s.back() == ')') {
        std::string inner = s.substr(5, s.size() - 6);
        size_t used = 0;
        double v = std::stod(inner, &used);
        if (used != inner.size()) throw Error(ErrorCode::BAD_INPUT, "bad atan argument");
        return sign * std::atan(v);
    }

    auto pos = s.find("pi");
    if (pos != std::string::npos) {
        double mult = 1;
        if (pos > 0) {
            size_t used = 0;
            mult = std::stod(s.substr(0, pos), &used);
            if (used != pos) throw Error(ErrorCode::BAD_INPUT, "bad pi multiplier");
        }
        double div = 1;
        std::string rest = s.substr(pos + 2);
        if (!rest.empty()) {
            if (rest[0] != '/') throw Error(ErrorCode::BAD_INPUT, "expected / after pi");
            size_t used = 0;
            div = std::stod(rest.substr(1), &used);
            if (used != rest.size() - 1 || div == 0)
                throw Error(ErrorCode::BAD_INPUT, "bad pi divisor");
        }
        return sign * mult * M_PI / div;
    }

    size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw Error(ErrorCode::BAD_INPUT, "bad angle literal");
    return sign * v;
}

}  // namespace meandist::cliutil
