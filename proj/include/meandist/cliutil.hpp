#pragma once

#include <string>

namespace meandist::cliutil {

// Value formatted to `digits` significant digits; glibc printf rounds
// binary-to-decimal half-to-even, which is the contract here.
std::string format_significant(double value, int digits);

// Angle expressions: "0.75", "pi", "pi/5", "2pi/5", "-pi/3", "atan(1.25)".
double parse_angle(const std::string& expr);

const char* provenance_name(int provenance_enum_value);

// Canonical JSON for a computed moment; re-parsing and re-rendering the
// output is byte-identical.
std::string render_moment_json(const std::string& subject, int p, double value,
                               const std::string& provenance, double error);

}  // namespace meandist::cliutil
