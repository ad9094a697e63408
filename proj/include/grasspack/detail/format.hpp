#pragma once

#include <cstdio>
#include <string>

namespace grasspack::detail {

/// Short numeric rendering for error messages.
inline std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return std::string(buf);
}

/// Full-precision rendering: 17 significant digits round-trip a double
/// exactly, so serialize-parse-serialize is a fixed point. Negative zero is
/// flattened to "0"; "-0" would come back from a JSON parse as integer zero
/// with the sign lost, breaking the fixed point.
inline std::string fmt17(double x) {
    if (x == 0.0) return "0";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
}

} // namespace grasspack::detail
