#pragma once

#include <charconv>
#include <cstdio>
#include <string>

namespace treekit::detail {

// Shortest representation that round-trips the double exactly.
inline std::string format_double(double x) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, end);
}

inline std::string format_fixed(double x, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, x);
    return buf;
}

} // namespace treekit::detail
