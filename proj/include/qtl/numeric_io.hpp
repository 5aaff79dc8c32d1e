#pragma once
// Shortest round-trip decimal formatting for CSV output.

#include <charconv>
#include <string>

namespace qtl::io {

inline std::string shortest(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

}  // namespace qtl::io
