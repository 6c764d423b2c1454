#pragma once

#include <charconv>
#include <cstdio>
#include <string>

namespace qmcstab {

// Shortest round-trip decimal representation. Keeps CSV output byte-stable
// across runs and independent of stream/locale state.
inline std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace qmcstab
