#pragma once

#include <charconv>
#include <string>

namespace yager {

// Shortest representation that parses back to the same double.
inline std::string format_double(double value) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

}  // namespace yager
