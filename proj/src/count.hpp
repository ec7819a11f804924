#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace misx {

// Exact set counts and bound values. These reach 3^(n/3), so they are never
// held in machine words or compared through floating point.
using Count = boost::multiprecision::cpp_int;

inline Count pow_count(uint32_t base, uint32_t exponent) {
    Count result = 1;
    Count b = base;
    while (exponent) {
        if (exponent & 1) result *= b;
        b *= b;
        exponent >>= 1;
    }
    return result;
}

inline std::string count_to_string(const Count& c) { return c.str(); }

}  // namespace misx
