#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace lahnet {

// Every quantity in this library is an exact integer. Counts such as
// L_{20,1} = 20! overflow 64 bits, so all public values are arbitrary
// precision.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt parse_decimal(const std::string& text) { return BigInt(text); }

inline int sign_of(const BigInt& v) {
    if (v < 0) return -1;
    if (v > 0) return 1;
    return 0;
}

}  // namespace lahnet
