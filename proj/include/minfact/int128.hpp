#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace minfact {

// All counters in this library are exact.  128 bits is plenty for the sizes
// the closed formulas reach at practical n, but every multiplication is
// checked: silently wrapping around would defeat the whole point.
using u128 = unsigned __int128;

inline u128 checked_add(u128 a, u128 b) {
    u128 r = a + b;
    if (r < a) throw std::overflow_error("128-bit counter overflow in addition");
    return r;
}

inline u128 checked_mul(u128 a, u128 b) {
    if (a == 0 || b == 0) return 0;
    u128 r = a * b;
    if (r / a != b) throw std::overflow_error("128-bit counter overflow in multiplication");
    return r;
}

inline u128 checked_pow(u128 base, unsigned exp) {
    u128 r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

inline std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return s;
}

}  // namespace minfact
