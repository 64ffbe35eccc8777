#pragma once

#include <cstdint>
#include <string>

namespace quasimix {

// Exact counters. Tuple counts such as the k-fold coincidence numbers grow
// past 2^63 already at moderate group sizes, so every counter in this
// library is carried in 128 bits.
using int128 = __int128;

std::string to_string(int128 v);

inline long double to_long_double(int128 v) { return static_cast<long double>(v); }

inline int128 sq(int128 v) { return v * v; }

// v^e for small exponents; callers guarantee the result fits.
inline int128 ipow(int128 v, int e) {
    int128 r = 1;
    for (int i = 0; i < e; ++i) r *= v;
    return r;
}

} // namespace quasimix
