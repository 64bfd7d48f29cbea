#pragma once

#include <cstdint>
#include <limits>
#include <numeric>

#include "lucasdisc/errors.hpp"

namespace lucasdisc {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((u128(a) * b) % m);
}

inline u64 addmod(u64 a, u64 b, u64 m) {
    u64 s = a + b;
    if (s < a || s >= m) s -= m;
    return s;
}

inline u64 submod(u64 a, u64 b, u64 m) {
    return a >= b ? a - b : a + (m - b);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

/// Smallest power of two >= n.
inline u64 pow2_ceil(u64 n) {
    u64 b = 1;
    while (b < n) b <<= 1;
    return b;
}

/// p^e, throwing cap_exceeded on u64 overflow.
inline u64 checked_pow(u64 p, u64 e) {
    u64 r = 1;
    for (u64 i = 0; i < e; ++i) {
        if (r > std::numeric_limits<u64>::max() / p)
            throw cap_exceeded("integer power overflows 64 bits");
        r *= p;
    }
    return r;
}

inline u64 checked_mul(u64 a, u64 b) {
    if (a != 0 && b > std::numeric_limits<u64>::max() / a)
        throw cap_exceeded("integer product overflows 64 bits");
    return a * b;
}

inline u64 lcm_checked(u64 a, u64 b) {
    u64 g = std::gcd(a, b);
    return checked_mul(a / g, b);
}

} // namespace lucasdisc
