#pragma once

#include <utility>
#include <vector>

#include "lucasdisc/numth.hpp"
#include "lucasdisc/seq.hpp"

namespace lucasdisc::appearance {

using seq::sequence_params;

/// z_k(m) together with its per-prime-power derivation trail.
struct appearance_value {
    u64 m = 1;
    u64 z = 1;
    std::vector<std::pair<u64, u64>> components; // (prime power, z of it)
};

/// z_k(p) for prime p: p itself when p | k(k+1), otherwise the least
/// divisor d of p - e_p(k) with p | U_d(k).
u64 z_prime(const sequence_params& params, u64 p);

/// z_k(p^b) = p^{max(b - nu, 0)} z_k(p) with nu = nu_p(U_{z(p)}), the
/// valuation read off U_{z(p)} mod p^{b+guard}. Throws guard_exceeded when
/// the valuation is >= b + guard.
u64 z_prime_power_guarded(const sequence_params& params, u64 p, u32 b, u32 guard);

/// Same, retrying with a doubling guard (starts at 2) until it resolves.
u64 z_prime_power(const sequence_params& params, u64 p, u32 b);

/// z_k(m) via the lcm over the prime-power components of m.
appearance_value z(const sequence_params& params, u64 m);

/// Special prime: p | k(k+1) and p^2 | U_p(k). For p = 3 the congruence
/// criterion (k = 2, 6 mod 9) is evaluated too and must agree.
bool is_special(const sequence_params& params, u64 p);

/// Drop all memoized z values (the cache is keyed by (k, p, b) and is safe
/// for concurrent readers with atomic inserts).
void clear_cache();

} // namespace lucasdisc::appearance
