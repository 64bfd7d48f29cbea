#pragma once

#include <optional>
#include <vector>

#include "lucasdisc/charsets.hpp"
#include "lucasdisc/seq.hpp"

namespace lucasdisc::disc {

using seq::sequence_params;

enum class method { brute, closed_k1, closed_k2, structured };

/// D_k(n): least m such that U_0, ..., U_{n-1} are pairwise distinct mod m.
struct disc_value {
    u64 n;
    u64 value;
    method how;
};

inline constexpr u64 default_brute_cap = u64(1) << 21;

/// Direct search, ascending from n (m < n is impossible by pigeonhole) and
/// early-terminated at the least power of two >= n, which always works.
disc_value disc_bruteforce(const sequence_params& params, u64 n,
                           u64 cap = default_brute_cap);

/// D_1(n) = min{s_n, t_n}: s_n the least power of two >= n, t_n the least
/// 2^a 5^b >= 5n/3 with a, b >= 1.
disc_value disc_closed_k1(u64 n);

/// D_2(n) = min of the least 2^e >= n and the least 3*2^f >= n, f >= 1.
disc_value disc_closed_k2(u64 n);

/// The structured engine covers every k except k = 1 (mod 3) with
/// k = 2, 6, 7, 12, 17, 18, 22 (mod 25).
bool structured_covered(u64 k);

/// Characterization-driven evaluation: min S_{k,n}, possibly raced against
/// 5-adic candidates m >= 5n/3 from B_{5,k} (k = 1 mod 5) or
/// A_{5,k} u B_{5,k} (k = 3 mod 5). Throws not_covered outside coverage.
disc_value disc_structured(const sequence_params& params, u64 n);

/// Dispatch: closed form for k in {1, 2}, structured when covered, brute
/// force otherwise.
disc_value disc_auto(const sequence_params& params, u64 n);

/// D_k(1..n_max) by the brute engine, incremental per chunk; chunks run in
/// parallel and the result is independent of the thread count.
std::vector<u64> brute_table(const sequence_params& params, u64 n_max,
                             u64 cap = default_brute_cap);

/// D_k(1..n_max) by the structured engine with precomputed candidate lists.
std::vector<u64> structured_table(const sequence_params& params, u64 n_max);

/// Serial references for the two table kernels: one standalone engine call
/// per n, no shared state. Used to pin down the parallel kernels.
std::vector<u64> brute_table_serial(const sequence_params& params, u64 n_max,
                                    u64 cap = default_brute_cap);
std::vector<u64> structured_table_serial(const sequence_params& params, u64 n_max);

/// Exceptional set F_k = {D_k(n)} \ (A_k u B_k) with a completeness
/// certificate: scanning up to the least n_p(5/3) over odd primes
/// p | k(k+1) provably exhausts F_k for covered k.
struct fk_certificate {
    u64 k;
    std::vector<u64> values; // sorted, deduplicated
    u64 scanned_up_to = 0;
    bool certified = false;
    std::optional<u64> certifying_prime;
    std::optional<u64> threshold; // n_p(5/3) for the certifying prime
};

fk_certificate exceptional_set(const sequence_params& params,
                               std::optional<u64> n_max = std::nullopt);

/// Check D_k(n) = n <=> n in A_k u B_k for all n <= n_max; returns the
/// violating n (expected empty).
std::vector<u64> verify_fixed_points(const sequence_params& params, u64 n_max);

} // namespace lucasdisc::disc
