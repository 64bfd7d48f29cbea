#pragma once

#include <vector>

#include "lucasdisc/numth.hpp"
#include "lucasdisc/seq.hpp"

namespace lucasdisc::charsets {

using seq::sequence_params;

/// Precomputed data for membership in the characterization sets:
///   A_k = { m odd  : p | m => p | k },      9 excluded when k = 6 (mod 9)
///   B_k = { m even : p | m => p | k(k+1) }, 9 excluded when k = 2, 6 (mod 9)
/// These are exactly the fixed points D_k(n) = n.
struct char_set_spec {
    u64 k;
    std::vector<u64> primes_of_k;          // prime divisors of k
    std::vector<u64> primes_of_k_times_k1; // prime divisors of k(k+1); contains 2
    u64 k_mod_9;
    u64 k_mod_25;

    bool forbid_nine_in_a() const { return k_mod_9 == 6; }
    bool forbid_nine_in_b() const { return k_mod_9 == 2 || k_mod_9 == 6; }
};

char_set_spec make_spec(const sequence_params& params);

bool in_a(const char_set_spec& spec, u64 m);
bool in_b(const char_set_spec& spec, u64 m);

/// A_{5,k} / B_{5,k}: m = a * 5^b with b >= 1, 5 not dividing a, and a in
/// the base set.
bool in_a5(const char_set_spec& spec, u64 m);
bool in_b5(const char_set_spec& spec, u64 m);

/// Least element of S_{k,n} = { m in A_k u B_k : m >= n }. Always between
/// n and the least power of two >= n.
u64 min_s(const char_set_spec& spec, u64 n);

/// Sorted members of (A_k u B_k) in [lo, hi].
std::vector<u64> enumerate_ab(const char_set_spec& spec, u64 lo, u64 hi);

/// Sorted members of A_{5,k} (odd case), B_{5,k} (even case), or their
/// union, in [lo, hi]. Used by the structured discriminator engine.
std::vector<u64> enumerate_b5(const char_set_spec& spec, u64 lo, u64 hi);
std::vector<u64> enumerate_a5b5(const char_set_spec& spec, u64 lo, u64 hi);

} // namespace lucasdisc::charsets
