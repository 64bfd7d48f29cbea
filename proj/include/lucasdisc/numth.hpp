#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lucasdisc/ints.hpp"
#include "lucasdisc/seq.hpp"

namespace lucasdisc::numth {

/// Prime factorization as ordered (prime, exponent) pairs. When trial
/// division up to the cap leaves a composite cofactor, `complete` is false
/// and the cofactor is exposed instead of being silently dropped.
struct factorization {
    std::vector<std::pair<u64, u32>> pairs; // primes strictly increasing
    bool complete = true;
    u64 cofactor = 1; // > 1 only when !complete

    u64 value() const; // product of p^e times cofactor
    bool has_prime(u64 p) const;
    std::vector<u64> primes() const;
};

/// Trial cap used when none is passed explicitly. Initialized from the
/// LUCAS_DISC_TRIAL_CAP environment variable, default 10^7.
u64 default_trial_cap();
void set_default_trial_cap(u64 cap);

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(u64 n);

/// All primes in [2, limit], simple sieve.
std::vector<u32> primes_up_to(u32 limit);

/// Primes in [lo, hi] by segmented sieve; fn is called in increasing order.
void for_primes_in(u64 lo, u64 hi, const std::function<void(u64)>& fn);

factorization factorize(u64 n, u64 trial_cap);
factorization factorize(u64 n);

/// Prime-power valuation of n at p.
u32 valuation(u64 n, u64 p);

/// Legendre symbol (a/p) for an odd prime p. Throws not_odd_prime otherwise.
int legendre(i64 a, u64 p);

/// e_p(k) = (k(k+1)/p): the quadratic character of the sequence discriminant.
int e_p(const seq::sequence_params& params, u64 p);

enum class parity_filter { any, even, odd };

/// Ordered integers in [lo, hi] whose prime factors all lie in `primes`,
/// optionally restricted by parity and by 9 | m exclusion. Generated by
/// product recursion, never by range scan, so hi ~ 10^14 is fine.
std::vector<u64> smooth_numbers(const std::vector<u64>& primes, u64 lo, u64 hi,
                                parity_filter parity = parity_filter::any,
                                bool forbid_nine = false);

/// All divisors of a completely factored integer, ascending.
std::vector<u64> divisors(const factorization& f);

/// Euler's totient from a complete factorization of n.
u64 totient(u64 n);

} // namespace lucasdisc::numth
