#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "lucasdisc/seq.hpp"

namespace lucasdisc::wild {

using seq::sequence_params;

/// e in M_p iff no power of two lies in [p^e (p+1)/(2p), p^e). Decided in
/// exact integer arithmetic: the only candidate is the largest 2^a < p^e.
bool in_mp(u64 p, u64 e);

/// All e <= e_max with e in M_p, ascending.
std::vector<u64> enumerate_mp(u64 p, u64 e_max);

/// Potentially wild prime powers: (p, e) with p prime in [p_min, p_max]
/// (optionally p = residue_mod4 mod 4), p^e <= pe_limit and e in M_p.
/// The prime scan is segmented and runs in parallel.
std::vector<std::pair<u64, u64>> potentially_wild(const mpz_class& pe_limit,
                                                  u64 p_min, u64 p_max,
                                                  std::optional<int> residue_mod4);

/// Serial reference for the scan kernel.
std::vector<std::pair<u64, u64>> potentially_wild_serial(const mpz_class& pe_limit,
                                                         u64 p_min, u64 p_max,
                                                         std::optional<int> residue_mod4);

enum class wild_verdict { no_outside_prime, single_outside_power, multiple_outside_primes };
enum class check_state { passed, failed, not_applicable };

/// Classification of a candidate discriminator value by its prime content
/// outside k(k+1). With a single outside power p^e, the screens are:
/// e >= 2 (primes are never wild), e in M_p, and p = 5 when k = 1 (mod 3)
/// and z_k(25) = 15 (not applicable otherwise).
struct wild_classification {
    u64 m;
    wild_verdict verdict;
    std::optional<std::pair<u64, u64>> factor_outside; // (p, e)
    check_state exponent_at_least_2 = check_state::not_applicable;
    check_state exponent_in_mp = check_state::not_applicable;
    check_state p_equals_5 = check_state::not_applicable;

    bool all_checks_pass() const {
        return exponent_at_least_2 != check_state::failed &&
               exponent_in_mp != check_state::failed &&
               p_equals_5 != check_state::failed;
    }
};

wild_classification wild_screen(const sequence_params& params, u64 m);

/// log2(log2(bound)) for the closing bound max F_k <= 2^(k^(10^10 log log k)):
/// 10^10 * ln(ln k) * log2(k). Statement-level only; requires k > 3.
double fk_bound_log2log2(u64 k);

} // namespace lucasdisc::wild
