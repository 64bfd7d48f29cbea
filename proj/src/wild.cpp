#include "lucasdisc/wild.hpp"

#include <algorithm>
#include <cmath>

#include "lucasdisc/appearance.hpp"
#include "lucasdisc/numth.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lucasdisc::wild {

bool in_mp(u64 p, u64 e) {
    if (p < 3 || p % 2 == 0 || !numth::is_prime(p))
        throw not_odd_prime("in_mp: p must be an odd prime");
    if (e == 0) throw precondition_violated("in_mp: e must be >= 1");
    mpz_class pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(e));
    // the only candidate is a with 2^a < p^e < 2^{a+1}
    u64 a = mpz_sizeinbase(pe.get_mpz_t(), 2) - 1;
    mpz_class two_a1;
    mpz_ui_pow_ui(two_a1.get_mpz_t(), 2, static_cast<unsigned long>(a + 1));
    // a is valid iff 2^{a+1} p >= p^e (p+1); e in M_p iff no valid a
    return !(two_a1 * p >= pe * (p + 1));
}

std::vector<u64> enumerate_mp(u64 p, u64 e_max) {
    std::vector<u64> out;
    for (u64 e = 1; e <= e_max; ++e)
        if (in_mp(p, e)) out.push_back(e);
    return out;
}

namespace {

std::vector<std::pair<u64, u64>> scan_wild(const mpz_class& pe_limit, u64 p_min,
                                           u64 p_max, std::optional<int> residue_mod4,
                                           bool parallel) {
    if (pe_limit < 3) return {};
    std::vector<u64> primes;
    numth::for_primes_in(std::max<u64>(p_min, 3), p_max,
                         [&](u64 p) { primes.push_back(p); });
    std::vector<std::vector<std::pair<u64, u64>>> per(primes.size());
#pragma omp parallel for schedule(dynamic, 256) if (parallel)
    for (size_t i = 0; i < primes.size(); ++i) {
        u64 p = primes[i];
        if (residue_mod4 && static_cast<int>(p % 4) != *residue_mod4) continue;
        mpz_class pe = p;
        for (u64 e = 1; pe <= pe_limit; ++e, pe *= p) {
            if (e >= 2 && in_mp(p, e)) per[i].emplace_back(p, e);
        }
    }
    std::vector<std::pair<u64, u64>> out;
    for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
    return out;
}

} // namespace

std::vector<std::pair<u64, u64>> potentially_wild(const mpz_class& pe_limit, u64 p_min,
                                                  u64 p_max,
                                                  std::optional<int> residue_mod4) {
    return scan_wild(pe_limit, p_min, p_max, residue_mod4, true);
}

std::vector<std::pair<u64, u64>> potentially_wild_serial(const mpz_class& pe_limit,
                                                         u64 p_min, u64 p_max,
                                                         std::optional<int> residue_mod4) {
    return scan_wild(pe_limit, p_min, p_max, residue_mod4, false);
}

wild_classification wild_screen(const sequence_params& params, u64 m) {
    auto f = numth::factorize(m);
    if (!f.complete) throw incomplete_factorization("wild_screen: cannot factor m");
    wild_classification out;
    out.m = m;
    std::vector<std::pair<u64, u32>> outside;
    for (auto [p, e] : f.pairs)
        if (params.k % p != 0 && (params.k + 1) % p != 0) outside.emplace_back(p, e);
    if (outside.empty()) {
        out.verdict = wild_verdict::no_outside_prime;
        return out;
    }
    if (outside.size() > 1) {
        out.verdict = wild_verdict::multiple_outside_primes;
        return out;
    }
    auto [p, e] = outside.front();
    out.verdict = wild_verdict::single_outside_power;
    out.factor_outside = {p, e};
    out.exponent_at_least_2 = e >= 2 ? check_state::passed : check_state::failed;
    out.exponent_in_mp = in_mp(p, e) ? check_state::passed : check_state::failed;
    if (params.k % 3 == 1 && appearance::z_prime_power(params, 5, 2) == 15) {
        out.p_equals_5 = p == 5 ? check_state::passed : check_state::failed;
    } else {
        out.p_equals_5 = check_state::not_applicable;
    }
    return out;
}

double fk_bound_log2log2(u64 k) {
    if (k <= 3) throw precondition_violated("fk_bound_log2log2: requires k > 3");
    double kd = static_cast<double>(k);
    return 1e10 * std::log(std::log(kd)) * std::log2(kd);
}

} // namespace lucasdisc::wild
