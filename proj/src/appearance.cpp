#include "lucasdisc/appearance.hpp"

#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <unordered_map>

namespace lucasdisc::appearance {

namespace {

struct key_hash {
    size_t operator()(const std::tuple<u64, u64, u32>& k) const {
        auto [a, b, c] = k;
        size_t h = std::hash<u64>{}(a);
        h ^= std::hash<u64>{}(b) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= std::hash<u64>{}(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

std::shared_mutex g_cache_mutex;
std::unordered_map<std::tuple<u64, u64, u32>, u64, key_hash> g_cache;

bool cache_get(u64 k, u64 p, u32 b, u64& out) {
    std::shared_lock lock(g_cache_mutex);
    auto it = g_cache.find({k, p, b});
    if (it == g_cache.end()) return false;
    out = it->second;
    return true;
}

void cache_put(u64 k, u64 p, u32 b, u64 v) {
    std::unique_lock lock(g_cache_mutex);
    g_cache.emplace(std::make_tuple(k, p, b), v);
}

} // namespace

void clear_cache() {
    std::unique_lock lock(g_cache_mutex);
    g_cache.clear();
}

u64 z_prime(const sequence_params& params, u64 p) {
    if (!numth::is_prime(p)) throw precondition_violated("z_prime: p must be prime");
    u64 cached;
    if (cache_get(params.k, p, 1, cached)) return cached;
    u64 result;
    if (params.k % p == 0 || (params.k + 1) % p == 0) {
        result = p; // includes p = 2, since 2 | k(k+1) always
    } else {
        int e = numth::e_p(params, p);
        u64 target = e == 1 ? p - 1 : p + 1;
        auto f = numth::factorize(target);
        if (!f.complete)
            throw incomplete_factorization("z_prime: cannot factor p - e_p(k)");
        result = 0;
        for (u64 d : numth::divisors(f)) {
            if (d >= 1 && seq::u_mod(params, d, p) == 0) {
                result = d;
                break;
            }
        }
        if (result == 0) throw error("z_prime: no divisor of p - e_p(k) hit; bug");
    }
    cache_put(params.k, p, 1, result);
    return result;
}

namespace {

// nu_p(U_{z(p)}) read from the residue mod p^{b+guard}; throws when the
// residue vanishes there, i.e. the valuation is >= b + guard.
u32 valuation_of_u_zp(const sequence_params& params, u64 p, u64 zp, u32 b, u32 guard) {
    mpz_class mod;
    mpz_ui_pow_ui(mod.get_mpz_t(), static_cast<unsigned long>(p), b + guard);
    mpz_class r = seq::u_pair_mod(params, zp, mod).first;
    if (r == 0) throw guard_exceeded("valuation >= b + guard");
    u32 nu = 0;
    while (mpz_divisible_ui_p(r.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(p));
        ++nu;
    }
    return nu;
}

} // namespace

u64 z_prime_power_guarded(const sequence_params& params, u64 p, u32 b, u32 guard) {
    if (b == 0) throw precondition_violated("z_prime_power: b must be >= 1");
    u64 zp = z_prime(params, p);
    if (b == 1) return zp;
    u32 nu = valuation_of_u_zp(params, p, zp, b, guard);
    u32 lift = b > nu ? b - nu : 0;
    return checked_mul(checked_pow(p, lift), zp);
}

u64 z_prime_power(const sequence_params& params, u64 p, u32 b) {
    u64 cached;
    if (cache_get(params.k, p, b, cached)) return cached;
    u64 result = 0;
    for (u32 guard = 2;; guard *= 2) {
        try {
            result = z_prime_power_guarded(params, p, b, guard);
            break;
        } catch (const guard_exceeded&) {
            // U_{z(p)} != 0, so a large enough guard always resolves
        }
    }
    cache_put(params.k, p, b, result);
    return result;
}

appearance_value z(const sequence_params& params, u64 m) {
    if (m == 0) throw precondition_violated("z: m must be >= 1");
    appearance_value out;
    out.m = m;
    if (m == 1) return out;
    auto f = numth::factorize(m);
    if (!f.complete) throw incomplete_factorization("z: cannot factor m");
    for (auto [p, e] : f.pairs) {
        u64 zc = z_prime_power(params, p, e);
        out.components.emplace_back(checked_pow(p, e), zc);
        out.z = lcm_checked(out.z, zc);
    }
    return out;
}

bool is_special(const sequence_params& params, u64 p) {
    if (!numth::is_prime(p)) throw precondition_violated("is_special: p must be prime");
    bool divides = params.k % p == 0 || (params.k + 1) % p == 0;
    bool special = false;
    if (divides) {
        mpz_class psq = mpz_class(static_cast<unsigned long>(p));
        psq *= static_cast<unsigned long>(p);
        special = seq::u_pair_mod(params, p, psq).first == 0;
    }
    if (p == 3) {
        u64 r = params.k % 9;
        bool by_congruence = (r == 2 || r == 6);
        if (special != by_congruence)
            throw error("is_special: definition and mod-9 criterion disagree; bug");
        return by_congruence;
    }
    return special;
}

} // namespace lucasdisc::appearance
