#include "lucasdisc/numth.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>

namespace lucasdisc::numth {

u64 factorization::value() const {
    u64 v = cofactor;
    for (auto [p, e] : pairs)
        for (u32 i = 0; i < e; ++i) v = checked_mul(v, p);
    return v;
}

bool factorization::has_prime(u64 p) const {
    for (auto [q, e] : pairs)
        if (q == p) return true;
    return false;
}

std::vector<u64> factorization::primes() const {
    std::vector<u64> ps;
    ps.reserve(pairs.size());
    for (auto [p, e] : pairs) ps.push_back(p);
    return ps;
}

namespace {

std::atomic<u64> g_trial_cap{0};

u64 env_trial_cap() {
    if (const char* s = std::getenv("LUCAS_DISC_TRIAL_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v >= 2) return v;
    }
    return 10000000; // 10^7
}

} // namespace

u64 default_trial_cap() {
    u64 cap = g_trial_cap.load(std::memory_order_relaxed);
    if (cap == 0) {
        cap = env_trial_cap();
        g_trial_cap.store(cap, std::memory_order_relaxed);
    }
    return cap;
}

void set_default_trial_cap(u64 cap) {
    g_trial_cap.store(cap, std::memory_order_relaxed);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is deterministic for all n < 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<u32> primes_up_to(u32 limit) {
    std::vector<u32> out;
    if (limit < 2) return out;
    std::vector<bool> comp(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (comp[i]) continue;
        out.push_back(static_cast<u32>(i));
        for (u64 j = i * i; j <= limit; j += i) comp[j] = true;
    }
    return out;
}

void for_primes_in(u64 lo, u64 hi, const std::function<void(u64)>& fn) {
    if (hi < 2 || hi < lo) return;
    lo = std::max<u64>(lo, 2);
    u64 root = 1;
    while ((root + 1) * (root + 1) <= hi) ++root;
    auto base = primes_up_to(static_cast<u32>(root));
    const u64 seg = 1 << 18;
    std::vector<bool> comp;
    for (u64 start = lo; start <= hi; start += seg) {
        u64 end = std::min(hi, start + seg - 1);
        comp.assign(end - start + 1, false);
        for (u64 p : base) {
            u64 first = std::max(p * p, ((start + p - 1) / p) * p);
            for (u64 j = first; j <= end; j += p) comp[j - start] = true;
        }
        for (u64 n = start; n <= end; ++n)
            if (!comp[n - start]) fn(n);
    }
}

namespace {

// Largest integer r with r^j <= n (exact).
u64 iroot(u64 n, u32 j) {
    if (j == 1) return n;
    u64 r = static_cast<u64>(std::pow(static_cast<double>(n), 1.0 / j));
    auto pow_le = [&](u64 x) {
        u128 v = 1;
        for (u32 i = 0; i < j; ++i) {
            v *= x;
            if (v > n) return false;
        }
        return true;
    };
    while (r > 1 && !pow_le(r)) --r;
    while (pow_le(r + 1)) ++r;
    return r;
}

} // namespace

factorization factorize(u64 n, u64 trial_cap) {
    if (n == 0) throw precondition_violated("factorize: n must be >= 1");
    factorization f;
    u64 rest = n;
    auto take = [&](u64 p) {
        u32 e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e) f.pairs.emplace_back(p, e);
    };
    take(2);
    take(3);
    take(5);
    static constexpr u32 wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    u64 p = 7;
    int w = 0;
    while (p <= trial_cap && p * p <= rest) {
        take(p);
        p += wheel[w];
        w = (w + 1) & 7;
    }
    if (rest > 1) {
        if (p * p > rest || is_prime(rest)) {
            f.pairs.emplace_back(rest, 1);
        } else {
            // perfect-power detection on the surviving cofactor
            bool split = false;
            for (u32 j = 2; j <= 6 && !split; ++j) {
                u64 r = iroot(rest, j);
                if (r > 1 && checked_pow(r, j) == rest && is_prime(r)) {
                    f.pairs.emplace_back(r, j);
                    split = true;
                }
            }
            if (!split) {
                f.complete = false;
                f.cofactor = rest;
            }
        }
    }
    std::sort(f.pairs.begin(), f.pairs.end());
    return f;
}

factorization factorize(u64 n) { return factorize(n, default_trial_cap()); }

u32 valuation(u64 n, u64 p) {
    u32 e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

int legendre(i64 a, u64 p) {
    if (p == 2 || !is_prime(p)) throw not_odd_prime("legendre: p must be an odd prime");
    u64 r = static_cast<u64>(((a % static_cast<i64>(p)) + static_cast<i64>(p)) % static_cast<i64>(p));
    if (r == 0) return 0;
    u64 s = powmod(r, (p - 1) / 2, p); // Euler's criterion
    return s == 1 ? 1 : -1;
}

int e_p(const seq::sequence_params& params, u64 p) {
    if (p == 2 || !is_prime(p)) throw not_odd_prime("e_p: p must be an odd prime");
    u64 v = mulmod(params.k % p, (params.k + 1) % p, p);
    if (v == 0) return 0;
    return legendre(static_cast<i64>(v), p);
}

namespace {

void smooth_rec(const std::vector<u64>& primes, size_t idx, u64 cur, u64 hi,
                std::vector<u64>& out) {
    if (idx == primes.size()) {
        out.push_back(cur);
        return;
    }
    u64 p = primes[idx];
    for (u64 v = cur;; ) {
        smooth_rec(primes, idx + 1, v, hi, out);
        if (v > hi / p) break;
        v *= p;
    }
}

} // namespace

std::vector<u64> smooth_numbers(const std::vector<u64>& primes, u64 lo, u64 hi,
                                parity_filter parity, bool forbid_nine) {
    if (lo > hi) throw precondition_violated("smooth_numbers: lo > hi");
    std::vector<u64> ps(primes);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    std::vector<u64> all;
    if (hi >= 1) smooth_rec(ps, 0, 1, hi, all);
    std::vector<u64> out;
    for (u64 v : all) {
        if (v < lo || v > hi) continue;
        if (parity == parity_filter::even && (v & 1)) continue;
        if (parity == parity_filter::odd && !(v & 1)) continue;
        if (forbid_nine && v % 9 == 0) continue;
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<u64> divisors(const factorization& f) {
    if (!f.complete) throw incomplete_factorization("divisors: factorization incomplete");
    std::vector<u64> out{1};
    for (auto [p, e] : f.pairs) {
        size_t sz = out.size();
        u64 pe = 1;
        for (u32 i = 1; i <= e; ++i) {
            pe = checked_mul(pe, p);
            for (size_t j = 0; j < sz; ++j) out.push_back(checked_mul(out[j], pe));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

u64 totient(u64 n) {
    auto f = factorize(n);
    if (!f.complete) throw incomplete_factorization("totient: factorization incomplete");
    u64 t = 1;
    for (auto [p, e] : f.pairs) {
        t = checked_mul(t, p - 1);
        for (u32 i = 1; i < e; ++i) t = checked_mul(t, p);
    }
    return t;
}

} // namespace lucasdisc::numth
