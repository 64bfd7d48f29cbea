#include "lucasdisc/disc.hpp"

#include <algorithm>

#include "lucasdisc/dioph.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lucasdisc::disc {

namespace {

// Incremental brute-force scanner for a contiguous block of n. Keeps the
// current modulus m and the set of residues of U_0..U_{cnt-1} mod m in an
// epoch-stamped table, so advancing m does not pay an O(m) clear.
class brute_scanner {
public:
    brute_scanner(const sequence_params& params, u64 max_m)
        : params_(params), stamp_(max_m + 1, 0) {}

    // D(n) for nondecreasing n across calls.
    u64 next(u64 n) {
        if (m_ < n) restart(n);
        for (;;) {
            bool collided = false;
            while (cnt_ < n) {
                if (stamp_[a_] == epoch_) {
                    collided = true;
                    break;
                }
                stamp_[a_] = epoch_;
                ++cnt_;
                step();
            }
            if (!collided) return m_;
            restart(m_ + 1);
        }
    }

private:
    void restart(u64 m) {
        m_ = m;
        ++epoch_;
        cnt_ = 0;
        t_ = params_.trace() % m_;
        a_ = 0;
        b_ = 1 % m_;
    }

    void step() {
        u64 next = submod(mulmod(t_, b_, m_), a_, m_);
        a_ = b_;
        b_ = next;
    }

    const sequence_params& params_;
    std::vector<u32> stamp_;
    u32 epoch_ = 0;
    u64 m_ = 0, t_ = 0, a_ = 0, b_ = 1, cnt_ = 0;
};

void brute_block(const sequence_params& params, u64 n_lo, u64 n_hi, u64* out) {
    brute_scanner scan(params, pow2_ceil(n_hi));
    for (u64 n = n_lo; n <= n_hi; ++n) out[n - n_lo] = scan.next(n);
}

} // namespace

disc_value disc_bruteforce(const sequence_params& params, u64 n, u64 cap) {
    if (n == 0) throw precondition_violated("disc: n must be >= 1");
    if (n > cap) throw cap_exceeded("disc_bruteforce: n above cost cap");
    u64 v;
    brute_block(params, n, n, &v);
    return {n, v, method::brute};
}

disc_value disc_closed_k1(u64 n) {
    if (n == 0) throw precondition_violated("disc: n must be >= 1");
    u64 s = pow2_ceil(n);
    // least 2^a 5^b with a, b >= 1 and 3 * 2^a 5^b >= 5n (exact rational 5n/3)
    u64 t = 0;
    for (u64 five = 5;; five *= 5) {
        u64 v = 2 * five;
        while (u128(3) * v < u128(5) * n) v *= 2;
        if (t == 0 || v < t) t = v;
        if (u128(3) * five >= u128(5) * n) break; // larger b only grows candidates
    }
    return {n, std::min(s, t), method::closed_k1};
}

disc_value disc_closed_k2(u64 n) {
    if (n == 0) throw precondition_violated("disc: n must be >= 1");
    u64 a = pow2_ceil(n);
    u64 b = 6;
    while (b < n) b *= 2;
    return {n, std::min(a, b), method::closed_k2};
}

bool structured_covered(u64 k) {
    if (k % 3 != 1) return true;
    u64 r = k % 25;
    return r != 2 && r != 6 && r != 7 && r != 12 && r != 17 && r != 18 && r != 22;
}

namespace {

enum class five_branch { none, b5, a5b5 };

five_branch branch_for(u64 k) {
    if (k % 3 != 1) return five_branch::none;
    switch (k % 5) {
        case 0:
        case 4:
            return five_branch::none;
        case 1:
            return five_branch::b5;
        case 3:
            return five_branch::a5b5;
        default:
            throw not_covered("structured engine: k = 2 (mod 5) with k = 1 (mod 3)");
    }
}

u64 ceil_5n_over_3(u64 n) { return (u128(5) * n + 2) / 3; }

// Structured evaluation against precomputed sorted candidate lists.
u64 structured_lookup(const std::vector<u64>& ab, const std::vector<u64>& five,
                      five_branch branch, u64 n) {
    auto it = std::lower_bound(ab.begin(), ab.end(), n);
    if (it == ab.end()) throw error("structured engine: candidate list too short; bug");
    u64 best = *it;
    if (branch != five_branch::none) {
        auto c = std::lower_bound(five.begin(), five.end(), ceil_5n_over_3(n));
        if (c != five.end() && *c < best) best = *c;
    }
    return best;
}

} // namespace

disc_value disc_structured(const sequence_params& params, u64 n) {
    if (n == 0) throw precondition_violated("disc: n must be >= 1");
    if (!structured_covered(params.k))
        throw not_covered("structured engine: k in an excluded class mod 25");
    auto spec = charsets::make_spec(params);
    five_branch branch = branch_for(params.k);
    u64 s = charsets::min_s(spec, n);
    if (branch != five_branch::none) {
        u64 lo = ceil_5n_over_3(n);
        if (lo <= s) {
            auto five = branch == five_branch::b5 ? charsets::enumerate_b5(spec, lo, s)
                                                  : charsets::enumerate_a5b5(spec, lo, s);
            if (!five.empty() && five.front() < s) s = five.front();
        }
    }
    return {n, s, method::structured};
}

disc_value disc_auto(const sequence_params& params, u64 n) {
    if (params.k == 1) return disc_closed_k1(n);
    if (params.k == 2) return disc_closed_k2(n);
    if (structured_covered(params.k)) return disc_structured(params, n);
    return disc_bruteforce(params, n);
}

std::vector<u64> brute_table(const sequence_params& params, u64 n_max, u64 cap) {
    if (n_max == 0) return {};
    if (n_max > cap) throw cap_exceeded("brute_table: n_max above cost cap");
    std::vector<u64> out(n_max);
    const u64 chunk = std::max<u64>(512, n_max / 64);
    const u64 nchunks = (n_max + chunk - 1) / chunk;
#pragma omp parallel for schedule(dynamic)
    for (u64 c = 0; c < nchunks; ++c) {
        u64 lo = c * chunk + 1;
        u64 hi = std::min(n_max, lo + chunk - 1);
        brute_block(params, lo, hi, out.data() + (lo - 1));
    }
    return out;
}

std::vector<u64> brute_table_serial(const sequence_params& params, u64 n_max, u64 cap) {
    std::vector<u64> out;
    out.reserve(n_max);
    for (u64 n = 1; n <= n_max; ++n)
        out.push_back(disc_bruteforce(params, n, cap).value);
    return out;
}

std::vector<u64> structured_table(const sequence_params& params, u64 n_max) {
    if (n_max == 0) return {};
    if (!structured_covered(params.k))
        throw not_covered("structured engine: k in an excluded class mod 25");
    auto spec = charsets::make_spec(params);
    five_branch branch = branch_for(params.k);
    u64 bound = pow2_ceil(n_max); // no value exceeds the power-of-two ceiling
    auto ab = charsets::enumerate_ab(spec, 1, bound);
    std::vector<u64> five;
    if (branch == five_branch::b5) five = charsets::enumerate_b5(spec, 1, bound);
    if (branch == five_branch::a5b5) five = charsets::enumerate_a5b5(spec, 1, bound);
    std::vector<u64> out(n_max);
#pragma omp parallel for schedule(static)
    for (u64 n = 1; n <= n_max; ++n)
        out[n - 1] = structured_lookup(ab, five, branch, n);
    return out;
}

std::vector<u64> structured_table_serial(const sequence_params& params, u64 n_max) {
    std::vector<u64> out;
    out.reserve(n_max);
    for (u64 n = 1; n <= n_max; ++n)
        out.push_back(disc_structured(params, n).value);
    return out;
}

fk_certificate exceptional_set(const sequence_params& params, std::optional<u64> n_max) {
    if (params.k < 2) throw precondition_violated("exceptional_set: k must be >= 2");
    auto spec = charsets::make_spec(params);

    // cheapest certifying threshold: min n_p(5/3) over odd p | k(k+1), p <= 10^4
    std::optional<u64> threshold;
    std::optional<u64> certifying_prime;
    for (u64 p : spec.primes_of_k_times_k1) {
        if (p == 2 || p > 10000) continue;
        u64 t = dioph::np(p, dioph::ratio_q(5, 3), true).value;
        if (!threshold || t < *threshold) {
            threshold = t;
            certifying_prime = p;
        }
    }

    bool covered = structured_covered(params.k);
    u64 scan_to;
    if (n_max) {
        scan_to = *n_max;
    } else if (covered && threshold) {
        scan_to = *threshold;
    } else {
        throw precondition_violated(
            "exceptional_set: needs structured coverage with a certifying prime, or n_max");
    }

    std::vector<u64> table;
    if (covered) {
        table = structured_table(params, scan_to);
        // the brute engine re-derives the prefix independently
        u64 check_to = std::min<u64>(scan_to, 2048);
        auto brute = brute_table(params, check_to);
        for (u64 n = 1; n <= check_to; ++n)
            if (brute[n - 1] != table[n - 1])
                throw error("exceptional_set: brute/structured disagreement; bug");
    } else {
        table = brute_table(params, scan_to);
    }

    fk_certificate cert;
    cert.k = params.k;
    cert.scanned_up_to = scan_to;
    cert.certifying_prime = certifying_prime;
    cert.threshold = threshold;
    cert.certified = covered && threshold && scan_to >= *threshold;
    for (u64 v : table)
        if (!charsets::in_a(spec, v) && !charsets::in_b(spec, v)) cert.values.push_back(v);
    std::sort(cert.values.begin(), cert.values.end());
    cert.values.erase(std::unique(cert.values.begin(), cert.values.end()),
                      cert.values.end());
    return cert;
}

std::vector<u64> verify_fixed_points(const sequence_params& params, u64 n_max) {
    if (params.k <= 2)
        throw precondition_violated("verify_fixed_points: requires k > 2");
    auto spec = charsets::make_spec(params);
    auto table = brute_table(params, n_max);
    std::vector<u64> violations;
    for (u64 n = 1; n <= n_max; ++n) {
        bool fixed = table[n - 1] == n;
        bool member = charsets::in_a(spec, n) || charsets::in_b(spec, n);
        if (fixed != member) violations.push_back(n);
    }
    return violations;
}

} // namespace lucasdisc::disc
