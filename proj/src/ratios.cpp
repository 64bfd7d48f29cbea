#include "lucasdisc/ratios.hpp"

#include <algorithm>

#include "lucasdisc/numth.hpp"

namespace lucasdisc::ratios {

namespace {

// Witness conditions: the first prime q satisfying one makes the ratio
// exactly (q+1)/(2q); every smaller prime contributes < 1/2.
bool rho_witness(const sequence_params& params, u64 q) {
    return appearance::z_prime(params, q) == (q + 1) / 2;
}

bool sigma_witness(const sequence_params& params, u64 q) {
    return appearance::z_prime_power(params, q, 2) == q * (q + 1) / 2;
}

bool tau_witness(const sequence_params& params, u64 q) {
    u64 zq2 = appearance::z_prime_power(params, q, 2);
    return lcm_checked(2, zq2) == q * (q + 1);
}

template <typename Witness>
ratio_result scan(ratio_kind kind, const sequence_params& params, u64 cap,
                  Witness witness) {
    if (cap < 3) throw precondition_violated("ratio scan: prime_cap must be >= 3");
    ratio_result out{kind, std::nullopt, cap};
    for (u64 q = 3; q <= cap; q += 2) {
        if (!numth::is_prime(q)) continue;
        if (params.k % q == 0 || (params.k + 1) % q == 0) continue; // z(q) = q
        if (witness(params, q)) {
            out.witness = q;
            break;
        }
    }
    return out;
}

} // namespace

ratio_result rho(const sequence_params& params, u64 prime_cap) {
    return scan(ratio_kind::rho, params, prime_cap, rho_witness);
}

ratio_result sigma(const sequence_params& params, u64 prime_cap) {
    return scan(ratio_kind::sigma, params, prime_cap, sigma_witness);
}

ratio_result tau(const sequence_params& params, u64 prime_cap) {
    return scan(ratio_kind::tau, params, prime_cap, tau_witness);
}

std::optional<std::vector<u64>> find_triple_k(u64 p1, u64 p2, u64 p3, u64 k_max) {
    for (u64 p : {p1, p2, p3})
        if (p < 3 || !numth::is_prime(p)) return std::nullopt;
    if (!(p1 <= p2 && p2 <= p3)) return std::nullopt;
    if (p3 % 4 != 1) return std::nullopt;
    if (p2 % 4 == 1 && p3 != p2) return std::nullopt;

    std::vector<u64> hits;
    u64 cap = p3 + 1; // witnesses beyond p3 cannot match anyway
    for (u64 k = 1; k <= k_max; ++k) {
        sequence_params params(k);
        auto r = rho(params, cap);
        if (!(r.witness && *r.witness == p1)) continue;
        auto s = sigma(params, cap);
        if (!(s.witness && *s.witness == p2)) continue;
        auto t = tau(params, cap);
        if (!(t.witness && *t.witness == p3)) continue;
        hits.push_back(k);
    }
    return hits;
}

namespace {

class_count enumerate_classes(u64 p, class_case which, bool parallel) {
    if (p < 3 || !numth::is_prime(p))
        throw not_odd_prime("count_classes: p must be an odd prime >= 3");
    bool mod_p = which == class_case::a || which == class_case::d;
    u64 modulus = mod_p ? p : p * p;
    u64 half = (p + 1) / 2;

    std::vector<char> hit(modulus, 0);
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
    for (u64 r = 1; r < modulus; ++r) {
        if (r % p == 0 || r % p == p - 1) continue; // k(k+1) divisible by p
        sequence_params params(r);
        bool match = false;
        switch (which) {
            case class_case::a:
                match = appearance::z_prime(params, p) == half;
                break;
            case class_case::b:
                match = appearance::z_prime_power(params, p, 2) == half;
                break;
            case class_case::c:
                match = appearance::z_prime_power(params, p, 2) == p * half;
                break;
            case class_case::d:
                match = appearance::z_prime(params, p) < half;
                break;
        }
        if (match) hit[r] = 1;
    }

    class_count out;
    for (u64 r = 1; r < modulus; ++r)
        if (hit[r]) out.residues.push_back(r);
    out.count = out.residues.size();

    u64 f = numth::totient(half);
    u64 expected = 0;
    switch (which) {
        case class_case::a: expected = f; break;
        case class_case::b: expected = f; break;
        case class_case::c: expected = (p - 1) * f; break;
        case class_case::d: expected = p - f - 2; break;
    }
    if (out.count != expected)
        throw count_mismatch("count_classes: enumeration disagrees with formula");
    return out;
}

} // namespace

class_count count_classes(u64 p, class_case which) {
    return enumerate_classes(p, which, true);
}

class_count count_classes_serial(u64 p, class_case which) {
    return enumerate_classes(p, which, false);
}

} // namespace lucasdisc::ratios
