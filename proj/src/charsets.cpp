#include "lucasdisc/charsets.hpp"

#include <algorithm>

namespace lucasdisc::charsets {

char_set_spec make_spec(const sequence_params& params) {
    auto fk = numth::factorize(params.k);
    auto fk1 = numth::factorize(params.k + 1);
    if (!fk.complete || !fk1.complete)
        throw incomplete_factorization("make_spec: cannot factor k or k+1");
    char_set_spec spec;
    spec.k = params.k;
    spec.primes_of_k = fk.primes();
    spec.primes_of_k_times_k1 = fk.primes();
    for (u64 p : fk1.primes()) spec.primes_of_k_times_k1.push_back(p);
    std::sort(spec.primes_of_k_times_k1.begin(), spec.primes_of_k_times_k1.end());
    spec.k_mod_9 = params.k % 9;
    spec.k_mod_25 = params.k % 25;
    return spec;
}

namespace {

bool composed_of(u64 m, const std::vector<u64>& primes) {
    for (u64 p : primes)
        while (m % p == 0) m /= p;
    return m == 1;
}

} // namespace

bool in_a(const char_set_spec& spec, u64 m) {
    if (m == 0 || m % 2 == 0) return false;
    if (spec.forbid_nine_in_a() && m % 9 == 0) return false;
    return composed_of(m, spec.primes_of_k);
}

bool in_b(const char_set_spec& spec, u64 m) {
    if (m == 0 || m % 2 != 0) return false;
    if (spec.forbid_nine_in_b() && m % 9 == 0) return false;
    return composed_of(m, spec.primes_of_k_times_k1);
}

namespace {

bool in_x5(const char_set_spec& spec, u64 m, bool base_is_a) {
    if (m == 0 || m % 5 != 0) return false;
    u64 a = m;
    while (a % 5 == 0) a /= 5;
    return base_is_a ? in_a(spec, a) : in_b(spec, a);
}

} // namespace

bool in_a5(const char_set_spec& spec, u64 m) { return in_x5(spec, m, true); }
bool in_b5(const char_set_spec& spec, u64 m) { return in_x5(spec, m, false); }

u64 min_s(const char_set_spec& spec, u64 n) {
    if (n == 0) throw precondition_violated("min_s: n must be >= 1");
    u64 hi = pow2_ceil(n); // 2^b >= n is in B_k (or 1 in A_k when n = 1)
    auto members = enumerate_ab(spec, n, hi);
    if (members.empty()) throw error("min_s: power-of-two fallback missing; bug");
    return members.front();
}

std::vector<u64> enumerate_ab(const char_set_spec& spec, u64 lo, u64 hi) {
    if (lo > hi) throw precondition_violated("enumerate_ab: lo > hi");
    auto odd = numth::smooth_numbers(spec.primes_of_k, lo, hi,
                                     numth::parity_filter::odd,
                                     spec.forbid_nine_in_a());
    auto even = numth::smooth_numbers(spec.primes_of_k_times_k1, lo, hi,
                                      numth::parity_filter::even,
                                      spec.forbid_nine_in_b());
    std::vector<u64> out;
    out.reserve(odd.size() + even.size());
    std::merge(odd.begin(), odd.end(), even.begin(), even.end(),
               std::back_inserter(out));
    return out;
}

namespace {

std::vector<u64> five_adic(const char_set_spec& spec, u64 lo, u64 hi, bool base_is_a) {
    std::vector<u64> primes =
        base_is_a ? spec.primes_of_k : spec.primes_of_k_times_k1;
    primes.push_back(5);
    auto parity = base_is_a ? numth::parity_filter::odd : numth::parity_filter::even;
    bool forbid9 = base_is_a ? spec.forbid_nine_in_a() : spec.forbid_nine_in_b();
    auto all = numth::smooth_numbers(primes, lo, hi, parity, forbid9);
    std::vector<u64> out;
    for (u64 m : all)
        if (base_is_a ? in_a5(spec, m) : in_b5(spec, m)) out.push_back(m);
    return out;
}

} // namespace

std::vector<u64> enumerate_b5(const char_set_spec& spec, u64 lo, u64 hi) {
    if (lo > hi) return {};
    return five_adic(spec, lo, hi, false);
}

std::vector<u64> enumerate_a5b5(const char_set_spec& spec, u64 lo, u64 hi) {
    if (lo > hi) return {};
    auto a5 = five_adic(spec, lo, hi, true);
    auto b5 = five_adic(spec, lo, hi, false);
    std::vector<u64> out;
    out.reserve(a5.size() + b5.size());
    std::merge(a5.begin(), a5.end(), b5.begin(), b5.end(), std::back_inserter(out));
    return out;
}

} // namespace lucasdisc::charsets
