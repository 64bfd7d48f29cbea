#include "lucasdisc/dioph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include <gmpxx.h>

namespace lucasdisc::dioph {

ratio_q::ratio_q(u64 n, u64 d) : num(n), den(d) {
    if (den == 0 || num <= den)
        throw precondition_violated("ratio must be > 1");
    u64 g = std::gcd(num, den);
    num /= g;
    den /= g;
}

ratio_q ratio_q::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        return ratio_q(std::stoull(s), 1);
    }
    return ratio_q(std::stoull(s.substr(0, slash)), std::stoull(s.substr(slash + 1)));
}

namespace {

mpz_class pow_z(u64 base, u64 exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return r;
}

} // namespace

base_exponents_t base_exponents(u64 p, const ratio_q& alpha, u64 search_cap) {
    if (p < 3 || !numth::is_prime(p))
        throw not_odd_prime("base_exponents: p must be an odd prime");
    base_exponents_t out{0, 0, 0, 0};
    // smallest f: 2^e < p^f < alpha 2^e with e the largest power of two below p^f
    for (u64 f = 1; f <= search_cap; ++f) {
        mpz_class pf = pow_z(p, f);
        u64 e = mpz_sizeinbase(pf.get_mpz_t(), 2) - 1; // 2^e <= p^f, never equal
        if (pf * alpha.den < pow_z(2, e) * alpha.num) {
            out.f = f;
            out.e = e;
            break;
        }
    }
    if (out.f == 0) throw search_cap_exceeded("base_exponents: no f below cap");
    // smallest g: p^g < 2^h < alpha p^g with h the smallest power of two above p^g
    for (u64 g = 1; g <= search_cap; ++g) {
        mpz_class pg = pow_z(p, g);
        u64 h = mpz_sizeinbase(pg.get_mpz_t(), 2); // 2^h > p^g
        if (pow_z(2, h) * alpha.den < pg * alpha.num) {
            out.g = g;
            out.h = h;
            break;
        }
    }
    if (out.g == 0) throw search_cap_exceeded("base_exponents: no g below cap");
    return out;
}

namespace {

// Admissible elements 2^a p^b <= hi, sorted; a >= 1 when even_required.
std::vector<u64> admissible_up_to(u64 p, u64 hi, bool even_required) {
    auto parity = even_required ? numth::parity_filter::even : numth::parity_filter::any;
    return numth::smooth_numbers({2, p}, 1, hi, parity, false);
}

} // namespace

np_threshold np(u64 p, const ratio_q& alpha, bool even_required) {
    auto be = base_exponents(p, alpha);
    // descent start: every admissible n >= B = 2^{e+1} p^g has an admissible
    // element in [n, n alpha), so no integer >= B fails
    mpz_class big = pow_z(2, be.e + 1) * pow_z(p, be.g);
    mpz_class bound_z = (big * alpha.num + alpha.den - 1) / alpha.den;
    if (!bound_z.fits_ulong_p())
        throw search_cap_exceeded("np: descent bound beyond 64 bits");
    u64 bound = bound_z.get_ui();
    auto elems = admissible_up_to(p, bound, even_required);
    if (elems.empty()) throw error("np: no admissible elements; bug");

    // n in (m_j, m_{j+1}] fails iff m_{j+1} >= n alpha, i.e.
    // n <= floor(m_{j+1} den / num); with a virtual m_0 = 0 this covers n = 1.
    u64 largest_failing = 0;
    u64 prev = 0;
    for (u64 m : elems) {
        u64 top = static_cast<u64>(u128(m) * alpha.den / alpha.num);
        if (top > prev && top >= 1) largest_failing = std::max(largest_failing, top);
        prev = m;
    }
    np_threshold out{p, alpha, even_required, largest_failing + 1, largest_failing};

    // cheap self-check around the reported threshold
    if (out.value > 1 && interval_contains(p, alpha, out.value - 1, even_required))
        throw error("np: witness_bad_n does not fail; bug");
    for (u64 n = out.value; n < out.value + 64; ++n)
        if (!interval_contains(p, alpha, n, even_required))
            throw error("np: containment fails above threshold; bug");
    return out;
}

std::optional<u64> interval_contains(u64 p, const ratio_q& alpha, u64 n,
                                     bool even_required) {
    if (n == 0) throw precondition_violated("interval_contains: n must be >= 1");
    std::optional<u64> best;
    // for each b, the candidate is the least a (a >= 1 if even) with 2^a p^b >= n
    for (u128 pb = 1;; pb *= p) {
        u128 v = pb;
        u64 a = 0;
        if (even_required && (v & 1)) {
            v *= 2;
            a = 1;
        }
        while (v < n) {
            v *= 2;
            ++a;
        }
        (void)a;
        if (v * alpha.den < u128(n) * alpha.num) { // v < n alpha
            u64 vv = static_cast<u64>(v);
            if (!best || vv < *best) best = vv;
        }
        if (pb >= n) break; // larger p^b only yields larger candidates
    }
    return best;
}

coverage_report coverage_25(u64 ratio_num, u64 ratio_den, u64 n_start) {
    if (ratio_num >= ratio_den)
        throw precondition_violated("coverage_25: ratio must be < 1");
    // enumerate comfortably past n_start so the window above it is conclusive
    u64 bound = static_cast<u64>(u128(n_start) * ratio_den / ratio_num * ratio_den / ratio_num);
    auto elems = numth::smooth_numbers({2, 5}, 1, bound, numth::parity_filter::even, false);
    coverage_report rep{0, 0, true};
    // [ratio n, n] misses iff the largest admissible m_j <= n has
    // m_j den < n num; failures in the gap [m_j, m_{j+1}) are the n > m_j den/num
    u64 prev = 0; // n < 2 always fails (smallest even admissible is 2)
    for (size_t i = 0; i < elems.size(); ++i) {
        u64 next = elems[i];
        u64 top = next - 1; // last n that still looks at m_j = prev
        u64 safe = prev == 0 ? 0 : static_cast<u64>(u128(prev) * ratio_den / ratio_num);
        if (top > safe) rep.largest_failing = std::max(rep.largest_failing, top);
        prev = next;
    }
    rep.checked_up_to = prev; // for n <= the last element every gap was analyzed
    rep.holds_from_start = rep.largest_failing < n_start;
    return rep;
}

std::optional<std::pair<u64, u64>> approachable(u64 p, u32 e) {
    if (p < 13 || !numth::is_prime(p))
        throw precondition_violated("approachable: p must be a prime >= 13");
    if (e == 0) throw precondition_violated("approachable: e must be >= 1");
    mpz_class pe = pow_z(p, e);
    mpz_class lo6 = 5 * (mpz_class(p) + 1) * pow_z(p, e - 1); // 6 * lower bound
    // smallest candidate 2^a 5^b inside the open interval, scanning b
    std::optional<std::pair<u64, u64>> best;
    mpz_class best_v;
    mpz_class fives = 1;
    for (u64 b = 0; fives < pe; fives *= 5, ++b) {
        mpz_class v = fives * 2;
        u64 a = 1;
        while (v * 6 <= lo6) {
            v *= 2;
            ++a;
        }
        if (v < pe && (!best || v < best_v)) {
            best = {a, b};
            best_v = v;
        }
    }
    return best;
}

} // namespace lucasdisc::dioph
