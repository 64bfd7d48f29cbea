#include "lucasdisc/seq.hpp"

#include <bit>

namespace lucasdisc::seq {

mpz_class u_exact(const sequence_params& params, u64 n, u64 cap) {
    if (n > cap) throw cap_exceeded("u_exact: n above configured cap");
    mpz_class a = 0, b = 1; // U_0, U_1
    if (n == 0) return a;
    mpz_class t = params.trace();
    for (u64 i = 1; i < n; ++i) {
        mpz_class next = t * b - a;
        a = std::move(b);
        b = std::move(next);
    }
    return b;
}

// Doubling identities for U with companion multiplier Q = 1:
//   U_{2n}   = U_n (2 U_{n+1} - t U_n)
//   U_{2n+1} = U_{n+1}^2 - U_n^2
// validated against plain iteration in the test suite.
std::pair<u64, u64> u_pair_mod(const sequence_params& params, u64 n, u64 m) {
    if (m == 0) throw precondition_violated("modulus must be >= 1");
    if (m == 1) return {0, 0};
    const u64 t = params.trace() % m;
    u64 a = 0, b = 1; // (U_j, U_{j+1}) for the prefix j of n consumed so far
    int bits = (n == 0) ? 0 : std::bit_width(n);
    for (int i = bits - 1; i >= 0; --i) {
        u64 d = mulmod(a, submod(mulmod(2, b, m), mulmod(t, a, m), m), m); // U_{2j}
        u64 e = submod(mulmod(b, b, m), mulmod(a, a, m), m);               // U_{2j+1}
        if ((n >> i) & 1) {
            a = e;
            b = submod(mulmod(t, e, m), d, m); // U_{2j+2} = t U_{2j+1} - U_{2j}
        } else {
            a = d;
            b = e;
        }
    }
    return {a, b};
}

u64 u_mod(const sequence_params& params, u64 n, u64 m) {
    return u_pair_mod(params, n, m).first;
}

std::pair<u64, u64> u_pair_mod_iter(const sequence_params& params, u64 n, u64 m) {
    if (m == 0) throw precondition_violated("modulus must be >= 1");
    if (m == 1) return {0, 0};
    const u64 t = params.trace() % m;
    u64 a = 0, b = 1;
    for (u64 i = 0; i < n; ++i) {
        u64 next = submod(mulmod(t, b, m), a, m);
        a = b;
        b = next;
    }
    return {a, b};
}

std::pair<mpz_class, mpz_class> u_pair_mod(const sequence_params& params, u64 n,
                                           const mpz_class& m) {
    if (m <= 0) throw precondition_violated("modulus must be >= 1");
    if (m == 1) return {0, 0};
    mpz_class t = mpz_class(params.trace()) % m;
    mpz_class a = 0, b = 1;
    int bits = (n == 0) ? 0 : std::bit_width(n);
    for (int i = bits - 1; i >= 0; --i) {
        mpz_class d = (a * (2 * b - t * a)) % m;
        mpz_class e = (b * b - a * a) % m;
        if (d < 0) d += m;
        if (e < 0) e += m;
        if ((n >> i) & 1) {
            a = e;
            b = (t * e - d) % m;
            if (b < 0) b += m;
        } else {
            a = std::move(d);
            b = std::move(e);
        }
    }
    return {a, b};
}

void u_scan_mod(const sequence_params& params, u64 m,
                const std::function<bool(u64, u64)>& visit) {
    if (m == 0) throw precondition_violated("modulus must be >= 1");
    const u64 t = params.trace() % m;
    u64 a = 0 % m, b = 1 % m;
    for (u64 n = 0;; ++n) {
        if (!visit(n, a)) return;
        u64 next = submod(mulmod(t, b, m), a, m);
        a = b;
        b = next;
    }
}

} // namespace lucasdisc::seq
