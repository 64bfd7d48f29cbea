#pragma once

#include <functional>
#include <utility>

#include <gmpxx.h>

#include "lucasdisc/ints.hpp"

namespace lucasdisc::seq {

/// Parameters of the Lucas sequence U(k):
///   U_0 = 0, U_1 = 1, U_{n+2} = (4k+2) U_{n+1} - U_n.
/// Trace and discriminant are derived, never stored.
struct sequence_params {
    u64 k;

    explicit sequence_params(u64 k_) : k(k_) {
        if (k == 0) throw precondition_violated("k must be >= 1");
    }

    u64 trace() const { return 4 * k + 2; }
    mpz_class discriminant() const { // 16 k (k+1)
        mpz_class d = mpz_class(k) * mpz_class(k + 1);
        return 16 * d;
    }
};

inline constexpr u64 default_exact_cap = 100000;

/// Exact U_n(k) by running the recurrence. Values grow like alpha(k)^n,
/// so n is capped (default 10^5) to avoid accidental memory blowups.
mpz_class u_exact(const sequence_params& params, u64 n, u64 cap = default_exact_cap);

/// (U_n mod m, U_{n+1} mod m) by fast doubling, O(log n) multiplications.
std::pair<u64, u64> u_pair_mod(const sequence_params& params, u64 n, u64 m);

/// U_n(k) mod m.
u64 u_mod(const sequence_params& params, u64 n, u64 m);

/// Reference implementation: the same pair by plain iteration. Kept for
/// validating the doubling identities.
std::pair<u64, u64> u_pair_mod_iter(const sequence_params& params, u64 n, u64 m);

/// mpz-modulus variant of u_pair_mod, for moduli beyond 64 bits.
std::pair<mpz_class, mpz_class> u_pair_mod(const sequence_params& params, u64 n,
                                           const mpz_class& m);

/// Walk U_0, U_1, ... mod m, invoking visit(n, U_n mod m) until it returns
/// false. Cheapest way to scan prefixes of the sequence.
void u_scan_mod(const sequence_params& params, u64 m,
                const std::function<bool(u64, u64)>& visit);

} // namespace lucasdisc::seq
