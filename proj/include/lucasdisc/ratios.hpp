#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "lucasdisc/appearance.hpp"

namespace lucasdisc::ratios {

using seq::sequence_params;

enum class ratio_kind { rho, sigma, tau };

/// rho_k / sigma_k / tau_k: supremum of z(f(p))/f(p) over primes with
/// z(f(p)) < f(p), for f(p) = p, p^2, 2p^2. When a witness prime q exists
/// the value is exactly (q+1)/(2q); a finite scan that finds none cannot
/// prove the no-witness case, so it reports Undetermined(cap).
struct ratio_result {
    ratio_kind kind;
    std::optional<u64> witness; // q: the value is (q+1)/(2q)
    u64 cap;                    // scan bound when witness is absent

    bool exact() const { return witness.has_value(); }
};

inline constexpr u64 default_prime_cap = 1000;

ratio_result rho(const sequence_params& params, u64 prime_cap = default_prime_cap);
ratio_result sigma(const sequence_params& params, u64 prime_cap = default_prime_cap);
ratio_result tau(const sequence_params& params, u64 prime_cap = default_prime_cap);

/// All k <= k_max with (rho, sigma, tau) = ((p1+1)/2p1, (p2+1)/2p2,
/// (p3+1)/2p3). Infeasible triples (nullopt) are those failing
/// 3 <= p1 <= p2 <= p3, p3 = 1 (mod 4), and p3 = p2 when p2 = 1 (mod 4).
std::optional<std::vector<u64>> find_triple_k(u64 p1, u64 p2, u64 p3, u64 k_max);

enum class class_case { a, b, c, d };

/// Residues k (mod p for cases a/d, mod p^2 for b/c) with the prescribed
/// z-value, plus the closed-form count they must match:
///   a: z_k(p) = (p+1)/2,       f = phi((p+1)/2) classes mod p
///   b: z_k(p^2) = (p+1)/2,     f classes mod p^2
///   c: z_k(p^2) = p(p+1)/2,    (p-1) f classes mod p^2
///   d: z_k(p) < (p+1)/2,       p - f - 2 classes mod p
/// Throws count_mismatch if the enumeration disagrees with the formula.
struct class_count {
    u64 count;
    std::vector<u64> residues;
};

class_count count_classes(u64 p, class_case which);

/// Serial reference for the residue enumeration kernel.
class_count count_classes_serial(u64 p, class_case which);

} // namespace lucasdisc::ratios
