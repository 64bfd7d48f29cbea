#include "lucasdisc/incong.hpp"

#include <vector>

namespace lucasdisc::incong {

incongruence_value iota_scan(const sequence_params& params, u64 m, u64 cap) {
    if (m == 0) throw precondition_violated("iota_scan: m must be >= 1");
    if (m > cap) throw cap_exceeded("iota_scan: m above memory cap");
    std::vector<bool> seen(m, false);
    u64 iota = 0;
    seq::u_scan_mod(params, m, [&](u64 n, u64 r) {
        (void)n;
        if (seen[r]) {
            return false; // first repeat at index n means iota = n
        }
        seen[r] = true;
        ++iota;
        return true;
    });
    return {m, iota, iota_method::scan};
}

incongruence_value iota_5power(const sequence_params& params, u32 b) {
    if (b == 0) throw precondition_violated("iota_5power: b must be >= 1");
    u64 pw = checked_pow(5, b - 1); // 5^{b-1}
    u64 k5 = params.k % 5, k25 = params.k % 25;
    if (k5 == 1 && k25 != 6)
        return {checked_mul(pw, 5), (3 * pw + 1) / 2, iota_method::closed_form_5power};
    if (k5 == 3 && k25 != 18)
        return {checked_mul(pw, 5), 3 * pw, iota_method::closed_form_5power};
    throw precondition_violated("iota_5power: k not in a covered congruence class");
}

} // namespace lucasdisc::incong
