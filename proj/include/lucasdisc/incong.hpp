#pragma once

#include "lucasdisc/seq.hpp"

namespace lucasdisc::incong {

using seq::sequence_params;

enum class iota_method { scan, closed_form_5power };

/// iota_k(m): the largest j such that U_0, ..., U_{j-1} are pairwise
/// distinct mod m. Always 1 <= iota <= z_k(m) <= m.
struct incongruence_value {
    u64 m;
    u64 iota;
    iota_method method;
};

inline constexpr u64 default_iota_cap = 10000000;

/// Direct evaluation: walk the sequence mod m until any residue repeats
/// (not only adjacent indices). Memory is one bit per residue class.
incongruence_value iota_scan(const sequence_params& params, u64 m,
                             u64 cap = default_iota_cap);

/// Closed form at m = 5^b:
///   (3*5^{b-1}+1)/2  when k = 1 (mod 5), k != 6 (mod 25)
///   3*5^{b-1}        when k = 3 (mod 5), k != 18 (mod 25)
/// Other k violate the precondition.
incongruence_value iota_5power(const sequence_params& params, u32 b);

} // namespace lucasdisc::incong
