#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lucasdisc/numth.hpp"

namespace lucasdisc::dioph {

/// Exact rational alpha = num/den > 1. All interval comparisons against it
/// are cross-multiplied integer comparisons; no floating point anywhere.
struct ratio_q {
    u64 num;
    u64 den;

    ratio_q(u64 n, u64 d);
    static ratio_q parse(const std::string& s); // "5/3"
};

/// Base exponents of the descent: smallest f with 1 < p^f/2^e < alpha and
/// smallest g with 1 < 2^h/p^g < alpha.
struct base_exponents_t {
    u64 e, f, g, h;
};

base_exponents_t base_exponents(u64 p, const ratio_q& alpha, u64 search_cap = 10000);

/// n_p(alpha): least value such that [n, n*alpha) contains an admissible
/// 2^a p^b for every n >= value. "Even" means a >= 1 (b = 0 allowed);
/// dropping evenness admits 1 as well.
struct np_threshold {
    u64 p;
    ratio_q alpha;
    bool even_required;
    u64 value;
    u64 witness_bad_n; // largest failing n; 0 when value == 1
};

np_threshold np(u64 p, const ratio_q& alpha, bool even_required);

/// Least admissible 2^a p^b in [n, n*alpha), if any.
std::optional<u64> interval_contains(u64 p, const ratio_q& alpha, u64 n,
                                     bool even_required);

/// Gap analysis for Lemma-style interval coverage: does [ratio*n, n] with
/// ratio = num/den < 1 contain an even 2^a 5^b for every n >= n_start?
struct coverage_report {
    u64 largest_failing;  // largest n < checked_up_to with an empty interval
    u64 checked_up_to;    // exhaustively analyzed for all n <= this
    bool holds_from_start; // no failures in [n_start, checked_up_to]
};

coverage_report coverage_25(u64 ratio_num, u64 ratio_den, u64 n_start);

/// Smallest 2^a 5^b (a >= 1, b >= 0) strictly inside
/// (5(p+1)/(6p) * p^e, p^e), if one exists.
std::optional<std::pair<u64, u64>> approachable(u64 p, u32 e);

} // namespace lucasdisc::dioph
