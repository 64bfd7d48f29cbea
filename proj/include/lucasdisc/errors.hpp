#pragma once

#include <stdexcept>
#include <string>

namespace lucasdisc {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A configured cost/memory cap would be exceeded.
struct cap_exceeded : error {
    using error::error;
};

/// A modulus argument was required to be an odd prime and is not.
struct not_odd_prime : error {
    using error::error;
};

/// A complete factorization was required but trial division left a cofactor.
struct incomplete_factorization : error {
    using error::error;
};

/// A p-adic valuation exceeded the current guard window.
struct guard_exceeded : error {
    using error::error;
};

/// Arguments violate a documented precondition.
struct precondition_violated : error {
    using error::error;
};

/// The structured discriminator engine does not cover this k.
struct not_covered : error {
    using error::error;
};

/// A class count disagreed with its closed-form formula (implementation bug).
struct count_mismatch : error {
    using error::error;
};

/// An exponent search ran past its cap.
struct search_cap_exceeded : error {
    using error::error;
};

} // namespace lucasdisc
