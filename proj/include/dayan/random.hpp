#pragma once

// Seeded big-number sampling built only on raw std::mt19937_64 output, so a
// given seed yields the same values on every platform.

#include <cstddef>
#include <cstdint>
#include <random>

#include "dayan/core_arith.hpp"

namespace dayan {

using Rng = std::mt19937_64;

/// Uniform in [0, 2^bits).
inline Natural random_below_pow2(std::size_t bits, Rng& rng) {
    big_int v;
    std::size_t filled = 0;
    while (filled < bits) {
        v <<= 64;
        v |= rng();
        filled += 64;
    }
    v >>= (filled - bits);
    return Natural::from_big(std::move(v));
}

/// Uniform among numbers of exactly `bits` bits (top bit set).
inline Natural random_with_bits(std::size_t bits, Rng& rng) {
    if (bits == 0) throw domain_error("bit count must be positive");
    big_int v = random_below_pow2(bits - 1, rng).value();
    boost::multiprecision::bit_set(v, static_cast<unsigned>(bits - 1));
    return Natural::from_big(std::move(v));
}

/// Uniform in [0, bound), by rejection.
inline Natural random_below(const Natural& bound, Rng& rng) {
    if (bound.is_zero()) throw domain_error("empty range");
    const std::size_t bits = bound.bit_length();
    for (;;) {
        Natural v = random_below_pow2(bits, rng);
        if (v < bound) return v;
    }
}

/// Uniform in [lo, hi].
inline Natural random_between(const Natural& lo, const Natural& hi, Rng& rng) {
    return lo + random_below(hi - lo + 1, rng);
}

/// Random m with `bits` bits and a in [1, m) with gcd(a, m) = 1.
inline std::pair<Natural, Natural> random_coprime_pair(std::size_t bits, Rng& rng) {
    Natural m = random_with_bits(bits, rng);
    for (;;) {
        Natural a = random_between(1, m - 1, rng);
        if (gcd(a, m).is_one()) return {std::move(a), std::move(m)};
    }
}

} // namespace dayan
