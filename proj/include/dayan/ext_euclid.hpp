#pragma once

// Textbook extended Euclid (least-nonnegative remainders) kept in the
// accumulator form
//
//     X <- identity; n <- 0
//     while a != 0: q, r <- m div a; X <- X * [[q, 1], [1, 0]]; (m, a) <- (a, r); ++n
//     u <- (-1)^(n+1) * x12
//
// It is kept separate from dayan.hpp so the two methods can be compared
// step for step and one can serve as an oracle for the other.

#include <cstddef>

#include "dayan/core_arith.hpp"

namespace dayan {

struct EuclidRun {
    SignedInt raw;         // (-1)^(n+1) * x12, in (-m, m)
    Natural normalized;    // raw, or raw + m when negative
    std::size_t iterations = 0;
};

inline EuclidRun euclid_inverse(const Natural& a_in, const Natural& m_in) {
    if (m_in < 2) {
        throw domain_error("modulus must be at least 2, got " + m_in.str());
    }
    Natural a = a_in % m_in;
    Natural m = m_in;

    Natural x11 = 1, x12 = 0, x21 = 0, x22 = 1;
    std::size_t n = 0;
    while (!a.is_zero()) {
        auto [q, r] = div_least_nonnegative(m, a);
        Natural temp = x11;
        x11 = q * x11 + x12;
        x12 = temp;
        temp = x21;
        x21 = q * x21 + x22;
        x22 = temp;
        m = a;
        a = r;
        ++n;
    }
    // m now holds gcd(a, m).
    if (!m.is_one()) {
        throw not_invertible_error(m);
    }

    EuclidRun run;
    run.iterations = n;
    run.raw = n % 2 == 1 ? SignedInt(x12) : -SignedInt(x12);
    run.normalized = run.raw.sign() == Sign::negative ? run.raw.mod(m_in) : x12;
    return run;
}

} // namespace dayan
