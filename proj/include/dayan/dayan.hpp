#pragma once

// DaYan deriving-one: modular inverse by alternating least-positive
// divisions on a 2x2 state
//
//     | x11  x12 |      start  | 1  a |
//     | x21  x22 |             | 0  m |
//
// Division steps on the right column fold their quotient into the left
// column. The loop stops once x12 reaches 1; x11 is then a^-1 mod m.
//
// Throughout, x11*a == x12 and x21*a == -x22 (mod m), and the permanent
// x11*x22 + x12*x21 stays equal to m.

#include <cstddef>
#include <utility>
#include <vector>

#include "dayan/core_arith.hpp"

namespace dayan {

struct StateMatrix {
    Natural x11;
    Natural x12;
    Natural x21;
    Natural x22;

    static StateMatrix initial(const Natural& a, const Natural& m) { return {1, a, 0, m}; }

    friend bool operator==(const StateMatrix&, const StateMatrix&) = default;
};

/// x11*x22 + x12*x21
inline Natural permanent(const StateMatrix& s) { return s.x11 * s.x22 + s.x12 * s.x21; }

enum class Branch {
    upper, // x22 > x12: divide x22 by x12, fold into x21
    lower, // x12 > x22: divide x12 by x22, fold into x11
};

inline const char* to_string(Branch b) { return b == Branch::upper ? "upper" : "lower"; }

struct DayanStep {
    std::size_t index; // 1-based
    Branch branch;
    Natural quotient;
    Natural remainder;
    StateMatrix state_after;

    friend bool operator==(const DayanStep&, const DayanStep&) = default;
};

struct DayanTrace {
    Natural modulus;
    Natural multiplicand; // reduced mod modulus
    std::vector<DayanStep> steps;
    Natural result;

    const StateMatrix& final_state() const { return steps.back().state_after; }

    friend bool operator==(const DayanTrace&, const DayanTrace&) = default;
};

/// u*a + v*m == d
struct BezoutCertificate {
    Natural u;
    SignedInt v;
    Natural d;
};

namespace detail {

// One division step on whichever side holds the larger right-column cell.
inline DayanStep dayan_step(StateMatrix& s, std::size_t index) {
    if (s.x22 > s.x12) {
        auto [q, r] = div_least_positive(s.x22, s.x12);
        s.x21 = q * s.x11 + s.x21;
        s.x22 = r;
        return {index, Branch::upper, std::move(q), std::move(r), s};
    }
    auto [q, r] = div_least_positive(s.x12, s.x22);
    s.x11 = q * s.x21 + s.x11;
    s.x12 = r;
    return {index, Branch::lower, std::move(q), std::move(r), s};
}

inline Natural reduce_operand(const Natural& a, const Natural& m) {
    if (m < 2) {
        throw domain_error("modulus must be at least 2, got " + m.str());
    }
    return a % m;
}

} // namespace detail

/// a^-1 mod m with the full step trace. `a` may be any value coprime to m;
/// it is reduced first, and a == 1 (mod m) yields u = 1 with no steps.
inline DayanTrace dayan_inverse(const Natural& a, const Natural& m) {
    Natural a0 = detail::reduce_operand(a, m);
    if (Natural g = gcd(a0, m); !g.is_one()) {
        throw not_invertible_error(std::move(g));
    }

    DayanTrace trace{m, a0, {}, {}};
    StateMatrix s = StateMatrix::initial(a0, m);
    while (s.x12 > 1) {
        if (s.x12 == s.x22) {
            throw contract_violation("DaYan state reached x12 == x22 > 1 with gcd(a, m) = 1");
        }
        trace.steps.push_back(detail::dayan_step(s, trace.steps.size() + 1));
    }
    trace.result = s.x11;
    return trace;
}

/// Same iteration without re-testing which cell is larger: after the first
/// (upper) step the branches strictly alternate. Produces an identical trace.
inline DayanTrace dayan_inverse_alternating(const Natural& a, const Natural& m) {
    Natural a0 = detail::reduce_operand(a, m);
    if (Natural g = gcd(a0, m); !g.is_one()) {
        throw not_invertible_error(std::move(g));
    }

    DayanTrace trace{m, a0, {}, {}};
    Natural x11 = 1, x12 = a0, x21 = 0, x22 = m;
    while (x12 > 1) {
        auto [q1, r1] = div_least_positive(x22, x12);
        x21 += q1 * x11;
        x22 = r1;
        trace.steps.push_back({trace.steps.size() + 1, Branch::upper, std::move(q1), std::move(r1),
                               {x11, x12, x21, x22}});

        auto [q2, r2] = div_least_positive(x12, x22);
        x11 += q2 * x21;
        x12 = r2;
        trace.steps.push_back({trace.steps.size() + 1, Branch::lower, std::move(q2), std::move(r2),
                               {x11, x12, x21, x22}});
    }
    trace.result = x11;
    return trace;
}

/// v = -(u*a - d)/m, exact.
inline SignedInt bezout_from_result(const Natural& a, const Natural& m, const Natural& u,
                                    const Natural& d) {
    if (m.is_zero()) {
        throw domain_error("modulus must be nonzero");
    }
    const big_int excess = u.value() * a.value() - d.value();
    if (excess % m.value() != 0) {
        throw contract_violation("u*a - d is not a multiple of m");
    }
    return SignedInt(big_int(-(excess / m.value())));
}

struct DayanGcdResult {
    BezoutCertificate certificate;
    DayanTrace trace;
};

/// Loop until x12 == x22; that common value is gcd(a, m) and x11 satisfies
/// x11*a == gcd (mod m). For coprime inputs the u matches dayan_inverse,
/// though the trace may run one step further.
inline DayanGcdResult dayan_gcd(const Natural& a, const Natural& m) {
    Natural a0 = detail::reduce_operand(a, m);
    if (a0.is_zero()) {
        throw domain_error("operand is a multiple of the modulus");
    }

    DayanTrace trace{m, a0, {}, {}};
    StateMatrix s = StateMatrix::initial(a0, m);
    while (s.x12 != s.x22) {
        trace.steps.push_back(detail::dayan_step(s, trace.steps.size() + 1));
    }
    trace.result = s.x11;

    SignedInt v = bezout_from_result(a, m, s.x11, s.x12);
    return {{s.x11, std::move(v), s.x12}, std::move(trace)};
}

} // namespace dayan
