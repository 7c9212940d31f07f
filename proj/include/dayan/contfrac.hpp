#pragma once

// Continued fractions of a/m (0 < a/m < 1) and the link to the DaYan trace.
//
// With a/m = [0; u1, ..., uL] and alpha_k/beta_k = [0; u1, ..., uk], for
// every k <= L-1 the state after DaYan step k holds
//
//     k odd:  beta_k = x21,  alpha_k = (x21*a + x22) / m
//     k even: beta_k = x11,  alpha_k = (x11*a - x12) / m
//
// The last partial is not visible in the trace: the least-positive rule
// either stops one step early or takes quotient uL - 1 on the final step.

#include <cstddef>
#include <vector>

#include "dayan/core_arith.hpp"
#include "dayan/dayan.hpp"

namespace dayan {

/// Partials u1..uL of [0; u1, ..., uL]. Canonical: uL >= 2 whenever L >= 2.
struct ContinuedFraction {
    std::vector<Natural> partials;

    std::size_t length() const noexcept { return partials.size(); }

    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

struct Convergent {
    std::size_t k = 0;
    Natural alpha;
    Natural beta;

    friend bool operator==(const Convergent&, const Convergent&) = default;
};

inline ContinuedFraction cf_expand(const Natural& a, const Natural& m) {
    if (a.is_zero() || a >= m) {
        throw domain_error("continued fraction expansion needs 0 < a < m");
    }
    ContinuedFraction cf;
    Natural num = a;
    Natural den = m;
    while (!num.is_zero()) {
        auto [q, r] = div_least_nonnegative(den, num);
        cf.partials.push_back(std::move(q));
        den = std::move(num);
        num = std::move(r);
    }
    return cf;
}

/// Standard recurrence with alpha_0 = 0, alpha_-1 = 1, beta_0 = 1, beta_-1 = 0.
inline std::vector<Convergent> convergents(const ContinuedFraction& cf) {
    std::vector<Convergent> out;
    out.reserve(cf.length());
    Natural alpha_prev2 = 1, alpha_prev = 0;
    Natural beta_prev2 = 0, beta_prev = 1;
    for (std::size_t i = 0; i < cf.length(); ++i) {
        const Natural& u = cf.partials[i];
        Natural alpha = u * alpha_prev + alpha_prev2;
        Natural beta = u * beta_prev + beta_prev2;
        out.push_back({i + 1, alpha, beta});
        alpha_prev2 = std::move(alpha_prev);
        alpha_prev = std::move(alpha);
        beta_prev2 = std::move(beta_prev);
        beta_prev = std::move(beta);
    }
    return out;
}

/// Length L of the continued fraction of the traced fraction, recovered
/// from the trace alone.
inline std::size_t cf_length_from_trace(const DayanTrace& t) {
    if (t.steps.empty()) {
        return 1;
    }
    // Ending on x22 == 1 means the final step consumed the last partial
    // (as uL - 1); otherwise the loop stopped before reaching it.
    return t.final_state().x22.is_one() ? t.steps.size() : t.steps.size() + 1;
}

/// Convergent k read from the state after step k (k odd or even as above).
inline Convergent convergent_at_step(const DayanStep& step, const Natural& a, const Natural& m) {
    const StateMatrix& s = step.state_after;
    big_int num;
    Natural beta;
    if (step.index % 2 == 1) {
        num = s.x21.value() * a.value() + s.x22.value();
        beta = s.x21;
    } else {
        num = s.x11.value() * a.value() - s.x12.value();
        beta = s.x11;
    }
    big_int alpha;
    big_int rem;
    boost::multiprecision::divide_qr(num, m.value(), alpha, rem);
    if (!rem.is_zero() || alpha < 0) {
        throw contract_violation("convergent numerator at step " + std::to_string(step.index) +
                                 " is not an exact multiple of m");
    }
    return {step.index, Natural::from_big(std::move(alpha)), std::move(beta)};
}

/// Convergents k = 1..L-1 of multiplicand/modulus, read off the trace.
inline std::vector<Convergent> convergents_from_trace(const DayanTrace& t) {
    const std::size_t count = cf_length_from_trace(t) - 1;
    std::vector<Convergent> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        out.push_back(convergent_at_step(t.steps[k], t.multiplicand, t.modulus));
    }
    return out;
}

} // namespace dayan
