#pragma once

// Wiener's attack on RSA keys with a small private exponent.
//
// If d < N^(1/4) / 3 (and the primes are balanced), k/d is a convergent of
// e/N where e*d - 1 = k*phi. The convergents are read directly off the DaYan
// trace of e^-1 mod N, so the step at which d shows up is observable.

#include <cstddef>
#include <optional>

#include "dayan/contfrac.hpp"
#include "dayan/core_arith.hpp"
#include "dayan/dayan.hpp"

namespace dayan {

class RsaPublicKey {
public:
    RsaPublicKey(Natural modulus, Natural exponent)
        : n_(std::move(modulus)), e_(std::move(exponent)) {
        if (e_ <= 1 || e_ >= n_) {
            throw domain_error("public exponent must satisfy 1 < e < N");
        }
    }

    const Natural& modulus() const noexcept { return n_; }
    const Natural& exponent() const noexcept { return e_; }

private:
    Natural n_;
    Natural e_;
};

struct Factorization {
    Natural p; // p <= q
    Natural q;
    Natural phi;
};

struct WienerResult {
    bool found = false;
    Natural d;
    Natural k;
    Natural p;
    Natural q;
    Natural phi;
    std::size_t step = 0; // trace step whose convergent gave d; 0 when not found
    std::size_t candidates_tried = 0;
};

/// Tests the guess k/d: phi = (e*d - 1)/k must be integral and
/// x^2 - (N - phi + 1)x + N must split over the integers.
inline std::optional<Factorization> candidate_check(const Natural& n, const Natural& e,
                                                    const Natural& k, const Natural& d) {
    if (k.is_zero() || d.is_zero()) {
        return std::nullopt;
    }
    const Natural ed_minus_one = e * d - 1;
    auto [phi, rem] = div_least_nonnegative(ed_minus_one, k);
    if (!rem.is_zero() || phi.is_zero()) {
        return std::nullopt;
    }
    const big_int s = n.value() - phi.value() + 1; // p + q
    if (s <= 0) {
        return std::nullopt;
    }
    const big_int disc = s * s - 4 * n.value(); // (q - p)^2
    if (disc < 0) {
        return std::nullopt;
    }
    const Natural disc_n = Natural::from_big(disc);
    const Natural root = isqrt(disc_n);
    if (root * root != disc_n) {
        return std::nullopt;
    }
    const big_int twice_p = s - root.value();
    if (twice_p <= 0 || boost::multiprecision::bit_test(twice_p, 0)) {
        return std::nullopt;
    }
    Natural p = Natural::from_big(twice_p / 2);
    Natural q = Natural::from_big((s + root.value()) / 2);
    if (p * q != n || p.is_one()) {
        return std::nullopt;
    }
    return Factorization{std::move(p), std::move(q), std::move(phi)};
}

inline WienerResult wiener_attack(const RsaPublicKey& key) {
    const Natural& n = key.modulus();
    const Natural& e = key.exponent();
    if (Natural g = gcd(e, n); !g.is_one()) {
        throw gcd_error("gcd(e, N) = " + g.str() + " is a nontrivial factor of N", g);
    }

    const DayanTrace trace = dayan_inverse(e, n);
    WienerResult result;
    for (const Convergent& c : convergents_from_trace(trace)) {
        ++result.candidates_tried;
        if (auto f = candidate_check(n, e, c.alpha, c.beta)) {
            result.found = true;
            result.d = c.beta;
            result.k = c.alpha;
            result.p = std::move(f->p);
            result.q = std::move(f->q);
            result.phi = std::move(f->phi);
            result.step = c.k;
            return result;
        }
    }
    return result;
}

} // namespace dayan
