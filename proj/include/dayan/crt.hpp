#pragma once

// Chinese remaindering for moduli that need not be pairwise coprime.
//
// Two solvers:
//   solve_bezout  x0 = sum r_i * u_i * (M/m_i) mod M with sum u_i * (M/m_i) = 1
//   solve_dayan   refine the moduli to a pairwise-coprime basis a_i | m_i with
//                 prod a_i = lcm, take v_i = (M/a_i)^-1 mod a_i by DaYan, and
//                 report g in sum v_i * (M/a_i) = 1 + g*M.
//
// The coprime refinement here is a modern gcd-splitting procedure that meets
// the basis conditions; it does not try to reproduce any historical layout.

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dayan/core_arith.hpp"
#include "dayan/dayan.hpp"

namespace dayan {

/// x == residue (mod modulus), residue kept reduced.
class Congruence {
public:
    Congruence(const Natural& residue, Natural modulus) : modulus_(std::move(modulus)) {
        if (modulus_ < 2) {
            throw domain_error("congruence modulus must be at least 2, got " + modulus_.str());
        }
        residue_ = residue % modulus_;
    }

    const Natural& residue() const noexcept { return residue_; }
    const Natural& modulus() const noexcept { return modulus_; }

private:
    Natural residue_;
    Natural modulus_;
};

class CongruenceSystem {
public:
    explicit CongruenceSystem(std::vector<Congruence> items) : items_(std::move(items)) {
        if (items_.empty()) {
            throw domain_error("congruence system is empty");
        }
    }

    const std::vector<Congruence>& items() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }
    const Congruence& operator[](std::size_t i) const { return items_[i]; }

    std::vector<Natural> moduli() const {
        std::vector<Natural> out;
        out.reserve(items_.size());
        for (const auto& c : items_) out.push_back(c.modulus());
        return out;
    }

private:
    std::vector<Congruence> items_;
};

/// Pair (i, j), i < j, with gcd(m_i, m_j) not dividing r_i - r_j.
struct Conflict {
    std::size_t i = 0;
    std::size_t j = 0;
    Natural gcd;

    friend bool operator==(const Conflict&, const Conflict&) = default;
};

class unsolvable_error : public domain_error {
public:
    explicit unsolvable_error(Conflict c)
        : domain_error("unsolvable: gcd(m" + std::to_string(c.i) + ", m" + std::to_string(c.j) +
                       ") = " + c.gcd.str() + " does not divide r" + std::to_string(c.i) + " - r" +
                       std::to_string(c.j)),
          conflict_(std::move(c)) {}

    const Conflict& conflict() const noexcept { return conflict_; }

private:
    Conflict conflict_;
};

struct CoprimeBasis {
    std::vector<Natural> factors; // factors[i] divides moduli[i]
};

enum class CrtMethod { bezout, dayan };

inline const char* to_string(CrtMethod m) { return m == CrtMethod::bezout ? "bezout" : "dayan"; }

struct CrtSolution {
    Natural x0;
    Natural modulus; // lcm of the input moduli
    CrtMethod method;
};

enum class CertificateKind {
    zhengyong,      // g == 1
    fanyong,        // g > 1
    not_applicable, // single congruence, the sum is just 1
};

inline const char* to_string(CertificateKind k) {
    switch (k) {
    case CertificateKind::zhengyong: return "zhengyong";
    case CertificateKind::fanyong: return "fanyong";
    case CertificateKind::not_applicable: return "not_applicable";
    }
    return "?";
}

/// sum v_i * (M/a_i) == 1 + g*M
struct DayanCertificate {
    CoprimeBasis basis;
    std::vector<Natural> multipliers;
    Natural g;
    CertificateKind kind = CertificateKind::not_applicable;
};

struct DayanCrtResult {
    CrtSolution solution;
    DayanCertificate certificate;
};

inline std::optional<Conflict> check_solvable(const CongruenceSystem& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            Natural d = gcd(s[i].modulus(), s[j].modulus());
            const Natural& ri = s[i].residue();
            const Natural& rj = s[j].residue();
            const Natural diff = ri >= rj ? ri - rj : rj - ri;
            if (!(diff % d).is_zero()) {
                return Conflict{i, j, std::move(d)};
            }
        }
    }
    return std::nullopt;
}

inline Natural lcm_of(const std::vector<Natural>& values) {
    Natural acc = 1;
    for (const auto& v : values) acc = lcm(acc, v);
    return acc;
}

namespace detail {

// Splits x and y into coprime x' | x, y' | y with x'*y' = lcm(x, y). A prime
// goes to whichever side holds the higher power; equal powers go to x.
inline std::pair<Natural, Natural> split_pair(const Natural& x, const Natural& y) {
    const Natural g = gcd(x, y);
    auto absorb = [&g](const Natural& n) {
        Natural own = n / g;
        Natural shared = g;
        for (Natural h = gcd(shared, own); !h.is_one(); h = gcd(shared, own)) {
            own *= h;
            shared /= h;
        }
        return own;
    };
    Natural xs = absorb(x);
    Natural ys = absorb(y);
    const Natural tied = x / g * y / (xs * ys);
    return {xs * tied, std::move(ys)};
}

} // namespace detail

inline CoprimeBasis coprimize(const std::vector<Natural>& moduli) {
    for (const auto& m : moduli) {
        if (m.is_zero()) throw domain_error("moduli must be positive");
    }
    CoprimeBasis basis{moduli};
    auto& a = basis.factors;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = i + 1; j < a.size(); ++j) {
                if (gcd(a[i], a[j]).is_one()) continue;
                std::tie(a[i], a[j]) = detail::split_pair(a[i], a[j]);
                changed = true;
            }
        }
    }
    return basis;
}

namespace detail {

struct Xgcd {
    Natural g;
    SignedInt s;
    SignedInt t;
};

// s*x + t*y == g
inline Xgcd xgcd(const Natural& x, const Natural& y) {
    big_int r0 = x.value(), r1 = y.value();
    big_int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (!r1.is_zero()) {
        big_int q = r0 / r1;
        std::swap(r0, r1);
        r1 -= q * r0;
        std::swap(s0, s1);
        s1 -= q * s0;
        std::swap(t0, t1);
        t1 -= q * t0;
    }
    return {Natural::from_big(r0), SignedInt(s0), SignedInt(t0)};
}

} // namespace detail

/// Coefficients u with sum u_i * values_i == 1. Two-term extended gcd is
/// chained left to right and earlier coefficients are rescaled as it goes.
inline std::vector<SignedInt> multi_bezout(const std::vector<Natural>& values) {
    if (values.empty()) {
        throw domain_error("multi_bezout needs at least one value");
    }
    std::vector<SignedInt> coeffs{SignedInt(1)};
    Natural running = values.front();
    for (std::size_t i = 1; i < values.size(); ++i) {
        auto [g, s, t] = detail::xgcd(running, values[i]);
        for (auto& c : coeffs) c = c * s;
        coeffs.push_back(std::move(t));
        running = std::move(g);
    }
    if (!running.is_one()) {
        throw gcd_error("values are not jointly coprime: gcd = " + running.str(), running);
    }
    return coeffs;
}

inline CrtSolution solve_bezout(const CongruenceSystem& s) {
    if (auto c = check_solvable(s)) {
        throw unsolvable_error(std::move(*c));
    }
    const Natural M = lcm_of(s.moduli());
    std::vector<Natural> cofactors;
    cofactors.reserve(s.size());
    for (const auto& c : s.items()) cofactors.push_back(M / c.modulus());

    const std::vector<SignedInt> u = multi_bezout(cofactors);
    SignedInt sum = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        sum = sum + SignedInt(s[i].residue()) * u[i] * SignedInt(cofactors[i]);
    }
    return {sum.mod(M), M, CrtMethod::bezout};
}

inline DayanCrtResult solve_dayan(const CongruenceSystem& s) {
    if (auto c = check_solvable(s)) {
        throw unsolvable_error(std::move(*c));
    }
    DayanCertificate cert;
    cert.basis = coprimize(s.moduli());
    const auto& a = cert.basis.factors;

    Natural M = 1;
    for (const auto& f : a) M *= f;

    Natural weighted = 0; // sum r_i * v_i * (M/a_i)
    Natural total = 0;    // sum v_i * (M/a_i)
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Natural cofactor = M / a[i];
        Natural v = a[i].is_one() ? Natural(1) : dayan_inverse(cofactor % a[i], a[i]).result;
        const Natural term = v * cofactor;
        const Natural residue = a[i].is_one() ? Natural(0) : s[i].residue() % a[i];
        weighted += residue * term;
        total += term;
        cert.multipliers.push_back(std::move(v));
    }

    DivStep split = div_least_nonnegative(total - 1, M);
    if (!split.remainder.is_zero()) {
        throw contract_violation("sum of v_i * M/a_i is not 1 mod M");
    }
    cert.g = std::move(split.quotient);
    if (s.size() == 1 || cert.g.is_zero()) {
        cert.kind = CertificateKind::not_applicable;
    } else {
        cert.kind = cert.g.is_one() ? CertificateKind::zhengyong : CertificateKind::fanyong;
    }
    return {{weighted % M, M, CrtMethod::dayan}, std::move(cert)};
}

} // namespace dayan
