#pragma once

// Arbitrary-precision naturals and signed integers, plus the two division
// rules the rest of the library is written against.
//
// Storage is boost::multiprecision::cpp_int; nothing outside this header
// touches it except through value()/from_big().

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "dayan/error.hpp"

namespace dayan {

using big_int = boost::multiprecision::cpp_int;

/// Unbounded integer >= 0. Subtraction that would go negative throws.
class Natural {
public:
    Natural() = default;
    Natural(std::uint64_t v) : v_(v) {} // NOLINT(google-explicit-constructor)

    static Natural from_big(big_int v) {
        if (v < 0) {
            throw domain_error("negative value where a natural number is required");
        }
        Natural n;
        n.v_ = std::move(v);
        return n;
    }

    /// Decimal, or hexadecimal with a 0x/0X prefix. Whitespace anywhere in
    /// the string (including newlines inside a digit block) is ignored.
    static Natural parse(std::string_view text);

    const big_int& value() const noexcept { return v_; }

    bool is_zero() const noexcept { return v_.is_zero(); }
    bool is_one() const noexcept { return v_ == 1; }
    bool is_even() const { return !boost::multiprecision::bit_test(v_, 0); }

    /// Number of significant bits; 0 for zero.
    std::size_t bit_length() const {
        return v_.is_zero() ? 0 : boost::multiprecision::msb(v_) + 1;
    }

    std::uint64_t to_u64() const {
        if (bit_length() > 64) {
            throw domain_error("value does not fit in 64 bits");
        }
        return static_cast<std::uint64_t>(v_);
    }

    std::string str() const { return v_.str(); }
    std::string hex() const;

    Natural& operator+=(const Natural& o) { v_ += o.v_; return *this; }
    Natural& operator*=(const Natural& o) { v_ *= o.v_; return *this; }
    Natural& operator-=(const Natural& o) {
        if (o.v_ > v_) {
            throw domain_error("natural subtraction underflow");
        }
        v_ -= o.v_;
        return *this;
    }
    Natural& operator/=(const Natural& o) {
        if (o.is_zero()) throw domain_error("division by zero");
        v_ /= o.v_;
        return *this;
    }
    Natural& operator%=(const Natural& o) {
        if (o.is_zero()) throw domain_error("division by zero");
        v_ %= o.v_;
        return *this;
    }

    friend Natural operator+(Natural a, const Natural& b) { return a += b; }
    friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
    friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
    friend Natural operator/(Natural a, const Natural& b) { return a /= b; }
    friend Natural operator%(Natural a, const Natural& b) { return a %= b; }

    friend bool operator==(const Natural& a, const Natural& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
        const int c = a.v_.compare(b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.str(); }

private:
    big_int v_;
};

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// Signed counterpart of Natural. Zero always reports Sign::zero.
class SignedInt {
public:
    SignedInt() = default;
    SignedInt(std::int64_t v) : v_(v) {} // NOLINT(google-explicit-constructor)
    SignedInt(const Natural& n) : v_(n.value()) {} // NOLINT(google-explicit-constructor)
    explicit SignedInt(big_int v) : v_(std::move(v)) {}

    const big_int& value() const noexcept { return v_; }

    Sign sign() const noexcept {
        const int s = v_.sign();
        return s < 0 ? Sign::negative : s > 0 ? Sign::positive : Sign::zero;
    }
    Natural magnitude() const { return Natural::from_big(boost::multiprecision::abs(v_)); }
    std::string str() const { return v_.str(); }

    /// Least nonnegative representative modulo m.
    Natural mod(const Natural& m) const {
        if (m.is_zero()) throw domain_error("division by zero");
        big_int r = v_ % m.value();
        if (r < 0) r += m.value();
        return Natural::from_big(std::move(r));
    }

    SignedInt operator-() const { return SignedInt(big_int(-v_)); }
    friend SignedInt operator+(const SignedInt& a, const SignedInt& b) { return SignedInt(big_int(a.v_ + b.v_)); }
    friend SignedInt operator-(const SignedInt& a, const SignedInt& b) { return SignedInt(big_int(a.v_ - b.v_)); }
    friend SignedInt operator*(const SignedInt& a, const SignedInt& b) { return SignedInt(big_int(a.v_ * b.v_)); }

    friend bool operator==(const SignedInt& a, const SignedInt& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const SignedInt& a, const SignedInt& b) {
        const int c = a.v_.compare(b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const SignedInt& n) { return os << n.str(); }

private:
    big_int v_;
};

/// Raised when an operation needs coprime inputs and did not get them.
class gcd_error : public domain_error {
public:
    gcd_error(const std::string& what, Natural g) : domain_error(what), gcd_(std::move(g)) {}
    const Natural& gcd() const noexcept { return gcd_; }

private:
    Natural gcd_;
};

class not_invertible_error : public gcd_error {
public:
    explicit not_invertible_error(Natural g)
        : gcd_error("not invertible: gcd = " + g.str(), g) {}
};

/// dividend = quotient * divisor + remainder
struct DivStep {
    Natural quotient;
    Natural remainder;

    friend bool operator==(const DivStep&, const DivStep&) = default;
};

/// q = floor((a - 1) / b), r = a - q*b, so 1 <= r <= b. An exact multiple
/// leaves r = b instead of 0.
inline DivStep div_least_positive(const Natural& a, const Natural& b) {
    if (a.is_zero() || b.is_zero()) {
        throw domain_error("least-positive division needs a >= 1 and b >= 1");
    }
    Natural q = (a - 1) / b;
    Natural r = a - q * b;
    return {std::move(q), std::move(r)};
}

/// Ordinary floor division, 0 <= r < b.
inline DivStep div_least_nonnegative(const Natural& a, const Natural& b) {
    if (b.is_zero()) {
        throw domain_error("division by zero");
    }
    big_int q;
    big_int r;
    boost::multiprecision::divide_qr(a.value(), b.value(), q, r);
    return {Natural::from_big(std::move(q)), Natural::from_big(std::move(r))};
}

inline Natural gcd(const Natural& a, const Natural& b) {
    if (a.is_zero() && b.is_zero()) {
        throw domain_error("gcd(0, 0) is undefined");
    }
    return Natural::from_big(boost::multiprecision::gcd(a.value(), b.value()));
}

inline Natural lcm(const Natural& a, const Natural& b) {
    if (a.is_zero() || b.is_zero()) {
        throw domain_error("lcm needs nonzero arguments");
    }
    return a / gcd(a, b) * b;
}

/// floor(sqrt(n))
inline Natural isqrt(const Natural& n) {
    return Natural::from_big(boost::multiprecision::sqrt(n.value()));
}

inline bool is_perfect_square(const Natural& n) {
    const Natural s = isqrt(n);
    return s * s == n;
}

inline Natural Natural::parse(std::string_view text) {
    std::string digits;
    digits.reserve(text.size());
    for (const char c : text) {
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r' && c != '\v' && c != '\f') {
            digits.push_back(c);
        }
    }
    bool hex = false;
    std::string_view body = digits;
    if (body.size() >= 2 && body[0] == '0' && (body[1] == 'x' || body[1] == 'X')) {
        hex = true;
        body.remove_prefix(2);
    }
    if (body.empty()) {
        throw domain_error("cannot parse number: '" + std::string(text) + "'");
    }
    big_int v;
    for (const char c : body) {
        int d = -1;
        if (c >= '0' && c <= '9') {
            d = c - '0';
        } else if (hex && c >= 'a' && c <= 'f') {
            d = c - 'a' + 10;
        } else if (hex && c >= 'A' && c <= 'F') {
            d = c - 'A' + 10;
        }
        if (d < 0) {
            throw domain_error("cannot parse number: '" + std::string(text) + "'");
        }
        v *= hex ? 16 : 10;
        v += d;
    }
    return from_big(std::move(v));
}

inline std::string Natural::hex() const {
    if (v_.is_zero()) return "0x0";
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    big_int v = v_;
    while (!v.is_zero()) {
        out.push_back(digits[static_cast<unsigned>(v & 0xf)]);
        v >>= 4;
    }
    out += "x0";
    return {out.rbegin(), out.rend()};
}

} // namespace dayan
