#include <gtest/gtest.h>

#include <fstream>
#include <random>

#include "dayan/contfrac.hpp"
#include "dayan/io.hpp"
#include "dayan/wiener.hpp"
#include "oracles.hpp"

using namespace dayan;

namespace {

struct PublishedKey {
    Natural n, e, d;
};

PublishedKey load_published_key() {
    std::ifstream key(DAYAN_TEST_DATA "/wiener_2048.key");
    std::ifstream priv(DAYAN_TEST_DATA "/wiener_2048.d");
    const auto k = io::read_named_numbers(key);
    const auto d = io::read_named_numbers(priv);
    return {k.at("N"), k.at("e"), d.at("d")};
}

Natural nat(const oracle::cpp_int& v) { return Natural::from_big(v); }

void expect_sound(const RsaPublicKey& key, const WienerResult& r) {
    ASSERT_TRUE(r.found);
    EXPECT_EQ(r.p * r.q, key.modulus());
    EXPECT_LE(r.p, r.q);
    EXPECT_EQ(r.phi, (r.p - 1) * (r.q - 1));
    EXPECT_EQ(key.exponent() * r.d - 1, r.k * r.phi);
    EXPECT_TRUE(((key.exponent() * r.d) % r.phi).is_one());
}

} // namespace

TEST(RsaPublicKey, Validates) {
    EXPECT_THROW(RsaPublicKey(10, 1), domain_error);
    EXPECT_THROW(RsaPublicKey(10, 10), domain_error);
    EXPECT_NO_THROW(RsaPublicKey(10, 3));
}

TEST(Wiener, PublishedKeyRecoveredAtStep289) {
    const PublishedKey pk = load_published_key();
    ASSERT_EQ(pk.n.bit_length(), 2047u);
    const RsaPublicKey key(pk.n, pk.e);
    const WienerResult r = wiener_attack(key);
    expect_sound(key, r);
    EXPECT_EQ(r.step, 289u);
    EXPECT_EQ(r.d, pk.d);
    EXPECT_EQ(r.d.str(), pk.d.str());

    // d is the x21 cell at that (odd) step.
    const DayanTrace t = dayan_inverse(pk.e, pk.n);
    EXPECT_EQ(t.steps[288].state_after.x21, pk.d);
}

TEST(Wiener, CandidateSourceMatchesContinuedFraction) {
    const PublishedKey pk = load_published_key();
    auto direct = convergents(cf_expand(pk.e % pk.n, pk.n));
    direct.pop_back();
    EXPECT_EQ(convergents_from_trace(dayan_inverse(pk.e, pk.n)), direct);
}

TEST(CandidateCheck, Examples) {
    std::mt19937_64 rng(11);
    const auto k = oracle::vulnerable_key(32, rng);
    const Natural n = nat(k.n), e = nat(k.e), d = nat(k.d);
    const Natural mult = (e * d - 1) / nat(k.phi);

    const auto f = candidate_check(n, e, mult, d);
    ASSERT_TRUE(f.has_value());
    EXPECT_EQ(f->p * f->q, n);
    EXPECT_EQ(f->phi, nat(k.phi));
    EXPECT_EQ(f->p, nat(k.p < k.q ? k.p : k.q));

    EXPECT_FALSE(candidate_check(n, e, 0, d).has_value());
    EXPECT_FALSE(candidate_check(n, e, 1, 1).has_value());
    EXPECT_FALSE(candidate_check(n, e, mult, d + 2).has_value());
}

TEST(Wiener, ToyKeysRecovered) {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 20; ++i) {
        const unsigned bits = 32 + static_cast<unsigned>(rng() % 33);
        const auto k = oracle::vulnerable_key(bits, rng);
        const RsaPublicKey key(nat(k.n), nat(k.e));
        const WienerResult r = wiener_attack(key);
        expect_sound(key, r);
        EXPECT_EQ(r.d, nat(k.d));
        EXPECT_GE(r.step, 1u);
    }
}

TEST(Wiener, LargeExponentNotFound) {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 5; ++i) {
        const auto k = oracle::strong_key(48, rng);
        const WienerResult r = wiener_attack(RsaPublicKey(nat(k.n), nat(k.e)));
        EXPECT_FALSE(r.found);
        EXPECT_EQ(r.step, 0u);
        EXPECT_GT(r.candidates_tried, 0u);
    }
}

TEST(Wiener, SharedFactorIsReported) {
    // e shares the factor 7 with N = 7 * 11.
    try {
        wiener_attack(RsaPublicKey(77, 14));
        FAIL();
    } catch (const gcd_error& e) {
        EXPECT_EQ(e.gcd(), Natural(7));
    }
}
