#include <gtest/gtest.h>

#include <cmath>

#include "dayan/dayan.hpp"
#include "dayan/random.hpp"
#include "oracles.hpp"

using namespace dayan;

namespace {

std::size_t ceil_log2(const Natural& m) {
    const std::size_t bits = m.bit_length();
    // power of two: log2 is exact
    return (m.value() & (m.value() - 1)) == 0 ? bits - 1 : bits;
}

} // namespace

TEST(DayanInverse, SevenMod480) {
    const DayanTrace t = dayan_inverse(7, 480);
    EXPECT_EQ(t.result, Natural(343));
    ASSERT_EQ(t.steps.size(), 4u);

    const std::vector<StateMatrix> states{
        {1, 7, 68, 4}, {69, 3, 68, 4}, {69, 3, 137, 1}, {343, 1, 137, 1}};
    const std::vector<std::uint64_t> quotients{68, 1, 1, 2};
    const std::vector<std::uint64_t> remainders{4, 3, 1, 1};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(t.steps[i].index, i + 1);
        EXPECT_EQ(t.steps[i].quotient, Natural(quotients[i]));
        EXPECT_EQ(t.steps[i].remainder, Natural(remainders[i]));
        EXPECT_EQ(t.steps[i].state_after, states[i]) << "step " << i + 1;
        EXPECT_EQ(t.steps[i].branch, i % 2 == 0 ? Branch::upper : Branch::lower);
    }
}

TEST(DayanInverse, SeventeenMod480) {
    const DayanTrace t = dayan_inverse(17, 480);
    EXPECT_EQ(t.result, Natural(113));
    ASSERT_EQ(t.steps.size(), 2u);
    EXPECT_EQ(t.steps[0].quotient, Natural(28));
    EXPECT_EQ(t.steps[1].quotient, Natural(4));
    EXPECT_EQ(t.final_state(), (StateMatrix{113, 1, 28, 4}));
}

TEST(DayanInverse, IdentityAndNormalization) {
    const DayanTrace one = dayan_inverse(1, 10);
    EXPECT_EQ(one.result, Natural(1));
    EXPECT_TRUE(one.steps.empty());

    // m = 2 leaves only a = 1.
    const DayanTrace two = dayan_inverse(1, 2);
    EXPECT_EQ(two.result, Natural(1));
    EXPECT_TRUE(two.steps.empty());

    EXPECT_EQ(dayan_inverse(487, 480).result, Natural(343));
    EXPECT_EQ(dayan_inverse(487, 480).multiplicand, Natural(7));
    EXPECT_TRUE(dayan_inverse(11, 10).steps.empty());
}

TEST(DayanInverse, MinusOneIsSelfInverse) {
    for (std::uint64_t m = 3; m < 200; ++m) {
        EXPECT_EQ(dayan_inverse(m - 1, m).result, Natural(m - 1));
    }
}

TEST(DayanInverse, Errors) {
    try {
        dayan_inverse(4, 480);
        FAIL() << "expected not_invertible_error";
    } catch (const not_invertible_error& e) {
        EXPECT_EQ(e.gcd(), Natural(4));
        EXPECT_STREQ(e.what(), "not invertible: gcd = 4");
    }
    EXPECT_THROW(dayan_inverse(0, 7), not_invertible_error);
    EXPECT_THROW(dayan_inverse(1, 1), domain_error);
    EXPECT_THROW(dayan_inverse(1, 0), domain_error);
}

TEST(DayanInverse, ExhaustiveInvariantsUpTo500) {
    for (std::uint64_t m = 3; m <= 500; ++m) {
        const std::size_t bound = 2 * ceil_log2(Natural(m)) + 4;
        for (std::uint64_t a = 2; a < m; ++a) {
            if (oracle::gcd64(a, m) != 1) continue;
            const DayanTrace t = dayan_inverse(a, m);
            ASSERT_EQ(t.result.to_u64(), oracle::brute_inverse(a, m)) << a << " mod " << m;
            ASSERT_EQ(t.steps.size() % 2, 0u);
            ASSERT_LE(t.steps.size(), bound);
            ASSERT_TRUE(t.final_state().x12.is_one());

            StateMatrix prev = StateMatrix::initial(a, m);
            for (const auto& s : t.steps) {
                const bool odd = s.index % 2 == 1;
                ASSERT_EQ(s.branch, odd ? Branch::upper : Branch::lower);
                ASSERT_GE(s.remainder, Natural(1));
                ASSERT_EQ(permanent(s.state_after), Natural(m));
                ASSERT_LE(s.state_after.x12, prev.x12);
                if (odd) {
                    ASSERT_EQ(s.state_after.x12, prev.x12);
                    ASSERT_EQ(s.state_after.x11, prev.x11);
                } else {
                    ASSERT_EQ(s.state_after.x22, prev.x22);
                    ASSERT_EQ(s.state_after.x21, prev.x21);
                }
                prev = s.state_after;
            }
        }
    }
}

TEST(DayanInverse, AlternatingFormGivesIdenticalTrace) {
    for (std::uint64_t m = 2; m <= 300; ++m) {
        for (std::uint64_t a = 1; a < m; ++a) {
            if (oracle::gcd64(a, m) != 1) continue;
            ASSERT_EQ(dayan_inverse(a, m), dayan_inverse_alternating(a, m));
        }
    }
    Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        const auto [a, m] = random_coprime_pair(512, rng);
        ASSERT_EQ(dayan_inverse(a, m), dayan_inverse_alternating(a, m));
    }
}

TEST(DayanInverse, Random512BitAgainstOracle) {
    Rng rng(99);
    for (int i = 0; i < 1000; ++i) {
        const auto [a, m] = random_coprime_pair(512, rng);
        const DayanTrace t = dayan_inverse(a, m);
        ASSERT_EQ(t.result.value(), oracle::inverse(a.value(), m.value()));
        ASSERT_EQ(t.steps.size() % 2, 0u);
        ASSERT_LE(t.steps.size(), 2 * ceil_log2(m) + 4);
    }
}

TEST(Permanent, Examples) {
    EXPECT_EQ(permanent({1, 7, 0, 480}), Natural(480));
    EXPECT_EQ(permanent({69, 3, 68, 4}), Natural(480));
    EXPECT_EQ(permanent({343, 1, 137, 1}), Natural(480));
}

TEST(BezoutFromResult, Examples) {
    EXPECT_EQ(bezout_from_result(7, 480, 343, 1), SignedInt(-5));
    EXPECT_EQ(bezout_from_result(17, 480, 113, 1), SignedInt(-4));
    EXPECT_EQ(bezout_from_result(1, 97, 1, 1), SignedInt(0));
    // 343*7 - 5*480 == 1
    EXPECT_EQ(SignedInt(343) * SignedInt(7) + SignedInt(-5) * SignedInt(480), SignedInt(1));
    EXPECT_THROW(bezout_from_result(7, 480, 342, 1), contract_violation);
}

namespace {

// Smallest u in [1, m) with u*a == d (mod m).
std::uint64_t min_u_for(std::uint64_t a, std::uint64_t m, std::uint64_t d) {
    for (std::uint64_t u = 1; u < m; ++u) {
        if (u * a % m == d % m) return u;
    }
    return 0;
}

} // namespace

TEST(DayanGcd, Examples) {
    {
        const auto [c, t] = dayan_gcd(4, 6);
        EXPECT_EQ(c.d, Natural(2));
        EXPECT_EQ(c.u.to_u64(), min_u_for(4, 6, 2));
        EXPECT_EQ(c.u, Natural(2));
        EXPECT_EQ(c.v, SignedInt(-1));
    }
    {
        const auto [c, t] = dayan_gcd(6, 9);
        EXPECT_EQ(c.d, Natural(3));
        EXPECT_EQ(c.u.to_u64(), min_u_for(6, 9, 3));
        EXPECT_EQ(c.u, Natural(2));
    }
    {
        const auto [c, t] = dayan_gcd(7, 480);
        EXPECT_EQ(c.d, Natural(1));
        EXPECT_EQ(c.u, Natural(343));
        EXPECT_EQ(c.v, SignedInt(-5));
    }
    {
        // Stops only when x12 == x22, one step after the inverse loop would.
        const auto [c, t] = dayan_gcd(17, 480);
        EXPECT_EQ(c.u, Natural(113));
        EXPECT_EQ(t.steps.size(), 3u);
    }
    EXPECT_THROW(dayan_gcd(6, 6), domain_error);
    EXPECT_THROW(dayan_gcd(1, 1), domain_error);
}

TEST(DayanGcd, ExhaustiveAgreesWithGcdAndInverse) {
    for (std::uint64_t m = 2; m <= 300; ++m) {
        for (std::uint64_t a = 1; a < m; ++a) {
            const auto [c, t] = dayan_gcd(a, m);
            const std::uint64_t g = oracle::gcd64(a, m);
            ASSERT_EQ(c.d.to_u64(), g);
            ASSERT_EQ(c.u.to_u64() * a % m, g % m);
            ASSERT_EQ(SignedInt(c.u) * SignedInt(a) + c.v * SignedInt(m), SignedInt(c.d));
            if (g == 1) ASSERT_EQ(c.u, dayan_inverse(a, m).result);
            for (const auto& s : t.steps) ASSERT_EQ(permanent(s.state_after), Natural(m));
        }
    }
}

TEST(DayanGcd, BezoutExactOnRandom64Bit) {
    Rng rng(2024);
    for (int i = 0; i < 10'000; ++i) {
        const Natural m = random_with_bits(64, rng);
        const Natural a = random_between(1, m - 1, rng);
        const auto [c, t] = dayan_gcd(a, m);
        ASSERT_EQ(SignedInt(c.u) * SignedInt(a) + c.v * SignedInt(m), SignedInt(c.d));
        ASSERT_EQ(c.d, gcd(a, m));
    }
}
