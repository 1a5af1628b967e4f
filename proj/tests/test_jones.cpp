#include "wrt/jones.hpp"
#include "wrt/root_spec.hpp"

#include <gtest/gtest.h>

using namespace wrt;

TEST(Jones, Unknot) {
    EXPECT_EQ(jones_unknot(1), QuarterLaurent(1));
    EXPECT_EQ(jones_unknot(2), v_pow(1) + v_pow(-1));
    for (long f = -3; f <= 3; ++f)
        for (long n = 1; n <= 6; ++n)
            EXPECT_EQ(jones_unknot(n, f), QuarterLaurent::q_power(Rational(f * (n * n - 1), 4)) * qint(n));
}

TEST(Jones, HopfChain) {
    for (long j = 1; j <= 6; ++j) {
        EXPECT_EQ(jones_hopf_chain({j}, 1, {0}), qint(j));
        EXPECT_EQ(jones_hopf_chain({j}, 3, {0}), qint(3 * j));
        EXPECT_EQ(jones_hopf_chain({j}, 1, {5}), framing_factor(5, j) * qint(j));
    }
    // two components: [j1 j2][j2 d]/[j2]
    EXPECT_EQ(jones_value(JonesFamily::hopf_chain({2, 2}, 3), {1, 2}),
              framing_factor(2, 1) * framing_factor(2, 2) * qint(2) * qint(6) / qint(2));
    EXPECT_THROW(JonesFamily::hopf_chain({}, 1), PreconditionError);
    EXPECT_THROW(jones_unknot(0), PreconditionError);
}

TEST(CyclotomicExpansion, Coefficients) {
    EXPECT_EQ(cyclotomic_A(1, 0), q_pow(-1));
    EXPECT_TRUE(cyclotomic_A(2, 3).is_zero());
    EXPECT_EQ(cyclotomic_A(2, 0), QuarterLaurent(1) + q_pow(-1) * Rational(2) + q_pow(-2));
    for (long n = 1; n <= 6; ++n) EXPECT_EQ(cyclotomic_A(n, 0), q_pow(-1) * qint(n) * qint(n));
}

TEST(CyclotomicExpansion, Unknot) {
    CycCoeffs c1 = cyclotomic_coeffs(unknot_jones_values(1), 1);
    ASSERT_EQ(c1.entries.size(), 1u);
    EXPECT_EQ(c1.entries[0].num, q_pow(1));
    CycCoeffs C = cyclotomic_coeffs(unknot_jones_values(10), 10);
    EXPECT_TRUE(C.reconstruction_ok);
    for (const auto& e : C.entries) EXPECT_TRUE(e.integral);
    for (size_t k = 1; k < C.entries.size(); ++k) EXPECT_TRUE(C.entries[k].num.is_zero());
}

TEST(CyclotomicExpansion, HopfOddColour) {
    CycCoeffs C = cyclotomic_coeffs(hopf_jones_values(3, 9), 9);
    EXPECT_TRUE(C.reconstruction_ok);
    for (const auto& e : C.entries) EXPECT_TRUE(e.integral);
    // only k < j survive
    for (size_t k = 3; k < C.entries.size(); ++k) EXPECT_TRUE(C.entries[k].num.is_zero());
    // n = 1: [3] = C(0) q^{-1}
    EXPECT_EQ(C.entries[0].num, QuarterLaurent(1) + q_pow(1) + q_pow(2));
}

TEST(RootSpec, ColourSets) {
    EXPECT_EQ(color_set(Theory::SO3, 3), (std::vector<long>{1, 3, 5}));
    EXPECT_EQ(color_set(Theory::SU2, 2), (std::vector<long>{0, 1, 2, 3}));
    EXPECT_THROW(RootSpec(4, 1, Theory::SO3), PreconditionError);
    EXPECT_THROW(RootSpec(5, 2, Theory::SU2), PreconditionError);
}
