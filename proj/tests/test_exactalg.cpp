#include "wrt/cyc_number.hpp"
#include "wrt/linalg.hpp"
#include "wrt/qcalc.hpp"
#include "wrt/root_spec.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace wrt;

namespace {

IntPoly P(std::initializer_list<long> c) {
    IntPoly p;
    for (long x : c) p.push_back(x);
    return p;
}

CycNumber random_cyc(std::mt19937& g, long N) {
    std::uniform_int_distribution<long> d(-5, 5);
    std::vector<Rational> c(euler_phi(N));
    for (auto& x : c) x = Rational(d(g), 1 + (d(g) + 5) % 3);
    return CycNumber(N, c);
}

}  // namespace

TEST(Cyclotomic, SmallPolys) {
    EXPECT_EQ(cyclotomic_poly(1), P({-1, 1}));
    EXPECT_EQ(cyclotomic_poly(2), P({1, 1}));
    EXPECT_EQ(cyclotomic_poly(6), P({1, -1, 1}));
    EXPECT_EQ(cyclotomic_poly(12), P({1, 0, -1, 0, 1}));
    for (long n = 1; n <= 60; ++n) EXPECT_EQ(long(cyclotomic_poly(n).size()) - 1, euler_phi(n)) << n;
}

TEST(BRational, RingMembership) {
    BRational x(Rational(3, 4), 2);
    EXPECT_EQ((x * x).value(), Rational(9, 16));
    EXPECT_THROW(BRational(Rational(1, 3), 2), PreconditionError);
    EXPECT_NO_THROW(BRational(Rational(1, 9), 6));
}

TEST(QuarterLaurent, QIntegers) {
    EXPECT_TRUE(qint(0).is_zero());
    EXPECT_EQ(qint(2), QuarterLaurent::u_power(2) + QuarterLaurent::u_power(-2));
    EXPECT_EQ(qbinom(2, 1), qint(2));
    EXPECT_EQ(qbinom(5, 2) * qfact(2) * qfact(3), qfact(5));
    EXPECT_EQ(qint(6) / qint(3), v_pow(3) + v_pow(-3));
    EXPECT_FALSE(qint(5).try_divide(qint(2)).has_value());
}

TEST(QuarterLaurent, EvaluationAtRoots) {
    for (long r : {3, 5, 7, 9}) {
        RootSpec xi(r, 1, Theory::SO3);
        EXPECT_TRUE(eval_at_root(qint(r), xi).is_zero()) << r;
        EXPECT_FALSE(eval_at_root(qint(r - 1), xi).is_zero()) << r;
    }
    EXPECT_EQ(eval_at_root(q_pow(1), RootSpec(3, 1, Theory::SO3)), CycNumber::root(3, 1));
    // q^{1/4} at e_5 is e_20
    EXPECT_EQ(eval_at_root(QuarterLaurent::u_power(1), RootSpec(5, 1, Theory::SU2)), CycNumber::root(20, 1));
}

TEST(CycNumber, GaloisAndInverse) {
    std::mt19937 g(7);
    EXPECT_EQ(CycNumber::root(5, 1).galois(2), CycNumber::root(5, 2));
    EXPECT_EQ(CycNumber::constant(7).galois(3), CycNumber::constant(7));
    for (long N : {5, 8, 12, 15, 20}) {
        for (int t = 0; t < 5; ++t) {
            CycNumber x = random_cyc(g, N);
            for (long l = 1; l < N; ++l) {
                if (gcd_ll(l, N) != 1) continue;
                for (long m = 1; m < N; ++m) {
                    if (gcd_ll(m, N) != 1) continue;
                    EXPECT_EQ(x.galois(l).galois(m), x.galois(mul_mod(l, m, N)));
                }
            }
            if (!x.is_zero()) EXPECT_EQ(x * x.inverse(), CycNumber::constant(1, N));
        }
    }
}

TEST(CycNumber, LiftMinimalSerialize) {
    CycNumber i = CycNumber::root(4, 1);
    CycNumber big = i.lift(24);
    EXPECT_EQ(big.modulus(), 24);
    EXPECT_EQ(big, i);
    EXPECT_EQ(big.minimal().modulus(), 4);
    EXPECT_EQ(CycNumber::root(6, 3).minimal().modulus(), 1);  // -1
    for (std::string s : {"5:[1,0,-2,1/3]", "1:[7/2]", "12:[0,1,0,-1]"}) EXPECT_EQ(CycNumber::parse(s).to_string(), s);
    EXPECT_THROW(CycNumber::parse("5:[1,2"), PreconditionError);
    // 1 + e_3 + e_3^2 = 0
    EXPECT_TRUE((CycNumber::constant(1, 3) + CycNumber::root(3, 1) + CycNumber::root(3, 2)).is_zero());
}

TEST(CycNumber, ComplexApproximation) {
    auto z = CycNumber::root(8, 1).to_complex();
    EXPECT_NEAR(z.real(), std::sqrt(0.5), 1e-12);
    EXPECT_NEAR(z.imag(), std::sqrt(0.5), 1e-12);
}

TEST(LinAlg, SolveAndDeterminant) {
    RatMatrix A{{2, 1}, {1, 3}};
    auto x = solve_linear(A, {Rational(3), Rational(5)});
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ((*x)[0], Rational(4, 5));
    EXPECT_EQ((*x)[1], Rational(7, 5));
    EXPECT_EQ(determinant(A), Rational(5));
    EXPECT_FALSE(solve_linear(RatMatrix{{1, 2}, {2, 4}}, {Rational(1), Rational(0)}).has_value());
}
