#include "wrt/frobenius.hpp"
#include "wrt/habiro.hpp"

#include <gtest/gtest.h>

using namespace wrt;

TEST(Habiro, Evaluation) {
    HabiroElement five = make_habiro(HabiroBasis::QQ, 1, std::vector<QuarterLaurent>(9, QuarterLaurent()));
    five.coeffs[0] = QuarterLaurent(5);
    for (long r = 1; r <= 9; ++r) EXPECT_EQ(habiro_eval(five, RootSpec(r, 1, Theory::SU2)), CycNumber::constant(5));

    HabiroElement h = make_habiro(HabiroBasis::QQ, 1, {QuarterLaurent(), QuarterLaurent(1)});
    EXPECT_TRUE(habiro_eval(h, RootSpec(1, 1, Theory::SU2)).is_zero());

    for (long r = 1; r <= 15; ++r)
        for (long l = 1; l < 4 * r; l += 2) {
            if (gcd_ll(l, r) != 1) continue;
            RootSpec xi(r, l, Theory::SU2);
            EXPECT_EQ(habiro_eval(habiro_q_inverse(r), xi), xi.xi_pow(-1)) << xi.describe();
        }
    EXPECT_THROW(habiro_eval(habiro_q_inverse(3), RootSpec(5, 1, Theory::SO3)), PreconditionError);
    EXPECT_THROW(make_habiro(HabiroBasis::QQ, 2, {QuarterLaurent(Rational(1, 3))}), PreconditionError);
}

TEST(Habiro, ZAndX) {
    RootSpec xi(15, 2, Theory::SO3);
    EXPECT_TRUE(z_eval(9, 1, xi).is_zero());  // c = 3 does not divide 1
    EXPECT_EQ(z_eval(5, 10, RootSpec(7, 1, Theory::SO3)), RootSpec(7, 1, Theory::SO3).xi_pow(20));
    for (long b : {3, 5, 9, 25, 27})
        for (long r : {3, 5, 9, 15, 45, 27})
            for (long a = -12; a <= 12; ++a) {
                RootSpec x(r, 1, Theory::SO3);
                long c = gcd_ll(b, r);
                if (a % c) continue;
                long a1 = a / c;
                EXPECT_EQ(z_eval(b, a, x).pow(b / c), x.xi_pow(c * a1 * a1)) << b << " " << r << " " << a;
            }
    EXPECT_EQ(qroot_eval(3, RootSpec(7, 1, Theory::SO3)).pow(3), RootSpec(7, 1, Theory::SO3).xi());
    EXPECT_EQ(projection_index(3, 45), 2);
    EXPECT_EQ(projection_index(-5, 7), 0);
    EXPECT_THROW(prime_of(6), PreconditionError);
}

TEST(Laplace, Transform) {
    LaurentZ one{{0, QuarterLaurent(1)}};
    auto img = laplace_transform(one, 5, 0);
    ASSERT_EQ(img.terms.size(), 1u);
    EXPECT_EQ(img.terms.at(0), QuarterLaurent(1));
    EXPECT_TRUE(laplace_transform({{1, QuarterLaurent(1)}}, 9, 1).terms.empty());
    auto sym = laplace_transform({{1, QuarterLaurent(1)}, {-1, QuarterLaurent(1)}}, 5, 0);
    ASSERT_EQ(sym.terms.size(), 1u);
    EXPECT_EQ(sym.terms.at(1), QuarterLaurent(2));
}

TEST(Laplace, Identity) {
    for (Theory t : {Theory::SO3, Theory::SU2})
        for (long r = 3; r <= 15; r += 2) {
            RootSpec xi(r, 1, t);
            for (long b : {3, 5, -9, 25})
                for (long a = -4; a <= 4; ++a) {
                    LaplaceCheck c = laplace_identity_check({{a, q_pow(1)}}, b, xi);
                    EXPECT_FALSE(c.exceptional);
                    EXPECT_TRUE(c.holds) << b << " " << a << " " << xi.describe();
                }
            LaplaceCheck c1 = laplace_identity_check({{0, QuarterLaurent(1)}}, 3, xi);
            EXPECT_EQ(c1.lhs, gamma(3, xi));
        }
}

TEST(Laplace, EvenOrderSu2NeedsCorrection) {
    RootSpec xi(2, 1, Theory::SU2);
    EXPECT_TRUE(laplace_exceptional(2, xi));
    LaplaceCheck c = laplace_identity_check({{1, QuarterLaurent(1)}}, 2, xi);
    EXPECT_FALSE(c.holds);
    EXPECT_TRUE(c.holds_corrected);
}

TEST(Qbk, Values) {
    for (long r : {5, 7, 9, 11})
        for (long b : {3, -3, 5, 9}) {
            RootSpec xi(r, 1, Theory::SO3);
            QbkValue v = q_eval_Qbk(b, 0, xi);
            EXPECT_EQ(v.value, xi.xi_pow(-1)) << b << " " << r;
        }
    EXPECT_THROW(q_eval_Qbk(2, 1, RootSpec(5, 1, Theory::SU2)), PreconditionError);
    QbkValue v = q_eval_Qbk(3, 2, RootSpec(7, 1, Theory::SO3));
    EXPECT_TRUE(v.denominators_ok);
    QbkOrderCheck oc = qbk_order_check(3, 2, 7, Theory::SO3);
    EXPECT_EQ(oc.roots, 6);
    EXPECT_EQ(oc.equivariant, oc.roots);
}

TEST(Qbk, OrientationIdentity) {
    for (long k = 0; k <= 10; ++k) {
        OrientationIdentity o = bpos_bneg_check(k);
        EXPECT_TRUE(o.first) << k;
        EXPECT_TRUE(o.second) << k;
    }
}

TEST(UnifiedLens, Tables) {
    for (long b : {3, 5, 7, 9, 25, 27}) {
        auto I = unified_lens(b, 1, Eps::Zero, Theory::SO3);
        EXPECT_EQ(I.projection(0).sign, 1);
        EXPECT_EQ(I.projection(0).exponent, Rational(0)) << b;
        auto J = unified_lens(-b, 1, Eps::Zero, Theory::SO3);
        EXPECT_EQ(J.projection(0).exponent, make_rational(b - 3, 2) + make_rational(1, b)) << b;
    }
    EXPECT_THROW(unified_lens(6, 1, Eps::Zero, Theory::SO3), PreconditionError);
    EXPECT_THROW(unified_lens(4, 1, Eps::ZeroBar, Theory::SO3), PreconditionError);
    EXPECT_EQ(d_zero_bar(7, 3), 5);
}

TEST(UnifiedLens, MatchesTauPrime) {
    for (Theory t : {Theory::SO3, Theory::SU2})
        for (long r : {3, 5, 7, 9, 15, 25}) {
            RootSpec xi(r, 1, t);
            for (long b : {3, 5, 9, 25})
                for (long a = -b + 1; a < b; ++a) {
                    if (a == 0 || gcd_ll(a, b) != 1) continue;
                    auto I = unified_lens(b, a, eps_for_root(b, r), t);
                    EXPECT_EQ(unified_lens_eval(I, xi), tau_prime(ManifoldSpec::lens(b, a, I.d), xi).value)
                        << b << " " << a << " " << xi.describe();
                }
        }
}

TEST(UnifiedDiagonal, Examples) {
    for (long r : {5, 7, 9, 11, 13}) {
        RootSpec xi(r, 1, Theory::SO3);
        EXPECT_EQ(unified_diagonal_eval(ManifoldSpec::diagonal({5}), xi), CycNumber::constant(1));
        EXPECT_EQ(unified_diagonal_eval(ManifoldSpec::diagonal({5}, 3), xi), lens_tau_prime_closed(5, 1, 3, xi));
        ManifoldSpec M = ManifoldSpec::diagonal({3}).connect(ManifoldSpec::diagonal({-5}));
        EXPECT_EQ(unified_diagonal_eval(M, xi), unified_lens_b1_eval(3, xi) * unified_lens_b1_eval(-5, xi));
        EXPECT_EQ(unified_diagonal_eval(M, xi), tau_prime(M, xi).value);
    }
}

TEST(Frobenius, Matrices) {
    auto M = frob_matrix(1, 2, 2);
    ASSERT_EQ(M.size(), 2u);
    EXPECT_EQ(M[0][0], 1);
    EXPECT_EQ(M[1][0], 0);
    EXPECT_EQ(M[0][1], -1);  // q^2 = 2q - 1
    EXPECT_EQ(M[1][1], 2);
    for (long n : {1, 3, 5, 12}) EXPECT_EQ(lattice_index(n, 1, 7), 1);
    EXPECT_EQ(lattice_index(3, 2, 2), 4);
    EXPECT_EQ(lattice_index(1, 2, 2), 2);
    EXPECT_EQ(lattice_index(4, 3, 3), 729);
    EXPECT_EQ(expected_lattice_index(4, 3, 3), 729);
}

TEST(Frobenius, Roots) {
    auto y = qth_root(1, 2, 2).values();
    EXPECT_EQ(y, (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));  // 1 + (q-1)/2
    for (long n : {3, 5, 7})
        for (long b : {2, 3, 4}) {
            if (gcd_ll(n, b) != 1) continue;
            IntPoly mod = cyclotomic_power(n, 1);
            EXPECT_EQ(qth_root(n, 1, b).values(), quotient_monomial(star_inverse(b, n), mod));
        }
    IntPoly mod = cyclotomic_power(5, 2);
    auto r = qth_root(5, 2, 3).values();
    for (auto& c : r) c = -c;
    auto q = quotient_monomial(1, mod), p = quotient_pow(r, 3, mod);
    EXPECT_NE(p, q);
    EXPECT_TRUE(torsion_monomials(5, 2, 3, 20).empty());
}
