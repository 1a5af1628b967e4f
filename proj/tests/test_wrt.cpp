#include "wrt/suites.hpp"

#include <gtest/gtest.h>

using namespace wrt;

namespace {

const CycNumber kOne = CycNumber::constant(1);

}  // namespace

TEST(Signature, Examples) {
    auto s = signature(chain_linking_matrix(Chain{{2, 3, 2, 5}, 1}));
    EXPECT_EQ(s.positive, 4);
    EXPECT_EQ(s.negative, 0);
    s = signature({{-3}});
    EXPECT_EQ(s.positive, 0);
    EXPECT_EQ(s.negative, 1);
    s = signature({{2, 0}, {0, -5}});
    EXPECT_EQ(s.positive, 1);
    EXPECT_EQ(s.negative, 1);
}

TEST(LensChain, Presentation) {
    EXPECT_EQ(lens_chain(7, 3, 1).framings, (std::vector<long>{2, 2, 3}));
    EXPECT_EQ(lens_chain(-7, 3, 1).framings, (std::vector<long>{-2, -2, -3}));
    EXPECT_EQ(lens_chain(1, -1, 1).framings, (std::vector<long>{-1}));
    EXPECT_THROW(lens_chain(6, 3, 1), PreconditionError);
    EXPECT_THROW(lens_chain(5, 7, 1), PreconditionError);
}

TEST(FUnknot, ClosedMatchesStateSum) {
    for (Theory t : {Theory::SO3, Theory::SU2})
        for (long r = 2; r <= 15; ++r) {
            if (t == Theory::SO3 && r % 2 == 0) continue;
            RootSpec xi(r, 1, t);
            for (long b = -8; b <= 8; ++b) {
                if (b == 0) continue;
                EXPECT_EQ(f_unknot_closed(b, xi), f_sum(Chain{{b}, 1}, xi)) << b << " " << xi.describe();
            }
        }
    EXPECT_TRUE(f_unknot(2, RootSpec(5, 1, Theory::SU2)).is_zero());
    EXPECT_TRUE(f_unknot(2, RootSpec(7, 3, Theory::SU2)).is_zero());
    // SU2, even r, (b,r) even: the shifted Gauss sum matters; r = 2, b = 2
    RootSpec x2(2, 1, Theory::SU2);
    EXPECT_EQ(f_unknot_closed(2, x2), f_sum(Chain{{2}, 1}, x2));
    EXPECT_FALSE(f_unknot_closed(2, x2).is_zero());
}

TEST(Tau, Normalisation) {
    for (long r : {3, 5, 7, 9}) {
        for (Theory t : {Theory::SO3, Theory::SU2}) {
            RootSpec xi(r, 1, t);
            EXPECT_EQ(tau(ManifoldSpec::sphere(), xi).value, kOne);
            EXPECT_EQ(tau(ManifoldSpec::diagonal({-1}), xi).value, kOne);
            for (long b : {3, 5, 7, 9})
                EXPECT_EQ(tau_prime(ManifoldSpec::lens(b, 1), xi).value, kOne) << b << " " << xi.describe();
        }
    }
}

TEST(Tau, NotOneForCompositeB) {
    // tau'_{L(b,1)} = 1 needs b to be a prime power
    EXPECT_NE(tau_prime(ManifoldSpec::lens(6, 1), RootSpec(7, 1, Theory::SO3)).value, kOne);
}

TEST(Tau, Multiplicative) {
    for (long r : {5, 7, 9}) {
        RootSpec xi(r, 1, Theory::SO3);
        ManifoldSpec A = ManifoldSpec::lens(5, 2), B = ManifoldSpec::lens(-7, 3, 3);
        EXPECT_EQ(tau(A.connect(B), xi).value, tau(A, xi).value * tau(B, xi).value);
        EXPECT_EQ(tau_prime(A.connect(B), xi).value, tau_prime(A, xi).value * tau_prime(B, xi).value);
    }
    RootSpec x5(5, 1, Theory::SO3);
    ManifoldSpec M = ManifoldSpec::lens(3, 1).connect(ManifoldSpec::lens(5, 1));
    EXPECT_EQ(tau_prime(M, x5).value, lens_tau_prime_closed(3, 1, 1, x5) * lens_tau_prime_closed(5, 1, 1, x5));
    // repeated prime across pieces
    ManifoldSpec N = ManifoldSpec::lens(3, 1).connect(ManifoldSpec::lens(9, 2));
    RootSpec x9(9, 1, Theory::SO3);
    EXPECT_EQ(tau_prime(N, x9).value, lens_tau_prime_closed(3, 1, 1, x9) * lens_tau_prime_closed(9, 2, 1, x9));
}

TEST(Tau, Su2NeedsOddHomology) {
    EXPECT_THROW(tau_prime(ManifoldSpec::lens(4, 1), RootSpec(5, 1, Theory::SU2)), PreconditionError);
}

TEST(LensClosed, Examples) {
    RootSpec x7(7, 1, Theory::SO3);
    EXPECT_EQ(lens_tau_prime_closed(5, 1, 1, x7), kOne);
    EXPECT_EQ(tau_prime(ManifoldSpec::lens(5, 2), x7).value, lens_tau_prime_closed(5, 2, 1, x7));
    // c = 5 divides neither 2 - 1 nor 2 + 1; with d = 3, 6 - 1 = 5
    RootSpec x5(5, 1, Theory::SO3);
    EXPECT_TRUE(lens_tau_prime_closed(5, 2, 1, x5).is_zero());
    EXPECT_TRUE(tau_prime(ManifoldSpec::lens(5, 2), x5).value.is_zero());
    EXPECT_FALSE(lens_tau_prime_closed(5, 2, 3, x5).is_zero());
}

TEST(LensClosed, MinusB1) {
    for (Theory t : {Theory::SO3, Theory::SU2})
        for (long r : {3, 5, 7, 9, 11}) {
            RootSpec xi(r, 1, t);
            for (long b : {3, 4, 5, 7, 8, 9, 11}) {
                if (t == Theory::SU2 && b % 2 == 0) continue;
                EXPECT_EQ(tau_prime(ManifoldSpec::lens(-b, 1), xi).value, lens_minus_b1_example(b, xi))
                    << b << " " << xi.describe();
            }
        }
}

TEST(LensClosed, SignBranchesDifferAtCoprimeOrder) {
    // with c = 1 both branches apply but give different values; only the lower one matches the state sum
    RootSpec xi(7, 1, Theory::SO3);
    auto lo = detail::lens_closed_branch(5, 1, 1, xi, -1), hi = detail::lens_closed_branch(5, 1, 1, xi, 1);
    ASSERT_TRUE(lo && hi);
    EXPECT_NE(*lo, *hi);
    EXPECT_EQ(*lo, tau_prime(ManifoldSpec::lens(5, 1), xi).value);
}

TEST(LensClosed, SmallGrid) {
    for (Theory t : {Theory::SO3, Theory::SU2})
        for (long r : {3, 5, 9}) {
            RootSpec xi(r, t == Theory::SO3 ? 2 : 1, t);
            for (long b : {-9, -5, 3, 7, 9})
                for (long a = -labs_ll(b) + 1; a < labs_ll(b); ++a) {
                    if (a == 0 || gcd_ll(a, b) != 1) continue;
                    for (long d : {1, 3}) {
                        EXPECT_EQ(lens_tau_prime_closed(b, a, d, xi), tau_prime(ManifoldSpec::lens(b, a, d), xi).value)
                            << detail::lens_name(b, a, d) << " " << xi.describe();
                    }
                }
        }
}

TEST(Suites, SmallOnesPass) {
    for (const char* name : {"gamma", "cyclotomic", "frobenius", "float-sanity"}) {
        const SuiteEntry* e = find_suite(name);
        ASSERT_NE(e, nullptr) << name;
        RunReport rep = e->run();
        EXPECT_TRUE(rep.ok()) << name << ": " << rep.first_failure.value_or("");
        EXPECT_GT(rep.run, 0);
    }
    EXPECT_EQ(find_suite("3"), find_suite("reciprocity"));
    EXPECT_EQ(find_suite("nope"), nullptr);
}
