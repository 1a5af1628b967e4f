#pragma once

#include "cyc_number.hpp"

namespace wrt {

// Jacobi symbol (a/b), b odd positive
inline int jacobi(long a, long b) {
    require(b >= 1 && b % 2 == 1, "jacobi: b must be odd and positive");
    a = pmod(a, b);
    int t = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long r = b % 8;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, b);
        if (a % 4 == 3 && b % 4 == 3) t = -t;
        a %= b;
    }
    return b == 1 ? t : 0;
}

// Legendre symbol by Euler's criterion, p an odd prime
inline int legendre_euler(long a, long p) {
    a = pmod(a, p);
    if (a == 0) return 0;
    long r = 1, base = a, e = (p - 1) / 2;
    while (e) {
        if (e & 1) r = mul_mod(r, base, p);
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

// 1 for x = 1 mod 4, i for x = 3 mod 4
inline CycNumber epsilon4(long x) {
    require(pmod(x, 2) == 1, "epsilon4: x must be odd");
    return pmod(x, 4) == 1 ? CycNumber::constant(1, 4) : CycNumber::root(4, 1);
}

// x_{*r}: the inverse of x mod r in {1..r-1}; x_{*1} = 0
inline long star_inverse(long x, long r) {
    require(r >= 1, "star_inverse: modulus must be positive");
    require(gcd_ll(x, r) == 1, "star_inverse: " + std::to_string(x) + " not coprime to " + std::to_string(r));
    if (r == 1) return 0;
    return inverse_mod(x, r);
}

struct StarInversePair {
    long n_star_m;
    long m_star_n;
};

// n n_{*m} + m m_{*n} = 1 with 0 < sn(n) n_{*m} < |m|
inline StarInversePair star_pair(long n, long m) {
    require(n != 0 && labs_ll(n) < labs_ll(m), "star_pair: need 0 < |n| < |m|");
    require(gcd_ll(n, m) == 1, "star_pair: arguments must be coprime");
    long t = inverse_mod(labs_ll(n), labs_ll(m));
    if (t == 0) t = labs_ll(m);
    long ns = sn(n) * t;
    long rest = 1 - n * ns;
    ensure(rest % m == 0, "star_pair: inconsistent inverse");
    return {ns, rest / m};
}

// ((x)) = x - floor(x) - 1/2 off the integers, 0 on them
inline Rational sawtooth(const Rational& x) {
    if (x.get_den() == 1) return 0;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return x - Rational(fl) - Rational(1, 2);
}

// s(a,b) by its defining sum
inline Rational dedekind_sum(long a, long b) {
    require(b != 0, "dedekind_sum: b must be nonzero");
    require(gcd_ll(a, b) == 1, "dedekind_sum: arguments must be coprime");
    Rational s = 0;
    for (long n = 0; n < labs_ll(b); ++n) s += sawtooth(make_rational(n, b)) * sawtooth(make_rational(a * n, b));
    return s;
}

// value of m_n - 1/(m_{n-1} - 1/(... - 1/m_1))
inline Rational eval_neg_continued_fraction(const std::vector<long>& m) {
    require(!m.empty(), "empty continued fraction");
    Rational x = m[0];
    for (size_t i = 1; i < m.size(); ++i) x = Rational(m[i]) - 1 / x;
    return x;
}

// b/a = m_n - 1/(... - 1/m_1), every m_i >= 2; returned as m_1..m_n
inline std::vector<long> neg_continued_fraction(long b, long a) {
    require(0 < a && a < b, "neg_continued_fraction: need 0 < a < b");
    require(gcd_ll(a, b) == 1, "neg_continued_fraction: arguments must be coprime");
    std::vector<long> m;
    long B = b, A = a;
    while (A != 0) {
        long k = ceil_div(B, A);
        m.push_back(k);
        long nA = k * A - B;
        B = A;
        A = nA;
    }
    std::reverse(m.begin(), m.end());
    ensure(eval_neg_continued_fraction(m) == make_rational(b, a), "neg_continued_fraction: reconstruction failed");
    for (long x : m) ensure(x >= 2, "neg_continued_fraction: entry below 2");
    return m;
}

}  // namespace wrt
