#pragma once

#include "brational.hpp"
#include "cyclotomic.hpp"
#include "linalg.hpp"

namespace wrt {

// Phi_n^k
inline IntPoly cyclotomic_power(long n, long k) {
    require(n >= 1 && k >= 1, "cyclotomic_power: n and k must be positive");
    IntPoly p{1};
    for (long i = 0; i < k; ++i) p = poly_mul(p, cyclotomic_poly(n));
    return p;
}

// remainder of a rational polynomial modulo a monic integer polynomial
inline std::vector<Rational> poly_reduce(std::vector<Rational> a, const IntPoly& mod) {
    const size_t D = mod.size() - 1;
    for (size_t i = a.size(); i-- > D;) {
        if (a[i] == 0) continue;
        Rational c = a[i];
        for (size_t j = 0; j <= D; ++j) a[i - D + j] -= c * Rational(mod[j]);
    }
    a.resize(D, Rational(0));
    return a;
}

// element of Z[1/b][q]/(Phi_n^k) in the monomial basis q^0 .. q^{k phi(n) - 1}
struct QuotientElement {
    long n = 1, k = 1;
    std::vector<BRational> coeffs;

    std::vector<Rational> values() const {
        std::vector<Rational> v;
        for (const auto& c : coeffs) v.push_back(c.value());
        return v;
    }
};

inline QuotientElement make_quotient(long n, long k, long b, const std::vector<Rational>& v) {
    QuotientElement e{n, k, {}};
    for (const auto& x : v) e.coeffs.emplace_back(x, b);
    return e;
}

inline std::vector<Rational> quotient_mul(const std::vector<Rational>& x, const std::vector<Rational>& y,
                                          const IntPoly& mod) {
    std::vector<Rational> p(x.size() + y.size() - 1, Rational(0));
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0)
            for (size_t j = 0; j < y.size(); ++j) p[i + j] += x[i] * y[j];
    return poly_reduce(p, mod);
}

inline std::vector<Rational> quotient_pow(const std::vector<Rational>& x, long e, const IntPoly& mod) {
    require(e >= 0, "quotient_pow: exponent must be non-negative");
    std::vector<Rational> r(mod.size() - 1, Rational(0)), base = x;
    r[0] = 1;
    while (e) {
        if (e & 1) r = quotient_mul(r, base, mod);
        base = quotient_mul(base, base, mod);
        e >>= 1;
    }
    return r;
}

// q^e reduced mod Phi_n^k, any integer e (q is a unit: q * (stuff) = 1 since Phi_n(0) = +-1)
inline std::vector<Rational> quotient_monomial(long e, const IntPoly& mod) {
    const size_t D = mod.size() - 1;
    std::vector<Rational> q(D, Rational(0));
    if (D == 1) {
        q[0] = Rational(-mod[0]);  // q = -p_0 in Z for linear moduli
    } else {
        q[1] = 1;
    }
    if (e >= 0) return quotient_pow(q, e, mod);
    // q^{-1} from q * (q^{D-1} + p_{D-1} q^{D-2} + ... + p_1) = -p_0
    std::vector<Rational> inv(D, Rational(0));
    for (size_t i = 1; i <= D; ++i) inv[i - 1] = Rational(mod[i]);
    Rational c = -Rational(mod[0]);
    for (auto& x : inv) x /= c;
    return quotient_pow(inv, -e, mod);
}

// matrix of q -> q^b; column i is q^{b i} mod Phi_n^k
inline std::vector<std::vector<Integer>> frob_matrix(long n, long k, long b) {
    require(gcd_ll(n, b) == 1, "frob_matrix: n and b must be coprime");
    require(b >= 1, "frob_matrix: b must be positive");
    IntPoly mod = cyclotomic_power(n, k);
    const size_t D = mod.size() - 1;
    std::vector<std::vector<Integer>> M(D, std::vector<Integer>(D));
    for (size_t i = 0; i < D; ++i) {
        auto col = quotient_monomial(b * static_cast<long>(i), mod);
        for (size_t j = 0; j < D; ++j) {
            ensure(col[j].get_den() == 1, "frob_matrix: non-integral reduction");
            M[j][i] = col[j].get_num();
        }
    }
    return M;
}

inline Integer lattice_index(long n, long k, long b) {
    auto M = frob_matrix(n, k, b);
    RatMatrix A(M.size());
    for (size_t i = 0; i < M.size(); ++i)
        for (const auto& x : M[i]) A[i].push_back(Rational(x));
    Rational d = determinant(A);
    ensure(d.get_den() == 1, "lattice_index: non-integral determinant");
    return abs(d.get_num());
}

inline Integer expected_lattice_index(long n, long k, long b) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(k * (k - 1) * euler_phi(n) / 2));
    return r;
}

// q^{1/b} := F_b^{-1}(q); checked against y^b = q
inline QuotientElement qth_root(long n, long k, long b) {
    auto M = frob_matrix(n, k, b);
    IntPoly mod = cyclotomic_power(n, k);
    const size_t D = M.size();
    RatMatrix A(D);
    for (size_t i = 0; i < D; ++i)
        for (const auto& x : M[i]) A[i].push_back(Rational(x));
    std::vector<Rational> target = quotient_monomial(1, mod);
    auto y = solve_linear(A, target);
    ensure(y.has_value(), "qth_root: Frobenius matrix is singular");
    ensure(quotient_pow(*y, b, mod) == target, "qth_root: y^b != q");
    if (n == 1 && b % 2 == 0) {
        Rational aug = 0;
        for (const auto& c : *y) aug += c;
        ensure(aug == 1, "qth_root: augmentation is not 1");
    }
    return make_quotient(n, k, b, *y);
}

// exponents j in [-range, range] with (+-q^j)^b = 1, other than +-1 itself; empty when rigid
inline std::vector<std::pair<int, long>> torsion_monomials(long n, long k, long b, long range) {
    IntPoly mod = cyclotomic_power(n, k);
    auto one = quotient_monomial(0, mod);
    std::vector<std::pair<int, long>> found;
    for (long j = -range; j <= range; ++j) {
        auto m = quotient_monomial(j, mod);
        bool is_one = m == one;
        std::vector<Rational> neg_one = one;
        for (auto& x : neg_one) x = -x;
        bool is_neg_one = m == neg_one;
        if (is_one || is_neg_one) continue;
        auto p = quotient_monomial(b * j, mod);
        for (int s : {1, -1}) {
            // (s q^j)^b = s^b q^{bj}
            int sb = (s == -1 && b % 2) ? -1 : 1;
            std::vector<Rational> v = p;
            if (sb == -1)
                for (auto& x : v) x = -x;
            if (v == one) found.emplace_back(s, j);
        }
    }
    return found;
}

}  // namespace wrt
