#pragma once

#include "numtheory.hpp"
#include "root_spec.hpp"

namespace wrt {

inline long squarefree_part(long m, long* square_root_of_rest = nullptr) {
    long t = 1, s = 1;
    for (auto [p, k] : factorize(m)) {
        if (k % 2) t *= p;
        s *= ipow(p, k / 2);
    }
    if (square_root_of_rest) *square_root_of_rest = s;
    return t;
}

// smallest modulus used by the realization of sqrt(m)
inline long sqrt_modulus(long m) { return 4 * squarefree_part(m); }

// sqrt(m) as an element of Z[Z/L]; needs sqrt_modulus(m) | L.
// m = s^2 t, t squarefree; sqrt(odd t) = eps(t)^{-1} sum_j e_t^{j^2}, sqrt 2 = e_8 + e_8^{-1}.
inline RootSum sqrt_rootsum(long m, long L) {
    require(m >= 1, "sqrt: radicand must be positive");
    long s = 1;
    long t = squarefree_part(m, &s);
    require(L % (4 * t) == 0, "sqrt: modulus too small for the realization");
    long odd = t % 2 ? t : t / 2;
    RootSum g(L);
    for (long j = 0; j < odd; ++j) g.add((j * j % odd) * (L / odd), 1);
    if (odd % 4 == 3) g = g.shifted(-(L / 4));  // divide by i
    if (t % 2 == 0) {
        RootSum two(L);
        two.add(L / 8, 1);
        two.add(-(L / 8), 1);
        g = g * two;
    }
    g *= static_cast<i128>(s);
    return g;
}

struct SqrtSymbol {
    long radicand;
    CycNumber realization;  // modulus 8 * radicand
};

inline SqrtSymbol sqrt_symbol(long m) {
    return {m, sqrt_rootsum(m, 8 * m).to_cyc()};
}

// sum_{j<r} e_r^{x j^2 + y j}
inline RootSum gauss_brute_sum(long r, long x, long y) {
    require(r >= 1, "gauss: r must be positive");
    RootSum s(r);
    for (long j = 0; j < r; ++j) s.add(mul_mod(x, mul_mod(j, j, r), r) + mul_mod(y, j, r), 1);
    return s;
}

inline CycNumber gauss_brute(long r, long x, long y) { return gauss_brute_sum(r, x, y).to_cyc(); }

namespace detail {

// G(r,x,y) with 0 <= x,y < r, written into Z[Z/L] where 8r | L
inline RootSum gauss_closed_reduced(long r, long x, long y, long L) {
    RootSum zero(L);
    long c = gcd_ll(r, x);  // gcd(r, 0) = r
    if (y % c != 0) return zero;
    if (c > 1) {
        RootSum inner = gauss_closed_reduced(r / c, x / c, y / c, L);
        inner *= static_cast<i128>(c);
        return inner;
    }
    if (r == 1) return RootSum::monomial(L, 0);
    const long xs = star_inverse(x, r);
    const long step = L / r;  // e_r = x^step in Z[Z/L]
    auto er = [&](long e) { return pmod(e, r) * step; };
    if (r % 2 == 1) {
        long h = (r + 1) / 2;
        long e = -mul_mod(mul_mod(xs, mul_mod(y, y, r), r), mul_mod(h, h, r), r);
        RootSum s = sqrt_rootsum(r, L).shifted(er(e));
        if (r % 4 == 3) s = s.shifted(L / 4);
        s *= static_cast<i128>(jacobi(x, r));
        return s;
    }
    if ((r % 4 == 2 && y % 2 == 0) || (r % 4 == 0 && y % 2 == 1)) return zero;
    if (r % 4 == 2) {
        long h = (r + 2) / 2;
        // x_{*r} y^2 h^3 / 4, with 8 | h^3
        Integer big = Integer(xs) * y * y * h * h * h / 4;
        long e = -to_ll(Integer(big % r));
        RootSum s = sqrt_rootsum(2 * r, L).shifted(er(e));
        if ((r / 2) % 4 == 3) s = s.shifted(L / 4);
        s *= static_cast<i128>(jacobi(2 * x, r / 2));
        return s;
    }
    // r = 0 mod 4, y even, x odd
    Integer big = Integer(xs) * y * y / 4;
    long e = -to_ll(Integer(big % r));
    RootSum s = sqrt_rootsum(r, L).shifted(er(e));
    RootSum one_plus_i(L);
    one_plus_i.add(0, 1);
    one_plus_i.add(L / 4, 1);
    s = s * one_plus_i;
    if (x % 4 == 3) s = s.shifted(-(L / 4));  // conjugate of eps(x)
    s *= static_cast<i128>(jacobi(r, x));
    return s;
}

}  // namespace detail

// closed form of G(r,x,y) in Z[Z/8r]
inline RootSum gauss_closed_sum(long r, long x, long y) {
    require(r >= 1, "gauss: r must be positive");
    long L = 8 * r;
    long xr = pmod(x, r), yr = pmod(y, r);
    return detail::gauss_closed_reduced(r, xr, yr, L);
}

inline CycNumber gauss_closed(long r, long x, long y) { return gauss_closed_sum(r, x, y).to_cyc(); }

// an exponent l' = l mod r, coprime to M (r | M), so x -> x^{l'} on Z[Z/M] extends e_r -> e_r^l
inline long galois_lift(long l, long r, long M) {
    require(gcd_ll(l, r) == 1, "galois_lift: l must be coprime to r");
    long lp = pmod(l, r);
    if (r == 1) lp = 1;
    while (gcd_ll(lp, M) != 1) lp += r;
    return lp;
}

inline RootSum gamma_brute_sum(long b, const RootSpec& xi) {
    RootSum s(xi.quarter_modulus());
    for (long n : color_set(xi.theory, xi.r)) s.add(xi.u_exponent(b * (n * n - 1)), 1);
    return s;
}

// closed form, in Z[Z/8r]
inline RootSum gamma_closed_sum(long b, const RootSpec& xi) {
    const long r = xi.r, L = 8 * r;
    long lp = galois_lift(xi.l, r, L);
    RootSum s = gauss_closed_sum(r, b, b).galois(lp);
    if (xi.theory == Theory::SU2) {
        // xi^{-b/4} = e_{4r}^{-b l} = x^{-2bl} in Z[Z/8r]
        s += gauss_closed_sum(r, b, 0).galois(lp).shifted(-2 * mul_mod(b, xi.l, 4 * r));
    }
    return s;
}

enum class GammaMode { Brute, Closed };

inline CycNumber gamma(long b, const RootSpec& xi, GammaMode mode = GammaMode::Closed) {
    return mode == GammaMode::Brute ? gamma_brute_sum(b, xi).to_cyc() : gamma_closed_sum(b, xi).to_cyc();
}

inline bool gamma_is_zero(long b, const RootSpec& xi) {
    if (xi.theory == Theory::SO3) return false;
    long c = gcd_ll(xi.r, labs_ll(b));
    return (xi.r / c) % 2 == 1 && pmod(b / c, 4) == 2;
}

// 2m * sum_{l<n} e_{2n}^{m l^2} e_phi^{psi l} - (1+i) sqrt(2mn) sum_{l<m} e_{2m phi^2}^{-n(l phi + psi)^2}
inline bool reciprocity_check(long m, long n, long psi, long phi) {
    require(m >= 1 && n >= 1 && psi >= 0 && phi >= 1, "reciprocity: m, n, phi must be positive and psi non-negative");
    require((m * n) % 2 == 0, "reciprocity: mn must be even");
    require((n * psi) % phi == 0, "reciprocity: phi must divide n psi");
    const long M2 = 2 * m * phi * phi;
    long L = lcm_ll(lcm_ll(2 * n, phi), lcm_ll(M2, sqrt_modulus(2 * m * n)));
    std::vector<std::pair<long, i128>> terms;
    for (long l = 0; l < n; ++l) {
        long e = mul_mod(m * l % (2 * n), l, 2 * n) * (L / (2 * n)) + mul_mod(psi, l, phi) * (L / phi);
        terms.emplace_back(pmod(e, L), 2 * m);
    }
    // sqrt(2mn) at its own small modulus, then lifted
    long Ls = sqrt_modulus(2 * m * n);
    RootSum root = sqrt_rootsum(2 * m * n, Ls);
    std::vector<std::pair<long, i128>> rs;
    for (long i = 0; i < Ls; ++i)
        if (root.dense()[i]) {
            rs.emplace_back(i * (L / Ls), root.dense()[i]);
            rs.emplace_back(i * (L / Ls) + L / 4, root.dense()[i]);
        }
    for (long l = 0; l < m; ++l) {
        long v = l * phi + psi;
        long e = pmod(-mul_mod(n, mul_mod(v, v, M2), M2), M2) * (L / M2);
        for (auto [k, c] : rs) terms.emplace_back(pmod(k + e, L), -c);
    }
    return sparse_vanishes(L, terms);
}

}  // namespace wrt
